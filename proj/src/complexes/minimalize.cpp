#include "crdiam/complexes.hpp"
#include "crdiam/errors.hpp"

namespace crdiam {

namespace {

struct Pivot {
  int n;
  std::size_t r, c;
};

std::optional<Pivot> first_unit(const std::vector<RMatrix>& diffs, int lo, int from) {
  for (int n = from; n <= lo + static_cast<int>(diffs.size()); ++n) {
    const RMatrix& d = diffs[n - lo - 1];
    for (std::size_t r = 0; r < d.rows(); ++r)
      for (std::size_t c = 0; c < d.cols(); ++c)
        if (d.entry(r, c)[0] != 0) return Pivot{n, r, c};
  }
  return std::nullopt;
}

RMatrix identity_without_row(const RingPtr& R, std::size_t n, std::size_t r) {
  return RMatrix::identity(R, n).without_row(r);
}

}  // namespace

MinimalizeResult minimalize(const FreeComplex& c) {
  const RingPtr& R = c.ring();
  const QuotientRing& ring = *R;
  const int lo = c.lo(), hi = c.hi();
  std::vector<std::size_t> ranks = c.ranks();
  std::vector<RMatrix> diffs;
  for (int n = lo + 1; n <= hi; ++n) diffs.push_back(c.diff(n));
  auto D = [&](int n) -> RMatrix& { return diffs[n - lo - 1]; };

  // Accumulated maps between c and the current complex.
  std::vector<RMatrix> P, I, H;
  for (int n = lo; n <= hi; ++n) {
    P.push_back(RMatrix::identity(R, c.rank(n)));
    I.push_back(RMatrix::identity(R, c.rank(n)));
  }
  for (int n = lo; n < hi; ++n) H.emplace_back(R, c.rank(n + 1), c.rank(n));

  std::size_t steps = 0;
  int from = lo + 1;
  while (auto piv = first_unit(diffs, lo, from)) {
    const int n = piv->n;
    const std::size_t r = piv->r, col = piv->c;
    from = n;
    const RMatrix A = D(n);
    const RingElement uinv = ring.inverse(A.at(r, col));
    const std::size_t bn = ranks[n - lo], bm = ranks[n - 1 - lo];

    RMatrix rowv = A.block(r, 0, 1, bn).without_col(col);  // 1 x (bn-1)
    RMatrix colv = A.block(0, col, bm, 1).without_row(r);  // (bm-1) x 1
    D(n) = A.without_row(r).without_col(col) - (colv * rowv).scaled(uinv);
    if (n + 1 <= hi) D(n + 1) = D(n + 1).without_row(col);
    if (n - 1 > lo) D(n - 1) = D(n - 1).without_col(r);

    // Step maps between the current complex and the reduced one.
    RMatrix p_n = identity_without_row(R, bn, col);
    RMatrix p_m = identity_without_row(R, bm, r);
    {
      RMatrix coef = (-colv).scaled(uinv);
      for (std::size_t i = 0; i < bm - 1; ++i) p_m.set(i, r, coef.at(i, 0));
    }
    RMatrix i_n = identity_without_row(R, bn, col).transpose();
    {
      RMatrix coef = (-rowv).scaled(uinv);
      for (std::size_t j = 0; j < bn - 1; ++j) i_n.set(col, j, coef.at(0, j));
    }
    RMatrix i_m = identity_without_row(R, bm, r).transpose();
    RMatrix h_m(R, bn, bm);
    h_m.set(col, r, ring.neg(uinv));

    // H += I o h o P at degree n-1 (h lives only there).
    H[n - 1 - lo] = H[n - 1 - lo] + I[n - lo] * h_m * P[n - 1 - lo];
    P[n - lo] = p_n * P[n - lo];
    P[n - 1 - lo] = p_m * P[n - 1 - lo];
    I[n - lo] = I[n - lo] * i_n;
    I[n - 1 - lo] = I[n - 1 - lo] * i_m;
    ranks[n - lo] -= 1;
    ranks[n - 1 - lo] -= 1;
    ++steps;
  }

  MinimalizeResult out;
  out.complex = steps == 0 ? c : FreeComplex(R, lo, hi, ranks, diffs);
  out.projection = ChainMap{c, out.complex, 0, lo, P};
  out.inclusion = ChainMap{out.complex, c, 0, lo, I};
  out.homotopy = ChainMap{c, c, 1, lo, H};
  out.steps = steps;
  return out;
}

}  // namespace crdiam
