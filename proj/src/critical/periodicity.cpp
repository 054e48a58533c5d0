#include "crdiam/critical.hpp"
#include "crdiam/random.hpp"

namespace crdiam {

namespace {

bool invertible_mod_m(const RMatrix& m) { return m.rows() == m.cols() && rank(m.constant_part()) == m.rows(); }

// Extends rho(n0 - 1), rho(n0) to the whole range [lo + q, hi] by lifting through the differentials.
std::optional<ChainMap> transport(const FreeComplex& c, int q, int n0, const RMatrix& below, const RMatrix& at) {
  const int first = c.lo() + q;
  std::vector<RMatrix> mats(c.hi() - first + 1);
  mats[n0 - 1 - first] = below;
  mats[n0 - first] = at;
  for (int n = n0 + 1; n <= c.hi(); ++n) {
    auto x = solve_left(c.diff(n - q), mats[n - 1 - first] * c.diff(n));
    if (!x || !invertible_mod_m(*x)) return std::nullopt;
    mats[n - first] = std::move(*x);
  }
  for (int n = n0 - 1; n > first; --n) {
    auto x = solve_right(c.diff(n), c.diff(n - q) * mats[n - first]);
    if (!x || !invertible_mod_m(*x)) return std::nullopt;
    mats[n - 1 - first] = std::move(*x);
  }
  return ChainMap{c, c, -q, first, std::move(mats)};
}

}  // namespace

bool verify_certificate(const FreeComplex& c, const PeriodicityCertificate& cert) {
  const int q = cert.period;
  const ChainMap& rho = cert.rho;
  if (q <= 0 || rho.degree != -q || rho.first != c.lo() + q || rho.last() != c.hi()) return false;
  for (int n = rho.first; n <= rho.last(); ++n) {
    const RMatrix& m = rho.at(n);
    if (m.rows() != c.rank(n - q) || m.cols() != c.rank(n) || !invertible_mod_m(m)) return false;
  }
  for (int n = rho.first + 1; n <= rho.last(); ++n)
    if (c.diff(n - q) * rho.at(n) != rho.at(n - 1) * c.diff(n)) return false;
  return true;
}

std::optional<PeriodicityCertificate> detect_periodicity(const FreeComplex& c, int max_period) {
  const RingPtr& R = c.ring();
  const Field& F = R->field();
  for (int q = 1; q <= max_period; ++q) {
    if (c.hi() - c.lo() < q + 2) break;
    bool same = true;
    for (int n = c.lo() + q; n <= c.hi(); ++n) same &= c.rank(n) == c.rank(n - q);
    if (!same) continue;

    const int n0 = (c.lo() + q + 1 + c.hi()) / 2;
    RLinearSystem sys(R);
    auto a = sys.add_unknown(c.rank(n0 - 1 - q), c.rank(n0 - 1));
    auto b = sys.add_unknown(c.rank(n0 - q), c.rank(n0));
    sys.add_equation({{b, c.diff(n0 - q), std::nullopt}, {a, std::nullopt, -c.diff(n0)}},
                     RMatrix(R, c.rank(n0 - 1 - q), c.rank(n0)));
    auto basis = sys.nullspace();
    if (basis.empty()) {
      if (c.rank(n0) != 0) continue;
      basis.push_back({RMatrix(R, 0, 0), RMatrix(R, 0, 0)});
    }
    Rng rng(0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(q));
    for (int attempt = 0; attempt < 64; ++attempt) {
      RMatrix below(R, c.rank(n0 - 1 - q), c.rank(n0 - 1)), at(R, c.rank(n0 - q), c.rank(n0));
      for (const auto& v : basis) {
        const Elem s = static_cast<Elem>(rng() % F.order());
        if (s == 0) continue;
        below = below + v[a].scaled(s);
        at = at + v[b].scaled(s);
      }
      if (!invertible_mod_m(below) || !invertible_mod_m(at)) continue;
      auto rho = transport(c, q, n0, below, at);
      if (!rho) continue;
      PeriodicityCertificate cert{q, std::move(*rho)};
      if (verify_certificate(c, cert)) return cert;
    }
  }
  return std::nullopt;
}

}  // namespace crdiam
