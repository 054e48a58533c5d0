#include "crdiam/resolve.hpp"

#include <algorithm>

#include "crdiam/errors.hpp"

namespace crdiam {

namespace {

// Minimal generators of ker a, as columns of a matrix with a.cols() rows.
RMatrix kernel_generators(const RMatrix& a) {
  return minimal_generators(a.ring(), a.cols(), kernel_coords(a));
}

}  // namespace

ModulePresentation present(const RMatrix& relations) { return {relations.ring(), relations}; }

ModulePresentation free_module(const RingPtr& ring, std::size_t rank) { return {ring, RMatrix(ring, rank, 0)}; }

ModulePresentation residue_field(const RingPtr& ring) {
  RMatrix a(ring, 1, ring->nvars());
  for (int i = 0; i < ring->nvars(); ++i) a.set(0, i, ring->variable(i));
  return {ring, a};
}

std::size_t module_dim(const ModulePresentation& m) {
  return m.generators() * m.ring->dim() - image_dim(m.relations);
}

ModulePresentation minimal_presentation(const ModulePresentation& m) {
  const RingPtr& R = m.ring;
  const std::size_t b = m.generators();
  // Keep the standard basis vectors not reached by the span of the reduced relations.
  SubspaceBasis span(R->field(), b);
  KMatrix abar = m.relations.constant_part();
  for (std::size_t j = 0; j < abar.cols(); ++j) span.add(abar.column(j));
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < b; ++i) {
    std::vector<Elem> e(b, 0);
    e[i] = 1;
    if (!span.contains(e)) {
      keep.push_back(i);
      span.add(e);
    }
  }
  RMatrix E(R, b, keep.size());
  for (std::size_t j = 0; j < keep.size(); ++j) E.set(keep[j], j, R->one());
  // Relations among the kept generators: v with E v in im A.
  RMatrix joint = RMatrix::hstack(E, -m.relations);
  const std::size_t D = R->dim(), head = keep.size() * D;
  std::vector<std::vector<Elem>> span_v;
  for (auto& v : kernel_coords(joint)) span_v.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(head));
  return {R, minimal_generators(R, keep.size(), span_v)};
}

FreeComplex minimal_free_resolution(const ModulePresentation& m, int length) {
  if (length < 1) throw std::invalid_argument("resolution length must be at least 1");
  const RingPtr& R = m.ring;
  ModulePresentation mp = minimal_presentation(m);
  std::vector<RMatrix> diffs{mp.relations};
  std::vector<std::size_t> ranks{mp.relations.rows(), mp.relations.cols()};
  for (int n = 2; n <= length; ++n) {
    RMatrix next = kernel_generators(diffs.back());
    ranks.push_back(next.cols());
    diffs.push_back(std::move(next));
  }
  return FreeComplex(R, 0, length, std::move(ranks), std::move(diffs));
}

DualModule dual_module_with_embedding(const ModulePresentation& m) {
  RMatrix phi = kernel_generators(m.relations.transpose());
  return {ModulePresentation{m.ring, kernel_generators(phi)}, phi};
}

ModulePresentation dual_module(const ModulePresentation& m) { return dual_module_with_embedding(m).module; }

CompleteResolutionBundle complete_resolution(const ModulePresentation& m0, int lo, int hi) {
  if (lo > -3 || hi < 3) throw TooNarrow("complete resolution needs a window containing [-3, 3]");
  const RingPtr& R = m0.ring;
  ModulePresentation m = minimal_presentation(m0);
  const std::size_t b = m.generators();
  FreeComplex F = minimal_free_resolution(m, hi);
  DualModule dual = dual_module_with_embedding(m);
  FreeComplex G = minimal_free_resolution(dual.module, -lo - 1);

  std::vector<std::size_t> ranks;
  for (int n = lo; n < 0; ++n) ranks.push_back(G.rank(-n - 1));
  for (int n = 0; n <= hi; ++n) ranks.push_back(F.rank(n));
  std::vector<RMatrix> diffs;
  for (int n = lo + 1; n < 0; ++n) diffs.push_back(G.diff(-n).transpose());
  // F_0 = R^b -> M -> M** -> G_0^*: evaluate each generator of M* on each generator of M.
  RMatrix d0 = dual.embedding.transpose();
  if (d0.rows() != G.rank(0) || d0.cols() != b) throw SpliceFailure("connecting map has the wrong shape");
  diffs.push_back(d0);
  for (int n = 1; n <= hi; ++n) diffs.push_back(F.diff(n));

  FreeComplex C;
  try {
    C = FreeComplex(R, lo, hi, std::move(ranks), std::move(diffs));
  } catch (const InvariantBreach& e) {
    throw SpliceFailure(std::string("spliced maps do not form a complex: ") + e.what());
  }
  if (image_dim(C.diff(0)) != module_dim(m)) throw SpliceFailure("evaluation map M -> M** is not injective");
  if (!is_totally_acyclic(C)) throw SpliceFailure("spliced complex is not totally acyclic");

  CompleteResolutionBundle out{C, m0, 0, 0};
  if (!C.is_minimal()) {
    auto mm = minimalize(C);
    out.stripped_rank = C.total_rank() - mm.complex.total_rank();
    out.complex = mm.complex;
    out.comparison_degree = 1;
  }
  return out;
}

ModulePresentation syzygy(const CompleteResolutionBundle& b, int n) {
  const FreeComplex& C = b.complex;
  if (n < C.lo() || n + 1 > C.hi()) throw OutOfWindow("syzygy degree " + std::to_string(n) + " outside the window");
  return {C.ring(), C.diff(n + 1)};
}

std::vector<std::size_t> betti(const CompleteResolutionBundle& b) { return b.complex.ranks(); }

namespace {

// Degree of the polynomial through s, -1 for the zero sequence, nothing if undecided.
std::optional<int> growth_degree(std::vector<long long> s) {
  for (int d = 0; !s.empty(); ++d) {
    if (std::all_of(s.begin(), s.end(), [](long long v) { return v == 0; })) return d - 1;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) s[i] = s[i + 1] - s[i];
    s.pop_back();
  }
  return std::nullopt;
}

}  // namespace

ComplexityEstimate estimate_complexity(const std::vector<std::size_t>& ranks, int codim) {
  const std::size_t take = (ranks.size() + 1) / 2;
  std::vector<long long> even, odd;
  for (std::size_t i = ranks.size() - take; i < ranks.size(); ++i)
    ((i - (ranks.size() - take)) % 2 == 0 ? even : odd).push_back(static_cast<long long>(ranks[i]));
  auto de = growth_degree(even), dodd = growth_degree(odd);
  if (!de || !dodd) return {codim, true};
  const int deg = std::max(*de, *dodd);
  if (deg < 0) return {0, false};
  return {std::min(deg + 1, codim), deg + 1 > codim};
}

ComplexityEstimate estimate_complexity(const CompleteResolutionBundle& b) {
  return estimate_complexity(b.complex.ranks(), b.complex.ring()->codim());
}

}  // namespace crdiam
