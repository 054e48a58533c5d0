#include "crdiam/complexes.hpp"
#include "crdiam/errors.hpp"

namespace crdiam {

namespace {

// Joint solve of every equation at once. Used when the upward sweep gets stuck,
// which can only happen on complexes that are not exact.
std::optional<ChainMap> solve_all(const ChainMap& phi, const std::vector<int>& eqs) {
  const FreeComplex& S = phi.source;
  const FreeComplex& T = phi.target;
  const int d = phi.degree;
  const int first = eqs.front() - 1;
  std::size_t unknowns = 0;
  for (int m = first; m <= eqs.back(); ++m) unknowns += T.rank(m + d + 1) * S.rank(m) * S.ring()->dim();
  if (unknowns > 12000) return std::nullopt;
  RLinearSystem sys(S.ring());
  std::vector<std::size_t> ids;
  for (int m = first; m <= eqs.back(); ++m) ids.push_back(sys.add_unknown(T.rank(m + d + 1), S.rank(m)));
  for (int n : eqs) {
    sys.add_equation({{ids[n - first], T.diff(n + d + 1), std::nullopt},
                      {ids[n - 1 - first], std::nullopt, S.diff(n)}},
                     phi.at(n));
  }
  auto sol = sys.solve();
  if (!sol) return std::nullopt;
  return ChainMap{S, T, d + 1, first, std::move(*sol)};
}

}  // namespace

std::optional<ChainMap> solve_homotopy(const ChainMap& f, const ChainMap& g) {
  if (f.degree != g.degree || f.first != g.first || f.mats.size() != g.mats.size())
    throw std::invalid_argument("solve_homotopy: maps of different shape");
  const ChainMap phi = f - g;
  const FreeComplex& S = phi.source;
  const FreeComplex& T = phi.target;
  const int d = phi.degree;

  std::vector<int> eqs;
  for (int n = phi.first; n <= phi.last(); ++n)
    if (S.has_diff(n) && T.has_diff(n + d + 1)) eqs.push_back(n);
  if (eqs.empty()) return ChainMap{S, T, d + 1, phi.first, {}};
  for (std::size_t k = 1; k < eqs.size(); ++k)
    if (eqs[k] != eqs[k - 1] + 1) return solve_all(phi, eqs);

  // Bottom equation jointly in (h_{n0-1}, h_{n0}), then sweep upward one degree at a time.
  const int n0 = eqs.front();
  ChainMap h{S, T, d + 1, n0 - 1, {}};
  {
    RLinearSystem sys(S.ring());
    auto a = sys.add_unknown(T.rank(n0 + d), S.rank(n0 - 1));
    auto b = sys.add_unknown(T.rank(n0 + d + 1), S.rank(n0));
    sys.add_equation({{b, T.diff(n0 + d + 1), std::nullopt}, {a, std::nullopt, S.diff(n0)}}, phi.at(n0));
    auto sol = sys.solve();
    if (!sol) return std::nullopt;
    h.mats.push_back((*sol)[a]);
    h.mats.push_back((*sol)[b]);
  }
  for (std::size_t k = 1; k < eqs.size(); ++k) {
    const int n = eqs[k];
    RMatrix rhs = phi.at(n) - h.at(n - 1) * S.diff(n);
    auto x = solve_left(T.diff(n + d + 1), rhs);
    if (!x) return solve_all(phi, eqs);
    h.mats.push_back(std::move(*x));
  }
  return h;
}

}  // namespace crdiam
