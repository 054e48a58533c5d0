#include <algorithm>

#include "crdiam/complexes.hpp"
#include "crdiam/errors.hpp"

namespace crdiam {

const RMatrix& ChainMap::at(int n) const {
  if (!defined_at(n)) throw OutOfWindow("chain map undefined at degree " + std::to_string(n));
  return mats[n - first];
}

ChainMap identity_map(const FreeComplex& c) {
  ChainMap f{c, c, 0, c.lo(), {}};
  for (int n = c.lo(); n <= c.hi(); ++n) f.mats.push_back(RMatrix::identity(c.ring(), c.rank(n)));
  return f;
}

ChainMap zero_map(const FreeComplex& source, const FreeComplex& target, int degree) {
  const int lo = std::max(source.lo(), target.lo() - degree);
  const int hi = std::min(source.hi(), target.hi() - degree);
  ChainMap f{source, target, degree, lo, {}};
  for (int n = lo; n <= hi; ++n) f.mats.emplace_back(source.ring(), target.rank(n + degree), source.rank(n));
  return f;
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  ChainMap h{f.source, g.target, f.degree + g.degree, 0, {}};
  int lo = f.first, hi = f.last();
  while (lo <= hi && !g.defined_at(lo + f.degree)) ++lo;
  while (hi >= lo && !g.defined_at(hi + f.degree)) --hi;
  h.first = lo;
  for (int n = lo; n <= hi; ++n) h.mats.push_back(g.at(n + f.degree) * f.at(n));
  return h;
}

ChainMap linear_combination(const std::vector<ChainMap>& maps, const std::vector<Elem>& coeffs) {
  if (maps.empty() || maps.size() != coeffs.size()) throw std::invalid_argument("linear_combination: bad arguments");
  ChainMap r = maps.front();
  for (auto& m : r.mats) m = m.scaled(coeffs[0]);
  for (std::size_t k = 1; k < maps.size(); ++k) {
    if (maps[k].degree != r.degree || maps[k].first != r.first || maps[k].mats.size() != r.mats.size())
      throw std::invalid_argument("linear_combination: maps of different shape");
    if (coeffs[k] == 0) continue;
    for (std::size_t i = 0; i < r.mats.size(); ++i) r.mats[i] = r.mats[i] + maps[k].mats[i].scaled(coeffs[k]);
  }
  return r;
}

ChainMap operator-(const ChainMap& f, const ChainMap& g) {
  const Elem minus_one = f.source.ring()->field().neg(1);
  return linear_combination({f, g}, {1, minus_one});
}

ChainMap dualize(const ChainMap& f) {
  ChainMap r{dualize(f.target), dualize(f.source), f.degree, -f.last() - f.degree, {}};
  for (int m = r.first; m <= -f.first - f.degree; ++m) r.mats.push_back(f.at(-m - f.degree).transpose());
  return r;
}

bool is_chain_map(const ChainMap& f) {
  for (int n = f.first + 1; n <= f.last(); ++n) {
    if (!f.source.has_diff(n) || !f.target.has_diff(n + f.degree)) continue;
    if (f.target.diff(n + f.degree) * f.at(n) != f.at(n - 1) * f.source.diff(n)) return false;
  }
  return true;
}

bool is_homotopy(const ChainMap& f, const ChainMap& g, const ChainMap& h) {
  const ChainMap phi = f - g;
  const int d = f.degree;
  if (h.degree != d + 1) return false;
  for (int n = phi.first; n <= phi.last(); ++n) {
    if (!f.source.has_diff(n) || !f.target.has_diff(n + d + 1)) continue;
    if (!h.defined_at(n) || !h.defined_at(n - 1)) continue;
    RMatrix rhs = f.target.diff(n + d + 1) * h.at(n) + h.at(n - 1) * f.source.diff(n);
    if (rhs != phi.at(n)) return false;
  }
  return true;
}

bool surjective_at(const ChainMap& f, int n) {
  const RMatrix& m = f.at(n);
  return rank(m.constant_part()) == m.rows();
}

bool split_injective_at(const ChainMap& f, int n) {
  const RMatrix& m = f.at(n);
  return rank(m.constant_part()) == m.cols();
}

}  // namespace crdiam
