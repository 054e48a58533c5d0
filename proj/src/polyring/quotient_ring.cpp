#include "crdiam/quotient_ring.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "crdiam/errors.hpp"

namespace crdiam {

DivisionResult divide(const Polynomial& g, const std::vector<Polynomial>& by) {
  const Field& f = g.field();
  const int n = g.nvars();
  DivisionResult out;
  out.quotients.assign(by.size(), Polynomial(f, n));
  out.remainder = Polynomial(f, n);
  Polynomial p = g;
  while (!p.is_zero()) {
    const auto lt = p.leading();
    bool reduced = false;
    for (std::size_t i = 0; i < by.size(); ++i) {
      const auto& lg = by[i].leading();
      if (!divides(lg.mono, lt.mono)) continue;
      const Monomial m = monomial_quotient(lt.mono, lg.mono);
      const Elem c = f.div(lt.coeff, lg.coeff);
      out.quotients[i] += Polynomial::monomial(f, m, c);
      p -= by[i].times_term(m, c);
      reduced = true;
      break;
    }
    if (!reduced) {
      Polynomial t = Polynomial::monomial(f, lt.mono, lt.coeff);
      out.remainder += t;
      p -= t;
    }
  }
  return out;
}

namespace {

struct Tracked {
  Polynomial g;
  std::vector<Polynomial> cof;
};

// Full reduction of p by G; the cofactor vector follows along.
Tracked reduce_tracked(Tracked p, const std::vector<Tracked>& G, std::size_t skip = SIZE_MAX) {
  const Field& f = p.g.field();
  const int n = p.g.nvars();
  Polynomial rem(f, n);
  while (!p.g.is_zero()) {
    const auto lt = p.g.leading();
    bool reduced = false;
    for (std::size_t i = 0; i < G.size(); ++i) {
      if (i == skip) continue;
      const auto& lg = G[i].g.leading();
      if (!divides(lg.mono, lt.mono)) continue;
      const Monomial m = monomial_quotient(lt.mono, lg.mono);
      const Elem c = f.div(lt.coeff, lg.coeff);
      p.g -= G[i].g.times_term(m, c);
      for (std::size_t j = 0; j < p.cof.size(); ++j) p.cof[j] -= G[i].cof[j].times_term(m, c);
      reduced = true;
      break;
    }
    if (!reduced) {
      Polynomial t = Polynomial::monomial(f, lt.mono, lt.coeff);
      rem += t;
      p.g -= t;
    }
  }
  p.g = std::move(rem);
  return p;
}

void make_monic(Tracked& t) {
  const Field& f = t.g.field();
  const Elem iv = f.inv(t.g.leading().coeff);
  t.g = t.g.scaled(iv);
  for (auto& c : t.cof) c = c.scaled(iv);
}

std::vector<Tracked> buchberger(const std::vector<Polynomial>& f) {
  const std::size_t c = f.size();
  const Field& field = f.front().field();
  const int n = f.front().nvars();
  std::vector<Tracked> G;
  for (std::size_t j = 0; j < c; ++j) {
    Tracked t{f[j], std::vector<Polynomial>(c, Polynomial(field, n))};
    t.cof[j] = Polynomial::constant(field, n, 1);
    make_monic(t);
    G.push_back(std::move(t));
  }
  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j) pairs.emplace_back(i, j);
  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    const Monomial& a = G[i].g.leading().mono;
    const Monomial& b = G[j].g.leading().mono;
    const Monomial l = monomial_lcm(a, b);
    if (l == monomial_mul(a, b)) continue;  // coprime leading monomials
    const Monomial ma = monomial_quotient(l, a), mb = monomial_quotient(l, b);
    Tracked s{G[i].g.times_term(ma, 1) - G[j].g.times_term(mb, 1), {}};
    s.cof.resize(c);
    for (std::size_t k = 0; k < c; ++k) s.cof[k] = G[i].cof[k].times_term(ma, 1) - G[j].cof[k].times_term(mb, 1);
    Tracked r = reduce_tracked(std::move(s), G);
    if (r.g.is_zero()) continue;
    make_monic(r);
    G.push_back(std::move(r));
    for (std::size_t k = 0; k + 1 < G.size(); ++k) pairs.emplace_back(k, G.size() - 1);
  }

  // Minimal basis: drop elements whose leading monomial is divisible by another's.
  std::vector<Tracked> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& li = G[i].g.leading().mono;
      const auto& lj = G[j].g.leading().mono;
      if (divides(lj, li) && (lj != li || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(G[i]);
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) minimal[i] = reduce_tracked(minimal[i], minimal, i);
  std::sort(minimal.begin(), minimal.end(), [](const Tracked& x, const Tracked& y) {
    return compare_drl(x.g.leading().mono, y.g.leading().mono) > 0;
  });
  return minimal;
}

// Krull dimension of k[x]/(monomials): largest set of variables containing no generator's support.
int monomial_dimension(const std::vector<Monomial>& gens, int n) {
  int best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (const auto& g : gens) {
      bool inside = true;
      for (int i = 0; i < n; ++i)
        if (g[i] > 0 && !(mask & (1u << i))) inside = false;
      if (inside) {
        ok = false;
        break;
      }
    }
    if (ok) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

}  // namespace

RingPtr QuotientRing::build(const Field& field, int nvars, std::vector<Polynomial> f) {
  if (nvars < 1 || nvars > 16) throw std::invalid_argument("variable count must be in 1..16");
  if (f.empty()) throw RingRejected(RingRejection::NotArtinian, "no generators: the polynomial ring is not Artinian");
  for (auto& g : f) {
    if (g.nvars() != nvars) throw std::invalid_argument("generator has the wrong number of variables");
    g = g.over(field);
    if (g.is_zero() || !g.is_homogeneous() || g.degree() < 1)
      throw RingRejected(RingRejection::NonHomogeneous,
                         "generator '" + g.to_string() + "' is not homogeneous of positive degree");
  }
  auto r = std::shared_ptr<QuotientRing>(new QuotientRing());
  r->field_ = field;
  r->n_ = nvars;
  r->f_ = f;
  const int c = static_cast<int>(f.size());

  std::vector<Tracked> G = buchberger(f);
  std::vector<Monomial> lms;
  for (auto& t : G) {
    lms.push_back(t.g.leading().mono);
    r->gb_.push_back(t.g);
    r->cof_.push_back(t.cof);
  }
  const int dim = monomial_dimension(lms, nvars);
  if (dim != nvars - c)
    throw RingRejected(RingRejection::NotRegularSequence,
                       "generators are not a regular sequence (dimension " + std::to_string(dim) + ", expected " +
                           std::to_string(nvars - c) + ")");
  if (dim > 0) throw RingRejected(RingRejection::NotArtinian, "quotient ring has positive dimension");

  // Staircase, built degree by degree as an order ideal.
  std::vector<Monomial> layer{Monomial(nvars, 0)};
  while (!layer.empty()) {
    for (auto& m : layer) r->stair_.push_back(m);
    std::vector<Monomial> next;
    for (const auto& m : layer) {
      for (int i = 0; i < nvars; ++i) {
        Monomial mm = m;
        ++mm[i];
        bool standard = std::none_of(lms.begin(), lms.end(), [&](const Monomial& l) { return divides(l, mm); });
        if (standard && std::find(next.begin(), next.end(), mm) == next.end()) next.push_back(std::move(mm));
      }
    }
    std::sort(next.begin(), next.end(), [](const Monomial& a, const Monomial& b) { return compare_drl(a, b) > 0; });
    layer = std::move(next);
  }
  std::size_t expected = 1;
  for (const auto& g : f) expected *= static_cast<std::size_t>(g.degree());
  if (r->stair_.size() != expected)
    throw RingRejected(RingRejection::NotRegularSequence,
                       "length " + std::to_string(r->stair_.size()) + " differs from the product of degrees " +
                           std::to_string(expected));
  const std::size_t D = r->stair_.size();
  for (std::size_t k = 0; k < D; ++k) {
    r->stair_index_[r->stair_[k]] = k;
    r->stair_deg_.push_back(monomial_degree(r->stair_[k]));
  }
  r->mult_.resize(D * D);
  for (std::size_t i = 0; i < D; ++i) {
    for (std::size_t j = 0; j < D; ++j) {
      Polynomial m = Polynomial::monomial(field, monomial_mul(r->stair_[i], r->stair_[j]), 1);
      Polynomial rem = divide(m, r->gb_).remainder;
      for (const auto& t : rem.terms()) r->mult_[i * D + j].emplace_back(r->stair_index_.at(t.mono), t.coeff);
    }
  }
  return r;
}

RingPtr QuotientRing::parse(const Field& field, int nvars, const std::vector<std::string>& f) {
  std::vector<Polynomial> polys;
  for (const auto& s : f) polys.push_back(Polynomial::parse(s, field, nvars));
  return build(field, nvars, std::move(polys));
}

RingElement QuotientRing::normal_form(const Polynomial& g) const {
  RingElement a = zero();
  if (g.is_zero()) return a;
  Polynomial rem = divide(g.over(field_), gb_).remainder;
  for (const auto& t : rem.terms()) a[stair_index_.at(t.mono)] = t.coeff;
  return a;
}

std::vector<Polynomial> QuotientRing::express_in_ideal(const Polynomial& g0) const {
  const Polynomial g = g0.over(field_);
  DivisionResult d = divide(g, gb_);
  if (!d.remainder.is_zero()) throw NotInIdeal("'" + g.to_string() + "' is not in the ideal");
  std::vector<Polynomial> h(f_.size(), Polynomial(field_, n_));
  for (std::size_t i = 0; i < gb_.size(); ++i) {
    if (d.quotients[i].is_zero()) continue;
    for (std::size_t j = 0; j < f_.size(); ++j) h[j] += d.quotients[i] * cof_[i][j];
  }
  Polynomial check(field_, n_);
  for (std::size_t j = 0; j < f_.size(); ++j) check += h[j] * f_[j];
  if (!(check == g)) throw InvariantBreach("ideal membership certificate does not re-expand");
  return h;
}

Polynomial QuotientRing::lift(const RingElement& a) const {
  Polynomial p(field_, n_);
  for (std::size_t k = 0; k < dim(); ++k)
    if (a[k]) p += Polynomial::monomial(field_, stair_[k], a[k]);
  return p;
}

RingElement QuotientRing::parse_element(const std::string& text) const {
  return normal_form(Polynomial::parse(text, field_, n_));
}

std::string QuotientRing::to_string(const RingElement& a) const { return lift(a).to_string(); }

RingElement QuotientRing::one() const { return scalar(1); }

RingElement QuotientRing::scalar(Elem c) const {
  RingElement a = zero();
  a[0] = c;
  return a;
}

RingElement QuotientRing::variable(int i) const { return normal_form(Polynomial::variable(field_, n_, i)); }

RingElement QuotientRing::add(const RingElement& a, const RingElement& b) const {
  RingElement r(dim());
  for (std::size_t k = 0; k < dim(); ++k) r[k] = field_.add(a[k], b[k]);
  return r;
}

RingElement QuotientRing::sub(const RingElement& a, const RingElement& b) const {
  RingElement r(dim());
  for (std::size_t k = 0; k < dim(); ++k) r[k] = field_.sub(a[k], b[k]);
  return r;
}

RingElement QuotientRing::neg(const RingElement& a) const {
  RingElement r(dim());
  for (std::size_t k = 0; k < dim(); ++k) r[k] = field_.neg(a[k]);
  return r;
}

RingElement QuotientRing::scale(const RingElement& a, Elem c) const {
  RingElement r(dim());
  for (std::size_t k = 0; k < dim(); ++k) r[k] = field_.mul(a[k], c);
  return r;
}

void QuotientRing::mul_acc(const Elem* a, const Elem* b, Elem* out) const {
  const std::size_t D = dim();
  for (std::size_t i = 0; i < D; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < D; ++j) {
      if (b[j] == 0) continue;
      const Elem ab = field_.mul(a[i], b[j]);
      for (const auto& [k, c] : mult_[i * D + j]) out[k] = field_.add(out[k], field_.mul(ab, c));
    }
  }
}

RingElement QuotientRing::mul(const RingElement& a, const RingElement& b) const {
  RingElement r = zero();
  mul_acc(a.data(), b.data(), r.data());
  return r;
}

bool QuotientRing::is_zero(const RingElement& a) const {
  return std::all_of(a.begin(), a.end(), [](Elem x) { return x == 0; });
}

KMatrix QuotientRing::left_multiplication(const Elem* a) const {
  const std::size_t D = dim();
  KMatrix m(field_, D, D);
  for (std::size_t i = 0; i < D; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < D; ++j)
      for (const auto& [k, c] : mult_[i * D + j]) m(k, j) = field_.add(m(k, j), field_.mul(a[i], c));
  }
  return m;
}

RingElement QuotientRing::inverse(const RingElement& a) const {
  if (!is_unit(a)) throw std::domain_error("inverse of a non-unit");
  KMatrix rhs(field_, dim(), 1);
  rhs(0, 0) = 1;
  auto x = solve(left_multiplication(a.data()), rhs);
  if (!x) throw InvariantBreach("unit without inverse");
  return x->column(0);
}

RingPtr QuotientRing::extend(int e) const {
  Field ext(field_.characteristic(), e);
  if (ext == field_) return build(field_, n_, f_);
  if (field_.degree() != 1) throw std::invalid_argument("only prime-field rings can be extended");
  std::vector<Polynomial> g;
  for (const auto& p : f_) g.push_back(p.over(ext));
  return build(ext, n_, std::move(g));
}

std::string QuotientRing::description() const {
  std::string s = field_.name() + "[";
  for (int i = 0; i < n_; ++i) s += (i ? "," : "") + variable_name(i, n_);
  s += "]/(";
  for (std::size_t j = 0; j < f_.size(); ++j) s += (j ? ", " : "") + f_[j].to_string();
  return s + ")";
}

}  // namespace crdiam
