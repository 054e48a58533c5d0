#include <doctest.h>

#include <functional>
#include <random>

#include "crdiam/errors.hpp"
#include "crdiam/quotient_ring.hpp"
#include "crdiam/rmatrix.hpp"

using namespace crdiam;

namespace {

Polynomial P(const std::string& s, const Field& f, int n) { return Polynomial::parse(s, f, n); }

Polynomial random_poly(const Field& f, int n, int maxdeg, std::mt19937& rng) {
  Polynomial p(f, n);
  int terms = rng() % 5;
  for (int t = 0; t < terms; ++t) {
    Monomial m(n, 0);
    int d = rng() % (maxdeg + 1);
    for (int k = 0; k < d; ++k) ++m[rng() % n];
    p += Polynomial::monomial(f, m, 1 + rng() % (f.order() - 1));
  }
  return p;
}

std::vector<Monomial> monomials_of_degree(int n, int d) {
  std::vector<Monomial> out;
  Monomial m(n, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n - 1) {
      m[i] = left;
      out.push_back(m);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      m[i] = e;
      rec(i + 1, left - e);
    }
  };
  rec(0, d);
  return out;
}

// Independent length count: dim_k of (Q/I)_d summed over d, from the span of
// monomial multiples of the generators in each degree.
std::size_t brute_length(const Field& f, int n, const std::vector<Polynomial>& gens, int top) {
  std::size_t total = 0;
  for (int d = 0; d <= top; ++d) {
    const auto mons = monomials_of_degree(n, d);
    SubspaceBasis span(f, mons.size());
    for (const auto& g : gens) {
      if (g.degree() > d) continue;
      for (const auto& q : monomials_of_degree(n, d - g.degree())) {
        Polynomial prod = g.times_term(q, 1);
        std::vector<Elem> v(mons.size(), 0);
        for (const auto& t : prod.terms()) v[std::find(mons.begin(), mons.end(), t.mono) - mons.begin()] = t.coeff;
        span.add(v);
      }
    }
    total += mons.size() - span.dim();
  }
  return total;
}

}  // namespace

TEST_CASE("ring construction examples") {
  Field f2;
  auto R = QuotientRing::parse(f2, 2, {"x^2", "y^2"});
  CHECK(R->dim() == 4);
  std::vector<std::string> st;
  for (const auto& m : R->staircase()) st.push_back(monomial_to_string(m));
  CHECK(st == std::vector<std::string>{"1", "x", "y", "x*y"});

  auto H = QuotientRing::parse(Field(3), 1, {"x^2"});
  CHECK(H->dim() == 2);

  try {
    QuotientRing::parse(f2, 2, {"x^2", "x^2"});
    FAIL("accepted a repeated generator");
  } catch (const RingRejected& e) {
    CHECK(e.why() == RingRejection::NotRegularSequence);
  }
  try {
    QuotientRing::parse(f2, 2, {"x^2"});
    FAIL("accepted a non-Artinian ring");
  } catch (const RingRejected& e) {
    CHECK(e.why() == RingRejection::NotArtinian);
  }
  try {
    QuotientRing::parse(f2, 2, {"x^2 + y", "y^2"});
    FAIL("accepted an inhomogeneous generator");
  } catch (const RingRejected& e) {
    CHECK(e.why() == RingRejection::NonHomogeneous);
  }
  try {
    QuotientRing::parse(f2, 2, {"x*y", "x^2", "y^2"});
    FAIL("accepted too many generators");
  } catch (const RingRejected& e) {
    CHECK(e.why() == RingRejection::NotRegularSequence);
  }
}

TEST_CASE("normal form examples") {
  Field f2;
  auto R = QuotientRing::parse(f2, 2, {"x^2", "y^2"});
  CHECK(R->is_zero(R->parse_element("x^2")));
  CHECK(R->to_string(R->parse_element("x*y")) == "x*y");
  CHECK(R->is_zero(R->parse_element("(x+y)^2")));
  CHECK(R->to_string(R->parse_element("x^3 + x*y + 1")) == "x*y + 1");
}

TEST_CASE("ideal membership examples") {
  Field f2;
  auto R = QuotientRing::parse(f2, 2, {"x^2", "y^2"});
  auto h = R->express_in_ideal(P("x^2", f2, 2));
  CHECK(h[0] == P("1", f2, 2));
  CHECK(h[1].is_zero());
  h = R->express_in_ideal(P("x^2*y^2", f2, 2));
  CHECK(h[0] == P("y^2", f2, 2));
  CHECK(h[1].is_zero());
  CHECK_THROWS_AS(R->express_in_ideal(P("x", f2, 2)), NotInIdeal);
}

TEST_CASE("non-monomial complete intersection keeps cofactors in terms of the generators") {
  Field f3(3);
  auto R = QuotientRing::parse(f3, 2, {"x^2 + y^2", "x*y"});
  CHECK(R->groebner().size() == 3);
  CHECK(R->dim() == 4);
  for (std::size_t i = 0; i < R->groebner().size(); ++i) {
    Polynomial s(f3, 2);
    for (int j = 0; j < R->codim(); ++j) s += R->cofactors()[i][j] * R->generators()[j];
    CHECK(s == R->groebner()[i]);
  }
  auto h = R->express_in_ideal(P("y^3", f3, 2));
  CHECK(h[0] * R->generators()[0] + h[1] * R->generators()[1] == P("y^3", f3, 2));
}

TEST_CASE("length matches an independent degree-by-degree count") {
  struct Case {
    std::uint32_t p;
    int n;
    std::vector<std::string> f;
  };
  std::vector<Case> cases = {{2, 2, {"x^2", "y^2"}},        {3, 2, {"x^2", "y^3"}},
                             {2, 2, {"x^2 + y^2", "x*y"}},  {3, 2, {"x^2 + y^2", "x*y"}},
                             {5, 2, {"x^2 + x*y", "y^3"}},  {2, 3, {"x^2", "y^2", "z^2"}},
                             {3, 3, {"x^2 + y*z", "y^2 + x*z", "z^2 + x*y"}},
                             {2, 1, {"x^5"}}};
  for (const auto& c : cases) {
    Field f(c.p);
    CAPTURE(c.f[0]);
    std::vector<Polynomial> gens;
    for (const auto& s : c.f) gens.push_back(P(s, f, c.n));
    auto R = QuotientRing::build(f, c.n, gens);
    std::size_t prod = 1;
    int top = 0;
    for (const auto& g : gens) {
      prod *= g.degree();
      top += g.degree() - 1;
    }
    CHECK(R->dim() == prod);
    CHECK(brute_length(f, c.n, gens, top + 1) == prod);
  }
}

TEST_CASE("normal form is a ring homomorphism and ideal certificates re-expand") {
  std::mt19937 rng(3);
  std::vector<RingPtr> rings = {QuotientRing::parse(Field(2), 2, {"x^2", "y^2"}),
                                QuotientRing::parse(Field(3), 2, {"x^2", "y^3"}),
                                QuotientRing::parse(Field(3), 2, {"x^2 + y^2", "x*y"}),
                                QuotientRing::parse(Field(2), 3, {"x^2 + y*z", "y^2", "z^2 + x*y"})};
  for (const auto& R : rings) {
    const Field& f = R->field();
    const int n = R->nvars();
    for (int it = 0; it < 40; ++it) {
      Polynomial a = random_poly(f, n, 4, rng), b = random_poly(f, n, 4, rng);
      CHECK(R->normal_form(a * b) == R->mul(R->normal_form(a), R->normal_form(b)));
      CHECK(R->normal_form(a + b) == R->add(R->normal_form(a), R->normal_form(b)));
      CHECK(R->normal_form(R->lift(R->normal_form(a))) == R->normal_form(a));
      Polynomial g(f, n);
      for (int j = 0; j < R->codim(); ++j) g += random_poly(f, n, 3, rng) * R->generators()[j];
      auto h = R->express_in_ideal(g);
      Polynomial back(f, n);
      for (int j = 0; j < R->codim(); ++j) back += h[j] * R->generators()[j];
      CHECK(back == g);
      auto u = R->add(R->one(), R->normal_form(random_poly(f, n, 3, rng) * Polynomial::variable(f, n, 0)));
      CHECK(R->mul(u, R->inverse(u)) == R->one());
    }
  }
}

TEST_CASE("polynomial text round trip and errors") {
  Field f3(3);
  auto p = P("2*x1^2*x2 - x2^3 + 4", f3, 2);
  CHECK(p.to_string() == "2*x^2*y + 2*y^3 + 1");
  CHECK(P(p.to_string(), f3, 2) == p);
  auto q = P("x1*x4^2 + 3*x2", Field(5), 4);
  CHECK(q.to_string() == "x1*x4^2 + 3*x2");
  CHECK_THROWS_AS(P("x^", f3, 2), ParseError);
  CHECK_THROWS_AS(P("w", f3, 2), ParseError);
  CHECK_THROWS_AS(P("x3", f3, 2), ParseError);
  CHECK_THROWS_AS(P("x+", f3, 2), ParseError);
  CHECK_THROWS_AS(P("x", Field(5), 4), ParseError);
  Field f4(2, 2);
  auto r = P("{2}*x + 1", f4, 1);
  CHECK(r.to_string() == "{2}*x + 1");
}

TEST_CASE("matrices over R") {
  Field f2;
  auto R = QuotientRing::parse(f2, 2, {"x^2", "y^2"});
  std::mt19937 rng(5);
  auto rnd = [&](std::size_t r, std::size_t c) {
    RMatrix m(R, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        RingElement e(R->dim());
        for (auto& x : e) x = rng() % 2;
        m.set(i, j, e);
      }
    return m;
  };
  for (int it = 0; it < 30; ++it) {
    auto a = rnd(2, 3), b = rnd(3, 2), c = rnd(2, 2);
    CHECK((a * b).flatten() == a.flatten() * b.flatten());
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * b).transpose() == b.transpose() * a.transpose());
    auto rhs = a * rnd(3, 2);
    auto x = solve_left(a, rhs);
    REQUIRE(x.has_value());
    CHECK(a * *x == rhs);
    auto lhs = rnd(2, 2) * b.transpose();
    auto y = solve_right(b.transpose(), lhs);
    REQUIRE(y.has_value());
    CHECK(*y * b.transpose() == lhs);
    if (auto inv = inverse(c)) CHECK(c * *inv == RMatrix::identity(R, 2));
    else CHECK(rank(c.constant_part()) < 2);
  }
  // the maximal ideal of R is minimally generated by x and y
  auto m = RMatrix::parse(R, 1, 1, {"1"});
  std::vector<std::vector<Elem>> span = {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  auto gens = minimal_generators(R, 1, span);
  CHECK(gens.to_string() == "[x, y]");
  CHECK(kernel_coords(RMatrix::parse(R, 1, 1, {"x"})).size() == 2);
  (void)m;
}

TEST_CASE("joint linear systems over R") {
  Field f3(3);
  auto R = QuotientRing::parse(f3, 2, {"x^2", "y^3"});
  auto a = RMatrix::parse(R, 2, 2, {"x", "y", "0", "y^2"});
  auto b = a * RMatrix::parse(R, 2, 1, {"1 + y", "x"});
  // a X1 + X2 c = rhs with X2 of shape 2x2 and c = (y)
  auto c = RMatrix::parse(R, 2, 1, {"y", "x"});
  RLinearSystem sys(R);
  auto u1 = sys.add_unknown(2, 1);
  auto u2 = sys.add_unknown(2, 2);
  auto rhs = RMatrix::parse(R, 2, 1, {"x*y + y^2", "x*y^2"});
  sys.add_equation({{u1, a, std::nullopt}, {u2, std::nullopt, c}}, rhs);
  auto sol = sys.solve();
  REQUIRE(sol.has_value());
  CHECK(a * (*sol)[u1] + (*sol)[u2] * c == rhs);
  for (const auto& v : sys.nullspace()) CHECK((a * v[u1] + v[u2] * c).is_zero());
  auto only = solve_left(a, b);
  REQUIRE(only.has_value());
  CHECK(a * *only == b);
}
