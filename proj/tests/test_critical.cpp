#include <doctest.h>

#include "crdiam/critical.hpp"
#include "crdiam/errors.hpp"
#include "crdiam/random.hpp"

using namespace crdiam;

namespace {

RingPtr f2xy() { return QuotientRing::parse(Field(2), 2, {"x^2", "y^2"}); }

FreeComplex resolve_k(const RingPtr& R, int lo, int hi) { return complete_resolution(residue_field(R), lo, hi).complex; }

ModulePresentation random_module(const RingPtr& R, Rng& rng) {
  return present(random_maximal_matrix(R, 1 + rng() % 3, 1 + rng() % 3, rng, 35));
}

}  // namespace

TEST_CASE("extended integers") {
  CHECK(ExtInt::parse("-inf") == ExtInt::neg_inf());
  CHECK(ExtInt::parse("+inf") == ExtInt::pos_inf());
  CHECK(ExtInt::parse("-12") == ExtInt::finite(-12));
  CHECK_THROWS_AS(ExtInt::parse("12a"), ParseError);
  CHECK_THROWS_AS(ExtInt::parse(""), ParseError);
  CHECK(ExtInt::finite(3).to_string() == "3");
  CHECK(-ExtInt::neg_inf() == ExtInt::pos_inf());
  CHECK(ExtInt::neg_inf() + 4 == ExtInt::neg_inf());
  CHECK(ExtInt::neg_inf() < ExtInt::finite(-1000));
  CHECK(ExtInt::finite(1000) < ExtInt::pos_inf());
  CHECK(difference(ExtInt::finite(-1), ExtInt::finite(0)) == ExtInt::finite(-1));
  CHECK(difference(ExtInt::neg_inf(), ExtInt::pos_inf()) == ExtInt::neg_inf());
  CHECK(weaker(VerdictStatus::Stabilized, VerdictStatus::ExactInWindow) == VerdictStatus::Stabilized);
  CHECK(weaker(VerdictStatus::Inconclusive, VerdictStatus::ExactInWindow) == VerdictStatus::Inconclusive);
  for (auto s : {VerdictStatus::ExactInWindow, VerdictStatus::Stabilized, VerdictStatus::Inconclusive})
    CHECK(parse_status(to_string(s)) == s);
}

TEST_CASE("periodicity detection") {
  auto R = f2xy();
  auto rx = complete_resolution(present(RMatrix::parse(R, 1, 1, {"x"})), -6, 6).complex;
  auto c = detect_periodicity(rx);
  REQUIRE(c.has_value());
  CHECK(c->period == 1);
  CHECK(verify_certificate(rx, *c));

  auto H = QuotientRing::parse(Field(2), 1, {"x^2"});
  auto hk = detect_periodicity(resolve_k(H, -6, 6));
  REQUIRE(hk.has_value());
  CHECK(hk->period == 1);

  // period two over F3[x]/(x^3): the differential alternates x and x^2
  auto H3 = QuotientRing::parse(Field(3), 1, {"x^3"});
  auto k3 = resolve_k(H3, -6, 6);
  CHECK_FALSE(detect_periodicity(k3, 1).has_value());
  auto c3 = detect_periodicity(k3, 2);
  REQUIRE(c3.has_value());
  CHECK(c3->period == 2);

  CHECK_FALSE(detect_periodicity(resolve_k(R, -6, 6)).has_value());
  auto z = detect_periodicity(FreeComplex::zero(R, -4, 4));
  REQUIRE(z.has_value());
  CHECK(z->period == 1);

  // a tampered certificate is rejected
  auto bad = *c;
  bad.rho.mats[3] = bad.rho.mats[3].scaled(R->variable(0));
  CHECK_FALSE(verify_certificate(rx, bad));
}

TEST_CASE("relative degrees on the residue field example") {
  auto R = f2xy();
  auto C = resolve_k(R, -8, 8);
  auto fam = eisenbud_operators(C);
  auto mu = linear_form_operator(fam, {0, 1});
  auto s = mu_critical_degree(C, mu);
  CHECK(s.value == ExtInt::finite(-1));
  CHECK(s.status == VerdictStatus::Stabilized);
  // the first split injection from the left is at degree -1, so the supremum is 0
  auto t = mu_cocritical_degree(C, mu);
  CHECK(t.value == ExtInt::finite(0));
  CHECK(t.status == VerdictStatus::Stabilized);

  // computed on a scrambled copy, the answer is the same
  Rng rng(8);
  auto padded = add_contractible(C, {-3, 0, 0, 5});
  std::vector<RMatrix> g;
  for (int n = padded.lo(); n <= padded.hi(); ++n) g.push_back(random_invertible(R, padded.rank(n), rng));
  auto scr = change_basis(padded, g);
  auto mm = minimalize(scr);
  // transport mu to the scrambled complex through the minimal one
  CHECK(mu_critical_degree(scr, compose(mm.inclusion, compose(linear_form_operator(eisenbud_operators(mm.complex), {0, 1}),
                                                              mm.projection)))
            .value == ExtInt::finite(-1));
  CHECK_THROWS_AS(mu_critical_degree(C.restrict(-2, 1), mu), TooNarrow);
}

TEST_CASE("relative degrees at the infinite ends") {
  auto R = f2xy();
  auto u = add_contractible(FreeComplex::zero(R, -5, 5), {0, 2});
  auto mu = zero_map(u, u, -2);
  CHECK(mu_critical_degree(u, mu).value == ExtInt::neg_inf());
  CHECK(mu_cocritical_degree(u, mu).value == ExtInt::pos_inf());

  auto rx = complete_resolution(present(RMatrix::parse(R, 1, 1, {"x"})), -6, 6).complex;
  auto t1 = eisenbud_operators(rx).ops[0];
  auto s = mu_critical_degree(rx, t1);
  CHECK(s.value == ExtInt::neg_inf());
  CHECK(s.period == 1);
  CHECK(mu_cocritical_degree(rx, t1).value == ExtInt::pos_inf());
  // the operator for y vanishes mod m here, so it is never onto: the verdict sits on the window edge
  auto t2 = eisenbud_operators(rx).ops[1];
  CHECK(mu_critical_degree(rx, t2).status == VerdictStatus::Inconclusive);
}

TEST_CASE("graded Ext module") {
  auto R = f2xy();
  auto C = resolve_k(R, -6, 6);
  auto E = ext_module(eisenbud_operators(C));
  CHECK(E.dims == std::vector<std::size_t>{6, 5, 4, 3, 2, 1, 1, 2, 3, 4, 5, 6, 7});
  CHECK(E.chi(0, 0).rows() == 3);
  CHECK(E.chi(0, 0).cols() == 1);
  for (int n = -6; n <= 4; ++n) CHECK(E.socle_nonzero(n) == (n >= -3 && n <= -1));
  for (int n = -4; n <= 6; ++n) CHECK(E.cosocle_nonzero(n) == (n >= 0 && n <= 2));
  CHECK(crdeg_cohomological(E).value == ExtInt::finite(-1));
  CHECK(cocrdeg_cohomological(E).value == ExtInt::finite(0));

  auto H = QuotientRing::parse(Field(2), 1, {"x^2"});
  auto EH = ext_module(eisenbud_operators(resolve_k(H, -6, 6)));
  for (int n = -6; n <= 4; ++n) {
    CHECK(EH.dim(n) == 1);
    CHECK(EH.chi(0, n) == KMatrix::identity(H->field(), 1));
    CHECK_FALSE(EH.socle_nonzero(n));
  }
  CHECK(crdeg_cohomological(EH, 1).value == ExtInt::neg_inf());
  auto bare = crdeg_cohomological(EH, 0);
  CHECK(bare.value == ExtInt::finite(-7));
  CHECK(bare.status == VerdictStatus::Inconclusive);

  auto EZ = ext_module(eisenbud_operators(FreeComplex::zero(R, -4, 4)));
  for (int n = -4; n <= 2; ++n) CHECK_FALSE(EZ.socle_nonzero(n));

  CHECK_THROWS_AS(crdeg_cohomological(ext_module(eisenbud_operators(C.restrict(-1, 2)))), TooNarrow);
}

TEST_CASE("socle and cosocle of a direct sum") {
  auto R = f2xy();
  auto C = resolve_k(R, -8, 8);
  auto S = direct_sum(C, shift(resolve_k(R, -13, 8), 5).restrict(-8, 8));
  auto E = ext_module(eisenbud_operators(S));
  CHECK(crdeg_cohomological(E).value == ExtInt::finite(4));
  CHECK(cocrdeg_cohomological(E).value == ExtInt::finite(0));
}

TEST_CASE("critical degree, cocritical degree and diameter of the residue field") {
  auto R = f2xy();
  auto A = analyze(resolve_k(R, -8, 8));
  CHECK(A.crdeg.verdict.value == ExtInt::finite(-1));
  CHECK(A.cocrdeg.verdict.value == ExtInt::finite(0));
  CHECK(A.crdeg.method == Method::BothAgree);
  CHECK(A.cocrdeg.method == Method::BothAgree);
  CHECK(A.diameter.verdict.value == ExtInt::finite(-1));
  CHECK(A.diameter.verdict.status == VerdictStatus::Stabilized);
  CHECK(A.ext_degree == 1);
  CHECK(A.forms.size() == 3);
  REQUIRE(A.simultaneous.has_value());
  CHECK(*A.crdeg.realizer == LinearForm{0, 1});
  CHECK(A.complexity.value == 2);
  CHECK_FALSE(A.periodicity.has_value());
  CHECK(critical_degree(resolve_k(R, -8, 8)) == A.crdeg);
  CHECK_THROWS_AS(analyze(resolve_k(R, -3, 3).restrict(-1, 2)), TooNarrow);

  // forcing the field up still finds the same degrees
  AnalysisOptions o;
  o.ext_degree = 2;
  auto A2 = analyze(resolve_k(R, -8, 8), o);
  CHECK(A2.ext_degree == 2);
  CHECK(A2.forms.size() == 5);
  CHECK(A2.crdeg.verdict == A.crdeg.verdict);
}

TEST_CASE("diameters") {
  auto R = f2xy();
  auto rx = present(RMatrix::parse(R, 1, 1, {"x"}));
  auto d = module_diameter(rx, -8, 8);
  CHECK(d.verdict.value == ExtInt::neg_inf());
  CHECK(d.verdict.period > 0);
  auto df = module_diameter(free_module(R, 2), -4, 4);
  CHECK(df.verdict.value == ExtInt::finite(0));
  CHECK(df.verdict.status == VerdictStatus::ExactInWindow);
  CHECK(critical_diameter(FreeComplex::zero(R, -4, 4)).verdict.value == ExtInt::neg_inf());

  // M + syz^n M: the cocritical degree drops with n, the critical degree does not
  auto b = complete_resolution(residue_field(R), -10, 10);
  auto k = residue_field(R);
  ExtInt previous = ExtInt::neg_inf();
  for (int n = 1; n <= 2; ++n) {
    auto sum = present(RMatrix::block_diag(k.relations, syzygy(b, n).relations));
    auto dn = module_diameter(sum, -10, 10);
    CHECK(dn.verdict.settled());
    CHECK(previous < dn.verdict.value);
    CHECK(dn.verdict.value == ExtInt::finite(n - 1));
    previous = dn.verdict.value;
  }
}

TEST_CASE("hypersurface residue fields are periodic") {
  for (auto R : {QuotientRing::parse(Field(2), 1, {"x^2"}), QuotientRing::parse(Field(3), 1, {"x^3"})}) {
    auto A = analyze(resolve_k(R, -8, 8));
    CHECK(A.crdeg.verdict.value == ExtInt::neg_inf());
    CHECK(A.cocrdeg.verdict.value == ExtInt::pos_inf());
    CHECK(A.diameter.verdict.value == ExtInt::neg_inf());
    REQUIRE(A.periodicity.has_value());
    CHECK(A.periodicity->period <= 2);
    CHECK(verify_certificate(A.minimal, *A.periodicity));
  }
}

TEST_CASE("random modules: routes, shifts, duals and the Nakayama correspondence") {
  Rng rng(101);
  std::vector<RingPtr> rings = {f2xy(), QuotientRing::parse(Field(3), 2, {"x^2", "y^3"})};
  for (const auto& R : rings) {
    for (int it = 0; it < 4; ++it) {
      auto C = complete_resolution(random_module(R, rng), -8, 8).complex;
      auto A = analyze(C);
      if (A.crdeg.verdict.settled() && A.crdeg_cohom.settled())
        CHECK(A.crdeg.verdict.value == A.crdeg_cohom.value);
      if (A.cocrdeg.verdict.settled() && A.cocrdeg_cohom.settled())
        CHECK(A.cocrdeg.verdict.value == A.cocrdeg_cohom.value);

      for (int n : {-2, 3}) {
        auto S = analyze(shift(C, n));
        CHECK(S.crdeg.verdict.value == A.crdeg.verdict.value + n);
        CHECK(S.cocrdeg.verdict.value == A.cocrdeg.verdict.value + n);
        CHECK(S.diameter.verdict.value == A.diameter.verdict.value);
      }

      auto D = analyze(dualize(C));
      auto DD = analyze(dualize(dualize(C)));
      CHECK(DD.crdeg == A.crdeg);
      CHECK(DD.cocrdeg == A.cocrdeg);
      if (A.cocrdeg.verdict.finite_settled() && D.crdeg.verdict.finite_settled())
        CHECK(D.crdeg.verdict.value == -A.cocrdeg.verdict.value);
      if (A.crdeg.verdict.finite_settled() && D.cocrdeg.verdict.finite_settled())
        CHECK(D.cocrdeg.verdict.value == -A.crdeg.verdict.value);

      // a form is onto at n exactly when its chi-action is injective on E_{n-2}
      auto fam = eisenbud_operators(A.minimal);
      for (const auto& a : enumerate_linear_forms(R->field(), 2)) {
        auto mu = linear_form_operator(fam, a);
        for (int n = -6; n <= 8; ++n) {
          KMatrix chi = A.ext.chi(0, n - 2).scaled(a[0]) + A.ext.chi(1, n - 2).scaled(a[1]);
          CHECK(surjective_at(mu, n) == (rank(chi) == chi.cols()));
        }
      }
    }
  }
}

TEST_CASE("verification suite on the residue field") {
  SuiteOptions o;
  auto r = verify_suite(residue_field(f2xy()), o);
  auto find = [&](const std::string& name) {
    for (const auto& l : r.laws)
      if (l.law == name) return l;
    FAIL("missing law " << name);
    return LawResult{};
  };
  for (auto name : {"route-agreement", "padding-invariance", "shift", "diameter-translation", "duality-derived",
                    "gap-periodicity", "simultaneous-form", "depth-codepth-duality-dual-complex",
                    "dual-module-cocrdeg", "direct-sum", "retract-bounds"}) {
    auto l = find(name);
    CHECK_MESSAGE(l.passed, name << ": " << l.detail);
    CHECK_FALSE(l.skipped);
  }
  // the stated forms of these two laws are off by one on this example
  CHECK_FALSE(find("duality").passed);
  CHECK_FALSE(find("depth-codepth-duality").passed);
}

TEST_CASE("sum laws on pairs") {
  Rng rng(77);
  auto R = QuotientRing::parse(Field(3), 2, {"x^2", "y^3"});
  SuiteOptions o;
  o.lo = -8;
  o.hi = 8;
  for (int it = 0; it < 3; ++it) {
    auto r = verify_sum_laws(random_module(R, rng), random_module(R, rng), o);
    for (const auto& l : r.laws) CHECK_MESSAGE(l.passed, l.law << ": " << l.detail);
  }
}
