#include "crdiam/critical.hpp"
#include "crdiam/random.hpp"

namespace crdiam {

namespace {

std::string show(const WindowVerdict& v) { return v.value.to_string() + " (" + to_string(v.status) + ")"; }

// Collects the outcome of the individual identities making up one law.
class Law {
 public:
  explicit Law(std::string name) : r_{std::move(name), true, true, {}} {}

  void check(bool ok, const std::string& what) {
    r_.skipped = false;
    if (!ok) {
      r_.passed = false;
      note(what);
    }
  }
  /// lhs == rhs, only when both sides are finite and settled.
  void equal_finite(const WindowVerdict& lhs, const ExtInt& rhs, bool rhs_settled, const std::string& what) {
    if (!lhs.finite_settled() || !rhs_settled || !rhs.is_finite()) return;
    check(lhs.value == rhs, what + ": " + lhs.value.to_string() + " vs " + rhs.to_string());
  }
  /// lhs == rhs, whenever both sides are settled.
  void equal_settled(const WindowVerdict& lhs, const ExtInt& rhs, bool rhs_settled, const std::string& what) {
    if (!lhs.settled() || !rhs_settled) return;
    check(lhs.value == rhs, what + ": " + lhs.value.to_string() + " vs " + rhs.to_string());
  }
  void note(const std::string& s) {
    if (!r_.detail.empty()) r_.detail += "; ";
    r_.detail += s;
  }
  LawResult done() {
    if (r_.skipped) r_.passed = true;
    return r_;
  }

 private:
  LawResult r_;
};

FreeComplex scramble(const FreeComplex& c, Rng& rng) {
  std::vector<int> degrees;
  for (int k = 0; k < 3; ++k) degrees.push_back(c.lo() + 1 + static_cast<int>(rng() % (c.hi() - c.lo())));
  FreeComplex p = add_contractible(c, degrees);
  std::vector<RMatrix> g;
  for (int n = p.lo(); n <= p.hi(); ++n) g.push_back(random_invertible(p.ring(), p.rank(n), rng));
  return change_basis(p, g);
}

// depth 0 of E'^{>= r} against codepth 0 of E^{<= -r}, for r where both sides are trustworthy.
LawResult depth_codepth(const std::string& name, const Analysis& dual, const Analysis& a) {
  Law law(name);
  if (!dual.crdeg_cohom.settled() || !a.cocrdeg_cohom.settled()) {
    law.note("cohomological degrees not settled");
    return law.done();
  }
  const GradedExtModule& ed = dual.ext;
  const GradedExtModule& e = a.ext;
  const int r_lo = std::max(ed.lo + 2, -(e.hi - 2)), r_hi = std::min(ed.hi - 2, -(e.lo + 2));
  for (int r = r_lo; r <= r_hi; ++r) {
    bool depth0 = false, codepth0 = false;
    for (int n = r; n <= ed.hi - 2 && !depth0; ++n) depth0 = ed.socle_nonzero(n);
    for (int m = -r; m >= e.lo + 2 && !codepth0; --m) codepth0 = e.cosocle_nonzero(m);
    law.check(depth0 == codepth0, "r=" + std::to_string(r) + ": depth-0 " + (depth0 ? "yes" : "no") +
                                      ", codepth-0 " + (codepth0 ? "yes" : "no"));
  }
  return law.done();
}

void sum_laws(SuiteReport& out, const Analysis& a, const Analysis& b, const Analysis& s, const std::string& tag) {
  Law sum("direct-sum");
  const WindowVerdict &sa = a.crdeg.verdict, &sb = b.crdeg.verdict, &ss = s.crdeg.verdict;
  const WindowVerdict &ta = a.cocrdeg.verdict, &tb = b.cocrdeg.verdict, &ts = s.cocrdeg.verdict;
  const bool s_ok = sa.settled() && sb.settled(), t_ok = ta.settled() && tb.settled();
  sum.equal_settled(ss, std::max(sa.value, sb.value), s_ok, tag + " crdeg");
  sum.equal_settled(ts, std::min(ta.value, tb.value), t_ok, tag + " cocrdeg");
  out.laws.push_back(sum.done());

  Law ret("retract-bounds");
  if (s_ok && ss.settled()) {
    ret.check(!(ss.value < sa.value) && !(ss.value < sb.value), tag + " crdeg of a summand exceeds the sum's");
    ret.check(sa.value == ss.value || sb.value == ss.value, tag + " no summand attains the sum's crdeg");
  }
  if (t_ok && ts.settled()) {
    ret.check(!(ta.value < ts.value) && !(tb.value < ts.value), tag + " cocrdeg of a summand is below the sum's");
    ret.check(ta.value == ts.value || tb.value == ts.value, tag + " no summand attains the sum's cocrdeg");
  }
  out.laws.push_back(ret.done());
}

}  // namespace

SuiteReport verify_suite(const ModulePresentation& m, const SuiteOptions& opts) {
  SuiteReport out;
  const int lo = opts.lo, hi = opts.hi;
  const AnalysisOptions& ao = opts.analysis;
  auto bundle = complete_resolution(m, lo, hi);
  const FreeComplex& C = bundle.complex;
  const Analysis A = analyze(C, ao);
  const WindowVerdict& s = A.crdeg.verdict;
  const WindowVerdict& t = A.cocrdeg.verdict;

  {
    Law law("route-agreement");
    law.equal_settled(s, A.crdeg_cohom.value, A.crdeg_cohom.settled(), "crdeg");
    law.equal_settled(t, A.cocrdeg_cohom.value, A.cocrdeg_cohom.settled(), "cocrdeg");
    out.laws.push_back(law.done());
  }
  {
    Law law("padding-invariance");
    Rng rng(opts.seed);
    const Analysis P = analyze(scramble(C, rng), ao);
    law.check(P.crdeg.verdict == s, "crdeg " + show(P.crdeg.verdict) + " vs " + show(s));
    law.check(P.cocrdeg.verdict == t, "cocrdeg " + show(P.cocrdeg.verdict) + " vs " + show(t));
    out.laws.push_back(law.done());
  }
  {
    Law shift_law("shift"), diam("diameter-translation");
    for (int n : opts.shifts) {
      const Analysis S = analyze(shift(C, n), ao);
      const std::string tag = "n=" + std::to_string(n);
      shift_law.check(S.crdeg.verdict.value == s.value + n && S.crdeg.verdict.status == s.status,
                      tag + " crdeg " + show(S.crdeg.verdict));
      shift_law.check(S.cocrdeg.verdict.value == t.value + n && S.cocrdeg.verdict.status == t.status,
                      tag + " cocrdeg " + show(S.cocrdeg.verdict));
      diam.check(S.diameter.verdict.value == A.diameter.verdict.value, tag + " diameter " + show(S.diameter.verdict));
    }
    out.laws.push_back(shift_law.done());
    out.laws.push_back(diam.done());
  }
  const Analysis Dc = analyze(dualize(C), ao);
  {
    Law stated("duality"), derived("duality-derived");
    stated.equal_finite(Dc.crdeg.verdict, -t.value, t.finite_settled(), "crdeg(C*) = -cocrdeg(C)");
    stated.equal_finite(Dc.cocrdeg.verdict, (-s.value) + 2, s.finite_settled(), "cocrdeg(C*) = 2 - crdeg(C)");
    derived.equal_finite(Dc.crdeg.verdict, -t.value, t.finite_settled(), "crdeg(C*) = -cocrdeg(C)");
    derived.equal_finite(Dc.cocrdeg.verdict, -s.value, s.finite_settled(), "cocrdeg(C*) = -crdeg(C)");
    out.laws.push_back(stated.done());
    out.laws.push_back(derived.done());
  }
  {
    Law law("gap-periodicity");
    for (const auto& f : A.forms) {
      if (!f.crdeg.settled() || !f.cocrdeg.settled()) continue;
      const ExtInt gap = difference(f.cocrdeg.value, f.crdeg.value);
      const bool wide = !gap.is_finite() ? gap.kind == ExtInt::Kind::PosInf : gap.value >= 4;
      if (!wide) {
        law.check(true, "");
        continue;
      }
      const Field F(A.minimal.ring()->field().characteristic(), A.ext_degree);
      law.check(A.periodicity.has_value(),
                "form " + form_to_string(F, f.form) + " has gap " + gap.to_string() + " without a periodicity certificate");
    }
    out.laws.push_back(law.done());
  }
  {
    Law law("simultaneous-form");
    if (s.settled() && t.settled()) {
      law.check(A.simultaneous.has_value(), "no form realizes both degrees up to extension degree " +
                                                std::to_string(A.ext_degree));
      if (A.simultaneous) law.note("found over extension degree " + std::to_string(A.ext_degree));
    }
    out.laws.push_back(law.done());
  }
  const Analysis Dm = analyze(complete_resolution(dual_module(m), lo, hi).complex, ao);
  out.laws.push_back(depth_codepth("depth-codepth-duality", Dm, A));
  out.laws.push_back(depth_codepth("depth-codepth-duality-dual-complex", Dc, A));
  {
    Law law("dual-module-cocrdeg");
    auto check = [&](const WindowVerdict& tc, const WindowVerdict& sd, const std::string& tag) {
      if (sd.finite_settled() && sd.value.value >= 0)
        law.equal_finite(tc, ExtInt::finite(-sd.value.value - 1), true, tag + " cocrdeg = -crdeg(dual) - 1");
    };
    check(t, Dm.crdeg.verdict, "M:");
    // A high enough syzygy has a dual with nonnegative critical degree.
    if (t.finite_settled() && t.value.value + 1 >= lo && t.value.value + 1 <= hi - 1) {
      const int n = t.value.value + 1;
      const ModulePresentation syz = syzygy(bundle, n);
      const Analysis As = analyze(complete_resolution(syz, lo, hi).complex, ao);
      const Analysis Ds = analyze(complete_resolution(dual_module(syz), lo, hi).complex, ao);
      check(As.cocrdeg.verdict, Ds.crdeg.verdict, "syzygy " + std::to_string(n) + ":");
    }
    out.laws.push_back(law.done());
  }
  {
    const int k = opts.sum_shift;
    FreeComplex wide = complete_resolution(m, lo - k, hi).complex;
    const FreeComplex shifted = shift(wide, k).restrict(lo, hi);
    const Analysis B = analyze(shifted, ao);
    const Analysis S = analyze(direct_sum(C, shifted), ao);
    sum_laws(out, A, B, S, "C + shift(C, " + std::to_string(k) + ")");
  }
  return out;
}

SuiteReport verify_sum_laws(const ModulePresentation& a, const ModulePresentation& b, const SuiteOptions& opts) {
  SuiteReport out;
  const FreeComplex ca = complete_resolution(a, opts.lo, opts.hi).complex;
  const FreeComplex cb = complete_resolution(b, opts.lo, opts.hi).complex;
  const Analysis A = analyze(ca, opts.analysis), B = analyze(cb, opts.analysis);
  const Analysis S = analyze(direct_sum(ca, cb), opts.analysis);
  sum_laws(out, A, B, S, "pair");
  return out;
}

}  // namespace crdiam
