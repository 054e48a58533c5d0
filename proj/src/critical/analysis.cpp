#include <functional>

#include "crdiam/critical.hpp"
#include "crdiam/errors.hpp"

namespace crdiam {

namespace {

// Extreme failing degree over the full range and over the range shrunk by 2 at each end.
// Absent means nothing failed.
struct Scan {
  std::optional<int> full, shrunk;
};

// Largest i in [from, to] with fails(i).
Scan scan_last(int from, int to, const std::function<bool(int)>& fails) {
  Scan s;
  for (int i = to; i >= from; --i) {
    if (!fails(i)) continue;
    if (!s.full) s.full = i;
    if (i >= from + 2 && i <= to - 2) {
      s.shrunk = i;
      break;
    }
  }
  return s;
}

// Smallest i in [from, to] with fails(i).
Scan scan_first(int from, int to, const std::function<bool(int)>& fails) {
  Scan s;
  for (int i = from; i <= to; ++i) {
    if (!fails(i)) continue;
    if (!s.full) s.full = i;
    if (i >= from + 2 && i <= to - 2) {
      s.shrunk = i;
      break;
    }
  }
  return s;
}

// Raw values: nothing failing is -inf for critical and +inf for cocritical degrees.
ExtInt raw(const std::optional<int>& v, bool critical) {
  if (v) return ExtInt::finite(*v);
  return critical ? ExtInt::neg_inf() : ExtInt::pos_inf();
}

WindowVerdict settle(const ExtInt& full, const ExtInt& shrunk, bool critical, int lo, int hi, int period) {
  WindowVerdict v;
  v.lo = lo;
  v.hi = hi;
  if (!full.is_finite()) {
    if (period > 0) {
      v.value = full;
      v.status = VerdictStatus::Stabilized;
      v.period = period;
    } else {
      v.value = ExtInt::finite(critical ? lo - 1 : hi + 1);
      v.status = VerdictStatus::Inconclusive;
    }
    return v;
  }
  v.value = full;
  v.status = full == shrunk ? VerdictStatus::Stabilized : VerdictStatus::Inconclusive;
  return v;
}

void check_width(int lo, int hi) {
  if (hi - lo < 4) throw TooNarrow("window [" + std::to_string(lo) + ", " + std::to_string(hi) + "] is too narrow");
}

KMatrix relabel(const KMatrix& m, const Field& f) { return KMatrix(f, m.rows(), m.cols(), m.data()); }

// Critical and cocritical scans of a degree -q map given by its reductions K(n): C_n -> C_{n-q}
// for sources n in [lo + q, hi].
struct MapScans {
  Scan crit, cocrit;
};

MapScans scan_map(const std::vector<std::size_t>& ranks, int lo, int hi, int q, const std::function<KMatrix(int)>& k) {
  auto b = [&](int n) { return ranks[n - lo]; };
  std::vector<std::size_t> rk(hi - lo + 1, 0);
  for (int n = lo + q; n <= hi; ++n) rk[n - lo] = rank(k(n));
  MapScans s;
  s.crit = scan_last(lo, hi - q, [&](int i) { return rk[i + q - lo] < b(i); });
  s.cocrit = scan_first(lo + q, hi, [&](int i) { return rk[i - lo] < b(i); });
  return s;
}

WindowVerdict mu_degree(const FreeComplex& c, const ChainMap& mu, int max_period, bool critical) {
  const int q = -mu.degree;
  if (q <= 0) throw std::invalid_argument("the endomorphism must lower degrees");
  const int lo = std::max(c.lo(), mu.first - q), hi = std::min(c.hi(), mu.last());
  check_width(lo, hi);
  auto mm = minimalize(c);
  const FreeComplex& m = mm.complex;
  std::vector<std::size_t> rk(hi - lo + 1, 0);
  for (int n = lo + q; n <= hi; ++n)
    rk[n - lo] = rank((mm.projection.at(n - q) * mu.at(n) * mm.inclusion.at(n)).constant_part());
  auto cert = detect_periodicity(m, max_period);
  const int period = cert ? cert->period : 0;
  if (critical) {
    Scan sc = scan_last(lo, hi - q, [&](int i) { return rk[i + q - lo] < m.rank(i); });
    return settle(raw(sc.full, true), raw(sc.shrunk, true), true, lo, hi, period);
  }
  Scan sc = scan_first(lo + q, hi, [&](int i) { return rk[i - lo] < m.rank(i); });
  return settle(raw(sc.full, false), raw(sc.shrunk, false), false, lo, hi, period);
}

}  // namespace

bool GradedExtModule::socle_nonzero(int n) const {
  const std::size_t b = dim(n);
  if (b == 0) return false;
  if (codim == 0) return true;
  KMatrix s = chi(0, n);
  for (int j = 1; j < codim; ++j) s = KMatrix::vstack(s, chi(j, n));
  return rank(s) < b;
}

bool GradedExtModule::cosocle_nonzero(int n) const {
  const std::size_t b = dim(n);
  if (b == 0) return false;
  if (codim == 0) return true;
  KMatrix s = chi(0, n - 2);
  for (int j = 1; j < codim; ++j) s = KMatrix::hstack(s, chi(j, n - 2));
  return rank(s) < b;
}

GradedExtModule ext_module(const CIOperatorFamily& fam) {
  const FreeComplex& c = fam.base;
  GradedExtModule e;
  e.lo = c.lo();
  e.hi = c.hi();
  e.codim = fam.codim();
  e.dims = c.ranks();
  e.chis.resize(e.codim);
  for (int j = 0; j < e.codim; ++j)
    for (int n = c.lo(); n <= c.hi() - 2; ++n) e.chis[j].push_back(fam.ops[j].at(n + 2).constant_part().transpose());
  return e;
}

GradedExtModule ext_module(const CompleteResolutionBundle& b, const CIOperatorFamily& fam) {
  if (fam.base != b.complex) throw std::invalid_argument("operator family built on another complex");
  return ext_module(fam);
}

WindowVerdict crdeg_cohomological(const GradedExtModule& e, int periodic) {
  check_width(e.lo, e.hi);
  Scan s = scan_last(e.lo, e.hi - 2, [&](int n) { return e.socle_nonzero(n); });
  return settle(raw(s.full, true), raw(s.shrunk, true), true, e.lo, e.hi, periodic);
}

WindowVerdict cocrdeg_cohomological(const GradedExtModule& e, int periodic) {
  check_width(e.lo, e.hi);
  Scan s = scan_first(e.lo + 2, e.hi, [&](int n) { return e.cosocle_nonzero(n); });
  return settle(raw(s.full, false), raw(s.shrunk, false), false, e.lo, e.hi, periodic);
}

WindowVerdict mu_critical_degree(const FreeComplex& c, const ChainMap& mu, int max_period) {
  return mu_degree(c, mu, max_period, true);
}

WindowVerdict mu_cocritical_degree(const FreeComplex& c, const ChainMap& mu, int max_period) {
  return mu_degree(c, mu, max_period, false);
}

Analysis analyze(const FreeComplex& c, const AnalysisOptions& opts) {
  const int lo = c.lo(), hi = c.hi();
  check_width(lo, hi);
  const RingPtr& R = c.ring();
  Analysis A;
  auto mm = minimalize(c);
  A.minimal = mm.complex;
  A.stripped_rank = c.total_rank() - A.minimal.total_rank();
  const FreeComplex& m = A.minimal;
  const int cd = R->codim();

  auto fam = eisenbud_operators(m);
  A.ext = ext_module(fam);
  A.periodicity = detect_periodicity(m, opts.max_period);
  const int period = A.periodicity ? A.periodicity->period : 0;
  A.complexity = estimate_complexity(m.ranks(), cd);
  if (opts.cohomological) {
    A.crdeg_cohom = crdeg_cohomological(A.ext, period);
    A.cocrdeg_cohom = cocrdeg_cohomological(A.ext, period);
  }

  std::vector<std::vector<KMatrix>> T(cd);
  for (int j = 0; j < cd; ++j)
    for (int n = lo + 2; n <= hi; ++n) T[j].push_back(fam.ops[j].at(n).constant_part());

  const Field& base = R->field();
  int e = base.degree() > 1 ? 1 : std::max(1, opts.ext_degree);
  const int e_max = base.degree() > 1 ? 1 : std::max(e, opts.max_ext_degree);
  if (base.degree() > 1 && opts.ext_degree > 1)
    A.notes.push_back("ring already over " + base.name() + "; forms taken over the ring's field");
  for (;; ++e) {
    const Field F = base.degree() > 1 ? base : Field(base.characteristic(), e);
    A.ext_degree = base.degree() > 1 ? base.degree() : e;
    A.forms.clear();
    ExtInt s_full = ExtInt::pos_inf(), s_shr = ExtInt::pos_inf();
    ExtInt t_full = ExtInt::neg_inf(), t_shr = ExtInt::neg_inf();
    std::vector<std::pair<ExtInt, ExtInt>> raws;
    for (const auto& a : enumerate_linear_forms(F, cd)) {
      auto scans = scan_map(m.ranks(), lo, hi, 2, [&](int n) {
        KMatrix sum(F, m.rank(n - 2), m.rank(n));
        for (int j = 0; j < cd; ++j)
          if (a[j] != 0) sum = sum + relabel(T[j][n - lo - 2], F).scaled(a[j]);
        return sum;
      });
      ExtInt sf = raw(scans.crit.full, true), ss = raw(scans.crit.shrunk, true);
      ExtInt tf = raw(scans.cocrit.full, false), ts = raw(scans.cocrit.shrunk, false);
      if (sf < s_full) s_full = sf;
      if (ss < s_shr) s_shr = ss;
      if (t_full < tf) t_full = tf;
      if (t_shr < ts) t_shr = ts;
      raws.emplace_back(sf, tf);
      A.forms.push_back({a, settle(sf, ss, true, lo, hi, period), settle(tf, ts, false, lo, hi, period)});
    }
    A.crdeg = DegreeReport{DegreeKind::Crdeg, settle(s_full, s_shr, true, lo, hi, period), {}, A.ext_degree,
                           Method::MatrixLevel};
    A.cocrdeg = DegreeReport{DegreeKind::Cocrdeg, settle(t_full, t_shr, false, lo, hi, period), {}, A.ext_degree,
                             Method::MatrixLevel};
    A.simultaneous.reset();
    for (std::size_t i = 0; i < raws.size(); ++i) {
      if (!A.crdeg.realizer && raws[i].first == s_full) A.crdeg.realizer = A.forms[i].form;
      if (!A.cocrdeg.realizer && raws[i].second == t_full) A.cocrdeg.realizer = A.forms[i].form;
      if (!A.simultaneous && raws[i].first == s_full && raws[i].second == t_full) A.simultaneous = A.forms[i].form;
    }
    A.routes_agree = true;
    if (opts.cohomological) {
      const bool s_ok = A.crdeg.verdict.value == A.crdeg_cohom.value;
      const bool t_ok = A.cocrdeg.verdict.value == A.cocrdeg_cohom.value;
      if (s_ok) A.crdeg.method = Method::BothAgree;
      if (t_ok) A.cocrdeg.method = Method::BothAgree;
      A.routes_agree = s_ok && t_ok;
    }
    if ((A.routes_agree && A.simultaneous) || e >= e_max) break;
    A.notes.push_back(std::string("escalating from ") + F.name() + ": " +
                      (A.routes_agree ? "no single form realizes both degrees" : "routes disagree"));
  }
  if (!A.routes_agree) A.notes.push_back("matrix-level and cohomological degrees differ");
  if (!A.simultaneous) A.notes.push_back("no single form realizes both degrees");

  // Diameter.
  DegreeReport& d = A.diameter;
  d.kind = DegreeKind::Diameter;
  d.ext_degree = A.ext_degree;
  d.realizer = A.simultaneous;
  d.method = A.crdeg.method == Method::BothAgree && A.cocrdeg.method == Method::BothAgree ? Method::BothAgree
                                                                                           : Method::MatrixLevel;
  d.verdict.lo = lo;
  d.verdict.hi = hi;
  const WindowVerdict& s = A.crdeg.verdict;
  const WindowVerdict& t = A.cocrdeg.verdict;
  if (!A.complexity.ambiguous && A.complexity.value <= 1) {
    if (period > 0) {
      d.verdict.value = ExtInt::neg_inf();
      d.verdict.status = VerdictStatus::Stabilized;
      d.verdict.period = period;
    } else {
      d.verdict.value = difference(s.value, t.value);
      d.verdict.status = VerdictStatus::Inconclusive;
      A.notes.push_back("complexity at most 1 but no periodicity certificate in the window");
    }
  } else {
    d.verdict.value = difference(s.value, t.value);
    d.verdict.status = A.complexity.ambiguous ? VerdictStatus::Inconclusive : weaker(s.status, t.status);
    if (!d.verdict.value.is_finite()) d.verdict.status = VerdictStatus::Inconclusive;
    if (A.complexity.ambiguous) A.notes.push_back("complexity estimate is ambiguous");
  }
  return A;
}

DegreeReport critical_degree(const FreeComplex& c, const AnalysisOptions& opts) { return analyze(c, opts).crdeg; }

DegreeReport cocritical_degree(const FreeComplex& c, const AnalysisOptions& opts) {
  return analyze(c, opts).cocrdeg;
}

DegreeReport critical_diameter(const FreeComplex& c, const AnalysisOptions& opts) {
  return analyze(c, opts).diameter;
}

DegreeReport module_diameter(const ModulePresentation& m, int lo, int hi, const AnalysisOptions& opts) {
  auto b = complete_resolution(m, lo, hi);
  if (b.complex.total_rank() == 0) {
    DegreeReport d;
    d.kind = DegreeKind::Diameter;
    d.verdict = WindowVerdict{ExtInt::finite(0), VerdictStatus::ExactInWindow, lo, hi, 0};
    d.ext_degree = opts.ext_degree;
    return d;
  }
  return analyze(b.complex, opts).diameter;
}

}  // namespace crdiam
