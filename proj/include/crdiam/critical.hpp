#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crdiam/cioper.hpp"
#include "crdiam/complexes.hpp"
#include "crdiam/resolve.hpp"

namespace crdiam {

/// An integer or one of the two infinities.
struct ExtInt {
  enum class Kind { NegInf, Finite, PosInf };
  Kind kind = Kind::Finite;
  int value = 0;

  static ExtInt finite(int v) { return {Kind::Finite, v}; }
  static ExtInt neg_inf() { return {Kind::NegInf, 0}; }
  static ExtInt pos_inf() { return {Kind::PosInf, 0}; }
  bool is_finite() const { return kind == Kind::Finite; }

  /// "-inf", "+inf" or the decimal value.
  std::string to_string() const;
  /// Inverse of to_string. Throws ParseError.
  static ExtInt parse(const std::string& s);

  ExtInt operator-() const;
  ExtInt operator+(int n) const;
  bool operator==(const ExtInt& o) const { return kind == o.kind && (kind != Kind::Finite || value == o.value); }
  bool operator!=(const ExtInt& o) const { return !(*this == o); }
  bool operator<(const ExtInt& o) const;
};

/// a - b, with -inf whenever a = -inf or b = +inf.
ExtInt difference(const ExtInt& a, const ExtInt& b);

enum class VerdictStatus { ExactInWindow, Stabilized, Inconclusive };
std::string to_string(VerdictStatus s);
VerdictStatus parse_status(const std::string& s);
/// The less trustworthy of the two.
VerdictStatus weaker(VerdictStatus a, VerdictStatus b);

/// A degree computed on [lo, hi]. Infinite values only come with a periodicity certificate.
struct WindowVerdict {
  ExtInt value;
  VerdictStatus status = VerdictStatus::Inconclusive;
  int lo = 0, hi = 0;
  /// Period of the certificate backing an infinite value, 0 otherwise.
  int period = 0;

  bool settled() const { return status != VerdictStatus::Inconclusive; }
  bool finite_settled() const { return settled() && value.is_finite(); }
  bool operator==(const WindowVerdict& o) const {
    return value == o.value && status == o.status && lo == o.lo && hi == o.hi && period == o.period;
  }
};

/// A degree -q chain map rho: C -> C, rho(n): C_n -> C_{n-q} invertible for lo + q <= n <= hi.
struct PeriodicityCertificate {
  int period = 0;
  ChainMap rho;
};

/// Searches q = 1..max_period on a minimal complex.
std::optional<PeriodicityCertificate> detect_periodicity(const FreeComplex& c, int max_period = 2);
/// Degree-wise invertibility mod m plus the chain identity, recomputed from scratch.
bool verify_certificate(const FreeComplex& c, const PeriodicityCertificate& cert);

/// Ext(M, k) as a module over k[chi_1..chi_c]: dims(n) = rank(n) and
/// chi(j, n): k^{b_n} -> k^{b_{n+2}} the transpose of t_j(n+2) mod m, for lo <= n <= hi - 2.
struct GradedExtModule {
  int lo = 0, hi = -1;
  int codim = 0;
  std::vector<std::size_t> dims;
  /// chis[j][n - lo]
  std::vector<std::vector<KMatrix>> chis;

  std::size_t dim(int n) const { return dims.at(n - lo); }
  const KMatrix& chi(int j, int n) const { return chis.at(j).at(n - lo); }
  /// Some nonzero element of E_n is killed by every chi_j; lo <= n <= hi - 2.
  bool socle_nonzero(int n) const;
  /// E_n is not covered by the images of chi_j from E_{n-2}; lo + 2 <= n <= hi.
  bool cosocle_nonzero(int n) const;
};

/// The family must live on a minimal complex.
GradedExtModule ext_module(const CIOperatorFamily& fam);
GradedExtModule ext_module(const CompleteResolutionBundle& b, const CIOperatorFamily& fam);

/// Highest socle degree, checked on [lo, hi-2] and on the window shrunk by 2.
/// With periodic set an empty socle yields -inf, otherwise lo - 1 inconclusive. TooNarrow if hi - lo < 4.
WindowVerdict crdeg_cohomological(const GradedExtModule& e, int periodic = 0);
/// Lowest cosocle degree on [lo+2, hi], mirror image of the above.
WindowVerdict cocrdeg_cohomological(const GradedExtModule& e, int periodic = 0);

/// Minimalizes c, transports mu (degree -q, q > 0) and finds the last target where it fails to be onto.
WindowVerdict mu_critical_degree(const FreeComplex& c, const ChainMap& mu, int max_period = 2);
/// Minimalizes c, transports mu and finds the first source where it fails to split.
WindowVerdict mu_cocritical_degree(const FreeComplex& c, const ChainMap& mu, int max_period = 2);

enum class DegreeKind { Crdeg, Cocrdeg, Diameter };
enum class Method { MatrixLevel, Cohomological, BothAgree };
std::string to_string(DegreeKind k);
std::string to_string(Method m);
DegreeKind parse_kind(const std::string& s);
Method parse_method(const std::string& s);

struct DegreeReport {
  DegreeKind kind = DegreeKind::Crdeg;
  WindowVerdict verdict;
  /// Lex-smallest realizing form over F_{p^e}, e = ext_degree.
  std::optional<LinearForm> realizer;
  int ext_degree = 1;
  Method method = Method::MatrixLevel;

  bool operator==(const DegreeReport& o) const {
    return kind == o.kind && verdict == o.verdict && realizer == o.realizer && ext_degree == o.ext_degree &&
           method == o.method;
  }
};

struct AnalysisOptions {
  int ext_degree = 1;
  /// Escalation stops here.
  int max_ext_degree = 2;
  int max_period = 2;
  bool cohomological = true;
};

/// Per-form critical and cocritical degree.
struct FormResult {
  LinearForm form;
  WindowVerdict crdeg, cocrdeg;
  bool operator==(const FormResult&) const = default;
};

struct Analysis {
  FreeComplex minimal;
  std::size_t stripped_rank = 0;
  GradedExtModule ext;
  std::optional<PeriodicityCertificate> periodicity;
  ComplexityEstimate complexity;
  int ext_degree = 1;
  std::vector<FormResult> forms;
  DegreeReport crdeg, cocrdeg, diameter;
  WindowVerdict crdeg_cohom, cocrdeg_cohom;
  /// Lex-smallest form realizing both degrees at once.
  std::optional<LinearForm> simultaneous;
  bool routes_agree = true;
  std::vector<std::string> notes;
};

/// Minimalize, build the operators, run both routes and escalate the field degree while the routes
/// disagree or no single form realizes both degrees. TooNarrow if hi - lo < 4.
Analysis analyze(const FreeComplex& c, const AnalysisOptions& opts = {});

DegreeReport critical_degree(const FreeComplex& c, const AnalysisOptions& opts = {});
DegreeReport cocritical_degree(const FreeComplex& c, const AnalysisOptions& opts = {});
/// crdeg - cocrdeg; -inf when the complexity is at most 1, inconclusive when it is ambiguous.
DegreeReport critical_diameter(const FreeComplex& c, const AnalysisOptions& opts = {});
/// Diameter of the minimal complete resolution; 0 when M is free.
DegreeReport module_diameter(const ModulePresentation& m, int lo, int hi, const AnalysisOptions& opts = {});

/// Outcome of one law on one input.
struct LawResult {
  std::string law;
  bool passed = true;
  bool skipped = false;
  std::string detail;
  bool operator==(const LawResult&) const = default;
};

struct SuiteReport {
  std::vector<LawResult> laws;
  bool all_passed() const;
  bool operator==(const SuiteReport&) const = default;
};

struct SuiteOptions {
  AnalysisOptions analysis;
  int lo = -8, hi = 8;
  std::vector<int> shifts = {-3, -2, -1, 0, 1, 2, 3};
  int sum_shift = 5;
  std::uint64_t seed = 1;
};

/// Every law on one module: padding-invariance, duality (as stated and as derived), shift,
/// diameter-translation, gap-periodicity, depth-codepth-duality (on the complete resolution of M*
/// and on the dual complex), simultaneous-form, route-agreement, direct-sum and retract-bounds
/// for C + shift(C), and dual-module-cocrdeg.
SuiteReport verify_suite(const ModulePresentation& m, const SuiteOptions& opts = {});
/// direct-sum and retract-bounds for a pair of modules over the same ring.
SuiteReport verify_sum_laws(const ModulePresentation& a, const ModulePresentation& b, const SuiteOptions& opts = {});

}  // namespace crdiam
