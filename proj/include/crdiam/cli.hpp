#pragma once

#include <exception>
#include <optional>
#include <string>
#include <vector>

#include "crdiam/critical.hpp"

namespace crdiam {

inline constexpr const char* kToolVersion = "0.3.0";

enum class Task { Resolve, Cioperators, Crdeg, Cocrdeg, Diameter, Verify, Show };
std::string to_string(Task t);
/// Throws ParseError.
Task parse_task(const std::string& s);
/// Every task but show, in dependency order.
std::vector<Task> all_tasks();

/// One job: a ring, a module presentation, a window and the tasks to run on it.
struct JobSpec {
  FieldSpec field;
  /// Must be the grammar's names for that many variables: x, y, z up to three, else x1..xn.
  std::vector<std::string> vars;
  std::vector<std::string> f;
  /// Rows of the presentation matrix. [[], []] is the free module of rank 2.
  std::vector<std::vector<std::string>> module;
  int lo = -8, hi = 8;
  std::vector<Task> tasks;
  int max_period = 2;
  bool audit = false;
  int ext_degree = 1;
  int max_ext_degree = 2;
  bool cohomological = true;

  bool operator==(const JobSpec&) const = default;
};

/// Throws ParseError on malformed JSON, missing keys and ragged matrices.
JobSpec parse_job(const std::string& text);
std::string serialize_job(const JobSpec& spec);

struct ResolveResult {
  std::size_t module_dim = 0;
  /// Ranks of the minimal free resolution F_0..F_hi.
  std::vector<std::size_t> free_betti;
  /// Ranks of the complete resolution on [lo, hi].
  std::vector<std::size_t> complete_ranks;
  int comparison_degree = 0;
  std::size_t stripped_rank = 0;
  ComplexityEstimate complexity;
  bool operator==(const ResolveResult&) const = default;
};

struct OperatorsResult {
  int codim = 0;
  int first = 0, last = 0;
  OperatorAudit audit;
  /// Only filled with --audit.
  std::string dump;
  bool operator==(const OperatorsResult&) const = default;
};

/// Everything behind the three degree reports.
struct AnalysisSummary {
  int ext_degree = 1;
  std::size_t stripped_rank = 0;
  /// Period of the certificate, 0 without one.
  int period = 0;
  ComplexityEstimate complexity;
  bool routes_agree = true;
  std::optional<LinearForm> simultaneous;
  WindowVerdict crdeg_cohomological, cocrdeg_cohomological;
  std::vector<FormResult> forms;
  std::vector<std::string> notes;
  bool operator==(const AnalysisSummary&) const = default;
};

struct Report {
  std::string tool_version;
  FieldSpec field;
  std::string ring;
  /// FNV-1a of the ring description, 16 hex digits.
  std::string ring_hash;
  int lo = 0, hi = 0;
  std::vector<Task> tasks;
  std::optional<ResolveResult> resolve;
  std::optional<OperatorsResult> cioperators;
  std::optional<AnalysisSummary> analysis;
  std::optional<DegreeReport> crdeg, cocrdeg, diameter;
  std::optional<SuiteReport> verify;
  std::optional<std::string> show;
  bool operator==(const Report&) const = default;
};

std::string fnv1a_hex(const std::string& s);

/// Runs the tasks in dependency order. Library errors propagate.
Report run(const JobSpec& spec);

/// Pretty JSON with a fixed key order and a trailing newline.
std::string serialize(const Report& r);
/// Throws ParseError.
Report deserialize(const std::string& text);
/// Human-readable rendering.
std::string render_text(const Report& r);

/// 2 parse, 3 ring rejected, 4 window, 5 anything else.
int exit_code(const std::exception& e);

}  // namespace crdiam
