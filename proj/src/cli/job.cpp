#include <algorithm>
#include <cstdio>

#include <json.hpp>

#include "crdiam/cli.hpp"
#include "crdiam/errors.hpp"

namespace crdiam {

namespace {

using Json = nlohmann::ordered_json;

const std::vector<std::pair<Task, const char*>> kTaskNames = {
    {Task::Resolve, "resolve"}, {Task::Cioperators, "cioperators"}, {Task::Crdeg, "crdeg"},
    {Task::Cocrdeg, "cocrdeg"}, {Task::Diameter, "diameter"},       {Task::Verify, "verify"},
    {Task::Show, "show"}};

template <class T>
T get_or(const Json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  return j.at(key).get<T>();
}

bool wants(const std::vector<Task>& tasks, Task t) { return std::find(tasks.begin(), tasks.end(), t) != tasks.end(); }

}  // namespace

std::string to_string(Task t) {
  for (const auto& [task, name] : kTaskNames)
    if (task == t) return name;
  return "?";
}

Task parse_task(const std::string& s) {
  for (const auto& [task, name] : kTaskNames)
    if (s == name) return task;
  throw ParseError("unknown task '" + s + "'");
}

std::vector<Task> all_tasks() {
  return {Task::Resolve, Task::Cioperators, Task::Crdeg, Task::Cocrdeg, Task::Diameter, Task::Verify};
}

JobSpec parse_job(const std::string& text) {
  JobSpec spec;
  try {
    const Json j = Json::parse(text);
    if (!j.is_object()) throw ParseError("job: expected an object");
    const Json& field = j.at("field");
    spec.field.p = field.at("p").get<std::uint32_t>();
    spec.field.e = get_or(field, "e", 1);
    const Json& ring = j.at("ring");
    spec.vars = ring.at("vars").get<std::vector<std::string>>();
    spec.f = ring.at("f").get<std::vector<std::string>>();
    spec.module = j.at("module").get<std::vector<std::vector<std::string>>>();
    if (j.contains("window")) {
      spec.lo = j["window"].at("lo").get<int>();
      spec.hi = j["window"].at("hi").get<int>();
    }
    if (j.contains("tasks")) {
      for (const auto& t : j["tasks"].get<std::vector<std::string>>()) {
        if (t == "all") {
          for (Task a : all_tasks()) spec.tasks.push_back(a);
        } else {
          spec.tasks.push_back(parse_task(t));
        }
      }
    } else {
      spec.tasks = all_tasks();
    }
    if (j.contains("options")) {
      const Json& o = j["options"];
      spec.max_period = get_or(o, "max_period", spec.max_period);
      spec.audit = get_or(o, "audit", spec.audit);
      spec.ext_degree = get_or(o, "ext_degree", spec.ext_degree);
      spec.max_ext_degree = get_or(o, "max_ext_degree", spec.max_ext_degree);
      spec.cohomological = get_or(o, "cohomological", spec.cohomological);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("job: ") + e.what());
  }
  for (const auto& row : spec.module)
    if (row.size() != spec.module.front().size()) throw ParseError("job: presentation matrix is not rectangular");
  return spec;
}

std::string serialize_job(const JobSpec& spec) {
  Json j;
  j["field"] = {{"p", spec.field.p}, {"e", spec.field.e}};
  j["ring"] = {{"vars", spec.vars}, {"f", spec.f}};
  j["module"] = spec.module;
  j["window"] = {{"lo", spec.lo}, {"hi", spec.hi}};
  Json tasks = Json::array();
  for (Task t : spec.tasks) tasks.push_back(to_string(t));
  j["tasks"] = tasks;
  j["options"] = {{"max_period", spec.max_period},
                  {"audit", spec.audit},
                  {"ext_degree", spec.ext_degree},
                  {"max_ext_degree", spec.max_ext_degree},
                  {"cohomological", spec.cohomological}};
  return j.dump(2) + "\n";
}

std::string fnv1a_hex(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Report run(const JobSpec& spec) {
  const int n = static_cast<int>(spec.vars.size());
  if (n == 0) throw ParseError("job: no variables");
  for (int i = 0; i < n; ++i)
    if (spec.vars[i] != variable_name(i, n))
      throw ParseError("job: variable " + std::to_string(i + 1) + " must be named '" + variable_name(i, n) + "'");
  if (spec.lo >= spec.hi)
    throw OutOfWindow("window [" + std::to_string(spec.lo) + ", " + std::to_string(spec.hi) + "] is empty");
  if (spec.module.empty()) throw ParseError("job: the module needs at least one generator");

  std::optional<Field> field;
  try {
    field.emplace(spec.field);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("job: field: ") + e.what());
  }
  const RingPtr R = QuotientRing::parse(*field, n, spec.f);
  const std::size_t rows = spec.module.size(), cols = spec.module.front().size();
  std::vector<std::string> flat;
  for (const auto& row : spec.module) {
    if (row.size() != cols) throw ParseError("job: presentation matrix is not rectangular");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  const ModulePresentation M = present(RMatrix::parse(R, rows, cols, flat));

  Report r;
  r.tool_version = kToolVersion;
  r.field = spec.field;
  r.ring = R->description();
  r.ring_hash = fnv1a_hex(r.ring);
  r.lo = spec.lo;
  r.hi = spec.hi;
  for (const auto& [task, name] : kTaskNames)
    if (wants(spec.tasks, task)) r.tasks.push_back(task);
  if (r.tasks.empty()) return r;

  AnalysisOptions ao;
  ao.ext_degree = spec.ext_degree;
  ao.max_ext_degree = spec.max_ext_degree;
  ao.max_period = spec.max_period;
  ao.cohomological = spec.cohomological;

  const CompleteResolutionBundle bundle = complete_resolution(M, spec.lo, spec.hi);
  const FreeComplex& C = bundle.complex;

  if (wants(r.tasks, Task::Resolve)) {
    ResolveResult res;
    res.module_dim = module_dim(M);
    res.free_betti = minimal_free_resolution(M, std::max(spec.hi, 1)).ranks();
    res.complete_ranks = betti(bundle);
    res.comparison_degree = bundle.comparison_degree;
    res.stripped_rank = bundle.stripped_rank;
    res.complexity = estimate_complexity(bundle);
    r.resolve = res;
  }
  if (wants(r.tasks, Task::Cioperators)) {
    const CIOperatorFamily fam = eisenbud_operators(C);
    OperatorsResult ops;
    ops.codim = fam.codim();
    ops.first = fam.first();
    ops.last = C.hi();
    ops.audit = audit(fam);
    if (spec.audit) ops.dump = audit_dump(fam);
    r.cioperators = ops;
  }
  if (wants(r.tasks, Task::Crdeg) || wants(r.tasks, Task::Cocrdeg) || wants(r.tasks, Task::Diameter)) {
    const Analysis A = analyze(C, ao);
    AnalysisSummary s;
    s.ext_degree = A.ext_degree;
    s.stripped_rank = A.stripped_rank;
    s.period = A.periodicity ? A.periodicity->period : 0;
    s.complexity = A.complexity;
    s.routes_agree = A.routes_agree;
    s.simultaneous = A.simultaneous;
    s.crdeg_cohomological = A.crdeg_cohom;
    s.cocrdeg_cohomological = A.cocrdeg_cohom;
    s.forms = A.forms;
    s.notes = A.notes;
    r.analysis = s;
    if (wants(r.tasks, Task::Crdeg)) r.crdeg = A.crdeg;
    if (wants(r.tasks, Task::Cocrdeg)) r.cocrdeg = A.cocrdeg;
    if (wants(r.tasks, Task::Diameter))
      r.diameter = C.total_rank() == 0 ? module_diameter(M, spec.lo, spec.hi, ao) : A.diameter;
  }
  if (wants(r.tasks, Task::Verify)) {
    SuiteOptions so;
    so.analysis = ao;
    so.lo = spec.lo;
    so.hi = spec.hi;
    r.verify = verify_suite(M, so);
  }
  if (wants(r.tasks, Task::Show)) r.show = to_text(C);
  return r;
}

int exit_code(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return 2;
  if (dynamic_cast<const RingRejected*>(&e)) return 3;
  if (dynamic_cast<const TooNarrow*>(&e) || dynamic_cast<const OutOfWindow*>(&e)) return 4;
  return 5;
}

}  // namespace crdiam
