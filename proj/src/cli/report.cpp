#include <sstream>

#include <json.hpp>

#include "crdiam/cli.hpp"
#include "crdiam/errors.hpp"

namespace crdiam {

namespace {

using Json = nlohmann::ordered_json;

Json ext_to_json(const ExtInt& v) {
  if (v.is_finite()) return v.value;
  return v.to_string();
}

ExtInt ext_from_json(const Json& j) {
  if (j.is_number_integer()) return ExtInt::finite(j.get<int>());
  const std::string s = j.get<std::string>();
  if (s != "-inf" && s != "+inf") throw ParseError("report: bad degree '" + s + "'");
  return ExtInt::parse(s);
}

Json verdict_to_json(const WindowVerdict& v) {
  Json j;
  j["value"] = ext_to_json(v.value);
  j["status"] = to_string(v.status);
  j["lo"] = v.lo;
  j["hi"] = v.hi;
  j["period"] = v.period;
  return j;
}

WindowVerdict verdict_from_json(const Json& j) {
  WindowVerdict v;
  v.value = ext_from_json(j.at("value"));
  v.status = parse_status(j.at("status").get<std::string>());
  v.lo = j.at("lo").get<int>();
  v.hi = j.at("hi").get<int>();
  v.period = j.at("period").get<int>();
  return v;
}

Json form_to_json(const std::optional<LinearForm>& f) {
  if (!f) return nullptr;
  return *f;
}

std::optional<LinearForm> form_from_json(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<LinearForm>();
}

Json complexity_to_json(const ComplexityEstimate& c) { return {{"value", c.value}, {"ambiguous", c.ambiguous}}; }

ComplexityEstimate complexity_from_json(const Json& j) {
  return {j.at("value").get<int>(), j.at("ambiguous").get<bool>()};
}

Json degree_to_json(const DegreeReport& d) {
  Json j;
  j["kind"] = to_string(d.kind);
  j["verdict"] = verdict_to_json(d.verdict);
  j["realizer"] = form_to_json(d.realizer);
  j["ext_degree"] = d.ext_degree;
  j["method"] = to_string(d.method);
  return j;
}

DegreeReport degree_from_json(const Json& j) {
  DegreeReport d;
  d.kind = parse_kind(j.at("kind").get<std::string>());
  d.verdict = verdict_from_json(j.at("verdict"));
  d.realizer = form_from_json(j.at("realizer"));
  d.ext_degree = j.at("ext_degree").get<int>();
  d.method = parse_method(j.at("method").get<std::string>());
  return d;
}

std::string verdict_text(const WindowVerdict& v) {
  std::string s = v.value.to_string() + " (" + to_string(v.status);
  if (v.period > 0 && !v.value.is_finite()) s += ", period " + std::to_string(v.period) + " in window";
  return s + ")";
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

std::string serialize(const Report& r) {
  Json j;
  j["provenance"] = {{"tool_version", r.tool_version},
                     {"field", {{"p", r.field.p}, {"e", r.field.e}}},
                     {"ring", r.ring},
                     {"ring_hash", r.ring_hash},
                     {"window", {{"lo", r.lo}, {"hi", r.hi}}}};
  Json tasks = Json::array();
  for (Task t : r.tasks) tasks.push_back(to_string(t));
  j["tasks"] = tasks;
  if (r.resolve) {
    const ResolveResult& x = *r.resolve;
    j["resolve"] = {{"module_dim", x.module_dim},
                    {"free_betti", x.free_betti},
                    {"complete_ranks", x.complete_ranks},
                    {"comparison_degree", x.comparison_degree},
                    {"stripped_rank", x.stripped_rank},
                    {"complexity", complexity_to_json(x.complexity)}};
  }
  if (r.cioperators) {
    const OperatorsResult& x = *r.cioperators;
    j["cioperators"] = {{"codim", x.codim},
                        {"first", x.first},
                        {"last", x.last},
                        {"audit",
                         {{"division", x.audit.division},
                          {"strict_commutation", x.audit.strict_commutation},
                          {"homotopy_commutation", x.audit.homotopy_commutation}}},
                        {"dump", x.dump}};
  }
  if (r.analysis) {
    const AnalysisSummary& x = *r.analysis;
    Json forms = Json::array();
    for (const auto& f : x.forms)
      forms.push_back({{"form", f.form}, {"crdeg", verdict_to_json(f.crdeg)}, {"cocrdeg", verdict_to_json(f.cocrdeg)}});
    j["analysis"] = {{"ext_degree", x.ext_degree},
                     {"stripped_rank", x.stripped_rank},
                     {"period", x.period},
                     {"complexity", complexity_to_json(x.complexity)},
                     {"routes_agree", x.routes_agree},
                     {"simultaneous", form_to_json(x.simultaneous)},
                     {"crdeg_cohomological", verdict_to_json(x.crdeg_cohomological)},
                     {"cocrdeg_cohomological", verdict_to_json(x.cocrdeg_cohomological)},
                     {"forms", forms},
                     {"notes", x.notes}};
  }
  if (r.crdeg) j["crdeg"] = degree_to_json(*r.crdeg);
  if (r.cocrdeg) j["cocrdeg"] = degree_to_json(*r.cocrdeg);
  if (r.diameter) j["diameter"] = degree_to_json(*r.diameter);
  if (r.verify) {
    Json laws = Json::array();
    for (const auto& l : r.verify->laws)
      laws.push_back({{"law", l.law}, {"passed", l.passed}, {"skipped", l.skipped}, {"detail", l.detail}});
    j["verify"] = {{"all_passed", r.verify->all_passed()}, {"laws", laws}};
  }
  if (r.show) j["show"] = *r.show;
  return j.dump(2) + "\n";
}

Report deserialize(const std::string& text) {
  Report r;
  try {
    const Json j = Json::parse(text);
    const Json& p = j.at("provenance");
    r.tool_version = p.at("tool_version").get<std::string>();
    r.field.p = p.at("field").at("p").get<std::uint32_t>();
    r.field.e = p.at("field").at("e").get<int>();
    r.ring = p.at("ring").get<std::string>();
    r.ring_hash = p.at("ring_hash").get<std::string>();
    r.lo = p.at("window").at("lo").get<int>();
    r.hi = p.at("window").at("hi").get<int>();
    for (const auto& t : j.at("tasks")) r.tasks.push_back(parse_task(t.get<std::string>()));
    if (j.contains("resolve")) {
      const Json& x = j["resolve"];
      ResolveResult res;
      res.module_dim = x.at("module_dim").get<std::size_t>();
      res.free_betti = x.at("free_betti").get<std::vector<std::size_t>>();
      res.complete_ranks = x.at("complete_ranks").get<std::vector<std::size_t>>();
      res.comparison_degree = x.at("comparison_degree").get<int>();
      res.stripped_rank = x.at("stripped_rank").get<std::size_t>();
      res.complexity = complexity_from_json(x.at("complexity"));
      r.resolve = res;
    }
    if (j.contains("cioperators")) {
      const Json& x = j["cioperators"];
      OperatorsResult ops;
      ops.codim = x.at("codim").get<int>();
      ops.first = x.at("first").get<int>();
      ops.last = x.at("last").get<int>();
      ops.audit.division = x.at("audit").at("division").get<bool>();
      ops.audit.strict_commutation = x.at("audit").at("strict_commutation").get<bool>();
      ops.audit.homotopy_commutation = x.at("audit").at("homotopy_commutation").get<bool>();
      ops.dump = x.at("dump").get<std::string>();
      r.cioperators = ops;
    }
    if (j.contains("analysis")) {
      const Json& x = j["analysis"];
      AnalysisSummary s;
      s.ext_degree = x.at("ext_degree").get<int>();
      s.stripped_rank = x.at("stripped_rank").get<std::size_t>();
      s.period = x.at("period").get<int>();
      s.complexity = complexity_from_json(x.at("complexity"));
      s.routes_agree = x.at("routes_agree").get<bool>();
      s.simultaneous = form_from_json(x.at("simultaneous"));
      s.crdeg_cohomological = verdict_from_json(x.at("crdeg_cohomological"));
      s.cocrdeg_cohomological = verdict_from_json(x.at("cocrdeg_cohomological"));
      for (const auto& f : x.at("forms"))
        s.forms.push_back({f.at("form").get<LinearForm>(), verdict_from_json(f.at("crdeg")),
                           verdict_from_json(f.at("cocrdeg"))});
      s.notes = x.at("notes").get<std::vector<std::string>>();
      r.analysis = s;
    }
    if (j.contains("crdeg")) r.crdeg = degree_from_json(j["crdeg"]);
    if (j.contains("cocrdeg")) r.cocrdeg = degree_from_json(j["cocrdeg"]);
    if (j.contains("diameter")) r.diameter = degree_from_json(j["diameter"]);
    if (j.contains("verify")) {
      SuiteReport s;
      for (const auto& l : j["verify"].at("laws"))
        s.laws.push_back({l.at("law").get<std::string>(), l.at("passed").get<bool>(), l.at("skipped").get<bool>(),
                          l.at("detail").get<std::string>()});
      r.verify = s;
    }
    if (j.contains("show")) r.show = j["show"].get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("report: ") + e.what());
  }
  return r;
}

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << "crdiam " << r.tool_version << "\n";
  os << "ring " << r.ring << "  [" << r.ring_hash << "]\n";
  os << "window [" << r.lo << ", " << r.hi << "]\n";
  const int ext = r.analysis ? r.analysis->ext_degree : 1;
  const Field forms_field(r.field.p, std::max(ext, r.field.e));
  auto form = [&](const std::optional<LinearForm>& f) { return f ? form_to_string(forms_field, *f) : "none"; };

  if (r.resolve) {
    const ResolveResult& x = *r.resolve;
    os << "\nresolve\n";
    os << "  dim_k M            " << x.module_dim << "\n";
    os << "  free Betti 0.." << x.free_betti.size() - 1 << "    " << join(x.free_betti) << "\n";
    os << "  complete ranks " << r.lo << ".." << r.hi << "  " << join(x.complete_ranks) << "\n";
    os << "  comparison degree  " << x.comparison_degree << "\n";
    if (x.stripped_rank > 0) os << "  stripped rank      " << x.stripped_rank << "\n";
    os << "  complexity         " << x.complexity.value << (x.complexity.ambiguous ? " (ambiguous)" : "") << "\n";
  }
  if (r.cioperators) {
    const OperatorsResult& x = *r.cioperators;
    os << "\ncioperators\n";
    os << "  " << x.codim << " operators of degree -2 on [" << x.first << ", " << x.last << "]\n";
    os << "  division " << (x.audit.division ? "ok" : "FAILED") << ", strict commutation "
       << (x.audit.strict_commutation ? "ok" : "FAILED") << ", homotopy commutation "
       << (x.audit.homotopy_commutation ? "ok" : "FAILED") << "\n";
    if (!x.dump.empty()) os << x.dump;
  }
  if (r.analysis) {
    const AnalysisSummary& x = *r.analysis;
    os << "\nanalysis over " << forms_field.name() << "\n";
    os << "  periodicity certificate  "
       << (x.period > 0 ? "period " + std::to_string(x.period) + " (within the window)" : std::string("none")) << "\n";
    os << "  complexity               " << x.complexity.value << (x.complexity.ambiguous ? " (ambiguous)" : "")
       << "\n";
    for (const auto& f : x.forms)
      os << "  form " << form(f.form) << "  crdeg " << verdict_text(f.crdeg) << "  cocrdeg " << verdict_text(f.cocrdeg)
         << "\n";
    os << "  cohomological crdeg " << verdict_text(x.crdeg_cohomological) << ", cocrdeg "
       << verdict_text(x.cocrdeg_cohomological) << "\n";
    os << "  simultaneous form " << form(x.simultaneous) << "\n";
    for (const auto& n : x.notes) os << "  note: " << n << "\n";
  }
  for (const auto* d : {&r.crdeg, &r.cocrdeg, &r.diameter}) {
    if (!*d) continue;
    const DegreeReport& x = **d;
    os << "\n" << to_string(x.kind) << " " << verdict_text(x.verdict) << "\n";
    os << "  method " << to_string(x.method) << ", realizer " << form(x.realizer) << "\n";
  }
  if (r.verify) {
    os << "\nverify\n";
    for (const auto& l : r.verify->laws) {
      os << "  " << (l.skipped ? "SKIP" : l.passed ? "PASS" : "FAIL") << " " << l.law;
      if (!l.detail.empty()) os << ": " << l.detail;
      os << "\n";
    }
  }
  if (r.show) os << "\n" << *r.show;
  return os.str();
}

}  // namespace crdiam
