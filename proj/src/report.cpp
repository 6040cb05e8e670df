#include "fnf/report.hpp"

#include <algorithm>
#include <sstream>

#include "fnf/render.hpp"
#include "json.hpp"

namespace fnf {

bool RunReport::operator==(const RunReport& o) const {
  return litmus_name == o.litmus_name && architecture == o.architecture &&
         unroll_bound == o.unroll_bound && all_executions == o.all_executions &&
         normal_executions == o.normal_executions &&
         stuck_paths == o.stuck_paths && observations == o.observations &&
         condition_verdict == o.condition_verdict && witness == o.witness;
}

RunReport make_run_report(const Litmus& l, const Architecture& arch,
                          int unroll_bound, std::size_t max_execs) {
  RunReport r;
  r.litmus_name = l.name;
  r.architecture = arch.name();
  r.unroll_bound = unroll_bound;

  ReachResult reach = reachable(l, arch, unroll_bound, max_execs);
  r.normal_executions = reach.normal_executions;
  r.stuck_paths = reach.stuck_paths;
  for (const auto& [obs, _] : reach.reached) r.observations.push_back(obs);
  std::sort(r.observations.begin(), r.observations.end());

  Verdict v = check_condition(l, reach);
  r.condition_verdict = v.holds;
  if (v.witness) {
    std::vector<Program> expanded;
    for (const auto& [_, prog] : l.procs)
      expanded.push_back(expand(prog, unroll_bound));
    Labeler lab(expanded);
    r.witness = render_bracketed(arch, lab, *v.witness);
  }
  return r;
}

namespace {

using nlohmann::json;

json obs_to_json(const Observation& o) {
  json j;
  j["mem"] = json::object();
  for (const auto& [k, v] : o.mem) j["mem"][k] = v;
  j["regs"] = json::object();
  for (const auto& [k, v] : o.regs) j["regs"][k] = v;
  return j;
}

Observation obs_from_json(const json& j) {
  Observation o;
  for (auto it = j.at("mem").begin(); it != j.at("mem").end(); ++it)
    o.mem[it.key()] = it.value().get<Value>();
  for (auto it = j.at("regs").begin(); it != j.at("regs").end(); ++it)
    o.regs[it.key()] = it.value().get<Value>();
  return o;
}

}  // namespace

std::string to_json(const RunReport& r) {
  json j;
  j["litmus_name"] = r.litmus_name;
  j["architecture"] = r.architecture;
  j["unroll_bound"] = r.unroll_bound;
  j["counts"]["all_executions"] =
      r.all_executions ? json(*r.all_executions) : json(nullptr);
  j["counts"]["normal_executions"] = r.normal_executions;
  j["counts"]["stuck_paths"] = r.stuck_paths;
  j["observations"] = json::array();
  for (const auto& o : r.observations) j["observations"].push_back(obs_to_json(o));
  j["condition_verdict"] = r.condition_verdict;
  j["witness"] = r.witness ? json(*r.witness) : json(nullptr);
  return j.dump(2);
}

RunReport run_report_from_json(const std::string& text) {
  json j = json::parse(text);
  RunReport r;
  r.litmus_name = j.at("litmus_name").get<std::string>();
  r.architecture = j.at("architecture").get<std::string>();
  r.unroll_bound = j.at("unroll_bound").get<int>();
  const json& counts = j.at("counts");
  if (!counts.at("all_executions").is_null())
    r.all_executions = counts.at("all_executions").get<std::size_t>();
  r.normal_executions = counts.at("normal_executions").get<std::size_t>();
  r.stuck_paths = counts.at("stuck_paths").get<std::size_t>();
  for (const auto& jo : j.at("observations"))
    r.observations.push_back(obs_from_json(jo));
  r.condition_verdict = j.at("condition_verdict").get<bool>();
  if (!j.at("witness").is_null())
    r.witness = j.at("witness").get<std::string>();
  return r;
}

namespace {

std::string obs_to_text(const Observation& o) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [k, v] : o.mem) {
    os << (first ? "" : ", ") << k << "=" << v;
    first = false;
  }
  for (const auto& [k, v] : o.regs) {
    os << (first ? "" : ", ") << k << "=" << v;
    first = false;
  }
  os << "}";
  return os.str();
}

}  // namespace

std::string to_text(const RunReport& r) {
  std::ostringstream os;
  os << "litmus:            " << r.litmus_name << "\n";
  os << "architecture:      " << r.architecture << "\n";
  os << "unroll bound:      " << r.unroll_bound << "\n";
  os << "normal executions: " << r.normal_executions << "\n";
  os << "stuck paths:       " << r.stuck_paths << "\n";
  os << "observations:\n";
  for (const auto& o : r.observations) os << "  " << obs_to_text(o) << "\n";
  os << "condition:         " << (r.condition_verdict ? "holds" : "does not hold")
     << "\n";
  if (r.witness) os << "witness:           " << *r.witness << "\n";
  return os.str();
}

std::string to_json(const oracle::Report& r) {
  json j;
  j["litmus_name"] = r.litmus;
  j["architecture"] = r.architecture;
  j["unroll_bound"] = r.unroll_bound;
  j["total_executions"] = r.total_executions;
  j["class_count"] = r.class_count;
  j["normal_count"] = r.normal_count;
  j["stuck_paths"] = r.stuck_paths;
  j["checks"]["swap_closed"] = r.swap_closed;
  j["checks"]["counts_match"] = r.counts_match;
  j["checks"]["unique_normal_per_class"] = r.unique_normal_per_class;
  j["checks"]["engine_matches_filter"] = r.engine_matches_filter;
  j["checks"]["reachable_match"] = r.reachable_match;
  j["ok"] = r.ok();
  return j.dump(2);
}

std::string to_text(const oracle::Report& r) {
  std::ostringstream os;
  auto flag = [](bool b) { return b ? "pass" : "FAIL"; };
  os << "litmus:            " << r.litmus << "\n";
  os << "architecture:      " << r.architecture << "\n";
  os << "unroll bound:      " << r.unroll_bound << "\n";
  os << "total executions:  " << r.total_executions << "\n";
  os << "equivalence classes: " << r.class_count << "\n";
  os << "normal executions: " << r.normal_count << "\n";
  os << "stuck paths:       " << r.stuck_paths << "\n";
  os << "swap closure:              " << flag(r.swap_closed) << "\n";
  os << "classes == normal count:   " << flag(r.counts_match) << "\n";
  os << "one normal form per class: " << flag(r.unique_normal_per_class) << "\n";
  os << "engine == checker filter:  " << flag(r.engine_matches_filter) << "\n";
  os << "reachable states match:    " << flag(r.reachable_match) << "\n";
  os << "verdict: " << (r.ok() ? "OK" : "MISMATCH") << "\n";
  return os.str();
}

}  // namespace fnf
