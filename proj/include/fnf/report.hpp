#ifndef FNF_REPORT_HPP
#define FNF_REPORT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fnf/eval.hpp"
#include "fnf/oracle.hpp"

namespace fnf {

/// Everything the run subcommand reports. Serializes to JSON with exactly
/// these fields in snake_case.
struct RunReport {
  std::string litmus_name;
  std::string architecture;
  int unroll_bound = 0;
  std::optional<std::size_t> all_executions;  // only filled by verify-style runs
  std::size_t normal_executions = 0;
  std::size_t stuck_paths = 0;
  std::vector<Observation> observations;  // sorted
  bool condition_verdict = false;
  std::optional<std::string> witness;  // step-bracketed, present iff verdict

  bool operator==(const RunReport& o) const;
};

RunReport make_run_report(const Litmus& l, const Architecture& arch,
                          int unroll_bound, std::size_t max_execs);

std::string to_json(const RunReport& r);
RunReport run_report_from_json(const std::string& text);
std::string to_text(const RunReport& r);

std::string to_json(const oracle::Report& r);
std::string to_text(const oracle::Report& r);

}  // namespace fnf

#endif
