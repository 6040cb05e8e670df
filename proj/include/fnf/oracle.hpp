#ifndef FNF_ORACLE_HPP
#define FNF_ORACLE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "fnf/eval.hpp"
#include "fnf/gen.hpp"
#include "fnf/trace.hpp"

namespace fnf {
namespace oracle {

/// The oracle is exponential by design: it exists to certify the engine at
/// desk scale, not to scale itself.
constexpr int kMaxProcs = 4;
constexpr int kMaxTotalEvents = 12;

struct SizeLimitError : std::runtime_error {
  SizeLimitError(int procs, int events);
};

/// Worst-case number of events any execution of this config can contain.
int max_total_events(const Architecture& arch, const SysConfig& c0);

void check_size(const Architecture& arch, const SysConfig& c0);

struct ExecSet {
  std::vector<Execution> execs;
  std::size_t stuck_paths = 0;
};

/// Every complete path of the execution tree, no pruning.
ExecSet all_executions(const Architecture& arch, const SysConfig& c0);

/// Adjacent swaps of the execution that are legal at their prefix context.
std::vector<Execution> swap_neighbours(const Architecture& arch,
                                       const Execution& es);

struct EquivClass {
  std::vector<std::size_t> members;         // indices into the input set
  std::vector<std::size_t> normal_members;  // members accepted by the checker
};

/// Partition a swap-closed execution set into equivalence classes by BFS
/// closure under adjacent independent swaps. Throws if a neighbour of a
/// member lies outside the set (closure violation).
std::vector<EquivClass> equiv_classes(const Architecture& arch,
                                      const std::vector<Execution>& execs);

/// Is the execution set closed under legal adjacent swaps?
bool swap_closed(const Architecture& arch, const std::vector<Execution>& execs);

/// Definition-level normality: some split into steps satisfies the three
/// Foata conditions, found by exhaustive enumeration of split points.
/// Independent of the incremental checker.
bool normal_by_definition(const Architecture& arch, const Execution& es);

/// Greedy left-to-right maximal-step normalization. The result is
/// swap-equivalent to the input and accepted by the checker.
Execution foata_normalize(const Architecture& arch, const Execution& es);

struct Report {
  std::string litmus, architecture;
  int unroll_bound = 0;
  std::size_t total_executions = 0;
  std::size_t class_count = 0;
  std::size_t normal_count = 0;   // via the fused engine
  std::size_t stuck_paths = 0;
  bool swap_closed = false;
  bool counts_match = false;            // normal_count == class_count
  bool unique_normal_per_class = false; // each class: exactly one checker-normal member
  bool engine_matches_filter = false;   // engine set == filter(is_foata_normal, all)
  bool reachable_match = false;         // observations: all execs == normal execs

  bool ok() const {
    return swap_closed && counts_match && unique_normal_per_class &&
           engine_matches_filter && reachable_match;
  }
};

/// Cross-check the engine against the brute-force reference on one litmus.
Report verify(const Litmus& l, const Architecture& arch, int unroll_bound);

}  // namespace oracle
}  // namespace fnf

#endif
