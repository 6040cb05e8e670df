#include "fnf/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace fnf {
namespace oracle {

SizeLimitError::SizeLimitError(int procs, int events)
    : std::runtime_error("oracle size limit exceeded: " +
                         std::to_string(procs) + " processors, up to " +
                         std::to_string(events) +
                         " events (limits: " + std::to_string(kMaxProcs) +
                         " processors, " + std::to_string(kMaxTotalEvents) +
                         " events)") {}

namespace {

int max_path_events(const Architecture& arch, const Program& p,
                    std::size_t from) {
  if (from >= p.size()) return 0;
  const Cmd& c = p[from];
  int rest = max_path_events(arch, p, from + 1);
  if (c.type == Cmd::Type::Act)
    return (arch.shadows(c.act) ? 2 : 1) + rest;
  return std::max(max_path_events(arch, c.body0, 0),
                  max_path_events(arch, c.body1, 0)) +
         rest;
}

std::string key_of(const Execution& es) { return to_string(es); }

}  // namespace

int max_total_events(const Architecture& arch, const SysConfig& c0) {
  int total = 0;
  for (const auto& lc : c0.procs) total += max_path_events(arch, lc.prog, 0);
  return total;
}

void check_size(const Architecture& arch, const SysConfig& c0) {
  int procs = static_cast<int>(c0.procs.size());
  int events = max_total_events(arch, c0);
  if (procs > kMaxProcs || events > kMaxTotalEvents)
    throw SizeLimitError(procs, events);
}

ExecSet all_executions(const Architecture& arch, const SysConfig& c0) {
  check_size(arch, c0);
  ExecSet out;
  GenStats stats = for_each_execution(arch, c0, [&](const Execution& es) {
    out.execs.push_back(es);
    return true;
  });
  out.stuck_paths = stats.stuck_paths;
  return out;
}

std::vector<Execution> swap_neighbours(const Architecture& arch,
                                       const Execution& es) {
  std::vector<Execution> out;
  Context ctx;
  for (std::size_t i = 0; i + 1 < es.size(); ++i) {
    if (indep(arch, ctx, es[i], es[i + 1])) {
      Execution swapped = es;
      std::swap(swapped[i], swapped[i + 1]);
      out.push_back(std::move(swapped));
    }
    ctx.apply(arch, es[i]);
  }
  return out;
}

bool swap_closed(const Architecture& arch,
                 const std::vector<Execution>& execs) {
  std::set<std::string> keys;
  for (const auto& es : execs) keys.insert(key_of(es));
  for (const auto& es : execs)
    for (const auto& n : swap_neighbours(arch, es))
      if (!keys.count(key_of(n))) return false;
  return true;
}

std::vector<EquivClass> equiv_classes(const Architecture& arch,
                                      const std::vector<Execution>& execs) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < execs.size(); ++i)
    index.emplace(key_of(execs[i]), i);
  std::vector<bool> seen(execs.size(), false);
  std::vector<EquivClass> classes;
  for (std::size_t i = 0; i < execs.size(); ++i) {
    if (seen[i]) continue;
    EquivClass cls;
    std::deque<std::size_t> queue{i};
    seen[i] = true;
    while (!queue.empty()) {
      std::size_t j = queue.front();
      queue.pop_front();
      cls.members.push_back(j);
      for (const auto& n : swap_neighbours(arch, execs[j])) {
        auto it = index.find(key_of(n));
        if (it == index.end())
          throw std::logic_error(
              "equiv_classes: execution set is not swap-closed");
        if (!seen[it->second]) {
          seen[it->second] = true;
          queue.push_back(it->second);
        }
      }
    }
    for (std::size_t m : cls.members)
      if (is_foata_normal(arch, execs[m])) cls.normal_members.push_back(m);
    classes.push_back(std::move(cls));
  }
  return classes;
}

bool normal_by_definition(const Architecture& arch, const Execution& es) {
  if (es.empty()) return true;
  const std::size_t n = es.size();
  // Each bit of `cuts` opens a new step after that position.
  const std::size_t limit = std::size_t{1} << (n - 1);
  for (std::size_t cuts = 0; cuts < limit; ++cuts) {
    std::vector<Step> steps;
    steps.push_back({es[0]});
    for (std::size_t i = 1; i < n; ++i) {
      if (cuts & (std::size_t{1} << (i - 1)))
        steps.push_back({es[i]});
      else
        steps.back().push_back(es[i]);
    }
    // Contexts at each step's opening.
    std::vector<Context> before(steps.size() + 1);
    for (std::size_t i = 0; i < steps.size(); ++i) {
      before[i + 1] = before[i];
      for (const Event& e : steps[i]) before[i + 1].apply(arch, e);
    }
    bool ok = true;
    // 1: step members pairwise independent at the step's opening context.
    for (std::size_t i = 0; ok && i < steps.size(); ++i)
      for (std::size_t a = 0; ok && a < steps[i].size(); ++a)
        for (std::size_t b = a + 1; ok && b < steps[i].size(); ++b)
          if (!indep(arch, before[i], steps[i][a], steps[i][b])) ok = false;
    // 2: every member of a step depends on some member of the previous
    // step, at the previous step's opening context.
    for (std::size_t i = 1; ok && i < steps.size(); ++i)
      for (const Event& b : steps[i]) {
        bool dep = false;
        for (const Event& a : steps[i - 1])
          if (!indep(arch, before[i - 1], a, b)) {
            dep = true;
            break;
          }
        if (!dep) {
          ok = false;
          break;
        }
      }
    // 3: step members strictly increasing under prec.
    for (std::size_t i = 0; ok && i < steps.size(); ++i)
      for (std::size_t a = 0; a + 1 < steps[i].size(); ++a)
        if (!arch.prec(steps[i][a], steps[i][a + 1])) {
          ok = false;
          break;
        }
    if (ok) return true;
  }
  return false;
}

Execution foata_normalize(const Architecture& arch, const Execution& es) {
  std::vector<Event> remaining = es;
  Execution out;
  Context ctx;
  while (!remaining.empty()) {
    // Collect the next maximal step: scan left to right, taking every event
    // that is independent of the step so far and not preceded by a
    // dependent event that stays behind.
    Step step;
    std::vector<Event> rest;
    for (const Event& e : remaining) {
      bool eligible = true;
      for (const Event& m : step)
        if (!indep(arch, ctx, m, e)) {
          eligible = false;
          break;
        }
      if (eligible)
        for (const Event& f : rest)
          if (!indep(arch, ctx, f, e)) {
            eligible = false;
            break;
          }
      if (eligible)
        step.push_back(e);
      else
        rest.push_back(e);
    }
    std::sort(step.begin(), step.end(), [&](const Event& a, const Event& b) {
      return arch.prec(a, b);
    });
    for (const Event& e : step) {
      out.push_back(e);
      ctx.apply(arch, e);
    }
    remaining = std::move(rest);
  }
  return out;
}

Report verify(const Litmus& l, const Architecture& arch, int unroll_bound) {
  std::vector<Program> expanded;
  for (const auto& [_, prog] : l.procs)
    expanded.push_back(expand(prog, unroll_bound));
  SysConfig c0 = SysConfig::initial(expanded);

  Report r;
  r.litmus = l.name;
  r.architecture = arch.name();
  r.unroll_bound = unroll_bound;

  ExecSet all = all_executions(arch, c0);
  r.total_executions = all.execs.size();
  r.stuck_paths = all.stuck_paths;

  std::vector<Execution> engine;
  for_each_normal_execution(arch, c0, [&](const Execution& es) {
    engine.push_back(es);
    return true;
  });
  r.normal_count = engine.size();

  r.swap_closed = swap_closed(arch, all.execs);
  if (!r.swap_closed) return r;

  std::vector<EquivClass> classes = equiv_classes(arch, all.execs);
  r.class_count = classes.size();
  r.counts_match = r.class_count == r.normal_count;
  r.unique_normal_per_class = true;
  for (const auto& cls : classes)
    if (cls.normal_members.size() != 1) r.unique_normal_per_class = false;

  std::set<std::string> engine_keys, filter_keys;
  for (const auto& es : engine) engine_keys.insert(key_of(es));
  for (const auto& es : all.execs)
    if (is_foata_normal(arch, es)) filter_keys.insert(key_of(es));
  r.engine_matches_filter = engine_keys == filter_keys;

  auto observations = [&](const std::vector<Execution>& execs) {
    std::set<Observation> out;
    for (const auto& es : execs)
      if (auto st = run_execution(l, arch, es)) out.insert(observe(l, *st));
    return out;
  };
  r.reachable_match = observations(all.execs) == observations(engine);
  return r;
}

}  // namespace oracle
}  // namespace fnf
