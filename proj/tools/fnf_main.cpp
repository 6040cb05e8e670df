#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "fnf/oracle.hpp"
#include "fnf/render.hpp"
#include "fnf/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitExpectFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string file;
  std::string arch_name;
  int unroll = 2;
  bool json = false;
  std::string expect;  // "", "holds", "fails"
  std::size_t max_execs = 1000000;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

fnf::Litmus load_litmus(const Options& opt) {
  std::string text = read_file(opt.file);
  std::string stem = std::filesystem::path(opt.file).stem().string();
  return fnf::parse_litmus(text, stem);
}

fnf::Architecture arch_of(const Options& opt) {
  auto a = fnf::Architecture::by_name(opt.arch_name);
  if (!a) throw std::runtime_error("unknown architecture: " + opt.arch_name);
  return *a;
}

int check_expectation(const Options& opt, bool verdict) {
  if (opt.expect.empty()) return kExitOk;
  bool expected = opt.expect == "holds";
  if (verdict == expected) return kExitOk;
  std::cerr << "expectation failed: condition "
            << (verdict ? "holds" : "does not hold") << " but --expect "
            << opt.expect << "\n";
  return kExitExpectFailed;
}

int cmd_run(const Options& opt) {
  fnf::Litmus l = load_litmus(opt);
  fnf::Architecture arch = arch_of(opt);
  fnf::RunReport r = fnf::make_run_report(l, arch, opt.unroll, opt.max_execs);
  std::cout << (opt.json ? fnf::to_json(r) + "\n" : fnf::to_text(r));
  return check_expectation(opt, r.condition_verdict);
}

int cmd_count(const Options& opt) {
  fnf::Litmus l = load_litmus(opt);
  fnf::Architecture arch = arch_of(opt);
  fnf::ReachResult reach = fnf::reachable(l, arch, opt.unroll, opt.max_execs);
  if (opt.json)
    std::cout << "{\"normal_executions\": " << reach.normal_executions
              << "}\n";
  else
    std::cout << reach.normal_executions << "\n";
  return kExitOk;
}

int cmd_show(const Options& opt) {
  fnf::Litmus l = load_litmus(opt);
  fnf::Architecture arch = arch_of(opt);
  std::vector<fnf::Program> expanded;
  for (const auto& [_, prog] : l.procs)
    expanded.push_back(fnf::expand(prog, opt.unroll));
  fnf::Labeler lab(expanded);
  fnf::SysConfig c0 = fnf::SysConfig::initial(expanded);
  std::size_t count = 0;
  std::vector<std::string> lines;
  fnf::for_each_normal_execution(arch, c0, [&](const fnf::Execution& es) {
    if (++count > opt.max_execs) throw fnf::ExecutionLimitError(opt.max_execs);
    lines.push_back(fnf::render_bracketed(arch, lab, es));
    return true;
  });
  if (opt.json) {
    std::cout << "[";
    for (std::size_t i = 0; i < lines.size(); ++i)
      std::cout << (i ? ", " : "") << "\"" << lines[i] << "\"";
    std::cout << "]\n";
  } else {
    for (const auto& s : lines) std::cout << s << "\n";
  }
  return kExitOk;
}

int cmd_verify(const Options& opt) {
  fnf::Litmus l = load_litmus(opt);
  fnf::Architecture arch = arch_of(opt);
  fnf::oracle::Report r = fnf::oracle::verify(l, arch, opt.unroll);
  std::cout << (opt.json ? fnf::to_json(r) + "\n" : fnf::to_text(r));
  return r.ok() ? kExitOk : kExitExpectFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Enumerate canonical (Foata-normal) executions of litmus tests under "
      "SC, TSO, PSO and RMO, and decide their exists-conditions."};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", opt.file, "litmus test file")->required();
    sub->add_option("--arch", opt.arch_name, "memory model: sc|tso|pso|rmo")
        ->required();
    sub->add_option("--unroll", opt.unroll, "while-loop unroll bound")
        ->capture_default_str();
    sub->add_flag("--json", opt.json, "machine-readable output");
    sub->add_option("--max-execs", opt.max_execs,
                    "abort beyond this many normal executions")
        ->capture_default_str();
  };

  CLI::App* run = app.add_subcommand("run", "full report with condition verdict");
  add_common(run);
  run->add_option("--expect", opt.expect, "fail (exit 1) unless the condition matches")
      ->check(CLI::IsMember({"holds", "fails"}));
  CLI::App* count = app.add_subcommand("count", "number of normal executions");
  add_common(count);
  CLI::App* show = app.add_subcommand("show", "normal executions in step brackets");
  add_common(show);
  CLI::App* verify = app.add_subcommand("verify", "brute-force cross-check");
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (run->parsed()) return cmd_run(opt);
    if (count->parsed()) return cmd_count(opt);
    if (show->parsed()) return cmd_show(opt);
    if (verify->parsed()) return cmd_verify(opt);
  } catch (const fnf::ParseError& e) {
    std::cerr << opt.file << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
