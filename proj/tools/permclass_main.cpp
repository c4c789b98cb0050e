// Command-line front end: substitution decomposition, simple-permutation
// enumeration, counting-system construction, exact counting with optional
// annihilator publication, and direct-enumeration cross-checks.
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "permclass/pipeline.hpp"

namespace {

using namespace permclass;

std::string inflation_text(const Perm& p) {
  const auto [skeleton, children] = decompose(p);
  std::string out = skeleton.str() + "[";
  for (size_t i = 0; i < children.size(); ++i) {
    if (i) out += ",";
    out += children[i].str();
  }
  return out + "]";
}

// Shared spec-file flags; zero means "keep the spec file's value".
struct SpecOverrides {
  int max_simple_length = 0;
  int max_oracle_length = 0;

  void add_flags(CLI::App* cmd) {
    cmd->add_option("--max-simple-length", max_simple_length,
                    "Search depth for simple permutations (overrides the "
                    "spec file)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-oracle-length", max_oracle_length,
                    "Longest length checked against direct enumeration "
                    "(overrides the spec file)")
        ->check(CLI::PositiveNumber);
  }

  ClassSpec load(const std::string& path) const {
    ClassSpec spec = load_class_spec(path);
    if (max_simple_length > 0) spec.max_simple_length = max_simple_length;
    if (max_oracle_length > 0) spec.max_oracle_length = max_oracle_length;
    return spec;
  }
};

int cmd_decompose(const std::string& text) {
  std::cout << inflation_text(Perm::parse(text)) << "\n";
  return 0;
}

int cmd_simples(const ClassSpec& spec) {
  std::vector<Perm> simples;
  bool complete = true;
  int depth = 1;
  if (spec.mode == ClassMode::PatternClass) {
    const auto found = enumerate_simples(minimal_antichain(spec.basis),
                                         spec.max_simple_length);
    simples = found.simples;
    complete = found.complete;
    int longest = 0;
    for (const Perm& p : simples) longest = std::max(longest, p.size());
    // When complete, report through the two certifying empty levels.
    depth = complete ? std::max(longest + 2, 5) : spec.max_simple_length;
  } else {
    simples = spec.basis;
    for (const Perm& p : simples) depth = std::max(depth, p.size());
  }
  std::map<int, std::vector<Perm>> by_length;
  for (const Perm& p : simples) by_length[p.size()].push_back(p);
  for (int n = 1; n <= depth; ++n) {
    const auto it = by_length.find(n);
    const size_t count = it == by_length.end() ? 0 : it->second.size();
    std::cout << std::setw(3) << n << "  " << std::setw(5) << count << " ";
    if (it != by_length.end()) {
      for (const Perm& p : it->second) std::cout << " " << p.str();
    }
    std::cout << "\n";
  }
  std::cout << "complete: " << (complete ? "yes" : "no") << "\n";
  return complete ? 0 : 1;
}

int cmd_system(const ClassSpec& spec, bool involutions) {
  RunOptions opts;
  opts.n = 1;  // the system itself is length-free; solve minimally
  opts.involutions = involutions;
  const RunReport rep = run_count(spec, opts);
  std::cout << "universe: " << rep.universe.str() << "\n";
  std::cout << rep.system_text;
  if (!rep.involution_system_text.empty()) {
    std::cout << rep.involution_system_text;
  }
  return 0;
}

int cmd_wreath_basis(const ClassSpec& spec) {
  std::vector<Perm> generators;
  if (spec.mode == ClassMode::WreathClosure) {
    generators = spec.basis;
  } else {
    const auto found = enumerate_simples(minimal_antichain(spec.basis),
                                         spec.max_simple_length);
    if (!found.complete) {
      throw std::runtime_error(
          "simples: class may contain infinitely many simple permutations; "
          "raise --max-simple-length");
    }
    generators = found.simples;
  }
  for (const Perm& p : wreath_closure_basis(generators)) {
    std::cout << p.str() << "\n";
  }
  return 0;
}

int cmd_count(const ClassSpec& spec, const RunOptions& opts,
              const std::string& json_path) {
  const RunReport rep = run_count(spec, opts);
  std::cout << rep.str();
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw std::runtime_error("cannot write report: " + json_path);
    out << rep.json() << "\n";
    std::cout << "report: " << json_path << "\n";
  }
  return rep.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact enumeration of permutation classes with finitely many simple "
      "permutations"};
  app.require_subcommand(1);

  std::string perm_text;
  auto* decompose_cmd = app.add_subcommand(
      "decompose", "Print the substitution decomposition of a permutation");
  decompose_cmd->add_option("perm", perm_text, "Permutation in one-line text")
      ->required();

  std::string spec_path;
  SpecOverrides overrides;
  auto* simples_cmd = app.add_subcommand(
      "simples", "Enumerate the simple permutations of the class");
  simples_cmd->add_option("spec", spec_path, "Class description file")
      ->required();
  overrides.add_flags(simples_cmd);

  bool involutions = false;
  auto* system_cmd = app.add_subcommand(
      "system", "Print the algebraic system for the class");
  system_cmd->add_option("spec", spec_path, "Class description file")
      ->required();
  system_cmd->add_flag("--involutions", involutions,
                       "Use the involution (inverse-pairing) system");
  overrides.add_flags(system_cmd);

  auto* wreath_cmd = app.add_subcommand(
      "wreath-basis",
      "Pattern basis of the substitution closure of the class's simples");
  wreath_cmd->add_option("spec", spec_path, "Class description file")
      ->required();
  overrides.add_flags(wreath_cmd);

  RunOptions opts;
  std::string json_path;
  auto* count_cmd = app.add_subcommand(
      "count", "Count the class and optionally publish its equation");
  count_cmd->add_option("spec", spec_path, "Class description file")
      ->required();
  count_cmd->add_option("--n", opts.n, "Counting order (default 20)")
      ->check(CLI::PositiveNumber);
  count_cmd->add_flag("--involutions", opts.involutions,
                      "Count involutions only");
  count_cmd->add_flag("--eliminate", opts.eliminate,
                      "Publish a certified annihilating polynomial");
  count_cmd->add_flag("--oracle-check", opts.oracle_check,
                      "Cross-check counts against direct enumeration");
  count_cmd->add_option("--json", json_path,
                        "Write the machine-readable report to this path");
  overrides.add_flags(count_cmd);

  CLI11_PARSE(app, argc, argv);

  try {
    if (decompose_cmd->parsed()) return cmd_decompose(perm_text);
    const ClassSpec spec = overrides.load(spec_path);
    if (simples_cmd->parsed()) return cmd_simples(spec);
    if (system_cmd->parsed()) return cmd_system(spec, involutions);
    if (wreath_cmd->parsed()) return cmd_wreath_basis(spec);
    if (count_cmd->parsed()) {
      if (overrides.max_oracle_length > 0) {
        opts.oracle_length = overrides.max_oracle_length;
      }
      return cmd_count(spec, opts, json_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
