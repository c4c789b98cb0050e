#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "permclass/classes.hpp"
#include "permclass/eliminate.hpp"
#include "permclass/patterns.hpp"
#include "permclass/solver.hpp"
#include "permclass/system.hpp"

namespace permclass {

// Side conditions split by how they are enforced.  Transferable properties
// enter the counting system; "involution" routes to the inverse-pairing
// system; barred patterns have no transfer rule and restrict only the direct
// enumeration used for cross-checks.
struct SideConditions {
  std::vector<Property> properties;
  bool involution = false;
  std::vector<BarredPattern> barred;
};
SideConditions parse_side_conditions(const std::vector<std::string>& specs);

// Class description file: "key: value" lines, '#' comments, blank lines
// ignored.  Keys: basis (permutations, space separated), properties
// (property strings, space separated), mode ("class" | "wreath_closure"),
// max_simple_length, max_oracle_length.  Unknown or repeated keys are
// errors.
ClassSpec parse_class_spec(const std::string& text);
ClassSpec load_class_spec(const std::string& path);

struct RunOptions {
  int n = 20;               // counting order
  bool involutions = false; // count involutions (also set by the side condition)
  bool eliminate = false;   // publish an annihilating polynomial
  bool oracle_check = false;
  int oracle_length = 0;    // 0: min(spec cap, 8)
};

struct OracleRow {
  int n = 0;
  mpz_class from_system;
  long direct = 0;
  bool match = false;
};

struct StageTime {
  std::string name;
  long long microseconds = 0;
};

struct RunReport {
  ClassSpec spec;
  RunOptions options;  // effective values (involutions may come from the spec)
  std::vector<Perm> simples;
  bool simples_complete = false;
  bool wreath_closed = false;
  std::vector<Perm> effective_basis;  // pattern basis defining the class
  std::vector<std::string> notes;
  Universe universe;
  std::string system_text;             // plain block
  std::string involution_system_text;  // empty unless counting involutions
  std::vector<mpz_class> counts;       // lengths 1..n
  std::optional<std::string> annihilator;
  std::vector<std::pair<std::string, std::string>> param_annihilators;
  int verified_order = 0;  // 0 when no annihilator was published
  std::vector<OracleRow> oracle;
  bool ok = true;  // every requested check passed
  std::vector<StageTime> timings;

  std::string str() const;
  std::string json(bool include_timings = true) const;
};

// Full counting pipeline: enumerate the simple permutations, build the
// profile system (inverse-pairing variant for involutions), solve, and
// optionally publish a certified annihilator and cross-check the counts
// against direct enumeration.  Errors carry the failing stage's name.
RunReport run_count(const ClassSpec& spec, const RunOptions& options);

// Membership in the substitution closure of the given generators: every
// skeleton in the decomposition tree is a generator.
bool in_substitution_closure(const Perm& p, const std::vector<Perm>& generators);

// Direct count of the spec's class members of length n under all side
// conditions, by enumeration; ground truth for cross-checks.
long long direct_count(const ClassSpec& spec, const SideConditions& side,
                       bool involutions, int n);

}  // namespace permclass
