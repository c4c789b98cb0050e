#include "permclass/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>
#include <type_traits>
#include <utility>

#include "json.hpp"

namespace permclass {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

int parse_positive(const std::string& key, const std::string& value) {
  size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(value, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument(key + " must be a positive integer, got \"" +
                                value + "\"");
  }
  if (used != value.size() || v < 1) {
    throw std::invalid_argument(key + " must be a positive integer, got \"" +
                                value + "\"");
  }
  return v;
}

void sort_by_length(std::vector<Perm>& ps) {
  std::sort(ps.begin(), ps.end(), [](const Perm& a, const Perm& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
}

// Runs one pipeline stage, timing it and prefixing any error with the
// stage's name.
class StageRunner {
 public:
  explicit StageRunner(RunReport& rep) : rep_(rep) {}

  template <typename F>
  auto operator()(const std::string& name, F&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    try {
      if constexpr (std::is_void_v<decltype(fn())>) {
        fn();
        record(name, t0);
      } else {
        auto v = fn();
        record(name, t0);
        return v;
      }
    } catch (const std::exception& e) {
      throw std::runtime_error(name + ": " + e.what());
    }
  }

 private:
  void record(const std::string& name,
              std::chrono::steady_clock::time_point t0) {
    const auto us = std::chrono::duration_cast<std::chrono::microseconds>(
        std::chrono::steady_clock::now() - t0);
    rep_.timings.push_back({name, static_cast<long long>(us.count())});
  }

  RunReport& rep_;
};

bool closure_member(const Perm& p, const std::set<Perm>& gens) {
  if (p.size() == 1) return gens.contains(p);
  const auto [skel, kids] = decompose(p);
  if (!gens.contains(skel)) return false;
  for (const Perm& kid : kids) {
    if (!closure_member(kid, gens)) return false;
  }
  return true;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> out;
  std::string line;
  std::istringstream in(text);
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

}  // namespace

SideConditions parse_side_conditions(const std::vector<std::string>& specs) {
  SideConditions out;
  for (const std::string& s : specs) {
    if (s == "involution") {
      out.involution = true;
      continue;
    }
    const std::string prefix = "avoid_barred:";
    if (s.rfind(prefix, 0) == 0) {
      out.barred.push_back(BarredPattern::parse(s.substr(prefix.size())));
      continue;
    }
    out.properties.push_back(Property::parse(s));
  }
  return out;
}

ClassSpec parse_class_spec(const std::string& text) {
  ClassSpec spec;
  std::set<std::string> seen;
  for (const std::string& raw : split_lines(text)) {
    std::string line = raw;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw std::invalid_argument("expected \"key: value\", got \"" + line +
                                  "\"");
    }
    const std::string key = trim(line.substr(0, colon));
    const std::string value = trim(line.substr(colon + 1));
    if (!seen.insert(key).second) {
      throw std::invalid_argument("repeated field: " + key);
    }
    if (key == "basis") {
      for (const std::string& tok : split_ws(value)) {
        spec.basis.push_back(Perm::parse(tok));
      }
    } else if (key == "properties") {
      spec.side_conditions = split_ws(value);
    } else if (key == "mode") {
      if (value == "class") {
        spec.mode = ClassMode::PatternClass;
      } else if (value == "wreath_closure") {
        spec.mode = ClassMode::WreathClosure;
      } else {
        throw std::invalid_argument(
            "mode must be \"class\" or \"wreath_closure\", got \"" + value +
            "\"");
      }
    } else if (key == "max_simple_length") {
      spec.max_simple_length = parse_positive(key, value);
    } else if (key == "max_oracle_length") {
      spec.max_oracle_length = parse_positive(key, value);
    } else {
      throw std::invalid_argument("unknown field: " + key);
    }
  }
  parse_side_conditions(spec.side_conditions);  // surface bad strings early
  return spec;
}

ClassSpec load_class_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open spec file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_class_spec(buf.str());
}

bool in_substitution_closure(const Perm& p,
                             const std::vector<Perm>& generators) {
  const std::set<Perm> gens(generators.begin(), generators.end());
  return closure_member(p, gens);
}

long long direct_count(const ClassSpec& spec, const SideConditions& side,
                       bool involutions, int n) {
  std::vector<Perm> hosts;
  if (spec.mode == ClassMode::PatternClass) {
    hosts = avoiders(minimal_antichain(spec.basis), n);
  } else {
    const std::set<Perm> gens(spec.basis.begin(), spec.basis.end());
    for (const Perm& p : all_perms(n)) {
      if (closure_member(p, gens)) hosts.push_back(p);
    }
  }
  long long count = 0;
  for (const Perm& p : hosts) {
    if (involutions && !is_involution(p)) continue;
    bool keep = true;
    for (const Property& prop : side.properties) {
      if (!prop.holds(p)) {
        keep = false;
        break;
      }
    }
    for (const BarredPattern& bp : side.barred) {
      if (!keep) break;
      if (!avoids_barred(bp, p)) keep = false;
    }
    if (keep) ++count;
  }
  return count;
}

RunReport run_count(const ClassSpec& spec, const RunOptions& options) {
  RunReport rep;
  rep.spec = spec;
  rep.options = options;
  StageRunner stage(rep);
  if (options.n < 1) {
    throw std::runtime_error("options: counting order must be at least 1");
  }

  const SideConditions side = stage("properties", [&] {
    return parse_side_conditions(rep.spec.side_conditions);
  });
  rep.options.involutions = options.involutions || side.involution;
  const bool invol = rep.options.involutions;
  if (!side.barred.empty()) {
    rep.notes.push_back(
        "barred side conditions have no transfer rule; they restrict the "
        "cross-check enumeration only");
  }

  std::vector<Property> query = side.properties;
  if (rep.spec.mode == ClassMode::PatternClass) {
    stage("simples", [&] {
      rep.effective_basis = minimal_antichain(rep.spec.basis);
      const SimpleEnumeration found =
          enumerate_simples(rep.effective_basis, rep.spec.max_simple_length);
      if (!found.complete) {
        throw std::runtime_error(
            "class may contain infinitely many simple permutations; raise "
            "--max-simple-length");
      }
      rep.simples = found.simples;
      rep.simples_complete = true;
      rep.wreath_closed = is_wreath_closed(rep.effective_basis);
    });
    if (!rep.wreath_closed) {
      // The inflation closure of the class's simples is larger than the
      // class itself, so basis avoidance joins the query.
      for (const Perm& b : rep.effective_basis) {
        query.push_back(Property::avoid(b));
      }
    }
  } else {
    stage("simples", [&] {
      std::set<Perm> uniq(rep.spec.basis.begin(), rep.spec.basis.end());
      for (const Perm& s : uniq) {
        if (!is_simple(s)) {
          throw std::invalid_argument("generator is not simple: " + s.str());
        }
      }
      if (!uniq.contains(Perm(std::vector<int>{1}))) {
        throw std::invalid_argument(
            "the generator list must include the singleton permutation 1");
      }
      rep.simples.assign(uniq.begin(), uniq.end());
      sort_by_length(rep.simples);
      rep.simples_complete = true;
      rep.wreath_closed = true;
      try {
        rep.effective_basis = wreath_closure_basis(rep.simples);
      } catch (const std::exception& e) {
        rep.notes.push_back(std::string("no pattern basis: ") + e.what());
      }
    });
  }
  const std::vector<Perm>& gens = rep.simples;

  stage("universe", [&] { rep.universe = Universe::close(query, invol); });

  AlgebraicSystem sys;
  InvolutionSystem isys;
  stage("system", [&] {
    if (invol) {
      isys = build_involution_system(gens, rep.universe, query);
      rep.system_text = isys.plain.str();
      rep.involution_system_text = isys.invol.str();
    } else {
      sys = build_system(gens, rep.universe, query);
      rep.system_text = sys.str();
    }
  });

  stage("solve", [&] {
    ZSeries agg = invol ? aggregate(isys.invol,
                                    solve_involutions(isys, options.n).invol)
                        : aggregate(sys, solve(sys, options.n));
    for (int n = 1; n <= options.n; ++n) rep.counts.push_back(agg[n]);
  });

  if (options.eliminate) {
    stage("eliminate", [&] {
      int order = std::max(options.n, 40);
      std::optional<AnnihilatorPoly> ann;
      auto solve_f = [&](int ord) -> ZSeries {
        if (invol) return aggregate(isys.invol, solve_involutions(isys, ord).invol);
        return aggregate(sys, solve(sys, ord));
      };
      if (invol) {
        const auto elim =
            eliminate_involutions(isys, solve_involutions(isys, order));
        for (size_t j = 0; j < elim.params.size(); ++j) {
          if (!elim.params[j]) continue;
          rep.param_annihilators.emplace_back(
              "p" + profile_str(isys.invol.param_profiles[j], rep.universe),
              elim.params[j]->str("p"));
        }
        ann = elim.aggregate;
      } else {
        ann = eliminate_aggregate(sys, solve(sys, order));
      }
      if (!ann) {
        rep.notes.push_back(
            "no annihilator within the elimination caps; series published "
            "unchanged");
        return;
      }
      // Certify with spare coefficients: past twice the total degree and
      // past the coefficient count, plus a safety margin.
      const int cols = (ann->degree_x() + 1) * (ann->degree_f() + 1);
      const int need = std::max(2 * ann->poly.total_degree() + 10, cols + 10);
      if (order < need) order = need;
      if (verify_annihilator(*ann, solve_f(order))) {
        rep.annihilator = ann->str();
        rep.verified_order = order;
      } else {
        rep.ok = false;
        rep.notes.push_back("published relation failed certification");
      }
    });
  }

  if (options.oracle_check) {
    stage("oracle", [&] {
      int limit = options.oracle_length > 0
                      ? options.oracle_length
                      : std::min(rep.spec.max_oracle_length, 8);
      limit = std::min(limit, options.n);
      rep.options.oracle_length = limit;
      for (int n = 1; n <= limit; ++n) {
        OracleRow row;
        row.n = n;
        row.from_system = rep.counts[n - 1];
        row.direct = static_cast<long>(direct_count(rep.spec, side, invol, n));
        row.match = row.from_system == row.direct;
        rep.ok = rep.ok && row.match;
        rep.oracle.push_back(row);
      }
    });
  }
  return rep;
}

std::string RunReport::str() const {
  std::ostringstream out;
  out << "mode: "
      << (spec.mode == ClassMode::PatternClass ? "class" : "wreath_closure")
      << "\n";
  auto list = [&](const char* label, const std::vector<Perm>& ps) {
    out << label << ":";
    for (const Perm& p : ps) out << " " << p.str();
    out << "\n";
  };
  if (spec.mode == ClassMode::PatternClass) {
    list("basis", spec.basis);
  } else {
    list("generators", spec.basis);
  }
  if (!spec.side_conditions.empty()) {
    out << "side conditions:";
    for (const std::string& s : spec.side_conditions) out << " " << s;
    out << "\n";
  }
  list("simple permutations", simples);
  out << "simples complete: " << (simples_complete ? "yes" : "no") << "\n";
  out << "wreath-closed: " << (wreath_closed ? "yes" : "no") << "\n";
  if (spec.mode == ClassMode::WreathClosure) {
    if (effective_basis.empty()) {
      out << "pattern basis: unavailable\n";
    } else {
      list("pattern basis", effective_basis);
    }
  }
  out << "universe: " << universe.str() << "\n";
  out << "system:\n" << system_text;
  if (!involution_system_text.empty()) {
    out << "involution system:\n" << involution_system_text;
  }
  out << "counts (n = 1.." << options.n << "):";
  for (const mpz_class& c : counts) out << " " << c.get_str();
  out << "\n";
  if (annihilator) {
    out << "annihilator: " << *annihilator << " = 0 (verified through order "
        << verified_order << ")\n";
  }
  for (const auto& [name, rel] : param_annihilators) {
    out << name << " satisfies: " << rel << " = 0\n";
  }
  if (!oracle.empty()) {
    out << "oracle check:\n";
    out << std::setw(4) << "n" << std::setw(16) << "system" << std::setw(16)
        << "direct"
        << "  verdict\n";
    for (const OracleRow& row : oracle) {
      out << std::setw(4) << row.n << std::setw(16) << row.from_system.get_str()
          << std::setw(16) << row.direct << "  "
          << (row.match ? "MATCH" : "MISMATCH") << "\n";
    }
  }
  for (const std::string& n : notes) out << "note: " << n << "\n";
  out << "status: " << (ok ? "ok" : "FAILED") << "\n";
  return out.str();
}

std::string RunReport::json(bool include_timings) const {
  ordered_json j;
  j["spec"] = {
      {"mode",
       spec.mode == ClassMode::PatternClass ? "class" : "wreath_closure"},
      {"basis", ordered_json::array()},
      {"properties", spec.side_conditions},
      {"max_simple_length", spec.max_simple_length},
      {"max_oracle_length", spec.max_oracle_length},
  };
  for (const Perm& p : spec.basis) j["spec"]["basis"].push_back(p.str());
  j["options"] = {
      {"n", options.n},
      {"involutions", options.involutions},
      {"eliminate", options.eliminate},
      {"oracle_check", options.oracle_check},
      {"oracle_length", options.oracle_length},
  };
  j["simples"] = ordered_json::array();
  for (const Perm& p : simples) j["simples"].push_back(p.str());
  j["simples_complete"] = simples_complete;
  j["wreath_closed"] = wreath_closed;
  j["pattern_basis"] = ordered_json::array();
  for (const Perm& p : effective_basis) j["pattern_basis"].push_back(p.str());
  j["notes"] = notes;
  j["universe"] = ordered_json::array();
  for (const Property& p : universe.properties()) {
    j["universe"].push_back(p.str());
  }
  j["system"] = split_lines(system_text);
  j["involution_system"] = split_lines(involution_system_text);
  j["counts"] = ordered_json::array();
  for (const mpz_class& c : counts) j["counts"].push_back(c.get_str());
  if (annihilator) {
    j["annihilator"] = *annihilator;
  } else {
    j["annihilator"] = nullptr;
  }
  j["param_annihilators"] = ordered_json::array();
  for (const auto& [name, rel] : param_annihilators) {
    j["param_annihilators"].push_back({{"series", name}, {"relation", rel}});
  }
  j["verified_order"] = verified_order;
  j["oracle"] = ordered_json::array();
  for (const OracleRow& row : oracle) {
    j["oracle"].push_back({{"n", row.n},
                           {"system", row.from_system.get_str()},
                           {"direct", row.direct},
                           {"match", row.match}});
  }
  j["ok"] = ok;
  if (include_timings) {
    j["timings"] = ordered_json::array();
    for (const StageTime& t : timings) {
      j["timings"].push_back(
          {{"stage", t.name}, {"microseconds", t.microseconds}});
    }
  }
  return j.dump(2);
}

}  // namespace permclass
