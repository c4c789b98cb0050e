// Acceptance checks for the counting engine.  Each criterion prints exactly
// one PASS/FAIL line; the process exits 0 only when every criterion passes.
// All comparisons are exact (integer/rational arithmetic throughout).

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <exception>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "permclass/classes.hpp"
#include "permclass/eliminate.hpp"
#include "permclass/perm.hpp"
#include "permclass/pipeline.hpp"
#include "permclass/polynomial.hpp"
#include "permclass/property.hpp"
#include "permclass/series.hpp"
#include "permclass/solver.hpp"
#include "permclass/system.hpp"

namespace {

using namespace permclass;

// Failure detail; empty means the criterion passed.
using Detail = std::optional<std::string>;

template <typename... Ts>
std::string cat(Ts&&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

Perm P(const std::string& s) { return Perm::parse(s); }

std::vector<Perm> perm_list(const std::vector<std::string>& ss) {
  std::vector<Perm> out;
  for (const auto& s : ss) out.push_back(P(s));
  return out;
}

std::string join_perms(const std::vector<Perm>& ps) {
  std::string out;
  for (const Perm& p : ps) {
    if (!out.empty()) out += " ";
    out += p.str();
  }
  return out;
}

// Bivariate polynomial in (x, f) from (x-degree, f-degree, coefficient).
Poly biv(const std::vector<std::array<int, 3>>& terms) {
  Poly p(2);
  for (const auto& t : terms) p.add_term({t[0], t[1]}, t[2]);
  return p;
}

ZSeries truncated(const ZSeries& s, int order) {
  ZSeries out(order);
  for (int k = 0; k <= order && k <= s.order(); ++k) out[k] = s[k];
  return out;
}

const std::vector<long> kSchroder = {1,    2,    6,    22,    90,
                                     394,  1806, 8558, 41586, 206098};
const std::vector<long> kCatalan = {1,   2,    5,    14,   42,
                                    132, 429, 1430, 4862, 16796};

// ---------------------------------------------------------------------------
// Criterion 1: separable permutations.  The pipeline sequence for n = 1..10
// must match both the frozen values and an independent expansion of the
// closed form (1 - x - sqrt(1 - 6x + x^2)) / 2, and elimination must return
// the quadratic f^2 + (x - 1)f + x.

Detail criterion1() {
  ClassSpec spec;
  spec.basis = perm_list({"2413", "3142"});
  RunOptions opt;
  opt.n = 10;
  opt.eliminate = true;
  const RunReport rep = run_count(spec, opt);
  if (!rep.ok) return "pipeline reported failure";

  QSeries inner(10);
  inner[0] = 1;
  inner[1] = -6;
  inner[2] = 1;
  QSeries closed(10);
  closed[0] = 1;
  closed[1] = -1;
  closed -= sqrt_series(inner);
  for (int k = 0; k <= 10; ++k) closed[k] /= 2;

  for (int n = 1; n <= 10; ++n) {
    if (closed[n] != kSchroder[n - 1]) {
      return cat("closed form gives ", closed[n], " at n=", n, ", expected ",
                 kSchroder[n - 1]);
    }
    if (rep.counts[n - 1] != kSchroder[n - 1]) {
      return cat("pipeline count at n=", n, " is ", rep.counts[n - 1],
                 ", expected ", kSchroder[n - 1]);
    }
  }
  if (!rep.annihilator) return "elimination returned no polynomial";
  if (*rep.annihilator != "f^2 + (x - 1)*f + x") {
    return cat("eliminated polynomial is ", *rep.annihilator);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Criterion 2: the substitution closure of {1, 12, 21, 2413}.  Its counting
// series must satisfy f^5 + f^4 + f^2 + (x - 1)f + x = 0 through order 30,
// and the pattern basis of the closure must come out as four specific
// permutations.

Detail criterion2() {
  const std::vector<Perm> gens = perm_list({"1", "12", "21", "2413"});
  const Universe u = Universe::close({});
  const auto sys = build_system(gens, u, {});
  const auto sol = solve(sys, 30);

  AnnihilatorPoly quintic;
  quintic.poly = biv(
      {{0, 5, 1}, {0, 4, 1}, {0, 2, 1}, {1, 1, 1}, {0, 1, -1}, {1, 0, 1}});
  if (!verify_annihilator(quintic, aggregate(sys, sol))) {
    return "the quintic does not annihilate the solved series";
  }

  const std::vector<Perm> basis = wreath_closure_basis(gens);
  const std::vector<Perm> expect =
      perm_list({"3142", "25314", "246135", "362514"});
  if (basis != expect) return cat("pattern basis is ", join_perms(basis));
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Criterion 3: Av(132).  Counts n = 1..10 must equal the Catalan numbers,
// cross-checked against the expansion of (1 - 2x - sqrt(1 - 4x)) / (2x),
// and the constructed system must have the reference shape: four equations
// whose expanded right-hand sides agree monomial-for-monomial up to a
// renaming of the unknowns.

// Canonical shape of one polynomial: the sorted list of its terms written as
// (coefficient, x-degree, sorted positive unknown exponents).
std::string equation_shape(const Poly& p, int xvar,
                           const std::vector<int>& unknown_vars) {
  std::vector<std::string> terms;
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> exps;
    for (int v : unknown_vars) {
      if (m[v] > 0) exps.push_back(m[v]);
    }
    std::sort(exps.begin(), exps.end());
    std::ostringstream os;
    os << c << "*x^" << m[xvar] << "*[";
    for (int e : exps) os << e << ",";
    os << "]";
    terms.push_back(os.str());
  }
  std::sort(terms.begin(), terms.end());
  std::string out;
  for (const auto& t : terms) out += t + " ";
  return out;
}

std::vector<std::string> system_shape(const std::vector<Poly>& rhs, int xvar,
                                      const std::vector<int>& unknown_vars) {
  std::vector<std::string> eqs;
  for (const Poly& p : rhs) eqs.push_back(equation_shape(p, xvar, unknown_vars));
  std::sort(eqs.begin(), eqs.end());
  return eqs;
}

Detail criterion3() {
  const std::vector<Perm> basis = perm_list({"132"});
  const auto en = enumerate_simples(basis, 12);
  if (!en.complete) return "simple enumeration did not complete";
  const std::vector<Property> query = {Property::avoid(P("132"))};
  const Universe u = Universe::close(query);
  const auto sys = build_system(en.simples, u, query);
  const auto sol = solve(sys, 30);
  const ZSeries f = aggregate(sys, sol);

  QSeries inner(11);
  inner[0] = 1;
  inner[1] = -4;
  QSeries num(11);
  num[0] = 1;
  num[1] = -2;
  num -= sqrt_series(inner);
  QSeries closed = divide_by_x(num, 1);  // order 10
  for (int k = 0; k <= 10; ++k) closed[k] /= 2;

  for (int n = 1; n <= 10; ++n) {
    if (closed[n] != kCatalan[n - 1]) {
      return cat("closed form gives ", closed[n], " at n=", n, ", expected ",
                 kCatalan[n - 1]);
    }
    if (f[n] != kCatalan[n - 1]) {
      return cat("system count at n=", n, " is ", f[n], ", expected ",
                 kCatalan[n - 1]);
    }
  }

  if (sys.unknowns.size() != 4) {
    return cat("system has ", sys.unknowns.size(), " unknowns, expected 4");
  }
  // Reference system over unknowns A (the singleton profile), B, C, D:
  //   A = x,  B = A(A + B),  C = (A + B + D)(A + B + C + D),  D = C(A + B).
  const Poly X = Poly::var(0, 5);
  const Poly A = Poly::var(1, 5);
  const Poly B = Poly::var(2, 5);
  const Poly C = Poly::var(3, 5);
  const Poly D = Poly::var(4, 5);
  const std::vector<Poly> ref = {X, A * (A + B), (A + B + D) * (A + B + C + D),
                                 C * (A + B)};
  std::vector<int> got_vars;
  for (size_t i = 0; i < sys.unknowns.size(); ++i) {
    got_vars.push_back(sys.var_unknown(static_cast<int>(i)));
  }
  if (system_shape(ref, 0, {1, 2, 3, 4}) !=
      system_shape(sys.rhs, sys.var_x(), got_vars)) {
    return "system monomial multiset differs from the reference four equations";
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Criterion 4: Av(2413, 3142, 2143).  The solved series f must satisfy
// ((2x(2 - x))f - (1 - 3x + 2x^2))^2 = 1 - 6x + 5x^2 through order 30, and
// its coefficients must equal sum_k C(n,k) * Fine(n-k) for n <= 10 with the
// Fine numbers computed by an independent recurrence.

Detail criterion4() {
  const std::vector<Perm> basis = perm_list({"2413", "3142", "2143"});
  const auto en = enumerate_simples(basis, 12);
  if (!en.complete) return "simple enumeration did not complete";
  std::vector<Property> query;
  for (const Perm& b : basis) query.push_back(Property::avoid(b));
  const Universe u = Universe::close(query);
  const auto sys = build_system(en.simples, u, query);
  const auto sol = solve(sys, 30);
  const ZSeries f = aggregate(sys, sol);

  // (4x - 2x^2) f - (1 - 3x + 2x^2), squared.
  ZSeries lin(30);
  for (int k = 0; k + 1 <= 30; ++k) lin[k + 1] += 4 * f[k];
  for (int k = 0; k + 2 <= 30; ++k) lin[k + 2] -= 2 * f[k];
  lin[0] -= 1;
  lin[1] += 3;
  lin[2] -= 2;
  const ZSeries sq = lin * lin;
  for (int k = 0; k <= 30; ++k) {
    const long expect = (k == 0) ? 1 : (k == 1) ? -6 : (k == 2) ? 5 : 0;
    if (sq[k] != expect) {
      return cat("squared linear form has coefficient ", sq[k], " at x^", k,
                 ", expected ", expect);
    }
  }

  // Catalan by the standard recurrence, Fine by C_n = 2 F_n + F_{n-1}.
  std::vector<mpz_class> catal(11), fine(11);
  catal[0] = 1;
  for (int n = 0; n < 10; ++n) {
    const mpz_class t = catal[n] * 2 * (2 * n + 1);
    catal[n + 1] = t / (n + 2);
    if (catal[n + 1] * (n + 2) != t) return "Catalan recurrence not exact";
  }
  fine[0] = 1;
  for (int n = 1; n <= 10; ++n) {
    const mpz_class t = catal[n] - fine[n - 1];
    fine[n] = t / 2;
    if (fine[n] * 2 != t) return "Fine recurrence not exact";
  }
  std::vector<std::vector<mpz_class>> binom(11);
  for (int n = 0; n <= 10; ++n) {
    binom[n].assign(n + 1, 1);
    for (int k = 1; k < n; ++k) binom[n][k] = binom[n - 1][k - 1] + binom[n - 1][k];
  }
  for (int n = 1; n <= 10; ++n) {
    mpz_class sum = 0;
    for (int k = 0; k <= n; ++k) sum += binom[n][k] * fine[n - k];
    if (f[n] != sum) {
      return cat("count at n=", n, " is ", f[n], ", binomial-Fine sum gives ",
                 sum);
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Criterion 5: alternating separable permutations.  With the query set {AL}
// the solved series must satisfy
//   f^3 - (2x^2 - 5x + 4)f^2 - (4x^3 + x^2 - 8x)f - (2x^4 + 5x^3 + 4x^2) = 0
// through order 30.

Detail criterion5() {
  const std::vector<Property> query = {
      Property::plain(PropertyKind::Alternating)};
  const Universe u = Universe::close(query);
  const auto sys = build_system(perm_list({"1", "12", "21"}), u, query);
  const auto sol = solve(sys, 30);
  const ZSeries f = aggregate(sys, sol);

  const Poly cubic = biv({{0, 3, 1},
                          {2, 2, -2},
                          {1, 2, 5},
                          {0, 2, -4},
                          {3, 1, -4},
                          {2, 1, -1},
                          {1, 1, 8},
                          {4, 0, -2},
                          {3, 0, -5},
                          {2, 0, -4}});
  const ZSeries residue = cubic.eval({ZSeries::x(30), f});
  if (!residue.is_zero()) {
    return cat("cubic residue has valuation ", residue.valuation());
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Criterion 6: separable involutions.  The parameter series of the singleton
// profile must equal x^2 exactly; the two other parameter series must satisfy
// 2p^2 + (3x^2 - 1)p + x^4 = 0; and the involution counting series must
// satisfy the quartic
//   x^2 f^4 + (x^3 + 3x^2 + x - 1)f^3 + (3x^3 + 6x^2 - x)f^2
//     + (3x^3 + 7x^2 - x - 1)f + (x^3 + 3x^2 + x) = 0,
// all through order 30.

Detail criterion6() {
  const Universe u = Universe::close({}, true);
  const auto both = build_involution_system(perm_list({"1", "12", "21"}), u, {});
  const auto sol = solve_involutions(both, 30);

  auto pseries = [&](Profile r) {
    return truncated(substitute_x_squared(sol.plain.for_profile(r)), 30);
  };

  const ZSeries p_single = pseries(profile_of(P("1"), u));
  for (int k = 0; k <= 30; ++k) {
    if (p_single[k] != (k == 2 ? 1 : 0)) {
      return cat("singleton parameter series is not x^2 (coefficient ",
                 p_single[k], " at x^", k, ")");
    }
  }

  const Poly quad = biv({{0, 2, 2}, {2, 1, 3}, {0, 1, -1}, {4, 0, 1}});
  for (const std::string& s : {"12", "21"}) {
    const ZSeries p = pseries(profile_of(P(s), u));
    if (!quad.eval({ZSeries::x(30), p}).is_zero()) {
      return cat("parameter series for the profile of ", s,
                 " fails its quadratic");
    }
  }

  AnnihilatorPoly quartic;
  quartic.poly = biv({{2, 4, 1},
                      {3, 3, 1},
                      {2, 3, 3},
                      {1, 3, 1},
                      {0, 3, -1},
                      {3, 2, 3},
                      {2, 2, 6},
                      {1, 2, -1},
                      {3, 1, 3},
                      {2, 1, 7},
                      {1, 1, -1},
                      {0, 1, -1},
                      {3, 0, 1},
                      {2, 0, 3},
                      {1, 0, 1}});
  if (!verify_annihilator(quartic, aggregate(both.invol, sol.invol))) {
    return "the quartic does not annihilate the involution series";
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Criterion 7: simple enumeration for Av(1324, 2143, 4231) finds counts
// 1, 2, 0, 2, 4, 0, 0 for lengths 1..7 and certifies completeness.

Detail criterion7() {
  const auto en = enumerate_simples(perm_list({"1324", "2143", "4231"}), 12);
  if (!en.complete) return "enumeration did not certify completeness";
  std::vector<int> by_length(13, 0);
  for (const Perm& s : en.simples) ++by_length[s.size()];
  const std::vector<int> expect = {1, 2, 0, 2, 4, 0, 0};
  for (int n = 1; n <= 7; ++n) {
    if (by_length[n] != expect[n - 1]) {
      return cat("length ", n, " has ", by_length[n], " simples, expected ",
                 expect[n - 1]);
    }
  }
  if (en.simples.size() != 9) {
    return cat("enumeration lists ", en.simples.size(),
               " simples in total, expected 9");
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Criteria 8 and 10 share a corpus: the six worked example classes plus at
// least four randomized basis/side-condition combinations drawn with a fixed
// seed.

struct CorpusSpec {
  std::string label;
  ClassSpec spec;
};

std::vector<CorpusSpec> build_corpus() {
  auto make = [](std::string label, const std::vector<std::string>& basis,
                 std::vector<std::string> sides = {},
                 ClassMode mode = ClassMode::PatternClass) {
    CorpusSpec cs;
    cs.label = std::move(label);
    cs.spec.basis = perm_list(basis);
    cs.spec.side_conditions = std::move(sides);
    cs.spec.mode = mode;
    return cs;
  };

  std::vector<CorpusSpec> corpus;
  corpus.push_back(make("Av(2413,3142)", {"2413", "3142"}));
  corpus.push_back(make("closure<1,12,21,2413>", {"1", "12", "21", "2413"}, {},
                        ClassMode::WreathClosure));
  corpus.push_back(make("Av(132)", {"132"}));
  corpus.push_back(make("Av(2413,3142,2143)", {"2413", "3142", "2143"}));
  corpus.push_back(
      make("Av(2413,3142)+alternating", {"2413", "3142"}, {"alternating"}));
  corpus.push_back(
      make("Av(2413,3142)+involution", {"2413", "3142"}, {"involution"}));

  const std::vector<std::vector<std::string>> bases = {
      {"132"}, {"2413", "3142"}, {"2413", "3142", "2143"}};
  const std::vector<std::string> sides = {
      "",      "alternating", "even",
      "dumont1", "involution",  "avoid_vincular:1-32"};
  std::mt19937 gen(20240817u);
  std::set<std::pair<int, int>> seen;
  while (seen.size() < 12) {
    const int b = static_cast<int>(gen() % bases.size());
    const int s = static_cast<int>(gen() % sides.size());
    if (!seen.insert({b, s}).second) continue;
    std::string label = "random:Av(";
    for (size_t i = 0; i < bases[b].size(); ++i) {
      label += (i ? "," : "") + bases[b][i];
    }
    label += ")";
    std::vector<std::string> side_list;
    if (!sides[s].empty()) {
      label += "+" + sides[s];
      side_list.push_back(sides[s]);
    }
    corpus.push_back(make(label, bases[b], side_list));
  }
  return corpus;
}

// Criterion 8: for every corpus spec the solved coefficients must equal the
// brute-force counts for all n <= 8, exactly.

Detail criterion8(const std::vector<CorpusSpec>& corpus) {
  for (const CorpusSpec& cs : corpus) {
    RunOptions opt;
    opt.n = 8;
    opt.oracle_check = true;
    const RunReport rep = run_count(cs.spec, opt);
    if (rep.oracle.size() != 8) {
      return cat(cs.label, ": oracle table has ", rep.oracle.size(),
                 " rows, expected 8");
    }
    for (const OracleRow& row : rep.oracle) {
      if (!row.match) {
        return cat(cs.label, ": n=", row.n, " system=", row.from_system,
                   " brute-force=", row.direct);
      }
    }
    if (!rep.ok) return cat(cs.label, ": pipeline reported failure");
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Criterion 9: profile transfer must agree with the directly computed profile
// on every inflation of 12, 21, 321, 2413, 3142 whose children are short
// (length <= 4 for the two-point skeletons, <= 3 otherwise), over universes
// that jointly cover every supported property family.

std::vector<Perm> perms_up_to(int max_len) {
  std::vector<Perm> out;
  for (int n = 1; n <= max_len; ++n) {
    for (const Perm& p : all_perms(n)) out.push_back(p);
  }
  return out;
}

Detail check_transfer(const TransferEngine& eng, const Perm& sigma,
                      int max_child, long long& checked) {
  const Universe& u = eng.universe();
  const int m = sigma.size();
  const std::vector<Perm> pool = perms_up_to(max_child);
  std::vector<int> pick(m, 0);
  while (true) {
    std::vector<Perm> children;
    std::vector<Profile> profiles;
    for (int i = 0; i < m; ++i) {
      children.push_back(pool[pick[i]]);
      profiles.push_back(profile_of(pool[pick[i]], u));
    }
    const Perm whole = inflate(sigma, children);
    const Profile expected = profile_of(whole, u);
    const Profile got = eng.transfer(sigma, profiles);
    if (got != expected) {
      return cat("universe ", u.str(), ": ", sigma.str(), " inflated to ",
                 whole.str(), " maps to ", profile_str(got, u), ", expected ",
                 profile_str(expected, u));
    }
    ++checked;
    int i = 0;
    while (i < m && ++pick[i] == static_cast<int>(pool.size())) pick[i++] = 0;
    if (i == m) break;
  }
  return std::nullopt;
}

Detail criterion9() {
  const std::vector<std::pair<std::vector<std::string>, bool>> seeds = {
      {{"avoid:132"}, false},
      {{"avoid:2413", "avoid:3142"}, false},
      {{"avoid_vincular:1-32"}, false},
      {{"alternating"}, false},
      {{"begins_rise"}, false},
      {{"ends_rise"}, false},
      {{"even"}, false},
      {{"even_length"}, false},
      {{"singleton"}, false},
      {{"dumont1"}, false},
      {{"dumont1_flipped"}, false},
      {{"dumont1_prefix"}, false},
      {{"dumont1_prefix_flipped"}, false},
      {{"last_value_even"}, false},
      {{"alternating", "avoid:132"}, true},
  };
  const std::vector<Perm> skeletons = perm_list({"12", "21", "321", "2413",
                                                 "3142"});

  std::set<PropertyKind> kinds;
  bool saw_inverted = false;
  long long checked = 0;
  for (const auto& [names, inverse_closed] : seeds) {
    std::vector<Property> req;
    for (const auto& name : names) req.push_back(Property::parse(name));
    const Universe u = Universe::close(req, inverse_closed);
    for (const Property& p : u.properties()) {
      kinds.insert(p.kind);
      saw_inverted = saw_inverted || p.inverted;
    }
    const TransferEngine eng(u);
    for (const Perm& sigma : skeletons) {
      const int max_child = sigma.size() == 2 ? 4 : 3;
      if (auto d = check_transfer(eng, sigma, max_child, checked)) return d;
    }
  }

  const std::vector<std::pair<PropertyKind, std::string>> all_kinds = {
      {PropertyKind::AvoidClassical, "classical avoidance"},
      {PropertyKind::AvoidVincular, "vincular avoidance"},
      {PropertyKind::Alternating, "alternating"},
      {PropertyKind::BeginsRise, "begins_rise"},
      {PropertyKind::EndsRise, "ends_rise"},
      {PropertyKind::IsSingleton, "singleton"},
      {PropertyKind::EvenPerm, "even"},
      {PropertyKind::EvenLength, "even_length"},
      {PropertyKind::Dumont1, "dumont1"},
      {PropertyKind::Dumont1Flipped, "dumont1_flipped"},
      {PropertyKind::Dumont1Prefix, "dumont1_prefix"},
      {PropertyKind::Dumont1PrefixFlipped, "dumont1_prefix_flipped"},
      {PropertyKind::LastValueEven, "last_value_even"},
      {PropertyKind::SumIndec, "sum_indec"},
      {PropertyKind::SkewIndec, "skew_indec"},
  };
  for (const auto& [kind, name] : all_kinds) {
    if (!kinds.count(kind)) return cat("property family not covered: ", name);
  }
  if (!saw_inverted) return "no inverse-wrapped property was covered";
  if (checked == 0) return "no inflations were checked";
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Criterion 10: every system constructed for the corpus is proper, and
// solving it to order 30 never trips the coefficient stabilization guard.

Detail criterion10(const std::vector<CorpusSpec>& corpus) {
  int systems = 0;
  for (const CorpusSpec& cs : corpus) {
    const SideConditions side = parse_side_conditions(cs.spec.side_conditions);
    std::vector<Property> query = side.properties;
    std::vector<Perm> simples;
    if (cs.spec.mode == ClassMode::WreathClosure) {
      simples = cs.spec.basis;
    } else {
      const std::vector<Perm> basis = minimal_antichain(cs.spec.basis);
      const auto en = enumerate_simples(basis, cs.spec.max_simple_length);
      if (!en.complete) return cat(cs.label, ": simple enumeration incomplete");
      simples = en.simples;
      if (!is_wreath_closed(basis)) {
        for (const Perm& b : basis) query.push_back(Property::avoid(b));
      }
    }
    const Universe u = Universe::close(query, side.involution);
    try {
      if (side.involution) {
        const auto both = build_involution_system(simples, u, query);
        if (!is_proper(both.plain)) {
          return cat(cs.label, ": the plain half is not proper");
        }
        if (!is_proper(both.invol)) {
          return cat(cs.label, ": the involution half is not proper");
        }
        solve_involutions(both, 30);
        systems += 2;
      } else {
        const auto sys = build_system(simples, u, query);
        if (!is_proper(sys)) return cat(cs.label, ": system is not proper");
        solve(sys, 30);
        systems += 1;
      }
    } catch (const std::exception& e) {
      return cat(cs.label, ": ", e.what());
    }
  }
  if (systems == 0) return "no systems were checked";
  return std::nullopt;
}

}  // namespace

int main() {
  const std::vector<CorpusSpec> corpus = build_corpus();

  struct Criterion {
    int num;
    std::string desc;
    std::function<Detail()> run;
  };
  const std::vector<Criterion> criteria = {
      {1,
       "separable counts match the closed form and eliminate to "
       "f^2 + (x - 1)*f + x",
       criterion1},
      {2,
       "substitution closure of {1,12,21,2413}: quintic verified and pattern "
       "basis recovered",
       criterion2},
      {3,
       "Av(132) gives Catalan numbers from a four-equation system of the "
       "reference shape",
       criterion3},
      {4,
       "Av(2413,3142,2143) matches its square-root closed form and the "
       "binomial-Fine sum",
       criterion4},
      {5, "alternating separables satisfy the expected cubic through order 30",
       criterion5},
      {6,
       "separable involutions: parameter relations and the aggregate quartic "
       "hold through order 30",
       criterion6},
      {7,
       "Av(1324,2143,4231) has simple counts 1,2,0,2,4,0,0 and the "
       "enumeration completes",
       criterion7},
      {8,
       "solver coefficients equal brute-force counts on the whole corpus for "
       "n <= 8",
       [&] { return criterion8(corpus); }},
      {9,
       "profile transfer agrees with direct computation on all small "
       "inflations of 12, 21, 321, 2413, 3142",
       criterion9},
      {10,
       "every corpus system is proper and solves with stable coefficients",
       [&] { return criterion10(corpus); }},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    Detail detail;
    try {
      detail = c.run();
    } catch (const std::exception& e) {
      detail = cat("exception: ", e.what());
    }
    if (!detail) {
      std::cout << "PASS criterion-" << c.num << ": " << c.desc << "\n";
    } else {
      std::cout << "FAIL criterion-" << c.num << ": " << c.desc << " ("
                << *detail << ")\n";
      ++failed;
    }
    std::cout.flush();
  }
  return failed == 0 ? 0 : 1;
}
