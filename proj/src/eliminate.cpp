#include "permclass/eliminate.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace permclass {

namespace {

constexpr int kDegreeCap = 64;       // intermediate total-degree bail-out
constexpr int kMargin = 10;          // spare coefficients behind any accept
constexpr int kCandidateCap = 64;    // max coefficient count in the search
constexpr int kBasisDegreeCap = 96;  // basis-completion total-degree bail-out
constexpr int kBasisSizeCap = 300;   // basis-completion element bail-out
constexpr int kBasisPairCap = 20000; // basis-completion workload bail-out

// Order backing the sign convention: highest power of the series variable
// first, then the x-degree, so the displayed leading term is positive.
bool f_major_less(const Mono& a, const Mono& b) {
  if (a[1] != b[1]) return a[1] < b[1];
  return a[0] < b[0];
}

// Integer and monomial content are irrelevant to where a polynomial
// vanishes: x is not the zero series and every unknown counts a nonempty
// set, so no variable evaluates to zero.
Poly strip_contents(Poly p) {
  if (p.is_zero()) return p;
  const Mono mc = p.monomial_content();
  if (std::any_of(mc.begin(), mc.end(), [](int e) { return e > 0; })) {
    p = p.divide_by_monomial(mc);
  }
  const mpz_class ic = p.integer_content();
  if (ic != 1 && ic != 0) {
    p = p.divide_exact(Poly::constant(ic, p.nvars()));
  }
  return p;
}

Poly embed(const Poly& p, int nvars) {
  Poly out(nvars);
  for (const auto& [m, c] : p.terms()) {
    Mono mm = m;
    mm.resize(nvars, 0);
    out.add_term(mm, c);
  }
  return out;
}

// Eliminates every listed variable from the target, consuming one pool
// polynomial per variable.  Greedy order: at each stage take the variable
// and pivot with the lowest degree (linear equations act as substitutions
// and keep the intermediate degrees down).  A finished stage removes its
// variable from everything that remains, so nothing reintroduces it.
std::optional<Poly> cascade(Poly target, std::vector<int> kill,
                            std::vector<Poly> pool) {
  while (!kill.empty()) {
    int best_kv = -1, best_pi = -1;
    std::tuple<int, int, size_t> best{INT_MAX, INT_MAX, 0};
    for (size_t kv = 0; kv < kill.size();) {
      const int v = kill[kv];
      int pi = -1;
      std::tuple<int, int, size_t> local{INT_MAX, INT_MAX, 0};
      for (size_t i = 0; i < pool.size(); ++i) {
        const int d = pool[i].degree(v);
        if (d == 0) continue;
        std::tuple<int, int, size_t> cost{d, pool[i].total_degree(),
                                          pool[i].terms().size()};
        if (pi < 0 || cost < local) {
          local = cost;
          pi = static_cast<int>(i);
        }
      }
      if (pi < 0) {
        // No equation mentions this variable any more.
        if (target.degree(v) > 0) return std::nullopt;
        kill.erase(kill.begin() + kv);
        continue;
      }
      if (best_kv < 0 || local < best) {
        best = local;
        best_kv = static_cast<int>(kv);
        best_pi = pi;
      }
      ++kv;
    }
    if (kill.empty()) break;
    if (best_kv < 0) return std::nullopt;
    const int v = kill[best_kv];
    const Poly pivot = std::move(pool[best_pi]);
    pool.erase(pool.begin() + best_pi);
    kill.erase(kill.begin() + best_kv);
    auto reduce = [&](const Poly& w) -> std::optional<Poly> {
      if (w.degree(v) == 0) return w;
      Poly r = subresultant_last(w, pivot, v);
      // A zero or v-positive result means the pair shares a factor in v
      // and this route cannot eliminate it.
      if (r.is_zero() || r.degree(v) > 0) return std::nullopt;
      r = strip_contents(std::move(r));
      if (r.total_degree() > kDegreeCap) return std::nullopt;
      return r;
    };
    for (Poly& w : pool) {
      auto r = reduce(w);
      if (!r) return std::nullopt;
      w = std::move(*r);
    }
    auto t = reduce(target);
    if (!t) return std::nullopt;
    target = std::move(*t);
  }
  return target;
}

// The cascade consumes one pool polynomial per variable, and reducing the
// survivors against a shared pivot can leave them with a common factor; the
// final pair then has a vanishing resultant and the route dead-ends.  The
// fallback below is immune to that: complete the original equations to a
// lexicographic Groebner basis over Q with every variable to eliminate
// ranked above x and the series variable.  The basis then contains
// generators of the elimination ideal as elements supported on {x, f}.

struct LexOrder {
  std::vector<int> seq;  // variable indices, most significant first
  bool operator()(const Mono& a, const Mono& b) const {
    for (int v : seq) {
      if (a[v] != b[v]) return a[v] < b[v];
    }
    return false;
  }
};
using QTerms = std::map<Mono, mpq_class, LexOrder>;

bool mono_divides(const Mono& a, const Mono& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Mono mono_quot(const Mono& a, const Mono& b) {
  Mono r = a;
  for (size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
  return r;
}

Mono mono_lcm(const Mono& a, const Mono& b) {
  Mono r = a;
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool mono_coprime(const Mono& a, const Mono& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 0 && b[i] > 0) return false;
  }
  return true;
}

int mono_total(const Mono& m) {
  int s = 0;
  for (int e : m) s += e;
  return s;
}

// p -= c * x^m * q
void sub_scaled(QTerms& p, const QTerms& q, const Mono& m, const mpq_class& c) {
  for (const auto& [qm, qc] : q) {
    Mono t = qm;
    for (size_t i = 0; i < t.size(); ++i) t[i] += m[i];
    auto it = p.find(t);
    if (it == p.end()) {
      p.emplace(std::move(t), -c * qc);
    } else {
      it->second -= c * qc;
      if (it->second == 0) p.erase(it);
    }
  }
}

// Full division remainder: irreducible leading terms migrate to the result.
QTerms normal_form(QTerms p, const std::vector<QTerms>& basis) {
  QTerms rem(p.key_comp());
  while (!p.empty()) {
    const auto lt = *p.rbegin();
    bool reduced = false;
    for (const QTerms& g : basis) {
      const Mono& lm = g.rbegin()->first;
      if (mono_divides(lm, lt.first)) {
        sub_scaled(p, g, mono_quot(lt.first, lm), lt.second);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.insert(lt);
      p.erase(std::prev(p.end()));
    }
  }
  return rem;
}

void make_monic(QTerms& p) {
  if (p.empty()) return;
  const mpq_class lc = p.rbegin()->second;
  for (auto& [m, c] : p) c /= lc;
}

// Buchberger completion, then the smallest surviving element supported on
// {x, fvar} alone, cleared to integer coefficients.  Returns nothing when a
// workload cap trips or no bivariate element appears.
std::optional<Poly> groebner_bivariate(const std::vector<Poly>& input,
                                       const std::vector<int>& kill,
                                       int fvar) {
  LexOrder ord;
  ord.seq = kill;
  ord.seq.push_back(fvar);
  ord.seq.push_back(0);
  std::vector<QTerms> basis;
  for (const Poly& p : input) {
    QTerms q(ord);
    for (const auto& [m, c] : p.terms()) q.emplace(m, mpq_class(c));
    if (q.empty()) continue;
    make_monic(q);
    basis.push_back(std::move(q));
  }
  struct Pair {
    int i, j, degree;
  };
  std::vector<Pair> pairs;
  auto push_pairs = [&](int j) {
    for (int i = 0; i < j; ++i) {
      const Mono& a = basis[i].rbegin()->first;
      const Mono& b = basis[j].rbegin()->first;
      if (mono_coprime(a, b)) continue;  // S-polynomial reduces to zero
      pairs.push_back({i, j, mono_total(mono_lcm(a, b))});
    }
  };
  for (size_t j = 1; j < basis.size(); ++j) push_pairs(static_cast<int>(j));
  int processed = 0;
  while (!pairs.empty()) {
    size_t best = 0;
    for (size_t i = 1; i < pairs.size(); ++i) {
      if (pairs[i].degree < pairs[best].degree) best = i;
    }
    const Pair pr = pairs[best];
    pairs.erase(pairs.begin() + best);
    if (++processed > kBasisPairCap) return std::nullopt;
    const Mono& a = basis[pr.i].rbegin()->first;
    const Mono& b = basis[pr.j].rbegin()->first;
    const Mono l = mono_lcm(a, b);
    QTerms s(ord);
    sub_scaled(s, basis[pr.i], mono_quot(l, a), -1);
    sub_scaled(s, basis[pr.j], mono_quot(l, b), 1);
    s = normal_form(std::move(s), basis);
    if (s.empty()) continue;
    int td = 0;
    for (const auto& [m, c] : s) td = std::max(td, mono_total(m));
    if (td > kBasisDegreeCap) return std::nullopt;
    make_monic(s);
    basis.push_back(std::move(s));
    if (static_cast<int>(basis.size()) > kBasisSizeCap) return std::nullopt;
    push_pairs(static_cast<int>(basis.size()) - 1);
  }
  std::optional<Poly> out;
  std::tuple<int, int, size_t> best{INT_MAX, INT_MAX, 0};
  for (const QTerms& g : basis) {
    bool bivariate = true;
    int dx = 0, df = 0;
    for (const auto& [m, c] : g) {
      for (int v = 1; v < static_cast<int>(m.size()); ++v) {
        if (v != fvar && m[v] != 0) {
          bivariate = false;
          break;
        }
      }
      if (!bivariate) break;
      dx = std::max(dx, m[0]);
      df = std::max(df, m[fvar]);
    }
    if (!bivariate || df == 0) continue;
    const std::tuple<int, int, size_t> cost{df, dx, g.size()};
    if (out && cost >= best) continue;
    mpz_class lcm = 1;
    for (const auto& [m, c] : g) {
      mpz_class den = c.get_den();
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    Poly p(2);
    for (const auto& [m, c] : g) {
      const mpq_class scaled = c * mpq_class(lcm);
      p.add_term({m[0], m[fvar]}, scaled.get_num());
    }
    out = std::move(p);
    best = cost;
  }
  return out;
}

// Restrict a polynomial supported on {0, keep} to two variables (x, f).
std::optional<Poly> to_bivariate(const Poly& p, int keep) {
  Poly out(2);
  for (const auto& [m, c] : p.terms()) {
    for (int v = 0; v < static_cast<int>(m.size()); ++v) {
      if (v != 0 && v != keep && m[v] != 0) return std::nullopt;
    }
    out.add_term({m[0], m[keep]}, c);
  }
  return out;
}

bool annihilates(const Poly& q2, const ZSeries& f) {
  return q2.eval({ZSeries::x(f.order()), f}).is_zero();
}

// Basis of the right kernel of A (rows x cols), by Gauss-Jordan over Q.
std::vector<std::vector<mpq_class>> kernel_basis(
    std::vector<std::vector<mpq_class>> A, int cols) {
  const int rows = static_cast<int>(A.size());
  std::vector<int> pivot_cols;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i) {
      if (A[i][c] != 0) {
        pr = i;
        break;
      }
    }
    if (pr < 0) continue;
    std::swap(A[r], A[pr]);
    const mpq_class d = A[r][c];
    for (int j = c; j < cols; ++j) A[r][j] /= d;
    for (int i = 0; i < rows; ++i) {
      if (i == r || A[i][c] == 0) continue;
      const mpq_class m = A[i][c];
      for (int j = c; j < cols; ++j) A[i][j] -= m * A[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<mpq_class>> basis;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<mpq_class> v(cols, 0);
    v[c] = 1;
    for (size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -A[i][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Lowest-degree relation compatible with the series, accepted only when it
// exactly divides the proven eliminant.
std::optional<AnnihilatorPoly> minimal_candidate(const Poly& eliminant,
                                                 const ZSeries& f) {
  const int N = f.order();
  const int max_df = eliminant.degree(1);
  const int max_dx = eliminant.degree(0);
  std::vector<ZSeries> fpow = {ZSeries::constant(1, N)};
  for (int i = 1; i <= max_df; ++i) fpow.push_back(fpow.back() * f);
  for (int df = 1; df <= max_df; ++df) {
    for (int dx = 0; dx <= max_dx; ++dx) {
      const int cols = (df + 1) * (dx + 1);
      if (cols > kCandidateCap) break;
      if (cols + kMargin > N + 1) break;  // not enough spare coefficients
      std::vector<std::vector<mpq_class>> A(
          N + 1, std::vector<mpq_class>(cols, 0));
      for (int i = 0; i <= df; ++i) {
        for (int j = 0; j <= dx; ++j) {
          const int col = i * (dx + 1) + j;
          for (int k = j; k <= N; ++k) A[k][col] = fpow[i][k - j];
        }
      }
      for (const auto& vec : kernel_basis(std::move(A), cols)) {
        // Clear denominators, then build the integer candidate.
        mpz_class lcm = 1;
        for (const mpq_class& q : vec) {
          mpz_class den = q.get_den();
          mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        }
        Poly q(2);
        for (int i = 0; i <= df; ++i) {
          for (int j = 0; j <= dx; ++j) {
            mpq_class scaled = vec[i * (dx + 1) + j] * mpq_class(lcm);
            mpz_class num = scaled.get_num();
            if (num != 0) q.add_term({j, i}, num);
          }
        }
        if (q.is_zero() || q.degree(1) == 0) continue;
        AnnihilatorPoly cand = make_annihilator(q);
        try {
          eliminant.divide_exact(cand.poly);
        } catch (const std::domain_error&) {
          continue;  // not a factor of the proven relation
        }
        if (!annihilates(cand.poly, f)) continue;
        return cand;
      }
    }
  }
  return std::nullopt;
}

// Full run for one target: cascade in the given kill order, reduce to a
// squarefree bivariate relation, then minimize.
std::optional<AnnihilatorPoly> run_elimination(
    const AlgebraicSystem& sys, const std::vector<Poly>& param_defs,
    const Poly& target_def, const ZSeries& fser) {
  if (static_cast<int>(param_defs.size()) != sys.params) {
    throw std::invalid_argument("parameter relation count mismatch");
  }
  if (fser.is_zero()) {
    return make_annihilator(Poly::var(1, 2));  // the zero series: f = 0
  }
  const int nv1 = sys.num_vars() + 1;
  const int fvar = sys.num_vars();
  const int n = static_cast<int>(sys.unknowns.size());

  std::vector<int> kill;
  std::vector<Poly> pool;
  for (int i = 0; i < n; ++i) {
    kill.push_back(sys.var_unknown(i));
    pool.push_back(Poly::var(sys.var_unknown(i), nv1) - embed(sys.rhs[i], nv1));
  }
  for (int j = 0; j < sys.params; ++j) {
    kill.push_back(sys.var_param(j));
    pool.push_back(param_defs[j]);
  }

  // Validate a raw eliminant: squarefree, still mentions f, and vanishes on
  // the series.  The series check guards the cascade's genericity
  // assumptions, so a false route fails here rather than being published.
  auto finish = [&](Poly e) -> std::optional<AnnihilatorPoly> {
    e = strip_contents(std::move(e));
    if (e.degree(1) == 0) return std::nullopt;  // lost the series variable
    e = strip_contents(squarefree_part_bivariate(e, 1, 0));
    if (!annihilates(e, fser)) return std::nullopt;
    if (auto cand = minimal_candidate(e, fser)) return cand;
    return make_annihilator(e);
  };

  if (auto flat = cascade(target_def, kill, pool); flat && !flat->is_zero()) {
    if (auto biv = to_bivariate(*flat, fvar)) {
      if (auto res = finish(std::move(*biv))) return res;
    }
  }
  pool.push_back(target_def);
  if (auto gb = groebner_bivariate(pool, kill, fvar)) {
    if (auto res = finish(std::move(*gb))) return res;
  }
  return std::nullopt;
}

Poly aggregate_def(const AlgebraicSystem& sys) {
  const int nv1 = sys.num_vars() + 1;
  Poly t = Poly::var(sys.num_vars(), nv1);
  for (size_t i = 0; i < sys.unknowns.size(); ++i) {
    if ((sys.unknowns[i] & sys.query_mask) == sys.query_mask) {
      t -= Poly::var(sys.var_unknown(static_cast<int>(i)), nv1);
    }
  }
  return t;
}

// x -> x^2 on a bivariate relation: the parameter series are the plain
// unknowns evaluated at x^2.
Poly double_x(const Poly& p2) {
  Poly out(2);
  for (const auto& [m, c] : p2.terms()) out.add_term({2 * m[0], m[1]}, c);
  return out;
}

}  // namespace

AnnihilatorPoly make_annihilator(const Poly& bivariate) {
  if (bivariate.nvars() != 2) {
    throw std::invalid_argument("annihilator must be bivariate");
  }
  if (bivariate.is_zero()) {
    throw std::invalid_argument("the zero polynomial annihilates nothing");
  }
  const Mono mc = bivariate.monomial_content();
  Poly p = bivariate.divide_by_monomial(mc);
  if (p.degree(1) == 0) {
    // Everything shared a power of the series variable: only the zero
    // series is annihilated, canonically written as f.  Without any power
    // of f the polynomial cannot vanish on a series at all.
    if (mc[1] > 0) return {Poly::var(1, 2)};
    throw std::invalid_argument("a polynomial in x alone annihilates nothing");
  }
  const mpz_class ic = p.integer_content();
  if (ic != 1 && ic != 0) p = p.divide_exact(Poly::constant(ic, 2));
  const auto& terms = p.terms();
  auto lead = terms.begin();
  for (auto it = terms.begin(); it != terms.end(); ++it) {
    if (f_major_less(lead->first, it->first)) lead = it;
  }
  if (lead->second < 0) p = -p;
  return {p};
}

bool verify_annihilator(const AnnihilatorPoly& q, const ZSeries& f,
                        int margin) {
  const int coeff_count = (q.degree_x() + 1) * (q.degree_f() + 1);
  if (f.order() + 1 < coeff_count + margin) {
    throw std::invalid_argument(
        "series too short to verify the annihilator meaningfully");
  }
  return annihilates(q.poly, f);
}

std::string AnnihilatorPoly::str(const std::string& fname) const {
  if (poly.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int i = poly.degree(1); i >= 0; --i) {
    Poly c = poly.coeff_of(1, i);
    if (c.is_zero()) continue;
    const auto& [lm, lc] = *c.terms().rbegin();
    const bool neg = lc < 0;
    const Poly cp = neg ? -c : c;
    const std::string cstr = cp.str({"x", fname});
    const bool multi = cp.terms().size() > 1;
    std::string piece;
    if (i == 0) {
      piece = multi ? "(" + cstr + ")" : cstr;
    } else {
      const std::string fpart =
          (i == 1) ? fname : fname + "^" + std::to_string(i);
      if (cp.is_constant() && cp.terms().begin()->second == 1) {
        piece = fpart;
      } else {
        piece = (multi ? "(" + cstr + ")" : cstr) + "*" + fpart;
      }
    }
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    out += piece;
    first = false;
  }
  return out;
}

std::optional<AnnihilatorPoly> eliminate_aggregate(const AlgebraicSystem& sys,
                                                   const Solution& sol) {
  if (sys.params != 0) {
    throw std::invalid_argument(
        "parameterized systems are eliminated via eliminate_involutions");
  }
  if (sol.profiles != sys.unknowns) {
    throw std::invalid_argument("solution does not belong to this system");
  }
  return run_elimination(sys, {}, aggregate_def(sys), aggregate(sys, sol));
}

std::optional<AnnihilatorPoly> eliminate_unknown(const AlgebraicSystem& sys,
                                                 const Solution& sol,
                                                 int unknown_index) {
  if (sys.params != 0) {
    throw std::invalid_argument(
        "parameterized systems are eliminated via eliminate_involutions");
  }
  if (unknown_index < 0 ||
      unknown_index >= static_cast<int>(sys.unknowns.size())) {
    throw std::invalid_argument("unknown index out of range");
  }
  const int nv1 = sys.num_vars() + 1;
  Poly t = Poly::var(sys.num_vars(), nv1) -
           Poly::var(sys.var_unknown(unknown_index), nv1);
  return run_elimination(sys, {}, t, sol.series[unknown_index]);
}

InvolutionElimination eliminate_involutions(const InvolutionSystem& sys,
                                            const InvolutionSolution& sol) {
  InvolutionElimination out;
  const int k = static_cast<int>(sys.plain.unknowns.size());
  out.params.resize(k);
  const int nv1 = sys.invol.num_vars() + 1;
  std::vector<Poly> pdefs;
  bool all_params = true;
  for (int j = 0; j < k; ++j) {
    auto rel = eliminate_unknown(sys.plain, sol.plain, j);
    if (!rel) {
      all_params = false;
      continue;
    }
    const Poly doubled = double_x(rel->poly);
    out.params[j] = make_annihilator(doubled);
    // Re-embed as a defining polynomial for the parameter variable.
    Poly def(nv1);
    for (const auto& [m, c] : doubled.terms()) {
      Mono mm(nv1, 0);
      mm[0] = m[0];
      mm[sys.invol.var_param(j)] = m[1];
      def.add_term(mm, c);
    }
    pdefs.push_back(std::move(def));
  }
  if (!all_params) return out;  // series stay valid without the equation

  out.aggregate = run_elimination(sys.invol, pdefs, aggregate_def(sys.invol),
                                  aggregate(sys.invol, sol.invol));
  return out;
}

}  // namespace permclass
