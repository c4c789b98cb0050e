#include "permclass/classes.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "permclass/patterns.hpp"

namespace permclass {

namespace {

bool length_lex_less(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.values() < b.values();
}

bool avoids_all(const std::vector<Perm>& basis, const Perm& p) {
  for (const Perm& b : basis)
    if (contains(b, p)) return false;
  return true;
}

// All one-point insertions: every position and every value slot.
std::vector<Perm> one_point_insertions(const Perm& p) {
  const int k = p.size();
  std::vector<Perm> out;
  out.reserve((k + 1) * (k + 1));
  for (int pos = 0; pos <= k; ++pos) {
    for (int val = 1; val <= k + 1; ++val) {
      std::vector<int> vals;
      vals.reserve(k + 1);
      for (int i = 1; i <= k; ++i) {
        if (i - 1 == pos) vals.push_back(val);
        vals.push_back(p[i] + (p[i] >= val ? 1 : 0));
      }
      if (pos == k) vals.push_back(val);
      out.push_back(Perm(std::move(vals)));
    }
  }
  return out;
}

}  // namespace

std::vector<Perm> minimal_antichain(std::vector<Perm> basis,
                                    std::vector<Perm>* dropped) {
  std::sort(basis.begin(), basis.end(), length_lex_less);
  basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
  std::vector<Perm> kept;
  for (const Perm& p : basis) {
    bool redundant = false;
    for (const Perm& q : basis) {
      if (q != p && contains(q, p)) {
        redundant = true;
        break;
      }
    }
    if (redundant) {
      if (dropped) dropped->push_back(p);
    } else {
      kept.push_back(p);
    }
  }
  return kept;
}

std::vector<Perm> avoiders(const std::vector<Perm>& basis, int n) {
  if (n < 0) throw std::invalid_argument("avoiders: negative length");
  std::vector<Perm> out;
  if (n == 0) return out;
  std::vector<int> prefix;
  std::vector<char> used(n + 1, 0);
  // A newly forbidden pattern copy must use the last position, so prune with
  // a right-anchored containment test on the flattened prefix.
  auto rec = [&](auto&& self) -> void {
    const int k = static_cast<int>(prefix.size());
    if (k > 0) {
      const Perm flat = flatten(prefix);
      for (const Perm& b : basis) {
        if (b.size() <= k &&
            contains_vincular_anchored(VincularPattern::classical(b), false,
                                       true, flat))
          return;
      }
      if (k == n) {
        out.push_back(flat);
        return;
      }
    }
    for (int v = 1; v <= n; ++v) {
      if (used[v]) continue;
      used[v] = 1;
      prefix.push_back(v);
      self(self);
      prefix.pop_back();
      used[v] = 0;
    }
  };
  rec(rec);
  return out;
}

long long oracle_count(const std::vector<Perm>& basis, int n) {
  return static_cast<long long>(avoiders(basis, n).size());
}

SimpleEnumeration enumerate_simples(const std::vector<Perm>& basis,
                                    int max_length) {
  if (max_length < 1)
    throw std::invalid_argument("enumerate_simples: max_length must be >= 1");
  SimpleEnumeration result;
  result.complete = false;
  std::vector<std::vector<Perm>> level(max_length + 1);

  for (int n = 1; n <= max_length; ++n) {
    std::set<Perm> candidates;
    if (n <= 2) {
      for (const Perm& p : all_perms(n)) candidates.insert(p);
    } else {
      for (const Perm& s : level[n - 1])
        for (Perm& e : one_point_insertions(s)) candidates.insert(std::move(e));
      if (n >= 3) {
        for (const Perm& s : level[n - 2])
          for (const Perm& mid : one_point_insertions(s))
            for (Perm& e : one_point_insertions(mid))
              candidates.insert(std::move(e));
      }
    }
    for (const Perm& p : candidates)
      if (is_simple(p) && avoids_all(basis, p)) level[n].push_back(p);
    std::sort(level[n].begin(), level[n].end(),
              [](const Perm& a, const Perm& b) { return a.values() < b.values(); });
    if (n >= 5 && level[n].empty() && level[n - 1].empty()) {
      result.complete = true;
      break;
    }
  }
  for (int n = 1; n <= max_length; ++n)
    for (const Perm& p : level[n]) result.simples.push_back(p);
  return result;
}

bool is_wreath_closed(const std::vector<Perm>& basis) {
  return std::all_of(basis.begin(), basis.end(),
                     [](const Perm& p) { return is_simple(p); });
}

std::vector<Perm> wreath_closure_basis(const std::vector<Perm>& simples) {
  int longest = 0;
  for (const Perm& s : simples) {
    if (!is_simple(s))
      throw std::invalid_argument(
          "wreath closure generators must be simple permutations");
    longest = std::max(longest, s.size());
  }
  const int bound = longest + 2;
  if (bound > 9)
    throw std::invalid_argument(
        "wreath closure basis search is capped at length 9");

  const std::set<Perm> members(simples.begin(), simples.end());
  // The inflation closure is a pattern class only when the generators are
  // closed under taking simple subpatterns; otherwise some generator's
  // inflations contain a simple pattern that is itself not an inflation,
  // and no avoidance basis exists.
  for (const Perm& s : simples) {
    const int m = s.size();
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
      std::vector<int> sub;
      for (int i = 1; i <= m; ++i)
        if (mask & (1u << (i - 1))) sub.push_back(s[i]);
      const Perm pat = flatten(sub);
      if (is_simple(pat) && !members.contains(pat))
        throw std::invalid_argument(
            "wreath closure generators are not closed under simple "
            "subpatterns: " +
            s.str() + " contains " + pat.str());
    }
  }
  std::vector<Perm> minimal;
  for (int n = 1; n <= bound; ++n) {
    for (const Perm& p : all_perms(n)) {
      if (!is_simple(p) || members.contains(p)) continue;
      // Non-minimal candidates contain a shorter minimal non-member.
      bool contains_smaller = false;
      for (const Perm& q : minimal) {
        if (q.size() < p.size() && contains(q, p)) {
          contains_smaller = true;
          break;
        }
      }
      if (!contains_smaller) minimal.push_back(p);
    }
  }
  std::sort(minimal.begin(), minimal.end(), length_lex_less);
  return minimal;
}

}  // namespace permclass
