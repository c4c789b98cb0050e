#include "permclass/perm.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace permclass {

namespace {

void require_nonempty(const Perm& p, const char* what) {
  if (p.empty()) throw std::invalid_argument(std::string(what) + ": empty permutation");
}

void validate(const std::vector<int>& vals) {
  const int n = static_cast<int>(vals.size());
  std::vector<char> seen(n + 1, 0);
  for (int v : vals) {
    if (v < 1 || v > n || seen[v]) throw std::invalid_argument("not a permutation of 1..n");
    seen[v] = 1;
  }
}

}  // namespace

Perm::Perm(std::vector<int> vals) : vals_(std::move(vals)) { validate(vals_); }

Perm Perm::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Perm(std::move(v));
}

Perm Perm::decreasing(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = n - i;
  return Perm(std::move(v));
}

Perm Perm::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty permutation text");
  std::vector<int> vals;
  if (text.find(',') != std::string::npos) {
    size_t pos = 0;
    while (pos <= text.size()) {
      size_t comma = text.find(',', pos);
      std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      if (tok.empty()) throw std::invalid_argument("malformed permutation text: " + text);
      size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument("malformed permutation token: " + tok);
      vals.push_back(v);
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') throw std::invalid_argument("malformed permutation text: " + text);
      vals.push_back(c - '0');
    }
  }
  return Perm(std::move(vals));
}

std::string Perm::str() const {
  std::string out;
  if (size() <= 9) {
    for (int v : vals_) out += static_cast<char>('0' + v);
  } else {
    for (size_t i = 0; i < vals_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(vals_[i]);
    }
  }
  return out;
}

Perm flatten(const std::vector<int>& vals) {
  std::vector<int> sorted(vals);
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> out(vals.size());
  for (size_t i = 0; i < vals.size(); ++i) {
    out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), vals[i]) - sorted.begin()) + 1;
  }
  return Perm(std::move(out));
}

Perm inverse(const Perm& p) {
  require_nonempty(p, "inverse");
  std::vector<int> inv(p.size());
  for (int i = 1; i <= p.size(); ++i) inv[p[i] - 1] = i;
  return Perm(std::move(inv));
}

namespace {

// Backtracking embedding search.  For each pattern position the candidate
// host value must fall strictly between the host values already matched to
// the pattern's tightest smaller and larger predecessors (value-window
// pruning).
struct Matcher {
  const std::vector<int>& pat;
  const std::vector<int>& host;
  std::vector<int> below, above;  // index of bounding predecessor, -1 if none
  std::vector<int> match;         // chosen host index per pattern index

  Matcher(const std::vector<int>& p, const std::vector<int>& h) : pat(p), host(h) {
    const int k = static_cast<int>(pat.size());
    below.assign(k, -1);
    above.assign(k, -1);
    match.assign(k, -1);
    for (int j = 0; j < k; ++j) {
      for (int i = 0; i < j; ++i) {
        if (pat[i] < pat[j]) {
          if (below[j] < 0 || pat[i] > pat[below[j]]) below[j] = i;
        } else {
          if (above[j] < 0 || pat[i] < pat[above[j]]) above[j] = i;
        }
      }
    }
  }

  bool extend(int j) {
    const int k = static_cast<int>(pat.size());
    const int n = static_cast<int>(host.size());
    if (j == k) return true;
    int start = (j == 0) ? 0 : match[j - 1] + 1;
    for (int t = start; t <= n - (k - j); ++t) {
      int v = host[t];
      if (below[j] >= 0 && v <= host[match[below[j]]]) continue;
      if (above[j] >= 0 && v >= host[match[above[j]]]) continue;
      match[j] = t;
      if (extend(j + 1)) return true;
    }
    return false;
  }
};

}  // namespace

bool contains(const Perm& pattern, const Perm& host) {
  require_nonempty(pattern, "contains");
  require_nonempty(host, "contains");
  if (pattern.size() > host.size()) return false;
  Matcher m(pattern.values(), host.values());
  return m.extend(0);
}

std::vector<std::pair<int, int>> proper_intervals(const Perm& p) {
  require_nonempty(p, "proper_intervals");
  const int n = p.size();
  std::vector<std::pair<int, int>> out;
  for (int a = 1; a <= n; ++a) {
    int lo = p[a], hi = p[a];
    for (int b = a + 1; b <= n; ++b) {
      lo = std::min(lo, p[b]);
      hi = std::max(hi, p[b]);
      int len = b - a + 1;
      if (hi - lo + 1 == len && len < n) out.emplace_back(a, b);
    }
  }
  return out;
}

bool is_simple(const Perm& p) {
  require_nonempty(p, "is_simple");
  const int n = p.size();
  if (n <= 2) return true;
  for (int a = 1; a <= n; ++a) {
    int lo = p[a], hi = p[a];
    for (int b = a + 1; b <= n; ++b) {
      lo = std::min(lo, p[b]);
      hi = std::max(hi, p[b]);
      int len = b - a + 1;
      if (len < n && hi - lo + 1 == len) return false;
    }
  }
  return true;
}

Perm inflate(const Perm& skeleton, const std::vector<Perm>& children) {
  require_nonempty(skeleton, "inflate");
  const int m = skeleton.size();
  if (static_cast<int>(children.size()) != m)
    throw std::invalid_argument("inflate: child count does not match skeleton length");
  for (const Perm& c : children) require_nonempty(c, "inflate child");
  // offset of block i = total size of blocks with smaller skeleton value
  std::vector<int> offset(m, 0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (skeleton[j + 1] < skeleton[i + 1]) offset[i] += children[j].size();
    }
  }
  std::vector<int> vals;
  for (int i = 0; i < m; ++i) {
    for (int v : children[i].values()) vals.push_back(v + offset[i]);
  }
  return Perm(std::move(vals));
}

namespace {

// Positions k < n where the prefix p[1..k] forms a direct-sum boundary.
std::vector<int> sum_boundaries(const Perm& p) {
  std::vector<int> out;
  int mx = 0;
  for (int k = 1; k < p.size(); ++k) {
    mx = std::max(mx, p[k]);
    if (mx == k) out.push_back(k);
  }
  return out;
}

std::vector<int> skew_boundaries(const Perm& p) {
  const int n = p.size();
  std::vector<int> out;
  int mn = n + 1;
  for (int k = 1; k < n; ++k) {
    mn = std::min(mn, p[k]);
    if (mn == n - k + 1) out.push_back(k);
  }
  return out;
}

Perm slice(const Perm& p, int a, int b) {  // flatten(p[a..b]), 1-based inclusive
  std::vector<int> vals(p.values().begin() + (a - 1), p.values().begin() + b);
  return flatten(vals);
}

}  // namespace

bool is_sum_indecomposable(const Perm& p) {
  require_nonempty(p, "is_sum_indecomposable");
  return sum_boundaries(p).empty();
}

bool is_skew_indecomposable(const Perm& p) {
  require_nonempty(p, "is_skew_indecomposable");
  return skew_boundaries(p).empty();
}

std::vector<Perm> sum_components(const Perm& p) {
  require_nonempty(p, "sum_components");
  std::vector<Perm> parts;
  int prev = 0;
  for (int k : sum_boundaries(p)) {
    parts.push_back(slice(p, prev + 1, k));
    prev = k;
  }
  parts.push_back(slice(p, prev + 1, p.size()));
  return parts;
}

std::vector<Perm> skew_components(const Perm& p) {
  require_nonempty(p, "skew_components");
  std::vector<Perm> parts;
  int prev = 0;
  for (int k : skew_boundaries(p)) {
    parts.push_back(slice(p, prev + 1, k));
    prev = k;
  }
  parts.push_back(slice(p, prev + 1, p.size()));
  return parts;
}

Perm direct_sum(const std::vector<Perm>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct_sum: no parts");
  std::vector<int> vals;
  int off = 0;
  for (const Perm& q : parts) {
    require_nonempty(q, "direct_sum part");
    for (int v : q.values()) vals.push_back(v + off);
    off += q.size();
  }
  return Perm(std::move(vals));
}

Perm skew_sum(const std::vector<Perm>& parts) {
  if (parts.empty()) throw std::invalid_argument("skew_sum: no parts");
  int total = 0;
  for (const Perm& q : parts) {
    require_nonempty(q, "skew_sum part");
    total += q.size();
  }
  std::vector<int> vals;
  int above = total;
  for (const Perm& q : parts) {
    above -= q.size();
    for (int v : q.values()) vals.push_back(v + above);
  }
  return Perm(std::move(vals));
}

std::pair<Perm, std::vector<Perm>> decompose(const Perm& p) {
  require_nonempty(p, "decompose");
  const int n = p.size();
  if (n == 1) return {p, {p}};

  auto sb = sum_boundaries(p);
  if (!sb.empty()) {
    int k = sb.front();  // minimal boundary -> sum-indecomposable first part
    return {Perm::parse("12"), {slice(p, 1, k), slice(p, k + 1, n)}};
  }
  auto kb = skew_boundaries(p);
  if (!kb.empty()) {
    int k = kb.front();
    return {Perm::parse("21"), {slice(p, 1, k), slice(p, k + 1, n)}};
  }

  // Simple skeleton: the maximal proper intervals are pairwise disjoint and,
  // together with singleton blocks, partition the positions.
  auto ivs = proper_intervals(p);
  std::vector<std::pair<int, int>> maximal;
  for (auto& [a, b] : ivs) {
    bool inside = false;
    for (auto& [c, d] : ivs) {
      if ((c < a && b <= d) || (c <= a && b < d)) { inside = true; break; }
    }
    if (!inside) maximal.emplace_back(a, b);
  }
  std::sort(maximal.begin(), maximal.end());
  std::vector<std::pair<int, int>> blocks;
  int pos = 1;
  for (auto& [a, b] : maximal) {
    assert(pos <= a && "maximal proper intervals must be disjoint here");
    while (pos < a) { blocks.emplace_back(pos, pos); ++pos; }
    blocks.emplace_back(a, b);
    pos = b + 1;
  }
  while (pos <= n) { blocks.emplace_back(pos, pos); ++pos; }

  std::vector<int> reps;
  std::vector<Perm> children;
  for (auto& [a, b] : blocks) {
    reps.push_back(p[a]);
    children.push_back(slice(p, a, b));
  }
  Perm skel = flatten(reps);
  assert(skel.size() >= 4 && is_simple(skel));
  return {skel, std::move(children)};
}

std::optional<std::array<Perm, 3>> middle_greedy_321(const Perm& p) {
  require_nonempty(p, "middle_greedy_321");
  std::vector<Perm> chain = skew_components(p);
  if (chain.size() == 1) throw std::invalid_argument("middle_greedy_321: skew-indecomposable input");
  if (chain.size() == 2) return std::nullopt;
  std::vector<Perm> mid(chain.begin() + 1, chain.end() - 1);
  return std::array<Perm, 3>{chain.front(), skew_sum(mid), chain.back()};
}

bool is_involution(const Perm& p) {
  require_nonempty(p, "is_involution");
  for (int i = 1; i <= p.size(); ++i) {
    if (p[p[i]] != i) return false;
  }
  return true;
}

bool is_alternating(const Perm& p) {
  require_nonempty(p, "is_alternating");
  for (int i = 2; i < p.size(); ++i) {
    int a = p[i - 1], b = p[i], c = p[i + 1];
    if ((a < b && b < c) || (a > b && b > c)) return false;
  }
  return true;
}

bool is_even(const Perm& p) {
  require_nonempty(p, "is_even");
  int inv = 0;
  for (int i = 1; i <= p.size(); ++i) {
    for (int j = i + 1; j <= p.size(); ++j) {
      if (p[i] > p[j]) ++inv;
    }
  }
  return inv % 2 == 0;
}

bool is_dumont1(const Perm& p) {
  require_nonempty(p, "is_dumont1");
  const int n = p.size();
  for (int i = 1; i <= n; ++i) {
    int v = p[i];
    if (v % 2 == 0) {
      if (i == n || p[i + 1] > v) return false;
    } else {
      if (i < n && p[i + 1] < v) return false;
    }
  }
  return true;
}

std::vector<Perm> all_perms(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Perm> out;
  do {
    out.push_back(Perm(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace permclass
