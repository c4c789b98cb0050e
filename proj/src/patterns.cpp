#include "permclass/patterns.hpp"

#include <algorithm>
#include <stdexcept>

namespace permclass {

namespace {

std::vector<int> parse_block_entries(const std::string& block, bool comma_mode) {
  std::vector<int> vals;
  if (comma_mode) {
    size_t pos = 0;
    while (pos <= block.size()) {
      size_t comma = block.find(',', pos);
      std::string tok = block.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      if (tok.empty()) throw std::invalid_argument("malformed vincular block: " + block);
      size_t used = 0;
      vals.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument("malformed vincular token: " + tok);
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  } else {
    if (block.empty()) throw std::invalid_argument("empty vincular block");
    for (char c : block) {
      if (c < '1' || c > '9') throw std::invalid_argument("malformed vincular block: " + block);
      vals.push_back(c - '0');
    }
  }
  return vals;
}

}  // namespace

VincularPattern::VincularPattern(Perm p, std::vector<char> adj)
    : perm(std::move(p)), adjacency(std::move(adj)) {
  if (perm.empty()) throw std::invalid_argument("empty vincular pattern");
  if (static_cast<int>(adjacency.size()) != perm.size() - 1)
    throw std::invalid_argument("vincular adjacency size mismatch");
}

VincularPattern VincularPattern::classical(Perm p) {
  if (p.empty()) throw std::invalid_argument("empty vincular pattern");
  std::vector<char> adj(p.size() - 1, 0);
  return VincularPattern(std::move(p), std::move(adj));
}

bool VincularPattern::is_classical() const {
  return std::all_of(adjacency.begin(), adjacency.end(), [](char a) { return !a; });
}

namespace {

VincularPattern parse_vincular_blocks(const std::string& text, bool comma_mode,
                                      bool blocks_are_numbers) {
  std::vector<int> vals;
  std::vector<char> adj;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t dash = text.find('-', pos);
    std::string block = text.substr(pos, dash == std::string::npos ? std::string::npos : dash - pos);
    std::vector<int> entries;
    if (blocks_are_numbers) {
      if (block.empty()) throw std::invalid_argument("malformed vincular block");
      size_t used = 0;
      entries.push_back(std::stoi(block, &used));
      if (used != block.size()) throw std::invalid_argument("malformed vincular block: " + block);
    } else {
      entries = parse_block_entries(block, comma_mode);
    }
    for (size_t i = 0; i < entries.size(); ++i) {
      if (!vals.empty()) adj.push_back(i > 0 ? 1 : 0);
      vals.push_back(entries[i]);
    }
    if (dash == std::string::npos) break;
    pos = dash + 1;
  }
  return VincularPattern(Perm(std::move(vals)), std::move(adj));
}

}  // namespace

VincularPattern VincularPattern::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty vincular pattern text");
  if (text.find(',') != std::string::npos) return parse_vincular_blocks(text, true, false);
  try {
    return parse_vincular_blocks(text, false, false);  // one digit per entry
  } catch (const std::invalid_argument&) {
    // all-dash form with multi-digit entries, e.g. "10-2-3-..."
    return parse_vincular_blocks(text, false, true);
  }
}

std::string VincularPattern::str() const {
  const int n = perm.size();
  bool comma_mode = n > 9;
  std::string out;
  for (int i = 1; i <= n; ++i) {
    if (i > 1) {
      if (!adjacent(i - 1)) out += '-';
      else if (comma_mode) out += ',';
    }
    out += comma_mode ? std::to_string(perm[i]) : std::string(1, static_cast<char>('0' + perm[i]));
  }
  return out;
}

namespace {

struct VincularMatcher {
  const VincularPattern& pat;
  const Perm& host;
  bool la, ra;
  std::vector<int> below, above, match;

  VincularMatcher(const VincularPattern& p, const Perm& h, bool left, bool right)
      : pat(p), host(h), la(left), ra(right) {
    const int k = pat.perm.size();
    below.assign(k, -1);
    above.assign(k, -1);
    match.assign(k, 0);
    for (int j = 0; j < k; ++j) {
      for (int i = 0; i < j; ++i) {
        int vi = pat.perm[i + 1], vj = pat.perm[j + 1];
        if (vi < vj) {
          if (below[j] < 0 || vi > pat.perm[below[j] + 1]) below[j] = i;
        } else {
          if (above[j] < 0 || vi < pat.perm[above[j] + 1]) above[j] = i;
        }
      }
    }
  }

  bool extend(int j) {  // j is 0-based pattern index
    const int k = pat.perm.size();
    const int n = host.size();
    if (j == k) return true;
    int lo, hi;
    if (j == 0) {
      lo = 1;
      hi = n - k + 1;
      if (la) hi = std::min(hi, 1);
    } else if (pat.adjacent(j)) {  // entries j, j+1 (1-based) glued
      lo = hi = match[j - 1] + 1;
      if (hi > n) return false;
    } else {
      lo = match[j - 1] + 1;
      hi = n - (k - 1 - j);
    }
    if (j == k - 1 && ra) {
      if (n < lo || n > hi) return false;
      lo = hi = n;
    }
    for (int t = lo; t <= hi; ++t) {
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

bool contains_vincular_anchored(const VincularPattern& pat, bool left_anchor,
                                bool right_anchor, const Perm& host) {
  if (host.empty()) throw std::invalid_argument("contains_vincular_anchored: empty host");
  if (pat.perm.size() > host.size()) return false;
  VincularMatcher m(pat, host, left_anchor, right_anchor);
  return m.extend(0);
}

bool contains_vincular(const VincularPattern& pat, const Perm& host) {
  return contains_vincular_anchored(pat, false, false, host);
}

BarredPattern::BarredPattern(Perm p, std::vector<char> bars)
    : full(std::move(p)), barred(std::move(bars)) {
  if (full.empty()) throw std::invalid_argument("empty barred pattern");
  if (barred.size() != static_cast<size_t>(full.size()))
    throw std::invalid_argument("barred flag count mismatch");
  size_t nbars = std::count(barred.begin(), barred.end(), 1);
  if (nbars == 0 || nbars == barred.size())
    throw std::invalid_argument("barred set must be a nonempty proper subset");
}

BarredPattern BarredPattern::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty barred pattern text");
  std::vector<int> vals;
  std::vector<char> bars;
  if (text.find(',') != std::string::npos) {
    size_t pos = 0;
    while (pos <= text.size()) {
      size_t comma = text.find(',', pos);
      std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      bool bar = !tok.empty() && tok.back() == '!';
      if (bar) tok.pop_back();
      if (tok.empty()) throw std::invalid_argument("malformed barred token");
      size_t used = 0;
      vals.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument("malformed barred token: " + tok);
      bars.push_back(bar ? 1 : 0);
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  } else {
    size_t i = 0;
    while (i < text.size()) {
      if (text[i] == '[') {
        if (i + 2 >= text.size() || text[i + 2] != ']' || text[i + 1] < '1' || text[i + 1] > '9')
          throw std::invalid_argument("malformed barred pattern: " + text);
        vals.push_back(text[i + 1] - '0');
        bars.push_back(1);
        i += 3;
      } else if (text[i] >= '1' && text[i] <= '9') {
        vals.push_back(text[i] - '0');
        bars.push_back(0);
        ++i;
      } else {
        throw std::invalid_argument("malformed barred pattern: " + text);
      }
    }
  }
  return BarredPattern(Perm(std::move(vals)), std::move(bars));
}

std::string BarredPattern::str() const {
  const int n = full.size();
  std::string out;
  if (n <= 9) {
    for (int i = 1; i <= n; ++i) {
      char d = static_cast<char>('0' + full[i]);
      if (barred[i - 1]) { out += '['; out += d; out += ']'; }
      else out += d;
    }
  } else {
    for (int i = 1; i <= n; ++i) {
      if (i > 1) out += ',';
      out += std::to_string(full[i]);
      if (barred[i - 1]) out += '!';
    }
  }
  return out;
}

Perm BarredPattern::reduct() const {
  std::vector<int> vals;
  for (int i = 1; i <= full.size(); ++i) {
    if (!barred[i - 1]) vals.push_back(full[i]);
  }
  return flatten(vals);
}

namespace {

// Enumerate all embeddings of `pat` into `host` (as host index vectors).
void all_embeddings(const std::vector<int>& pat, const Perm& host, int j,
                    std::vector<int>& match, std::vector<std::vector<int>>& out) {
  const int k = static_cast<int>(pat.size());
  const int n = host.size();
  if (j == k) { out.push_back(match); return; }
  int start = (j == 0) ? 1 : match[j - 1] + 1;
  for (int t = start; t <= n - (k - 1 - j); ++t) {
    bool ok = true;
    for (int i = 0; i < j && ok; ++i) {
      if ((pat[i] < pat[j]) != (host[match[i]] < host[t])) ok = false;
    }
    if (!ok) continue;
    match[j] = t;
    all_embeddings(pat, host, j + 1, match, out);
  }
}

// Does some embedding of full extend the fixed reduct embedding?  Non-barred
// pattern positions are pinned to the given host indices.
bool extends_to_full(const BarredPattern& pat, const Perm& host, const std::vector<int>& pinned) {
  const int k = pat.full.size();
  const int n = host.size();
  std::vector<int> match(k, 0);
  std::vector<int> pin(k, 0);
  int r = 0;
  for (int j = 0; j < k; ++j) {
    if (!pat.barred[j]) pin[j] = pinned[r++];
  }
  auto rec = [&](auto&& self, int j) -> bool {
    if (j == k) return true;
    int lo = (j == 0) ? 1 : match[j - 1] + 1;
    int hi = n - (k - 1 - j);
    if (pin[j]) { lo = hi = pin[j]; if (pin[j] < ((j == 0) ? 1 : match[j - 1] + 1)) return false; }
    for (int t = lo; t <= hi; ++t) {
      bool ok = true;
      for (int i = 0; i < j && ok; ++i) {
        if ((pat.full[i + 1] < pat.full[j + 1]) != (host[match[i]] < host[t])) ok = false;
      }
      if (!ok) continue;
      match[j] = t;
      if (self(self, j + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace

bool avoids_barred(const BarredPattern& pat, const Perm& host) {
  if (host.empty()) throw std::invalid_argument("avoids_barred: empty host");
  Perm red = pat.reduct();  // nonempty: the barred set is a proper subset
  if (red.size() > host.size()) return true;
  std::vector<std::vector<int>> embeddings;
  std::vector<int> match(red.size(), 0);
  all_embeddings(red.values(), host, 0, match, embeddings);
  for (const auto& emb : embeddings) {
    if (!extends_to_full(pat, host, emb)) return false;
  }
  return true;
}

}  // namespace permclass
