#include "permclass/property.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <tuple>

namespace permclass {

namespace {

// Shared check for the Dumont-style conditions: an acts-even entry must be
// followed by a smaller entry, an acts-odd entry by a larger one; `flip`
// swaps the parity roles, `full` also constrains the final entry (which must
// then act odd).
bool dumont_condition(const Perm& p, bool flip, bool full) {
  int n = p.size();
  for (int i = 1; i <= n; ++i) {
    bool acts_even = ((p[i] % 2) == 0) != flip;
    if (i < n) {
      if (acts_even ? p[i + 1] > p[i] : p[i + 1] < p[i]) return false;
    } else if (full && acts_even) {
      return false;
    }
  }
  return true;
}

int family_rank(const Property& p) {
  return p.inverted ? 16 : static_cast<int>(p.kind);
}

auto order_key(const Property& p) {
  return std::make_tuple(family_rank(p), static_cast<int>(p.kind),
                         p.pat.perm.size(), p.pat.perm.values(), p.pat.adjacency,
                         p.la, p.ra);
}

const std::map<std::string, PropertyKind>& plain_names() {
  static const std::map<std::string, PropertyKind> names = {
      {"alternating", PropertyKind::Alternating},
      {"begins_rise", PropertyKind::BeginsRise},
      {"ends_rise", PropertyKind::EndsRise},
      {"singleton", PropertyKind::IsSingleton},
      {"even", PropertyKind::EvenPerm},
      {"even_length", PropertyKind::EvenLength},
      {"dumont1", PropertyKind::Dumont1},
      {"dumont1_flipped", PropertyKind::Dumont1Flipped},
      {"dumont1_prefix", PropertyKind::Dumont1Prefix},
      {"dumont1_prefix_flipped", PropertyKind::Dumont1PrefixFlipped},
      {"last_value_even", PropertyKind::LastValueEven},
      {"sum_indec", PropertyKind::SumIndec},
      {"skew_indec", PropertyKind::SkewIndec},
  };
  return names;
}

}  // namespace

Property Property::plain(PropertyKind k) {
  if (k == PropertyKind::AvoidClassical || k == PropertyKind::AvoidVincular)
    throw std::invalid_argument("avoidance properties require a pattern");
  Property p;
  p.kind = k;
  return p;
}

Property Property::avoid(Perm p) {
  if (p.empty()) throw std::invalid_argument("empty avoidance pattern");
  Property q;
  q.kind = PropertyKind::AvoidClassical;
  q.pat = VincularPattern::classical(std::move(p));
  return q;
}

Property Property::avoid_vincular(VincularPattern vp, bool left_anchor,
                                  bool right_anchor) {
  if (vp.perm.empty()) throw std::invalid_argument("empty avoidance pattern");
  if (vp.is_classical() && !left_anchor && !right_anchor)
    return avoid(vp.perm);
  Property q;
  q.kind = PropertyKind::AvoidVincular;
  q.pat = std::move(vp);
  q.la = left_anchor;
  q.ra = right_anchor;
  return q;
}

Property Property::inverse() const {
  if (inverted) {
    Property q = *this;
    q.inverted = false;
    return q;
  }
  switch (kind) {
    case PropertyKind::AvoidClassical:
      return avoid(permclass::inverse(pat.perm));
    case PropertyKind::IsSingleton:
    case PropertyKind::EvenPerm:
    case PropertyKind::EvenLength:
    case PropertyKind::SumIndec:
    case PropertyKind::SkewIndec:
      // Inversion preserves length, inversion count and the block structure
      // of sums and skew sums.
      return *this;
    default: {
      Property q = *this;
      q.inverted = true;
      return q;
    }
  }
}

bool Property::holds(const Perm& p) const {
  if (inverted) return inverse().holds(permclass::inverse(p));
  int n = p.size();
  switch (kind) {
    case PropertyKind::AvoidClassical:
      return !contains(pat.perm, p);
    case PropertyKind::AvoidVincular:
      return !contains_vincular_anchored(pat, la, ra, p);
    case PropertyKind::Alternating:
      return is_alternating(p);
    case PropertyKind::BeginsRise:
      return n >= 2 && p[1] < p[2];
    case PropertyKind::EndsRise:
      return n >= 2 && p[n - 1] < p[n];
    case PropertyKind::IsSingleton:
      return n == 1;
    case PropertyKind::EvenPerm:
      return is_even(p);
    case PropertyKind::EvenLength:
      return n % 2 == 0;
    case PropertyKind::Dumont1:
      return is_dumont1(p);
    case PropertyKind::Dumont1Flipped:
      return dumont_condition(p, true, true);
    case PropertyKind::Dumont1Prefix:
      return dumont_condition(p, false, false);
    case PropertyKind::Dumont1PrefixFlipped:
      return dumont_condition(p, true, false);
    case PropertyKind::LastValueEven:
      return p[n] % 2 == 0;
    case PropertyKind::SumIndec:
      return is_sum_indecomposable(p);
    case PropertyKind::SkewIndec:
      return is_skew_indecomposable(p);
  }
  throw std::logic_error("unhandled property kind");
}

bool Property::hereditary() const {
  switch (kind) {
    case PropertyKind::AvoidClassical:
    case PropertyKind::Alternating:
      return true;
    case PropertyKind::AvoidVincular:
      return !la && !ra;
    default:
      return false;
  }
}

std::string Property::str() const {
  if (inverted) return "inverse_of:" + inverse().str();
  switch (kind) {
    case PropertyKind::AvoidClassical:
      return "avoid:" + pat.perm.str();
    case PropertyKind::AvoidVincular:
      return "avoid_vincular:" + std::string(la ? "^" : "") + pat.str() +
             std::string(ra ? "$" : "");
    default:
      for (const auto& [name, k] : plain_names())
        if (k == kind) return name;
  }
  throw std::logic_error("unhandled property kind");
}

Property Property::parse(const std::string& text) {
  auto colon = text.find(':');
  std::string head =
      colon == std::string::npos ? text : text.substr(0, colon);
  std::string tail = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (head == "inverse_of") {
    if (tail.empty()) throw std::invalid_argument("inverse_of needs a property");
    return parse(tail).inverse();
  }
  if (head == "avoid") return avoid(Perm::parse(tail));
  if (head == "avoid_vincular") {
    bool la = false, ra = false;
    if (!tail.empty() && tail.front() == '^') {
      la = true;
      tail.erase(0, 1);
    }
    if (!tail.empty() && tail.back() == '$') {
      ra = true;
      tail.pop_back();
    }
    return avoid_vincular(VincularPattern::parse(tail), la, ra);
  }
  if (head == "avoid_barred")
    throw std::invalid_argument(
        "barred patterns are oracle-only side conditions");
  auto it = plain_names().find(text);
  if (it == plain_names().end())
    throw std::invalid_argument("unknown property: " + text);
  return plain(it->second);
}

bool Property::operator==(const Property& o) const {
  return kind == o.kind && inverted == o.inverted && pat == o.pat &&
         la == o.la && ra == o.ra;
}

bool Property::operator<(const Property& o) const {
  return order_key(*this) < order_key(o);
}

Universe Universe::close(const std::vector<Property>& requested,
                         bool inverse_closed) {
  bool needs_inverse = inverse_closed;
  for (const auto& p : requested)
    if (p.inverted) needs_inverse = true;

  std::set<Property> members;
  std::deque<Property> work(requested.begin(), requested.end());
  work.push_back(Property::plain(PropertyKind::SumIndec));
  work.push_back(Property::plain(PropertyKind::SkewIndec));
  auto push = [&work](Property p) { work.push_back(std::move(p)); };

  while (!work.empty()) {
    Property p = work.front();
    work.pop_front();
    if (members.contains(p)) continue;
    members.insert(p);
    if (needs_inverse) push(p.inverse());
    if (p.inverted) continue;  // auxiliaries come from the base property
    switch (p.kind) {
      case PropertyKind::AvoidClassical:
      case PropertyKind::AvoidVincular: {
        // A pattern embeds across an inflation piecewise; the pieces are the
        // pattern's intervals (contiguous positions with contiguous values),
        // anchored wherever a glued pair straddles a cut.
        const Perm& g = p.pat.perm;
        int k = g.size();
        for (int a = 1; a <= k; ++a) {
          int lo = g[a], hi = g[a];
          for (int b = a; b <= k; ++b) {
            lo = std::min(lo, g[b]);
            hi = std::max(hi, g[b]);
            if (hi - lo != b - a) continue;
            std::vector<int> vals(g.values().begin() + (a - 1),
                                  g.values().begin() + b);
            std::vector<char> adj;
            for (int i = a; i < b; ++i)
              adj.push_back(p.pat.adjacent(i) ? 1 : 0);
            bool pla = (a == 1) ? p.la : p.pat.adjacent(a - 1);
            bool pra = (b == k) ? p.ra : p.pat.adjacent(b);
            push(Property::avoid_vincular(
                VincularPattern(flatten(vals), std::move(adj)), pla, pra));
          }
        }
        break;
      }
      case PropertyKind::Alternating:
        push(Property::plain(PropertyKind::BeginsRise));
        push(Property::plain(PropertyKind::EndsRise));
        push(Property::plain(PropertyKind::IsSingleton));
        break;
      case PropertyKind::BeginsRise:
      case PropertyKind::EndsRise:
        push(Property::plain(PropertyKind::IsSingleton));
        break;
      case PropertyKind::EvenPerm:
      case PropertyKind::LastValueEven:
        push(Property::plain(PropertyKind::EvenLength));
        break;
      case PropertyKind::Dumont1:
      case PropertyKind::Dumont1Flipped:
      case PropertyKind::Dumont1Prefix:
      case PropertyKind::Dumont1PrefixFlipped:
        push(Property::plain(PropertyKind::Dumont1));
        push(Property::plain(PropertyKind::Dumont1Flipped));
        push(Property::plain(PropertyKind::Dumont1Prefix));
        push(Property::plain(PropertyKind::Dumont1PrefixFlipped));
        push(Property::plain(PropertyKind::LastValueEven));
        push(Property::plain(PropertyKind::EvenLength));
        break;
      default:
        break;
    }
  }

  Universe u;
  u.props_.assign(members.begin(), members.end());
  if (u.props_.size() > 64)
    throw std::runtime_error("property universe exceeds 64 members");
  for (int i = 0; i < u.size(); ++i) u.index_[u.props_[i]] = i;
  return u;
}

int Universe::index_of(const Property& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

bool Universe::is_inverse_closed() const {
  for (const auto& p : props_)
    if (index_of(p.inverse()) < 0) return false;
  return true;
}

std::string Universe::str() const {
  std::string out = "[";
  for (int i = 0; i < size(); ++i) {
    if (i) out += ", ";
    out += props_[i].str();
  }
  return out + "]";
}

bool Universe::operator==(const Universe& o) const {
  return props_ == o.props_;
}

Profile profile_of(const Perm& p, const Universe& u) {
  Profile r = 0;
  for (int i = 0; i < u.size(); ++i)
    if (u.property(i).holds(p)) r |= Profile{1} << i;
  return r;
}

Profile invert_profile(Profile r, const Universe& u) {
  Profile out = 0;
  for (int i = 0; i < u.size(); ++i) {
    if (!profile_has(r, i)) continue;
    int j = u.index_of(u.property(i).inverse());
    if (j < 0)
      throw std::logic_error("invert_profile needs an inverse-closed universe");
    out |= Profile{1} << j;
  }
  return out;
}

std::string profile_str(Profile r, const Universe& u) {
  std::vector<std::string> names;
  for (int i = 0; i < u.size(); ++i)
    if (profile_has(r, i)) names.push_back(u.property(i).str());
  std::sort(names.begin(), names.end());
  std::string out = "{";
  for (size_t i = 0; i < names.size(); ++i) {
    if (i) out += ", ";
    out += names[i];
  }
  return out + "}";
}

TransferEngine::TransferEngine(Universe u) : u_(std::move(u)) {
  kind_index_.assign(16, -1);
  for (int k = 0; k < 16; ++k) {
    auto kind = static_cast<PropertyKind>(k);
    if (kind == PropertyKind::AvoidClassical ||
        kind == PropertyKind::AvoidVincular)
      continue;
    kind_index_[k] = u_.index_of(Property::plain(kind));
  }
}

int TransferEngine::required_index(PropertyKind k) const {
  int i = kind_index_[static_cast<int>(k)];
  if (i < 0)
    throw std::logic_error("universe closure is missing an auxiliary property");
  return i;
}

bool TransferEngine::child_bit(Profile r, PropertyKind k) const {
  return profile_has(r, required_index(k));
}

Profile TransferEngine::transfer(const Perm& sigma,
                                 const std::vector<Profile>& children) const {
  int m = sigma.size();
  if (m == 0) throw std::invalid_argument("transfer: empty skeleton");
  if (static_cast<int>(children.size()) != m)
    throw std::invalid_argument("transfer: child count mismatch");
  if (m == 1) return children[0];

  std::pair<std::vector<int>, std::vector<Profile>> key{sigma.values(),
                                                        children};
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  Profile r = 0;
  for (int i = 0; i < u_.size(); ++i)
    if (eval_property(i, sigma, children)) r |= Profile{1} << i;
  std::lock_guard<std::mutex> lock(mutex_);
  memo_.emplace(std::move(key), r);
  return r;
}

bool TransferEngine::eval_property(int pidx, const Perm& sigma,
                                   const std::vector<Profile>& children) const {
  const Property& p = u_.property(pidx);
  int m = sigma.size();

  if (p.inverted) {
    // sigma[a_1..a_m]^-1 = sigma^-1[b_1..b_m] with b_j = a_{sigma^-1(j)}^-1.
    Perm si = permclass::inverse(sigma);
    std::vector<Profile> inv_children(m);
    for (int j = 1; j <= m; ++j)
      inv_children[j - 1] = invert_profile(children[si[j] - 1], u_);
    int base = u_.index_of(p.inverse());
    if (base < 0)
      throw std::logic_error("inverted property without its base");
    return eval_property(base, si, inv_children);
  }

  auto bit = [&](int child, PropertyKind k) {  // child is 1-based
    return child_bit(children[child - 1], k);
  };
  // Whether block i sits at an odd value offset inside the inflation.
  auto odd_offset = [&](int i) {
    bool odd = false;
    for (int j = 1; j <= m; ++j)
      if (sigma[j] < sigma[i]) odd ^= !bit(j, PropertyKind::EvenLength);
    return odd;
  };

  switch (p.kind) {
    case PropertyKind::AvoidClassical:
    case PropertyKind::AvoidVincular:
      return eval_avoid(p, sigma, children);

    case PropertyKind::Alternating: {
      for (int i = 1; i <= m; ++i)
        if (!bit(i, PropertyKind::Alternating)) return false;
      auto rises = [&](int j) { return sigma[j] < sigma[j + 1]; };
      for (int j = 1; j < m; ++j) {
        // A junction entry must be a local extreme: the block before a rise
        // must end with a fall and the block after it begin with one (and
        // symmetrically for a falling junction).
        if (!bit(j, PropertyKind::IsSingleton) &&
            bit(j, PropertyKind::EndsRise) == rises(j))
          return false;
        if (!bit(j + 1, PropertyKind::IsSingleton) &&
            bit(j + 1, PropertyKind::BeginsRise) == rises(j))
          return false;
      }
      for (int i = 2; i < m; ++i)
        if (bit(i, PropertyKind::IsSingleton) && rises(i - 1) == rises(i))
          return false;
      return true;
    }

    case PropertyKind::BeginsRise:
      return bit(1, PropertyKind::IsSingleton) ? sigma[1] < sigma[2]
                                               : bit(1, PropertyKind::BeginsRise);
    case PropertyKind::EndsRise:
      return bit(m, PropertyKind::IsSingleton)
                 ? sigma[m - 1] < sigma[m]
                 : bit(m, PropertyKind::EndsRise);

    case PropertyKind::IsSingleton:
      return false;  // inflations considered here have at least two blocks

    case PropertyKind::EvenPerm: {
      bool parity = false;
      for (int i = 1; i <= m; ++i) parity ^= !bit(i, PropertyKind::EvenPerm);
      // A skeleton inversion contributes |a_i|*|a_j| host inversions.
      for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
          if (sigma[i] > sigma[j])
            parity ^= !bit(i, PropertyKind::EvenLength) &&
                      !bit(j, PropertyKind::EvenLength);
      return !parity;
    }

    case PropertyKind::EvenLength: {
      bool parity = false;
      for (int i = 1; i <= m; ++i) parity ^= !bit(i, PropertyKind::EvenLength);
      return !parity;
    }

    case PropertyKind::Dumont1:
    case PropertyKind::Dumont1Flipped:
    case PropertyKind::Dumont1Prefix:
    case PropertyKind::Dumont1PrefixFlipped: {
      bool flip = p.kind == PropertyKind::Dumont1Flipped ||
                  p.kind == PropertyKind::Dumont1PrefixFlipped;
      bool full = p.kind == PropertyKind::Dumont1 ||
                  p.kind == PropertyKind::Dumont1Flipped;
      for (int i = 1; i <= m; ++i) {
        bool off = odd_offset(i);
        bool block_flip = flip != off;  // parity flip seen inside block i
        if (!(block_flip ? bit(i, PropertyKind::Dumont1PrefixFlipped)
                         : bit(i, PropertyKind::Dumont1Prefix)))
          return false;
        bool even_last = bit(i, PropertyKind::LastValueEven) != off;
        if (i < m) {
          // The block's last entry is followed by the next block: an
          // acts-even value must fall onto it, an acts-odd one rise.
          bool fall_required = even_last != flip;
          if ((sigma[i] > sigma[i + 1]) != fall_required) return false;
        } else if (full && even_last != flip) {
          return false;  // the final entry must act odd
        }
      }
      return true;
    }

    case PropertyKind::LastValueEven:
      return bit(m, PropertyKind::LastValueEven) != odd_offset(m);

    case PropertyKind::SumIndec:
      return is_sum_indecomposable(sigma);
    case PropertyKind::SkewIndec:
      return is_skew_indecomposable(sigma);
  }
  throw std::logic_error("unhandled property kind");
}

bool TransferEngine::eval_avoid(const Property& p, const Perm& sigma,
                                const std::vector<Profile>& children) const {
  int pidx = u_.index_of(p);
  const std::vector<Splitting>& sps = splittings(pidx, sigma);
  for (const Splitting& s : sps) {
    bool blocked = false;
    for (auto [child, piece] : s) {
      if (profile_has(children[child - 1], piece)) {
        blocked = true;  // this block avoids its piece
        break;
      }
    }
    if (!blocked) return false;  // every piece embeds, so the pattern does
  }
  return true;
}

const std::vector<TransferEngine::Splitting>& TransferEngine::splittings(
    int pidx, const Perm& sigma) const {
  std::pair<int, std::vector<int>> key{pidx, sigma.values()};
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = split_memo_.find(key);
    if (it != split_memo_.end()) return it->second;
  }

  const Property& p = u_.property(pidx);
  const Perm& g = p.pat.perm;
  int k = g.size();
  int m = sigma.size();
  std::vector<Splitting> out;

  // Cut the pattern into m consecutive, possibly empty segments; segment i
  // goes to block i.  t[i] = number of entries in segments 1..i.
  std::vector<int> t(m + 1, 0);
  t[m] = k;
  auto consider = [&]() {
    std::vector<int> seg(k + 1, 0);
    {
      int q = 1;
      for (int i = 1; i <= m; ++i)
        while (q <= t[i]) seg[q++] = i;
    }
    // An anchored end of the pattern must land in the outermost block.
    if (p.la && t[1] == 0) return;
    if (p.ra && t[m - 1] == k) return;
    // Entries in distinct blocks must compare like the skeleton entries.
    for (int q1 = 1; q1 <= k; ++q1)
      for (int q2 = q1 + 1; q2 <= k; ++q2)
        if (seg[q1] != seg[q2] &&
            (g[q1] < g[q2]) != (sigma[seg[q1]] < sigma[seg[q2]]))
          return;
    // A glued pair split across blocks needs those blocks adjacent (any
    // block in between would separate the host positions).
    for (int q = 1; q < k; ++q)
      if (p.pat.adjacent(q) && seg[q] != seg[q + 1] && seg[q + 1] != seg[q] + 1)
        return;
    Splitting s;
    for (int i = 1; i <= m; ++i) {
      int a = t[i - 1] + 1, b = t[i];
      if (a > b) continue;
      std::vector<int> vals(g.values().begin() + (a - 1),
                            g.values().begin() + b);
      std::vector<char> adj;
      for (int q = a; q < b; ++q) adj.push_back(p.pat.adjacent(q) ? 1 : 0);
      bool pla = (a == 1) ? p.la : p.pat.adjacent(a - 1);
      bool pra = (b == k) ? p.ra : p.pat.adjacent(b);
      Property piece = Property::avoid_vincular(
          VincularPattern(flatten(vals), std::move(adj)), pla, pra);
      int piece_idx = u_.index_of(piece);
      if (piece_idx < 0)
        throw std::logic_error("universe closure is missing a pattern piece");
      s.emplace_back(i, piece_idx);
    }
    out.push_back(std::move(s));
  };
  auto enumerate = [&](auto&& self, int i) -> void {
    if (i == m) {
      consider();
      return;
    }
    for (int v = t[i - 1]; v <= k; ++v) {
      t[i] = v;
      self(self, i + 1);
    }
  };
  enumerate(enumerate, 1);

  std::lock_guard<std::mutex> lock(mutex_);
  return split_memo_.emplace(std::move(key), std::move(out)).first->second;
}

}  // namespace permclass
