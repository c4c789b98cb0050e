#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "permclass/patterns.hpp"
#include "permclass/perm.hpp"

namespace permclass {

// Property families, in canonical universe order.
enum class PropertyKind {
  AvoidClassical,        // avoids a classical pattern
  AvoidVincular,         // avoids an (optionally anchored) vincular pattern
  Alternating,           // no entry lies between its neighbors
  BeginsRise,            // first two entries ascend
  EndsRise,              // last two entries ascend
  IsSingleton,           // length 1
  EvenPerm,              // even number of inversions
  EvenLength,            // even length
  Dumont1,               // even entries followed by smaller, odd by larger/last
  Dumont1Flipped,        // the parity-swapped condition
  Dumont1Prefix,         // all entries but the last satisfy the condition
  Dumont1PrefixFlipped,  // parity-swapped prefix condition
  LastValueEven,         // final entry is even
  SumIndec,              // sum indecomposable
  SkewIndec,             // skew indecomposable
};

// A single property, possibly wrapped in an inverse: "inverted" means the
// permutation's inverse satisfies the base property.  Wrapping is normalized
// away for families with a closed-form inverse (classical avoidance maps to
// the inverse pattern; several families are self-inverse).
struct Property {
  PropertyKind kind = PropertyKind::SumIndec;
  bool inverted = false;
  VincularPattern pat;  // avoid families only; classical stores no adjacency
  bool la = false, ra = false;  // anchors for AvoidVincular

  static Property plain(PropertyKind k);
  static Property avoid(Perm p);
  // Normalizes an unanchored all-dash pattern down to classical avoidance.
  static Property avoid_vincular(VincularPattern vp, bool left_anchor = false,
                                 bool right_anchor = false);

  Property inverse() const;
  // True membership by direct definitional check (the oracle's ground truth).
  bool holds(const Perm& p) const;
  // Membership survives taking blocks of an inflation (needed for branch
  // restriction in system construction).
  bool hereditary() const;

  std::string str() const;
  static Property parse(const std::string& text);

  bool operator==(const Property&) const;
  bool operator<(const Property&) const;
};

// A finite query-complete property set in canonical order: membership of any
// inflation in each member is determined by the children's memberships.
class Universe {
 public:
  Universe() = default;

  // Minimal closure of the requested properties: interval subpatterns for
  // avoidance families, the rise/singleton group for alternating, parity and
  // Dumont auxiliaries, plus SumIndec and SkewIndec always.  With
  // inverse_closed (or any inverted request) the closure also contains the
  // inverse of each member.
  static Universe close(const std::vector<Property>& requested,
                        bool inverse_closed = false);

  int size() const { return static_cast<int>(props_.size()); }
  const std::vector<Property>& properties() const { return props_; }
  const Property& property(int i) const { return props_[i]; }
  int index_of(const Property& p) const;
  bool is_inverse_closed() const;
  std::string str() const;

  bool operator==(const Universe&) const;

 private:
  std::vector<Property> props_;
  std::map<Property, int> index_;
};

// Subset of a universe, as bits in canonical universe order.
using Profile = std::uint64_t;

inline bool profile_has(Profile r, int idx) { return (r >> idx) & 1; }

// Ground-truth profile by direct definitional checks.
Profile profile_of(const Perm& p, const Universe& u);

// {P^-1 : P in R}; requires an inverse-closed universe.
Profile invert_profile(Profile r, const Universe& u);

// "{avoid:132, skew_indec}" with members in string-sorted order.
std::string profile_str(Profile r, const Universe& u);

// Computes the profile of sigma[alpha_1..alpha_m] from the children's
// profiles alone.  Memoized; safe for concurrent use.
class TransferEngine {
 public:
  explicit TransferEngine(Universe u);

  const Universe& universe() const { return u_; }
  Profile transfer(const Perm& sigma, const std::vector<Profile>& children) const;

 private:
  // One way a pattern can embed across an inflation: for each block touched,
  // the universe index of the piece that block must contain.
  using Splitting = std::vector<std::pair<int, int>>;  // (child index, piece index)

  bool eval_property(int pidx, const Perm& sigma,
                     const std::vector<Profile>& children) const;
  bool eval_avoid(const Property& p, const Perm& sigma,
                  const std::vector<Profile>& children) const;
  const std::vector<Splitting>& splittings(int pidx, const Perm& sigma) const;

  bool child_bit(Profile r, PropertyKind k) const;
  int required_index(PropertyKind k) const;

  Universe u_;
  std::vector<int> kind_index_;  // universe index per parameterless kind, -1 if absent

  mutable std::mutex mutex_;
  mutable std::map<std::pair<std::vector<int>, std::vector<Profile>>, Profile> memo_;
  mutable std::map<std::pair<int, std::vector<int>>, std::vector<Splitting>> split_memo_;
};

}  // namespace permclass
