#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace permclass {

// A permutation of {1,...,n} in one-line notation with 1-based positions and
// values.  The default-constructed (empty) permutation is only a building
// intermediate; public operations reject it.
class Perm {
public:
  Perm() = default;
  explicit Perm(std::vector<int> vals);

  static Perm identity(int n);
  static Perm decreasing(int n);

  // Text form: plain digit string up to length 9 ("2413"), comma-separated
  // beyond ("10,2,3,..."). parse/str round-trip bit-exactly.
  static Perm parse(const std::string& text);
  std::string str() const;

  int size() const { return static_cast<int>(vals_.size()); }
  bool empty() const { return vals_.empty(); }
  int operator[](int pos) const { return vals_[pos - 1]; }  // 1-based
  const std::vector<int>& values() const { return vals_; }

  bool operator==(const Perm&) const = default;
  auto operator<=>(const Perm&) const = default;

private:
  std::vector<int> vals_;
};

// Pattern of an arbitrary sequence of distinct integers (rank normalization).
Perm flatten(const std::vector<int>& vals);

Perm inverse(const Perm& p);

// Classical pattern containment: some subsequence of host is order-isomorphic
// to pattern.  Backtracking with value-window pruning.
bool contains(const Perm& pattern, const Perm& host);

// Proper intervals [a,b] (1-based, inclusive): contiguous positions with
// contiguous values and 1 < b-a+1 < n.
std::vector<std::pair<int, int>> proper_intervals(const Perm& p);

// No proper intervals.  Lengths 1 and 2 are simple by convention.
bool is_simple(const Perm& p);

// sigma[alpha_1,...,alpha_m]: replace each entry of the skeleton by a block
// order-isomorphic to the corresponding child.  Children must be nonempty.
Perm inflate(const Perm& skeleton, const std::vector<Perm>& children);

// Substitution decomposition.  Returns (skeleton, children) with
//  - (1, [p]) for singletons,
//  - skeleton 12 with a sum-indecomposable first child,
//  - skeleton 21 with a skew-indecomposable first child,
//  - a unique simple skeleton of length >= 4 otherwise.
std::pair<Perm, std::vector<Perm>> decompose(const Perm& p);

bool is_sum_indecomposable(const Perm& p);
bool is_skew_indecomposable(const Perm& p);

// Finest decomposition p = c_1 (+) c_2 (+) ... (direct sum chain); a sum-
// indecomposable permutation yields the single-element chain.
std::vector<Perm> sum_components(const Perm& p);
std::vector<Perm> skew_components(const Perm& p);

Perm direct_sum(const std::vector<Perm>& parts);
Perm skew_sum(const std::vector<Perm>& parts);

// Decomposition p = 321[a1,a2,a3] with a2 as long as possible (a1 and a3 are
// then skew-indecomposable).  Returns nullopt when the skew chain has exactly
// two parts; throws when p is skew-indecomposable.
std::optional<std::array<Perm, 3>> middle_greedy_321(const Perm& p);

bool is_involution(const Perm& p);
// No entry lies strictly between its two neighbors.
bool is_alternating(const Perm& p);
// Even number of inversions.
bool is_even(const Perm& p);
// Every even entry is immediately followed by a smaller entry; every odd
// entry is followed by a larger entry or is the last entry.
bool is_dumont1(const Perm& p);

std::vector<Perm> all_perms(int n);

}  // namespace permclass
