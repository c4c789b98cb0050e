#pragma once

#include <string>
#include <vector>

#include "permclass/perm.hpp"

namespace permclass {

// Vincular (blocked) pattern: entries i and i+1 with i in `adjacency` must be
// matched to adjacent host positions.  Text form uses dashes between blocks:
// "3-12" is the pattern 312 whose last two entries must be adjacent; an
// all-dashes form ("3-1-2") is a classical pattern, a dash-free form ("312")
// requires one consecutive run.  Comma-separated entries are used inside
// blocks beyond length 9 ("10,2,3,4,5,6,7,8,9-1").
struct VincularPattern {
  Perm perm;
  std::vector<char> adjacency;  // size n-1; adjacency[i-1] == entries i,i+1 glued

  VincularPattern() = default;
  VincularPattern(Perm p, std::vector<char> adj);
  static VincularPattern classical(Perm p);

  static VincularPattern parse(const std::string& text);
  std::string str() const;

  bool is_classical() const;
  bool adjacent(int i) const { return adjacency[i - 1] != 0; }  // entries i, i+1
  bool operator==(const VincularPattern&) const = default;
  auto operator<=>(const VincularPattern&) const = default;
};

// Copy of the pattern in the host respecting adjacency; anchors additionally
// pin the copy's first entry to host position 1 / last entry to position n.
bool contains_vincular_anchored(const VincularPattern& pat, bool left_anchor,
                                bool right_anchor, const Perm& host);
bool contains_vincular(const VincularPattern& pat, const Perm& host);

// Barred pattern: the host avoids it when every copy of the reduct (the
// flattened non-barred entries) extends to a copy of the full pattern.  Text
// form bars a digit with brackets ("[3]12"); comma form uses a "!" suffix
// ("3!,1,2").  The barred set must be a nonempty proper subset of positions.
struct BarredPattern {
  Perm full;
  std::vector<char> barred;  // per position

  BarredPattern() = default;
  BarredPattern(Perm p, std::vector<char> bars);

  static BarredPattern parse(const std::string& text);
  std::string str() const;

  Perm reduct() const;
  bool operator==(const BarredPattern&) const = default;
};

bool avoids_barred(const BarredPattern& pat, const Perm& host);

}  // namespace permclass
