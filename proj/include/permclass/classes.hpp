#pragma once

#include <string>
#include <vector>

#include "permclass/perm.hpp"

namespace permclass {

enum class ClassMode {
  PatternClass,    // basis lists forbidden patterns
  WreathClosure,   // basis lists the allowed simple permutations
};

struct ClassSpec {
  std::vector<Perm> basis;
  std::vector<std::string> side_conditions;
  ClassMode mode = ClassMode::PatternClass;
  int max_simple_length = 12;
  int max_oracle_length = 9;
};

// Containment-minimal elements of the input, deduplicated and sorted by
// length then lexicographically.  Dropped elements (redundant patterns that
// contain another basis element) are reported through *dropped when given.
std::vector<Perm> minimal_antichain(std::vector<Perm> basis,
                                    std::vector<Perm>* dropped = nullptr);

// All length-n permutations avoiding every basis pattern, by prefix search
// with containment pruning; lexicographic order.
std::vector<Perm> avoiders(const std::vector<Perm>& basis, int n);
long long oracle_count(const std::vector<Perm>& basis, int n);

struct SimpleEnumeration {
  std::vector<Perm> simples;  // by length, then lexicographically
  bool complete;  // no simple permutation beyond those listed can exist
};

// Simple permutations of Av(basis) up to max_length.  Each simple of length
// n >= 4 contains a simple of length n-1 or n-2, so levels are generated by
// one- and two-point insertions; two consecutive empty levels at lengths
// >= 4 certify completeness.
SimpleEnumeration enumerate_simples(const std::vector<Perm>& basis,
                                    int max_length);

// Every basis element is simple (so the class equals the substitution
// closure of its simple permutations).
bool is_wreath_closed(const std::vector<Perm>& basis);

// Pattern basis of the substitution closure generated by the given simple
// permutations: the containment-minimal simple non-members.  Their length is
// at most the longest generator plus two; the search is capped at length 9.
std::vector<Perm> wreath_closure_basis(const std::vector<Perm>& simples);

}  // namespace permclass
