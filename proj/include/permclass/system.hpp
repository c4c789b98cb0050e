#pragma once

#include <string>
#include <vector>

#include "permclass/perm.hpp"
#include "permclass/polynomial.hpp"
#include "permclass/property.hpp"

namespace permclass {

// Polynomial system g_R = RHS_R(x, g_*) with one unknown generating function
// per reachable profile R; counts permutations whose profile is exactly R.
// Involution systems additionally carry parameter series p_j (the plain
// unknowns evaluated at x^2, supplied by the solver).  Variable layout in
// every RHS polynomial: 0 = x, then params, then unknowns.
struct AlgebraicSystem {
  Universe universe;
  std::vector<Perm> simples;  // skeletons used (without the singleton)
  Profile start = 0;          // profile of the singleton permutation
  Profile query_mask = 0;     // the counted set is {R : R contains the query}
  std::vector<Profile> unknowns;  // ascending
  std::vector<Poly> rhs;
  int params = 0;
  std::vector<Profile> param_profiles;

  int var_x() const { return 0; }
  int var_param(int j) const { return 1 + j; }
  int var_unknown(int i) const { return 1 + params + i; }
  int num_vars() const { return 1 + params + static_cast<int>(unknowns.size()); }
  int index_of_unknown(Profile r) const;  // -1 when absent

  std::string str() const;  // one equation per line, deterministic order
};

// Builds the system for the class whose simple permutations are given:
// sum and skew decompositions feed through 12 and 21, longer simples through
// their inflation tuples.  Unknowns are the profiles reachable from the
// singleton that contain every hereditary query property; restricting to
// that branch is sound because hereditary properties pass to all blocks.
AlgebraicSystem build_system(const std::vector<Perm>& simples,
                             const Universe& universe,
                             const std::vector<Property>& query);

// Involution counterpart.  h_R counts involutions with profile R; skew
// chains pair their outer parts (contributing p factors), the middle part
// recurses, and longer simple skeletons contribute only when they are
// involutions themselves, pairing blocks across their 2-cycles.
struct InvolutionSystem {
  AlgebraicSystem plain;  // parameters: p_j = (plain unknown j)(x^2)
  AlgebraicSystem invol;
};

// Requires an inverse-closed universe.  Only the inverse-closed core of the
// simple set participates: an involution's blocks come in inverse pairs, so
// they live in the intersection of the class with its inverse.
InvolutionSystem build_involution_system(const std::vector<Perm>& simples,
                                         const Universe& universe,
                                         const std::vector<Property>& query);

// Zero constant term, and every monomial that is linear in the unknowns
// carries an x or parameter factor: coefficients 0..n of every unknown are
// then fixed after n+1 substitution rounds.
bool is_proper(const AlgebraicSystem& sys);

}  // namespace permclass
