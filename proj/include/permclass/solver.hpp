#pragma once

#include <vector>

#include "permclass/series.hpp"
#include "permclass/system.hpp"

namespace permclass {

// Truncated series solution of an algebraic system: series[i] counts the
// permutations (or involutions) whose profile is exactly profiles[i].
struct Solution {
  int order = 0;
  std::vector<Profile> profiles;
  std::vector<ZSeries> series;

  const ZSeries& for_profile(Profile r) const;  // throws when absent
};

// Substitutes the right-hand sides into themselves starting from zero,
// order+1 times.  For a proper system coefficients 0..k are final after
// k+1 rounds; a final extra round verifies stabilization and throws
// std::runtime_error if anything still moves.  Parameters must be series
// of the same order, one per sys.param_profiles entry.
Solution solve(const AlgebraicSystem& sys, int order,
               const std::vector<ZSeries>& params = {});

// Sum of the unknowns whose profile contains every queried property: the
// counting series of the class members satisfying the query.
ZSeries aggregate(const AlgebraicSystem& sys, const Solution& sol);

struct InvolutionSolution {
  Solution plain;
  Solution invol;
};

// Solves the plain system, feeds each plain unknown evaluated at x^2 in as
// the parameters, then solves the involution system.
InvolutionSolution solve_involutions(const InvolutionSystem& sys, int order);

}  // namespace permclass
