#include "permclass/solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace permclass {

const ZSeries& Solution::for_profile(Profile r) const {
  auto it = std::lower_bound(profiles.begin(), profiles.end(), r);
  if (it == profiles.end() || *it != r) {
    throw std::invalid_argument("profile not present in solution");
  }
  return series[it - profiles.begin()];
}

Solution solve(const AlgebraicSystem& sys, int order,
               const std::vector<ZSeries>& params) {
  if (order < 0) throw std::invalid_argument("order must be >= 0");
  if (static_cast<int>(params.size()) != sys.params) {
    throw std::invalid_argument("parameter count mismatch");
  }
  for (const ZSeries& p : params) {
    if (p.order() != order) {
      throw std::invalid_argument("parameter order mismatch");
    }
  }

  const int n = static_cast<int>(sys.unknowns.size());
  std::vector<ZSeries> vals(sys.num_vars(), ZSeries(order));
  vals[sys.var_x()] = ZSeries::x(order);
  for (int j = 0; j < sys.params; ++j) vals[sys.var_param(j)] = params[j];

  auto step = [&]() {
    std::vector<ZSeries> next(n, ZSeries(order));
    for (int i = 0; i < n; ++i) next[i] = sys.rhs[i].eval(vals);
    for (int i = 0; i < n; ++i) vals[sys.var_unknown(i)] = std::move(next[i]);
  };
  for (int round = 0; round <= order; ++round) step();

  Solution sol;
  sol.order = order;
  sol.profiles = sys.unknowns;
  sol.series.assign(vals.begin() + 1 + sys.params, vals.end());

  // One more substitution must be a no-op; otherwise the contraction that
  // properness promises does not hold and the series are unreliable.
  step();
  for (int i = 0; i < n; ++i) {
    if (vals[sys.var_unknown(i)] != sol.series[i]) {
      throw std::runtime_error(
          "series iteration did not stabilize; the system is not proper");
    }
  }
  return sol;
}

ZSeries aggregate(const AlgebraicSystem& sys, const Solution& sol) {
  if (sol.profiles != sys.unknowns) {
    throw std::invalid_argument("solution does not belong to this system");
  }
  ZSeries f(sol.order);
  for (size_t i = 0; i < sys.unknowns.size(); ++i) {
    if ((sys.unknowns[i] & sys.query_mask) == sys.query_mask) {
      f += sol.series[i];
    }
  }
  return f;
}

InvolutionSolution solve_involutions(const InvolutionSystem& sys, int order) {
  InvolutionSolution out;
  out.plain = solve(sys.plain, order);
  std::vector<ZSeries> params(sys.invol.params, ZSeries(order));
  for (int j = 0; j < sys.invol.params; ++j) {
    const ZSeries& g = out.plain.series[j];
    for (int k = 0; 2 * k <= order; ++k) params[j][2 * k] = g[k];
  }
  out.invol = solve(sys.invol, order, params);
  return out;
}

}  // namespace permclass
