#pragma once

#include <optional>
#include <string>
#include <vector>

#include "permclass/polynomial.hpp"
#include "permclass/series.hpp"
#include "permclass/solver.hpp"
#include "permclass/system.hpp"

namespace permclass {

// Integer polynomial q(x, f) with q(x, f(x)) = 0, primitive and normalized
// so the graded-lex leading coefficient is positive.  Variable 0 is x,
// variable 1 is the series.
struct AnnihilatorPoly {
  Poly poly{2};

  int degree_f() const { return poly.degree(1); }
  int degree_x() const { return poly.degree(0); }
  // Grouped by falling powers of the series symbol, multi-term coefficients
  // parenthesized: "f^2 + (x - 1)*f + x".
  std::string str(const std::string& fname = "f") const;
  bool operator==(const AnnihilatorPoly&) const = default;
};

// Builds the canonical form: strips integer and monomial content and fixes
// the sign.  Throws on the zero polynomial.
AnnihilatorPoly make_annihilator(const Poly& bivariate);

// Checks q(x, f) == 0 through the series order.  Requires enough spare
// coefficients beyond the coefficient count of q to make the check
// meaningful; throws std::invalid_argument otherwise.
bool verify_annihilator(const AnnihilatorPoly& q, const ZSeries& f,
                        int margin = 10);

// Cascade of subresultant eliminations over the defining polynomials
// g_i - rhs_i, reducing to one bivariate relation for the aggregate (or a
// single unknown), then a minimal-degree search: exact-nullspace candidates
// are accepted only when they divide the verified eliminant and annihilate
// the series.  Returns nullopt when the cascade degenerates or blows past
// the degree cap; counting results stay valid without an equation.
std::optional<AnnihilatorPoly> eliminate_aggregate(const AlgebraicSystem& sys,
                                                   const Solution& sol);
std::optional<AnnihilatorPoly> eliminate_unknown(const AlgebraicSystem& sys,
                                                 const Solution& sol,
                                                 int unknown_index);

struct InvolutionElimination {
  // Relation in (x, p_j) for each parameter, from the plain system with
  // x -> x^2 applied; entries may be absent independently.
  std::vector<std::optional<AnnihilatorPoly>> params;
  std::optional<AnnihilatorPoly> aggregate;
};

InvolutionElimination eliminate_involutions(const InvolutionSystem& sys,
                                            const InvolutionSolution& sol);

}  // namespace permclass
