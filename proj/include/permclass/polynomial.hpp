#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "permclass/series.hpp"

namespace permclass {

// Exponent vector over a fixed set of variables.
using Mono = std::vector<int>;

// Sparse multivariate polynomial with integer coefficients over variables
// 0..nvars-1.  Terms live in a map ordered lexicographically by exponent
// vector (a multiplicative order, so the leading term of a product is the
// product of leading terms); zero coefficients are never stored.
class Poly {
 public:
  explicit Poly(int nvars) : nvars_(nvars) {}

  static Poly constant(const mpz_class& c, int nvars);
  static Poly var(int v, int nvars);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const std::map<Mono, mpz_class>& terms() const { return terms_; }

  void add_term(Mono m, const mpz_class& c);

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const mpz_class& k) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  bool operator==(const Poly&) const = default;

  // Highest exponent of v (-1 for the zero polynomial).
  int degree(int v) const;
  int total_degree() const;  // -1 for the zero polynomial

  // Coefficient of v^k, a polynomial with the v-exponent zeroed out.
  Poly coeff_of(int v, int k) const;
  Poly leading_coeff(int v) const { return coeff_of(v, degree(v)); }

  Poly derivative(int v) const;

  // gcd of all coefficients (0 for the zero polynomial, else positive).
  mpz_class integer_content() const;
  // Componentwise minimum exponent over all terms.
  Mono monomial_content() const;
  Poly divide_by_monomial(const Mono& m) const;

  // Exact multivariate division; throws std::domain_error when not exact.
  Poly divide_exact(const Poly& d) const;

  // Substitute a series for every variable (all at one order) and truncate.
  ZSeries eval(const std::vector<ZSeries>& values) const;

  std::string str(const std::vector<std::string>& names) const;

 private:
  int nvars_ = 0;
  std::map<Mono, mpz_class> terms_;
};

Poly pow(Poly base, int e);

// Pseudo-remainder of a by lc_v(b)^(deg_v(a)-deg_v(b)+1)-scaled division:
// the unique R with lc_v(b)^(da-db+1) * a = Q*b + R and deg_v(R) < deg_v(b).
Poly prem(const Poly& a, const Poly& b, int v);

// Last nonzero member of the subresultant pseudo-remainder chain of a and b
// with respect to v.  Degree 0 in v means a v-free ideal-style eliminant; a
// positive v-degree means the resultant vanishes (common factor in v).
Poly subresultant_last(Poly a, Poly b, int v);

// Greatest common divisor of polynomials that are univariate in variable v
// (all other exponents zero), primitive and with positive leading coefficient.
Poly gcd_univariate(Poly a, Poly b, int v);

// Squarefree part with respect to main variable vmain of a polynomial whose
// coefficients involve only variable vcoeff (bivariate case).
Poly squarefree_part_bivariate(const Poly& p, int vmain, int vcoeff);

}  // namespace permclass
