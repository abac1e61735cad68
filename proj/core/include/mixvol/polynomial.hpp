#pragma once

// Exact univariate polynomials with rational coefficients and non-negative
// rational exponents. The one non-trivial device: substituting
// m = (1+x)^L turns an "f(m) >= 0 for all m >= 1" claim with L-th-root
// exponents into a coefficient-sign check on an honest integer-exponent
// polynomial.

#include "mixvol/index.hpp"

#include <map>
#include <string>

namespace mixvol {

class SparsePolynomial {
 public:
  SparsePolynomial() = default;
  static SparsePolynomial constant(Rat c);
  static SparsePolynomial monomial(Rat coeff, Rat exponent);

  const std::map<Rat, Rat>& terms() const { return terms_; }  // exponent -> coefficient
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Rat& exponent, const Rat& coeff);
  SparsePolynomial operator+(const SparsePolynomial& o) const;
  SparsePolynomial operator-(const SparsePolynomial& o) const;
  SparsePolynomial operator*(const SparsePolynomial& o) const;
  bool operator==(const SparsePolynomial& o) const = default;

  bool integer_exponents() const;
  // All stored coefficients >= 0; requires integer exponents.
  bool nonneg_coefficients() const;

  // Smallest positive integer L with L * exponent integral for every term.
  long exponent_denominator_lcm() const;

  // The polynomial q(x) = p((1+x)^L); every exponent times L must be a
  // non-negative integer.
  SparsePolynomial substitute_shift_power(long L) const;

  // Exact evaluation at m = base^L (covers fractional exponents whose
  // denominators divide L).
  Rat eval_at_power(const Rat& base, long L) const;

  std::string to_string() const;  // "m^3 + 6 m^2 + 12 m + 8"

 private:
  std::map<Rat, Rat> terms_;
};

// The volume-of-a-partial-sum objective read off a logarithmic
// configuration v over Delta_{d,d}: the polynomial
//   sum over p supported on the first ell coordinates of
//   multinomial(p) * m^{v(p)}.
SparsePolynomial eval_objective(const Configuration& log_config, int ell);

// Certified comparison: true when (f - g)((1+x)^L) has only non-negative
// coefficients for L clearing all exponent denominators, which proves
// f(m) >= g(m) for every m >= 1.
bool certified_ge(const SparsePolynomial& f, const SparsePolynomial& g);

// The member objective certified >= every other member for m >= 1;
// throws (with sampled values, for diagnosis) if no member dominates.
// Members are typically the vertex orbit of a symmetry class.
struct OrbitMax {
  SparsePolynomial poly;
  int winner;  // index into the member list
};
OrbitMax orbit_max_objective(const std::vector<Configuration>& members, int ell);

}  // namespace mixvol
