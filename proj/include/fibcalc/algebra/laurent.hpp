#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "fibcalc/algebra/checked.hpp"
#include "fibcalc/algebra/int_matrix.hpp"

namespace fibcalc {

// Univariate Laurent polynomial over Z. No zero coefficients are stored; the
// empty map is 0.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(Int constant);
  static LaurentPoly monomial(Int coeff, Int exponent);
  static LaurentPoly t() { return monomial(1, 1); }
  // Coefficients of t^0, t^1, ...
  static LaurentPoly from_coefficients(const std::vector<Int>& coeffs, Int lowest_exponent = 0);

  const std::map<Int, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Int coefficient(Int exponent) const;
  Int min_exponent() const;
  Int max_exponent() const;
  // Span of exponents, -1 for the zero polynomial.
  Int width() const;
  Int leading_coefficient() const;

  // Coefficients from min_exponent to max_exponent inclusive.
  std::vector<Int> dense_coefficients() const;

  LaurentPoly operator+(const LaurentPoly& rhs) const;
  LaurentPoly operator-(const LaurentPoly& rhs) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& rhs) const;
  LaurentPoly& operator+=(const LaurentPoly& rhs) { return *this = *this + rhs; }
  LaurentPoly& operator-=(const LaurentPoly& rhs) { return *this = *this - rhs; }
  LaurentPoly& operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

  LaurentPoly shift(Int k) const;
  // p(t^{-1}).
  LaurentPoly reversed() const;
  Int evaluate_at_one() const;
  Int content() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void add_term(Int exponent, Int coeff);
  std::map<Int, Int> terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);
std::string to_string(const LaurentPoly& p);

// Exact division in Z[t, t^-1]; throws PreconditionError when b does not divide a.
LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b);

// gcd in Z[t, t^-1], unit-normalized (see normalize_alexander). gcd(0, 0) = 0.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

// Multiply by the unit +-t^k so that the lowest term is t^0 with a positive
// coefficient. Throws PreconditionError on 0.
LaurentPoly normalize_alexander(const LaurentPoly& p);

// Equality up to units +-t^k.
bool equal_up_to_units(const LaurentPoly& a, const LaurentPoly& b);

using LaurentMatrix = std::vector<std::vector<LaurentPoly>>;

// Fraction-free (Bareiss) determinant over Z[t, t^-1].
LaurentPoly determinant(LaurentMatrix m);

// det(tI - A).
LaurentPoly char_poly(const IntMatrix& a);

}  // namespace fibcalc
