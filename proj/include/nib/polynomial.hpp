#pragma once

#include <utility>

#include "nib/exact.hpp"

namespace nib {

// Univariate polynomial over Q, ascending coefficients, no trailing zeros.
// The zero polynomial has an empty coefficient list.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RatVector coeffs);
  static Polynomial from_integers(const IntVector& coeffs);
  static Polynomial monomial(const Rational& c, std::size_t degree);
  static Polynomial x() { return monomial(1, 1); }

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const RatVector& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
  }
  Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

  Polynomial monic() const;
  Polynomial derivative() const;
  Rational evaluate(const Rational& x) const;
  bool has_integer_coeffs() const;
  IntVector integer_coeffs() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // Quotient and remainder; throws kDivisionByZero for a zero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
  Polynomial operator%(const Polynomial& divisor) const { return divmod(divisor).second; }

  // p(q(x)) mod m.
  Polynomial compose_mod(const Polynomial& inner, const Polynomial& modulus) const;

 private:
  void trim();
  RatVector coeffs_;
};

// Monic gcd (zero if both are zero).
Polynomial gcd(Polynomial a, Polynomial b);

// Returns s with s * a == 1 mod m. Throws kDivisionByZero when a is not
// invertible modulo m.
Polynomial inverse_mod(const Polynomial& a, const Polynomial& m);

// p / gcd(p, p'), monic.
Polynomial squarefree_part(const Polynomial& p);

std::string to_string(const Polynomial& p);

}  // namespace nib
