#pragma once

// Arithmetic in Q(zeta_q) and Z[zeta_q] over the power basis
// 1, zeta, ..., zeta^(phi(q)-1).

#include <memory>

#include "nib/exact.hpp"
#include "nib/polynomial.hpp"

namespace nib {

long euler_phi(long n);
long mobius(long n);
std::vector<long> divisors(long n);
std::vector<long> prime_factors(long n);
long gcd_long(long a, long b);
long lcm_long(long a, long b);
bool is_squarefree(long n);

// Phi_q via x^q - 1 divided by Phi_d for all proper divisors d.
Polynomial cyclotomic_polynomial(long q);

class CycField {
 public:
  // Shared, immutable instance per order.
  static std::shared_ptr<const CycField> get(long q);

  long order() const { return q_; }
  std::size_t degree() const { return degree_; }
  const Polynomial& modulus() const { return phi_; }

  // Power-basis coordinates of zeta^j, 0 <= j < q.
  const std::vector<long>& power(long j) const { return powers_[mod(j)]; }
  // Tr(zeta^j), read off the multiplication matrix of zeta^j.
  long trace_of_power(long j) const { return traces_[mod(j)]; }

  long mod(long j) const {
    long r = j % q_;
    return r < 0 ? r + q_ : r;
  }

  // Exact T2 Gram matrix, entry (a, b) = Tr(zeta^a * conj(zeta^b)).
  const IntMatrix& t2_gram() const { return t2_; }

  explicit CycField(long q);

 private:
  long q_;
  std::size_t degree_;
  Polynomial phi_;
  std::vector<std::vector<long>> powers_;
  std::vector<long> traces_;
  IntMatrix t2_;
};

using CycFieldPtr = std::shared_ptr<const CycField>;

class CycElt {
 public:
  CycElt() = default;
  explicit CycElt(CycFieldPtr field);  // zero
  CycElt(CycFieldPtr field, RatVector coords);
  static CycElt from_rational(CycFieldPtr field, const Rational& c);
  static CycElt from_integers(CycFieldPtr field, const IntVector& coords);
  static CycElt zeta_power(CycFieldPtr field, long j);
  // sum_j acc[j] zeta^j for an accumulator of length q.
  static CycElt from_zeta_powers(CycFieldPtr field, const RatVector& acc);

  const CycFieldPtr& field() const { return field_; }
  long order() const { return field_->order(); }
  const RatVector& coords() const { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }

  bool is_zero() const;
  bool is_integral() const { return nib::is_integral(coords_); }
  bool is_rational() const;  // lies in Q
  IntVector integer_coords() const { return to_integer(coords_); }

  CycElt operator-() const;
  friend CycElt operator+(const CycElt& a, const CycElt& b);
  friend CycElt operator-(const CycElt& a, const CycElt& b);
  friend CycElt operator*(const CycElt& a, const CycElt& b);
  friend CycElt operator*(const Rational& c, const CycElt& a);
  CycElt& operator+=(const CycElt& b);
  friend bool operator==(const CycElt& a, const CycElt& b);

  // a * zeta^j without a full product.
  CycElt mul_zeta_power(long j) const;

 private:
  CycFieldPtr field_;
  RatVector coords_;
};

// Throws kDivisionByZero for zero input.
CycElt inv(const CycElt& a);
// sigma_s: zeta -> zeta^s. Throws kInvalidArgument when gcd(s, q) != 1.
CycElt automorphism(long s, const CycElt& a);
// Complex conjugation sigma_{q-1} (identity for q <= 2).
CycElt conj(const CycElt& a);
RatMatrix multiplication_matrix(const CycElt& a);
Rational norm(const CycElt& a);
Rational trace(const CycElt& a);
RatMatrix t2_gram(long q);

// Q(zeta_q) -> Q(zeta_r), zeta_q -> zeta_r^(r/q). Requires q | r.
CycElt embed(const CycElt& a, long r);
// Inverse of embed; throws kInvalidArgument when a is not in the subfield.
CycElt restrict_to(const CycElt& a, long q);

std::string to_string(const CycElt& a);

}  // namespace nib
