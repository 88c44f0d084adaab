#pragma once

// The number field Q[x]/(m) of a monic integer polynomial, elements in
// coordinates over the power basis 1, alpha, ..., alpha^(n-1).

#include "nib/exact.hpp"
#include "nib/polynomial.hpp"

namespace nib {

struct FieldElement {
  RatVector coords;
  friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

class NumberField {
 public:
  explicit NumberField(IntVector minpoly);

  std::size_t degree() const { return n_; }
  const IntVector& minpoly() const { return minpoly_; }
  const Polynomial& modulus() const { return modulus_; }

  FieldElement zero() const { return {RatVector(n_)}; }
  FieldElement one() const;
  FieldElement generator() const;  // alpha
  FieldElement from_rational(const Rational& c) const;
  // p(alpha)
  FieldElement from_polynomial(const Polynomial& p) const;
  Polynomial to_polynomial(const FieldElement& x) const { return Polynomial(x.coords); }

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement scale(const Rational& c, const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  Rational trace(const FieldElement& a) const;
  RatMatrix multiplication_matrix(const FieldElement& a) const;
  // Characteristic polynomial of multiplication by a.
  Polynomial charpoly(const FieldElement& a) const;

 private:
  std::size_t n_;
  IntVector minpoly_;
  Polynomial modulus_;
  std::vector<IntVector> powers_;  // alpha^k reduced, 0 <= k <= 2n-2
  std::vector<Integer> traces_;    // Tr(alpha^k), 0 <= k < n
};

// The Galois action as matrices: column k of matrix g is g(alpha^k).
class GaloisAction {
 public:
  GaloisAction() = default;
  // polys[i] describes g_i(alpha) = polys[i](alpha).
  GaloisAction(const NumberField& field, const std::vector<Polynomial>& polys);

  std::size_t size() const { return matrices_.size(); }
  const RatMatrix& matrix(std::size_t i) const { return matrices_[i]; }
  const Polynomial& polynomial(std::size_t i) const { return polys_[i]; }
  FieldElement apply(std::size_t i, const FieldElement& x) const;

 private:
  std::vector<Polynomial> polys_;
  std::vector<RatMatrix> matrices_;
};

}  // namespace nib
