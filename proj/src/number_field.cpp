#include "nib/number_field.hpp"

namespace nib {

NumberField::NumberField(IntVector minpoly) : minpoly_(std::move(minpoly)) {
  if (minpoly_.size() < 2) throw Error(ErrorCode::kInvalidInput, "minimal polynomial must have degree >= 1");
  if (minpoly_.back() != 1) throw Error(ErrorCode::kInvalidInput, "minimal polynomial must be monic");
  n_ = minpoly_.size() - 1;
  modulus_ = Polynomial::from_integers(minpoly_);
  powers_.assign(2 * n_ - 1, IntVector(n_));
  powers_[0][0] = 1;
  for (std::size_t k = 1; k < powers_.size(); ++k) {
    const IntVector& prev = powers_[k - 1];
    IntVector& cur = powers_[k];
    Integer top = prev[n_ - 1];
    for (std::size_t i = n_ - 1; i > 0; --i) cur[i] = prev[i - 1];
    cur[0] = 0;
    for (std::size_t i = 0; i < n_; ++i) cur[i] -= top * minpoly_[i];
  }
  traces_.assign(n_, 0);
  for (std::size_t k = 0; k < n_; ++k)
    for (std::size_t i = 0; i < n_; ++i) traces_[k] += powers_[i + k][i];
}

FieldElement NumberField::one() const { return from_rational(1); }

FieldElement NumberField::generator() const { return from_polynomial(Polynomial::x()); }

FieldElement NumberField::from_rational(const Rational& c) const {
  FieldElement x = zero();
  x.coords[0] = c;
  return x;
}

FieldElement NumberField::from_polynomial(const Polynomial& p) const {
  Polynomial r = p % modulus_;
  FieldElement x = zero();
  for (std::size_t i = 0; i < n_; ++i) x.coords[i] = r.coeff(i);
  return x;
}

FieldElement NumberField::add(const FieldElement& a, const FieldElement& b) const {
  FieldElement r = a;
  for (std::size_t i = 0; i < n_; ++i) r.coords[i] += b.coords[i];
  return r;
}

FieldElement NumberField::scale(const Rational& c, const FieldElement& a) const {
  FieldElement r = a;
  for (auto& x : r.coords) x *= c;
  return r;
}

FieldElement NumberField::mul(const FieldElement& a, const FieldElement& b) const {
  RatVector acc(2 * n_ - 1);
  for (std::size_t i = 0; i < n_; ++i) {
    if (a.coords[i] == 0) continue;
    for (std::size_t j = 0; j < n_; ++j)
      if (b.coords[j] != 0) acc[i + j] += a.coords[i] * b.coords[j];
  }
  FieldElement r = zero();
  for (std::size_t k = 0; k < acc.size(); ++k) {
    if (acc[k] == 0) continue;
    if (k < n_) {
      r.coords[k] += acc[k];
      continue;
    }
    for (std::size_t i = 0; i < n_; ++i)
      if (powers_[k][i] != 0) r.coords[i] += acc[k] * powers_[k][i];
  }
  return r;
}

Rational NumberField::trace(const FieldElement& a) const {
  Rational t = 0;
  for (std::size_t i = 0; i < n_; ++i)
    if (a.coords[i] != 0) t += a.coords[i] * traces_[i];
  return t;
}

RatMatrix NumberField::multiplication_matrix(const FieldElement& a) const {
  RatMatrix m(n_, n_);
  FieldElement col = a;
  const FieldElement alpha = generator();
  for (std::size_t j = 0; j < n_; ++j) {
    m.set_column(j, col.coords);
    if (j + 1 < n_) col = mul(col, alpha);
  }
  return m;
}

Polynomial NumberField::charpoly(const FieldElement& a) const {
  return Polynomial(nib::charpoly(multiplication_matrix(a)));
}

GaloisAction::GaloisAction(const NumberField& field, const std::vector<Polynomial>& polys) : polys_(polys) {
  const std::size_t n = field.degree();
  for (const Polynomial& p : polys_) {
    RatMatrix m(n, n);
    FieldElement img = field.from_polynomial(p);
    FieldElement pw = field.one();
    for (std::size_t k = 0; k < n; ++k) {
      m.set_column(k, pw.coords);
      if (k + 1 < n) pw = field.mul(pw, img);
    }
    matrices_.push_back(std::move(m));
  }
}

FieldElement GaloisAction::apply(std::size_t i, const FieldElement& x) const {
  return {matrices_.at(i) * x.coords};
}

}  // namespace nib
