#pragma once

// Q[G] and Z[G] for a finite abelian G, and the map psi into the product of
// cyclotomic fields given by the selected characters.

#include <memory>

#include "nib/abelian.hpp"
#include "nib/number_field.hpp"

namespace nib {

class GroupRingElt {
 public:
  GroupRingElt() = default;
  explicit GroupRingElt(GroupPtr group);  // zero
  GroupRingElt(GroupPtr group, RatVector coeffs);
  static GroupRingElt identity(GroupPtr group);
  static GroupRingElt basis(GroupPtr group, std::size_t element);

  const GroupPtr& group() const { return group_; }
  const RatVector& coeffs() const { return coeffs_; }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  std::size_t size() const { return coeffs_.size(); }
  bool is_integral() const { return nib::is_integral(coeffs_); }
  bool is_zero() const;

  friend GroupRingElt operator+(const GroupRingElt& a, const GroupRingElt& b);
  friend GroupRingElt operator-(const GroupRingElt& a, const GroupRingElt& b);
  friend GroupRingElt operator*(const Rational& c, const GroupRingElt& a);
  friend bool operator==(const GroupRingElt& a, const GroupRingElt& b) {
    return a.coeffs_ == b.coeffs_ && *a.group_ == *b.group_;
  }

 private:
  GroupPtr group_;
  RatVector coeffs_;
};

GroupRingElt gr_mul(const GroupRingElt& a, const GroupRingElt& b);

// e_chi = (1/n) sum chi(g^-1) g, coefficients in Q(zeta_r).
std::vector<CycElt> idempotent(const AbelianGroup& g, const Character& chi);
// Convolution of Q(zeta_r)-valued group ring elements.
std::vector<CycElt> cyc_gr_mul(const AbelianGroup& g, const std::vector<CycElt>& a, const std::vector<CycElt>& b);
// e_chi as an element of Q[G] when chi has order <= 2.
GroupRingElt rational_idempotent(GroupPtr group, const Character& chi);
// Sum of e_chi over the conjugacy class of a selected character; always rational.
GroupRingElt orbit_idempotent(const CharacterSystem& sys, std::size_t selected);

using SystemPtr = std::shared_ptr<const CharacterSystem>;

struct DecomposedElt {
  SystemPtr system;
  std::vector<CycElt> values;  // c_i in Q(zeta_{q_i}), i < k
};

DecomposedElt psi_forward(const GroupRingElt& h, const SystemPtr& sys);
// (c_1..c_n) with c_i = sigma_{s_i}(c_{k_i}) in the conjugate slots.
std::vector<CycElt> psi_extend(const DecomposedElt& c);

struct PsiInverse {
  GroupRingElt h;
  bool is_integral = false;
};
PsiInverse psi_inverse(const DecomposedElt& c);

// Componentwise product in the product of cyclotomic fields.
DecomposedElt operator*(const DecomposedElt& a, const DecomposedElt& b);

// (sum a_g g) x = sum a_g g(x); action element i corresponds to group element i.
FieldElement act(const GroupRingElt& h, const FieldElement& x, const GaloisAction& action);

}  // namespace nib
