#pragma once

// Finite abelian groups in invariant-factor form and their characters.

#include <map>
#include <memory>
#include <vector>

#include "nib/cyclotomic.hpp"

namespace nib {

// Z/d_1 x ... x Z/d_m with d_1 | d_2 | ... | d_m, every d_j > 1. Elements are
// exponent tuples, enumerated lexicographically with the last coordinate
// varying fastest, so element 0 is the identity.
class AbelianGroup {
 public:
  AbelianGroup() : AbelianGroup(std::vector<long>{}) {}
  explicit AbelianGroup(std::vector<long> invariant_factors);

  const std::vector<long>& factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  std::size_t order() const { return order_; }
  long exponent() const { return factors_.empty() ? 1 : factors_.back(); }

  std::vector<long> element(std::size_t i) const;
  std::size_t index(const std::vector<long>& tuple) const;  // reduces mod d_j

  std::size_t mul(std::size_t a, std::size_t b) const { return mul_[a * order_ + b]; }
  std::size_t inv(std::size_t a) const { return inv_[a]; }
  std::size_t power(std::size_t a, long k) const;
  long element_order(std::size_t a) const { return orders_[a]; }

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
    return a.factors_ == b.factors_;
  }

 private:
  std::vector<long> factors_;
  std::size_t order_ = 1;
  std::vector<std::size_t> mul_;
  std::vector<std::size_t> inv_;
  std::vector<long> orders_;
};

using GroupPtr = std::shared_ptr<const AbelianGroup>;

// Z^s modulo the column span of a relation matrix, normalized by Smith form.
struct GroupPresentation {
  AbelianGroup group;
  // Generator exponent vector x (length s) -> invariant tuple (to_invariant * x) mod d.
  IntMatrix to_invariant;
  // Invariant tuple a -> some generator exponent vector (from_invariant * a).
  IntMatrix from_invariant;
};
// Throws kInvalidArgument when the presented group is infinite.
GroupPresentation normalize_presentation(const IntMatrix& relations);

struct Character {
  std::vector<long> exponents;  // 0 <= e_j < d_j
  long order = 1;
};

// Characters in the same fixed order as group elements; the trivial one first.
std::vector<Character> dual_group(const AbelianGroup& g);

// chi(g) = zeta_r^e; returns e mod r, r the group exponent.
long character_exponent(const AbelianGroup& g, const Character& chi, std::size_t element);

// A(i, j) = chi_i(g_j) in Q(zeta_r), row-major n x n.
std::vector<CycElt> character_matrix(const AbelianGroup& g);

struct ConjugateRef {
  std::size_t selected;  // index into the character list
  long s = 1;            // chi = chi_selected^s
};

struct Selection {
  std::vector<std::size_t> selected;
  std::map<std::size_t, ConjugateRef> conjugates;
};

// Co-prime power removal: each character not yet covered is selected and its
// co-prime powers are recorded as conjugates.
Selection select_nonconjugate(const AbelianGroup& g, const std::vector<Character>& chars);

// q -> a_q = n_q / phi(q), over every divisor q of |G|.
std::map<long, long> multiplicity_check(const AbelianGroup& g);

// Number of cyclic subgroups of each order (equals multiplicity_check).
std::map<long, long> cyclic_subgroup_counts(const AbelianGroup& g);

// The reordered character system: selected characters occupy slots 0..k-1,
// every other slot i records (k_i, s_i) with sigma_{s_i}(chi_{k_i}) = chi_i.
class CharacterSystem {
 public:
  explicit CharacterSystem(GroupPtr group);

  const AbelianGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  std::size_t size() const { return chars_.size(); }
  std::size_t selected_count() const { return k_; }
  long exponent() const { return group_->exponent(); }

  const Character& character(std::size_t i) const { return chars_[i]; }
  long order(std::size_t i) const { return chars_[i].order; }
  std::size_t original_index(std::size_t i) const { return original_[i]; }
  // For i >= k: slot of the selected character and the automorphism exponent.
  std::size_t conjugate_of(std::size_t i) const { return conj_slot_[i]; }
  long conjugate_exponent(std::size_t i) const { return conj_s_[i]; }

  // chi_i(g_j) as an exponent of zeta_r, and as an exponent of zeta_{q_i}.
  long value_exponent(std::size_t i, std::size_t j) const { return exps_[i * size() + j]; }
  long local_exponent(std::size_t i, std::size_t j) const {
    return value_exponent(i, j) / (exponent() / order(i));
  }
  CycElt value(std::size_t i, std::size_t j) const;

  // Reordered A over Q(zeta_r), row-major.
  std::vector<CycElt> matrix() const;
  // Closed form (A^-1)_{ij} = chi_j(g_i^-1) / n over Q(zeta_r), row-major.
  std::vector<CycElt> inverse_matrix() const;

  // Orders q_1..q_k of the selected characters.
  std::vector<long> selected_orders() const;

 private:
  GroupPtr group_;
  std::vector<Character> chars_;
  std::vector<std::size_t> original_;
  std::size_t k_ = 0;
  std::vector<std::size_t> conj_slot_;
  std::vector<long> conj_s_;
  std::vector<long> exps_;
};

}  // namespace nib
