#pragma once

// Ideals and units of Z[zeta_q], the product ring Gamma = prod Z[zeta_{q_i}],
// and the index bound for U(Gamma) over U(ZG).

#include <optional>

#include "nib/group_ring.hpp"

namespace nib {

// Orders q for which Z[zeta_q] has class number one.
const std::vector<long>& supported_orders();
bool is_supported_order(long q);

class CycIdeal {
 public:
  // basis: phi(q) x phi(q) column HNF of a full-rank lattice.
  CycIdeal(CycFieldPtr field, IntMatrix basis);

  const CycFieldPtr& field() const { return field_; }
  long order() const { return field_->order(); }
  const IntMatrix& basis() const { return basis_; }
  const Integer& norm() const { return norm_; }
  bool contains(const CycElt& x) const;
  // Largest integer c with J contained in c Z[zeta].
  Integer content() const;
  // Every basis vector times zeta stays in the lattice.
  bool is_zeta_stable() const;

  friend bool operator==(const CycIdeal& a, const CycIdeal& b) {
    return a.order() == b.order() && a.basis_ == b.basis_;
  }

 private:
  CycFieldPtr field_;
  IntMatrix basis_;
  Integer norm_;
};

// Throws kZeroIdeal when every generator is zero.
CycIdeal ideal_from_generators(const std::vector<CycElt>& gens);
// The principal ideal x Z[zeta].
inline CycIdeal principal_ideal(const CycElt& x) { return ideal_from_generators({x}); }

struct GeneratorSearch {
  Rational slack{3, 2};
  int max_doublings = 10;
  std::size_t node_cap = 5'000'000;  // enumeration tree nodes per ideal
};

// A generator of J, certified by |norm| = N(J) and membership. Throws
// kUnsupportedField outside the class-number-one list and kResourceLimit when
// the enumeration budget runs out.
CycElt find_generator(const CycIdeal& J, const GeneratorSearch& cfg = {});

// Torsion generators (-1, zeta_q) and, for every divisor m > 1 of q,
// cyclotomic units built from zeta_m: (1 - zeta_m^a)/(1 - zeta_m) when m is a
// prime power, 1 - zeta_m^a otherwise, with 1 <= a < m/2 coprime to m.
std::vector<CycElt> unit_generators(long q);
// True when the cyclotomic units above have index one in the full unit group
// (class number one and at most three distinct primes in the conductor).
bool unit_generators_complete(long q);
bool is_unit(const CycElt& x);

struct ProductElt {
  std::vector<CycElt> components;
  friend bool operator==(const ProductElt&, const ProductElt&) = default;
};

class ProductRing {
 public:
  ProductRing() = default;
  explicit ProductRing(std::vector<long> orders);
  explicit ProductRing(const CharacterSystem& sys) : ProductRing(sys.selected_orders()) {}

  const std::vector<long>& orders() const { return orders_; }
  std::size_t size() const { return orders_.size(); }
  // Total Z-rank, the sum of phi(q_i).
  std::size_t rank() const { return rank_; }
  std::size_t offset(std::size_t i) const { return offsets_[i]; }

  ProductElt one() const;
  // v in slot i, identity elsewhere.
  ProductElt embed_component(std::size_t i, const CycElt& v) const;

 private:
  std::vector<long> orders_;
  std::vector<std::size_t> offsets_;
  std::size_t rank_ = 0;
};

ProductElt mul(const ProductElt& a, const ProductElt& b);
ProductElt inv(const ProductElt& a);
bool is_unit(const ProductElt& a);
inline DecomposedElt as_decomposed(const ProductElt& a, const SystemPtr& sys) { return {sys, a.components}; }

// Both psi^-1(a/b) and psi^-1(b/a) integral. Throws kNotUnit for non-units.
bool congruent_mod_unitZG(const ProductElt& a, const ProductElt& b, const SystemPtr& sys);

// ceil(n^n / prod_{q | n} (q^phi(q) / prod_{p | q} p^(phi(q)/(p-1)))^(a_q)).
Integer index_bound(const AbelianGroup& g);

}  // namespace nib
