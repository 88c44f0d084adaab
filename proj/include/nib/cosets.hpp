#pragma once

// Coset representatives of U(ZG) in U(Gamma), Gamma = prod Z[zeta_{q_i}].
//
// L = psi(ZG) is an order of Gamma containing n Gamma, and uL = L exactly for
// units u of L, so the class of a unit u is the lattice uL, which is fixed by
// its image in (Z/n)^N. The Hermite form of that image is the coset key.
// The quotient is abelian, so it is built one generator at a time: with X the
// span of earlier generators and k the least power of g landing in X, the new
// span is the disjoint union of g^j X for 0 <= j < k.

#include <cstdint>
#include <string>
#include <unordered_map>

#include "nib/ideals.hpp"

namespace nib {

// Residues of Gamma modulo n Gamma in coordinates over the power bases.
using Residue = std::vector<std::int64_t>;

class CosetEnumerator {
 public:
  // cap bounds the number of representatives kept.
  CosetEnumerator(SystemPtr sys, std::size_t cap);

  const ProductRing& ring() const { return ring_; }
  std::size_t generator_count() const { return gens_.size(); }
  const ProductElt& generator(std::size_t i) const { return gens_[i]; }

  // Builds representatives until index i exists; false when the span was
  // exhausted (or the cap fired) first.
  bool reach(std::size_t i);
  void close();
  std::size_t size() const { return size_; }
  // Span exhausted, no cap, and the unit generators generate every U(Z[zeta_q]).
  bool complete() const { return closed_ && !capped_ && units_complete_; }
  bool closed() const { return closed_; }
  bool capped() const { return capped_; }

  // (generator, exponent) pairs whose product is representative i; the identity is 0.
  std::vector<std::pair<std::size_t, long>> exponents(std::size_t i) const;
  ProductElt unit(std::size_t i) const;
  Residue unit_residue(std::size_t i) const;
  // Whether u_i * x lies in psi(ZG) for integral x; decided modulo n.
  bool lands_in_image(std::size_t i, const ProductElt& x) const;
  bool lands_in_image(std::size_t i, const Residue& x) const;

  Residue residue(const ProductElt& x) const;
  Residue multiply(const Residue& a, const Residue& b) const;
  std::u16string key(const Residue& r) const;

 private:
  struct Level {
    std::size_t generator;
    std::size_t base;             // representatives below this level
    std::vector<Residue> powers;  // g^0 .. g^(k-1)
  };

  // r * psi(g_element)
  Residue shifted(const Residue& r, std::size_t element) const;
  std::vector<Residue> hermite_rows(std::vector<Residue> gens) const;
  bool in_image(Residue v) const;
  bool known(const Residue& r, std::size_t below) const;
  void remember(std::size_t index, const Residue& r);
  void step();

  SystemPtr sys_;
  ProductRing ring_;
  std::int64_t n_;
  std::size_t cap_;
  std::vector<ProductElt> gens_;
  std::vector<Residue> gen_residues_;
  std::vector<std::vector<long>> image_shifts_;  // zeta exponents of psi(g_j) per component
  std::vector<Residue> image_rows_;              // Hermite rows of L mod n
  std::vector<Level> levels_;
  std::unordered_multimap<std::size_t, std::uint32_t> seen_;  // key hash -> index
  std::size_t size_ = 1;
  std::size_t next_gen_ = 0;  // generator to open once the current level closes
  std::size_t fill_ = 0;      // next slot of the current power's block
  bool level_open_ = false;
  bool closed_ = false;
  bool capped_ = false;
  bool units_complete_ = false;
};

struct CosetRepSet {
  std::vector<ProductElt> units;
  bool complete = false;
  std::size_t generator_count = 0;
};

CosetRepSet coset_representatives(const SystemPtr& sys, std::size_t cap);

}  // namespace nib
