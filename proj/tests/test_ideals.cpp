#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <map>
#include <numeric>
#include <random>

#include "nib/ideals.hpp"
#include "properties.hpp"

using namespace nib;

namespace {

CycElt from_ints(long q, std::vector<long> c) {
  IntVector v;
  for (long x : c) v.push_back(x);
  return CycElt::from_integers(CycField::get(q), v);
}

}  // namespace

TEST(Ideals, FromGeneratorsExamples) {
  CycIdeal a = principal_ideal(from_ints(4, {1, 1}));
  EXPECT_EQ(a.norm(), 2);
  EXPECT_TRUE(a.contains(from_ints(4, {1, 1})));
  EXPECT_TRUE(a.contains(from_ints(4, {2, 0})));
  EXPECT_FALSE(a.contains(from_ints(4, {1, 0})));

  CycIdeal b = ideal_from_generators({from_ints(1, {40}), from_ints(1, {80})});
  EXPECT_EQ(b.norm(), 40);
  EXPECT_EQ(b, principal_ideal(from_ints(1, {40})));

  CycIdeal c = ideal_from_generators({from_ints(3, {3, 0}), from_ints(3, {1, -1})});
  EXPECT_EQ(c.norm(), 3);
  EXPECT_THROW(ideal_from_generators({from_ints(5, {0, 0, 0, 0})}), Error);
  EXPECT_THROW(ideal_from_generators({CycElt(CycField::get(3), {Rational(1, 2), 0})}), Error);
}

TEST(Ideals, OrderInsensitiveIdempotentStable) {
  std::mt19937 rng(5);
  for (long q : {3, 4, 5, 7, 8, 12}) {
    auto f = CycField::get(q);
    for (int t = 0; t < 10; ++t) {
      std::vector<CycElt> gens;
      for (int k = 0; k < 3; ++k) gens.emplace_back(f, nib::testing::random_coeffs(rng, f->degree(), -4, 4));
      if (gens[0].is_zero()) continue;
      CycIdeal j = ideal_from_generators(gens);
      std::vector<CycElt> rev(gens.rbegin(), gens.rend());
      EXPECT_EQ(j, ideal_from_generators(rev));
      std::vector<CycElt> cols;
      for (std::size_t k = 0; k < f->degree(); ++k) cols.push_back(CycElt::from_integers(f, j.basis().column(k)));
      EXPECT_EQ(j, ideal_from_generators(cols));
      EXPECT_TRUE(j.is_zeta_stable());
      for (const auto& g : gens) EXPECT_TRUE(j.contains(g));
    }
  }
}

TEST(FindGenerator, Examples) {
  IntMatrix m(2, 2);
  m(0, 0) = 2, m(0, 1) = 1, m(1, 1) = 1;
  CycIdeal j(CycField::get(4), m);
  CycElt g = find_generator(j);
  EXPECT_EQ(abs(norm(g)), 2);
  EXPECT_EQ(principal_ideal(g), j);

  EXPECT_EQ(find_generator(principal_ideal(from_ints(1, {40}))), from_ints(1, {40}));

  CycElt pi = from_ints(5, {1, -1, 0, 0});
  CycElt h = find_generator(principal_ideal(pi));
  EXPECT_EQ(abs(norm(h)), 5);
  EXPECT_TRUE(is_unit(h * inv(pi)));
}

TEST(FindGenerator, RejectsUnsupportedOrder) {
  CycIdeal j = principal_ideal(CycElt::from_rational(CycField::get(23), 2));
  try {
    find_generator(j);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsupportedField);
  }
}

// Every ideal of norm <= 50 is principal in these fields; an element of the
// right norm found by brute force over a coordinate box is the oracle.
TEST(FindGenerator, ExhaustiveNormOracle) {
  for (long q : {4, 3, 5}) {
    std::size_t count = 0;
    EXPECT_EQ(nib::testing::check_find_generator_oracle(q, 50, &count), "");
    EXPECT_GE(count, 16u) << q;
  }
}

TEST(FindGenerator, RandomPrincipalIdeals) {
  std::mt19937 rng(11);
  for (long q : {5, 7, 8, 9, 12, 15, 16}) {
    auto f = CycField::get(q);
    for (int t = 0; t < 6; ++t) {
      CycElt x(f, nib::testing::random_coeffs(rng, f->degree(), -3, 3));
      if (x.is_zero()) continue;
      CycElt g = find_generator(principal_ideal(x));
      EXPECT_TRUE(is_unit(g * inv(x)));
      EXPECT_TRUE(is_unit(x * inv(g)));
    }
  }
}

TEST(Units, GeneratorsAreUnits) {
  for (long q : supported_orders()) {
    if (q > 40) continue;
    for (const CycElt& u : unit_generators(q)) EXPECT_TRUE(is_unit(u)) << "q=" << q << " " << to_string(u);
  }
  EXPECT_TRUE(unit_generators_complete(21));
  EXPECT_TRUE(unit_generators_complete(60));
  EXPECT_FALSE(unit_generators_complete(23));
  EXPECT_FALSE(is_unit(from_ints(5, {1, -1, 0, 0})));
}

TEST(Units, StatusStableUnderUnits) {
  CycElt x = from_ints(7, {2, 1, 0, -1, 0, 0});
  CycIdeal j = principal_ideal(x);
  CycElt g = find_generator(j);
  for (const CycElt& u : unit_generators(7)) {
    CycElt h = g * u;
    EXPECT_EQ(abs(norm(h)), j.norm());
    EXPECT_TRUE(j.contains(h));
  }
}

TEST(IndexBound, Values) {
  EXPECT_EQ(index_bound(AbelianGroup(std::vector<long>{})), 1);
  EXPECT_EQ(index_bound(AbelianGroup({2})), 4);
  EXPECT_EQ(index_bound(AbelianGroup({3})), 9);
  EXPECT_EQ(index_bound(AbelianGroup({2, 2})), 256);
  // 4^4 / (4^2 / 2^2)
  EXPECT_EQ(index_bound(AbelianGroup({4})), 64);
}

TEST(Congruence, TorsionOfC2) {
  auto sys = std::make_shared<const CharacterSystem>(nib::testing::make_group({2}));
  ProductRing ring(*sys);
  const ProductElt one = ring.one();
  for (long a : {1, -1})
    for (long b : {1, -1}) {
      ProductElt u{{from_ints(ring.orders()[0], {a}), from_ints(ring.orders()[1], {b})}};
      EXPECT_TRUE(congruent_mod_unitZG(u, one, sys));
    }
  ProductElt bad{{from_ints(ring.orders()[0], {2}), from_ints(ring.orders()[1], {1})}};
  EXPECT_THROW(congruent_mod_unitZG(bad, one, sys), Error);
}
