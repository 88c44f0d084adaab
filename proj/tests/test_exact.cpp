#include <gtest/gtest.h>

#include <random>

#include "nib/exact.hpp"
#include "nib/polynomial.hpp"

using namespace nib;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

// Laplace expansion, the textbook definition.
Integer cofactor_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t l = 0, c = 0; l < n; ++l)
        if (l != j) minor(i - 1, c++) = m(i, l);
    Integer t = m(0, j) * cofactor_det(minor);
    total += (j % 2 ? -t : t);
  }
  return total;
}

bool in_column_span(const IntMatrix& basis, const IntVector& v) {
  IntVector r = v;
  HnfResult h = hnf(basis);
  const std::size_t z = h.h.cols() - h.rank;
  for (std::size_t k = h.rank; k-- > 0;) {
    const std::size_t c = z + k, p = h.pivot_rows[k];
    if (r[p] % h.h(p, c) != 0) return false;
    Integer q = r[p] / h.h(p, c);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= q * h.h(i, c);
  }
  for (const auto& x : r)
    if (x != 0) return false;
  return true;
}

}  // namespace

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(*parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(*parse_rational("-7"), Rational(-7));
  EXPECT_FALSE(parse_rational("1/0").has_value());
  EXPECT_FALSE(parse_rational("x").has_value());
  EXPECT_EQ(format_rational(Rational(-4, 6)), "-2/3");
  EXPECT_EQ(format_rational(Rational(5)), "5");
  EXPECT_EQ(floor_of(Rational(-3, 2)), -2);
  EXPECT_EQ(ceil_of(Rational(-3, 2)), -1);
  EXPECT_EQ(floor_div(Integer(-7), Integer(2)), -4);
}

TEST(Det, MatchesCofactorExpansion) {
  std::mt19937 rng(11);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 1 + t % 6;
    IntMatrix m = random_matrix(rng, n, n, -9, 9);
    EXPECT_EQ(det(m), cofactor_det(m));
  }
  IntMatrix sing(2, 2);
  sing(0, 0) = 2, sing(0, 1) = 4, sing(1, 0) = 1, sing(1, 1) = 2;
  EXPECT_EQ(det(sing), 0);
}

TEST(Det, RationalScaling) {
  RatMatrix m(2, 2);
  m(0, 0) = Rational(1, 2), m(0, 1) = Rational(1, 3), m(1, 0) = 1, m(1, 1) = 4;
  EXPECT_EQ(det(m), Rational(5, 3));
}

TEST(Hnf, ShapeAndTransform) {
  std::mt19937 rng(5);
  for (int t = 0; t < 150; ++t) {
    std::size_t r = 1 + t % 5, c = 1 + (t / 5) % 7;
    IntMatrix m = random_matrix(rng, r, c, -6, 6);
    HnfResult h = hnf(m);
    EXPECT_EQ(m * h.u, h.h);
    Integer du = det(h.u);
    EXPECT_TRUE(du == 1 || du == -1);
    const std::size_t zero_cols = c - h.rank;
    for (std::size_t j = 0; j < zero_cols; ++j)
      for (std::size_t i = 0; i < r; ++i) EXPECT_EQ(h.h(i, j), 0);
    for (std::size_t k = 0; k < h.rank; ++k) {
      std::size_t col = zero_cols + k, p = h.pivot_rows[k];
      EXPECT_GT(h.h(p, col), 0);
      for (std::size_t i = p + 1; i < r; ++i) EXPECT_EQ(h.h(i, col), 0);
      for (std::size_t j = col + 1; j < c; ++j) {
        EXPECT_GE(h.h(p, j), 0);
        EXPECT_LT(h.h(p, j), h.h(p, col));
      }
      if (k > 0) EXPECT_GT(p, h.pivot_rows[k - 1]);
    }
  }
}

TEST(Hnf, CanonicalUnderColumnOperations) {
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    IntMatrix m = random_matrix(rng, 4, 4, -5, 5);
    IntMatrix u = IntMatrix::identity(4);
    u(0, 2) = 3, u(3, 1) = -2, u(1, 0) = 1;
    EXPECT_EQ(hnf_basis(m), hnf_basis(m * u));
  }
}

TEST(Hnf, LatticeMembershipAgreesWithTransformRows) {
  IntMatrix m(2, 2);
  m(0, 0) = 2, m(0, 1) = 1, m(1, 0) = 0, m(1, 1) = 1;
  IntMatrix b = hnf_basis(m);
  EXPECT_EQ(det(b), 2);
  EXPECT_TRUE(in_column_span(b, {Integer(1), Integer(1)}));
  EXPECT_TRUE(in_column_span(b, {Integer(2), Integer(0)}));
  EXPECT_FALSE(in_column_span(b, {Integer(1), Integer(0)}));
}

TEST(Snf, DiagonalDivisibility) {
  std::mt19937 rng(3);
  for (int t = 0; t < 100; ++t) {
    std::size_t r = 1 + t % 4, c = 1 + (t / 4) % 4;
    IntMatrix m = random_matrix(rng, r, c, -8, 8);
    SnfResult s = snf(m);
    IntMatrix d = s.u * m * s.v;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) EXPECT_EQ(d(i, j), i == j ? s.diagonal[i] : Integer(0));
    for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i) {
      EXPECT_GE(s.diagonal[i], 0);
      if (s.diagonal[i] != 0) {
        EXPECT_EQ(s.diagonal[i + 1] % s.diagonal[i], 0);
      } else {
        EXPECT_EQ(s.diagonal[i + 1], 0);
      }
    }
    Integer du = det(s.u), dv = det(s.v);
    EXPECT_TRUE(du == 1 || du == -1);
    EXPECT_TRUE(dv == 1 || dv == -1);
  }
}

TEST(Solve, InverseAndSingular) {
  std::mt19937 rng(9);
  for (int t = 0; t < 50; ++t) {
    IntMatrix m = random_matrix(rng, 4, 4, -5, 5);
    if (det(m) == 0) continue;
    RatMatrix r = to_rational(m);
    EXPECT_EQ(r * inverse(r), RatMatrix::identity(4));
    RatVector b{1, 2, 3, 4};
    EXPECT_EQ(r * solve_linear(r, b), b);
  }
  RatMatrix z(2, 2);
  try {
    inverse(z);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSingular);
  }
}

TEST(Solve, Overdetermined) {
  RatMatrix m(3, 2);
  m(0, 0) = 1, m(1, 1) = 1, m(2, 0) = 1, m(2, 1) = 1;
  auto x = solve_overdetermined(m, {2, 3, 5});
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, (RatVector{2, 3}));
  EXPECT_FALSE(solve_overdetermined(m, {2, 3, 6}));
}

TEST(Lll, ReducedAndUnimodular) {
  std::mt19937 rng(13);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = 2 + t % 5;
    IntMatrix b = random_matrix(rng, n, n, -20, 20);
    if (det(b) == 0) continue;
    RatMatrix gram = to_rational(b.transpose() * b);
    IntMatrix u = lll_reduce(gram);
    Integer du = det(u);
    ASSERT_TRUE(du == 1 || du == -1);
    RatMatrix g = to_rational(u).transpose() * gram * to_rational(u);
    // Gram-Schmidt of the reduced basis in Gram form.
    std::vector<Rational> bstar(n);
    RatMatrix mu(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        Rational s = g(i, j);
        for (std::size_t l = 0; l < j; ++l) s -= mu(j, l) * mu(i, l) * bstar[l];
        mu(i, j) = s / bstar[j];
        EXPECT_LE(abs(mu(i, j)), Rational(1, 2));
      }
      Rational s = g(i, i);
      for (std::size_t l = 0; l < i; ++l) s -= mu(i, l) * mu(i, l) * bstar[l];
      bstar[i] = s;
      if (i > 0) EXPECT_GE(bstar[i], (Rational(3, 4) - mu(i, i - 1) * mu(i, i - 1)) * bstar[i - 1]);
    }
  }
}

TEST(Lll, RejectsIndefinite) {
  RatMatrix g(2, 2);
  g(0, 0) = 1, g(1, 1) = -1;
  EXPECT_THROW(lll_reduce(g), Error);
}

TEST(Charpoly, MatchesDeterminantAtPoints) {
  std::mt19937 rng(17);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = 1 + t % 6;
    RatMatrix m = to_rational(random_matrix(rng, n, n, -4, 4));
    m(0, 0) += Rational(1, 3);
    Polynomial p(charpoly(m));
    EXPECT_EQ(p.degree(), static_cast<int>(n));
    for (int x = -3; x <= 3; ++x) {
      RatMatrix a(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = (i == j ? Rational(x) : Rational(0)) - m(i, j);
      EXPECT_EQ(p.evaluate(x), det(a));
    }
  }
}

TEST(Polynomial, DivmodAndGcd) {
  Polynomial a = Polynomial::from_integers({Integer(-1), Integer(0), Integer(1)});  // x^2 - 1
  Polynomial b = Polynomial::from_integers({Integer(1), Integer(1)});
  auto [q, r] = a.divmod(b);
  EXPECT_EQ(q, Polynomial::from_integers({Integer(-1), Integer(1)}));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(gcd(a, b * b), b);
  Polynomial sq = b * b * Polynomial::from_integers({Integer(2), Integer(1)});
  EXPECT_EQ(squarefree_part(sq), b * Polynomial::from_integers({Integer(2), Integer(1)}));
  Polynomial m = Polynomial::from_integers({Integer(1), Integer(0), Integer(1)});
  Polynomial inv = inverse_mod(b, m);
  EXPECT_EQ((inv * b) % m, Polynomial(RatVector{1}));
}
