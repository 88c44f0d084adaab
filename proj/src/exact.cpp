#include "nib/exact.hpp"

#include <algorithm>
#include <utility>

namespace nib {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kSingular: return "singular-matrix";
    case ErrorCode::kNotPositiveDefinite: return "not-positive-definite";
    case ErrorCode::kNotIntegral: return "not-integral";
    case ErrorCode::kDivisionByZero: return "division-by-zero";
    case ErrorCode::kZeroIdeal: return "zero-ideal";
    case ErrorCode::kUnsupportedField: return "unsupported-field";
    case ErrorCode::kResourceLimit: return "resource-limit";
    case ErrorCode::kNotUnit: return "not-a-unit";
    case ErrorCode::kInvalidInput: return "invalid-input";
    case ErrorCode::kParse: return "parse-error";
    case ErrorCode::kUnsupportedFixture: return "unsupported-fixture";
    case ErrorCode::kInternal: return "internal-error";
  }
  return "unknown";
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

RatVector to_rational(const IntVector& v) { return RatVector(v.begin(), v.end()); }

IntMatrix to_integer(const RatMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1) throw Error(ErrorCode::kNotIntegral, "matrix entry is not an integer");
      r(i, j) = m(i, j).get_num();
    }
  return r;
}

IntVector to_integer(const RatVector& v) {
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].get_den() != 1) throw Error(ErrorCode::kNotIntegral, "vector entry is not an integer");
    r[i] = v[i].get_num();
  }
  return r;
}

bool is_integral(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.get_den() == 1; });
}

bool is_integral(const RatMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j).get_den() != 1) return false;
  return true;
}

Integer floor_div(const Integer& a, const Integer& b) {
  if (b == 0) throw Error(ErrorCode::kDivisionByZero, "integer division by zero");
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer floor_of(const Rational& x) { return floor_div(x.get_num(), x.get_den()); }

Integer ceil_of(const Rational& x) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Integer round_nearest(const Rational& x) { return floor_of(x + Rational(1, 2)); }

std::optional<Integer> parse_integer(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return std::nullopt;
  for (std::size_t i = start; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9') return std::nullopt;
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return Integer(digits, 10);
}

std::optional<Rational> parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    auto n = parse_integer(text);
    if (!n) return std::nullopt;
    return Rational(*n);
  }
  auto num = parse_integer(text.substr(0, slash));
  auto den = parse_integer(text.substr(slash + 1));
  if (!num || !den || *den == 0) return std::nullopt;
  Rational r(*num, *den);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& x) {
  Rational c = x;
  c.canonicalize();
  return c.get_str(10);
}

namespace {

// Column operation: (c_a, c_b) <- (x c_a + y c_b, s c_a + t c_b).
void combine_columns(IntMatrix& m, std::size_t a, std::size_t b, const Integer& x,
                     const Integer& y, const Integer& s, const Integer& t) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer va = m(i, a), vb = m(i, b);
    m(i, a) = x * va + y * vb;
    m(i, b) = s * va + t * vb;
  }
}

void axpy_column(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) -= f * m(i, src);
}

void negate_column(IntMatrix& m, std::size_t j) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = -m(i, j);
}

HnfResult hnf_impl(const IntMatrix& m, bool with_transform) {
  HnfResult res;
  res.h = m;
  const std::size_t rows = m.rows(), cols = m.cols();
  if (with_transform) res.u = IntMatrix::identity(cols);
  IntMatrix& h = res.h;
  std::size_t free_cols = cols;  // columns [0, free_cols) are unfixed
  for (std::size_t ii = rows; ii-- > 0 && free_cols > 0;) {
    const std::size_t piv = free_cols - 1;
    for (std::size_t j = 0; j < piv; ++j) {
      if (h(ii, j) == 0) continue;
      Integer a = h(ii, piv), b = h(ii, j), g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      Integer ag = a / g, bg = b / g;
      // new piv = x*piv + y*j, new j = -bg*piv + ag*j; determinant 1.
      combine_columns(h, piv, j, x, y, -bg, ag);
      if (with_transform) combine_columns(res.u, piv, j, x, y, -bg, ag);
    }
    if (h(ii, piv) == 0) continue;
    if (h(ii, piv) < 0) {
      negate_column(h, piv);
      if (with_transform) negate_column(res.u, piv);
    }
    const Integer p = h(ii, piv);
    for (std::size_t j = piv + 1; j < cols; ++j) {
      Integer f = floor_div(h(ii, j), p);
      if (f == 0) continue;
      axpy_column(h, j, piv, f);
      if (with_transform) axpy_column(res.u, j, piv, f);
    }
    res.pivot_rows.insert(res.pivot_rows.begin(), ii);
    --free_cols;
    ++res.rank;
  }
  return res;
}

}  // namespace

HnfResult hnf(const IntMatrix& m) { return hnf_impl(m, true); }

IntMatrix hnf_basis(const IntMatrix& m) {
  HnfResult r = hnf_impl(m, false);
  IntMatrix out(m.rows(), r.rank);
  const std::size_t offset = m.cols() - r.rank;
  for (std::size_t j = 0; j < r.rank; ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) out(i, j) = r.h(i, offset + j);
  return out;
}

SnfResult snf(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(rows), v = IntMatrix::identity(cols);
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < cols; ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t c = 0; c < rows; ++c) std::swap(u(i, c), u(j, c));
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < rows; ++r) std::swap(a(r, i), a(r, j));
    for (std::size_t r = 0; r < cols; ++r) std::swap(v(r, i), v(r, j));
  };
  auto row_axpy = [&](std::size_t dst, std::size_t src, const Integer& f) {
    for (std::size_t c = 0; c < cols; ++c) a(dst, c) -= f * a(src, c);
    for (std::size_t c = 0; c < rows; ++c) u(dst, c) -= f * u(src, c);
  };
  auto col_axpy = [&](std::size_t dst, std::size_t src, const Integer& f) {
    for (std::size_t r = 0; r < rows; ++r) a(r, dst) -= f * a(r, src);
    for (std::size_t r = 0; r < cols; ++r) v(r, dst) -= f * v(r, src);
  };

  const std::size_t diag = std::min(rows, cols);
  for (std::size_t t = 0; t < diag; ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a(i, j) != 0 && (bi == rows || abs(a(i, j)) < abs(a(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi == rows) break;
      if (bi != t) swap_rows(bi, t);
      if (bj != t) swap_cols(bj, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        row_axpy(i, t, floor_div(a(i, t), a(t, t)));
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        col_axpy(j, t, floor_div(a(t, j), a(t, t)));
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            // Pull the offending row into row t and retry.
            row_axpy(t, i, Integer(-1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (a(t, t) < 0) {
      for (std::size_t c = 0; c < cols; ++c) a(t, c) = -a(t, c);
      for (std::size_t c = 0; c < rows; ++c) u(t, c) = -u(t, c);
    }
  }
  SnfResult res{std::move(u), std::move(v), {}};
  for (std::size_t t = 0; t < diag; ++t) res.diagonal.push_back(a(t, t));
  return res;
}

Integer det(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::kInvalidArgument, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Rational det(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::kInvalidArgument, "determinant of non-square matrix");
  // Clear denominators row by row, then run the integer version.
  IntMatrix a(m.rows(), m.cols());
  Integer scale = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) a(i, j) = Rational(m(i, j) * l).get_num();
    scale *= l;
  }
  Rational r(det(a), scale);
  r.canonicalize();
  return r;
}

namespace {

// Gauss-Jordan on [m | rhs]; returns false when m is singular.
bool gauss_jordan(RatMatrix& m, RatMatrix& rhs) {
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return false;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      for (std::size_t j = 0; j < rhs.cols(); ++j) std::swap(rhs(p, j), rhs(c, j));
    }
    Rational inv = 1 / m(c, c);
    for (std::size_t j = 0; j < n; ++j) m(c, j) *= inv;
    for (std::size_t j = 0; j < rhs.cols(); ++j) rhs(c, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = 0; j < n; ++j) m(i, j) -= f * m(c, j);
      for (std::size_t j = 0; j < rhs.cols(); ++j) rhs(i, j) -= f * rhs(c, j);
    }
  }
  return true;
}

}  // namespace

RatVector solve_linear(const RatMatrix& m, const RatVector& v) {
  if (m.rows() != m.cols() || v.size() != m.rows()) throw Error(ErrorCode::kInvalidArgument, "solve_linear: dimension mismatch");
  RatMatrix a = m;
  RatMatrix rhs(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) rhs(i, 0) = v[i];
  if (!gauss_jordan(a, rhs)) throw Error(ErrorCode::kSingular, "solve_linear: singular matrix");
  return rhs.column(0);
}

RatMatrix inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::kInvalidArgument, "inverse of non-square matrix");
  RatMatrix a = m;
  RatMatrix rhs = RatMatrix::identity(m.rows());
  if (!gauss_jordan(a, rhs)) throw Error(ErrorCode::kSingular, "inverse: singular matrix");
  return rhs;
}

std::optional<RatVector> solve_overdetermined(const RatMatrix& m, const RatVector& v) {
  const std::size_t rows = m.rows(), cols = m.cols();
  if (v.size() != rows || rows < cols) throw Error(ErrorCode::kInvalidArgument, "solve_overdetermined: dimension mismatch");
  RatMatrix a = m;
  RatVector b = v;
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t p = c;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) throw Error(ErrorCode::kSingular, "solve_overdetermined: rank deficient");
    if (p != c) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(c, j));
      std::swap(b[p], b[c]);
    }
    Rational inv = 1 / a(c, c);
    for (std::size_t j = c; j < cols; ++j) a(c, j) *= inv;
    b[c] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == c || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = c; j < cols; ++j) a(i, j) -= f * a(c, j);
      b[i] -= f * b[c];
    }
  }
  for (std::size_t i = cols; i < rows; ++i)
    if (b[i] != 0) return std::nullopt;
  b.resize(cols);
  return b;
}

namespace {

struct GramSchmidt {
  RatMatrix mu;
  RatVector norms;  // |b*_i|^2
};

GramSchmidt gram_schmidt(const RatMatrix& g) {
  const std::size_t n = g.rows();
  GramSchmidt gs{RatMatrix(n, n), RatVector(n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Rational s = g(i, j);
      for (std::size_t l = 0; l < j; ++l) s -= gs.mu(j, l) * gs.mu(i, l) * gs.norms[l];
      gs.mu(i, j) = s / gs.norms[j];
    }
    Rational s = g(i, i);
    for (std::size_t l = 0; l < i; ++l) s -= gs.mu(i, l) * gs.mu(i, l) * gs.norms[l];
    if (s <= 0) throw Error(ErrorCode::kNotPositiveDefinite, "Gram matrix is not positive definite");
    gs.norms[i] = s;
  }
  return gs;
}

}  // namespace

IntMatrix lll_reduce(const RatMatrix& gram) {
  const std::size_t n = gram.rows();
  if (gram.cols() != n) throw Error(ErrorCode::kInvalidArgument, "Gram matrix must be square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (gram(i, j) != gram(j, i)) throw Error(ErrorCode::kInvalidArgument, "Gram matrix must be symmetric");
  IntMatrix t = IntMatrix::identity(n);
  if (n == 0) return t;
  RatMatrix g = gram;
  GramSchmidt gs = gram_schmidt(g);
  const Rational delta(3, 4);

  auto size_reduce = [&](std::size_t k, std::size_t l) {
    Integer r = round_nearest(gs.mu(k, l));
    if (r == 0) return;
    // b_k <- b_k - r b_l
    for (std::size_t i = 0; i < n; ++i) t(i, k) -= r * t(i, l);
    Rational rr = r;
    Rational gkk = g(k, k) - 2 * rr * g(k, l) + rr * rr * g(l, l);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == k) continue;
      g(k, j) -= rr * g(l, j);
      g(j, k) = g(k, j);
    }
    g(k, k) = gkk;
    gs.mu(k, l) -= rr;
    for (std::size_t j = 0; j < l; ++j) gs.mu(k, j) -= rr * gs.mu(l, j);
  };

  std::size_t k = 1;
  while (k < n) {
    size_reduce(k, k - 1);
    const Rational& m = gs.mu(k, k - 1);
    if (gs.norms[k] < (delta - m * m) * gs.norms[k - 1]) {
      for (std::size_t i = 0; i < n; ++i) std::swap(t(i, k), t(i, k - 1));
      for (std::size_t j = 0; j < n; ++j) std::swap(g(k, j), g(k - 1, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(g(j, k), g(j, k - 1));
      gs = gram_schmidt(g);
      k = std::max<std::size_t>(1, k - 1);
    } else {
      for (std::size_t l = k - 1; l-- > 0;) size_reduce(k, l);
      ++k;
    }
  }
  return t;
}

RatVector charpoly(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw Error(ErrorCode::kInvalidArgument, "charpoly of non-square matrix");
  RatMatrix h = m;
  // Similarity transform to upper Hessenberg form.
  for (std::size_t c = 1; c + 1 < n; ++c) {
    std::size_t p = c;
    while (p < n && h(p, c - 1) == 0) ++p;
    if (p == n) continue;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(p, j), h(c, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(h(j, p), h(j, c));
    }
    const Rational t = h(c, c - 1);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (h(i, c - 1) == 0) continue;
      Rational f = h(i, c - 1) / t;
      for (std::size_t j = 0; j < n; ++j) h(i, j) -= f * h(c, j);
      for (std::size_t j = 0; j < n; ++j) h(j, c) += f * h(j, i);
    }
  }
  // p_m = (x - h_mm) p_{m-1} - sum_i (prod of subdiagonal) h_{m-i,m} p_{m-i-1}
  std::vector<RatVector> p(n + 1);
  p[0] = {1};
  for (std::size_t mm = 1; mm <= n; ++mm) {
    RatVector cur(mm + 1);
    for (std::size_t d = 0; d < mm; ++d) {
      cur[d + 1] += p[mm - 1][d];
      cur[d] -= h(mm - 1, mm - 1) * p[mm - 1][d];
    }
    Rational t = 1;
    for (std::size_t i = 1; i < mm; ++i) {
      t *= h(mm - i, mm - i - 1);
      Rational f = t * h(mm - i - 1, mm - 1);
      if (f == 0) continue;
      for (std::size_t d = 0; d < p[mm - i - 1].size(); ++d) cur[d] -= f * p[mm - i - 1][d];
    }
    p[mm] = std::move(cur);
  }
  return p[n];
}

}  // namespace nib
