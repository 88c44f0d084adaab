#include "nib/ideals.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>

namespace nib {

const std::vector<long>& supported_orders() {
  static const std::vector<long> orders = [] {
    std::vector<long> v;
    for (long q = 1; q <= 22; ++q) v.push_back(q);
    for (long q : {24, 25, 27, 28, 32, 33, 35, 36, 40, 44, 45, 48, 60, 84}) v.push_back(q);
    return v;
  }();
  return orders;
}

bool is_supported_order(long q) {
  const auto& v = supported_orders();
  return std::binary_search(v.begin(), v.end(), q);
}

CycIdeal::CycIdeal(CycFieldPtr field, IntMatrix basis) : field_(std::move(field)), basis_(std::move(basis)) {
  const std::size_t d = field_->degree();
  if (basis_.rows() != d || basis_.cols() != d) throw Error(ErrorCode::kInvalidArgument, "ideal basis must be phi(q) x phi(q)");
  norm_ = abs(det(basis_));
  if (norm_ == 0) throw Error(ErrorCode::kZeroIdeal, "ideal basis is singular");
}

bool CycIdeal::contains(const CycElt& x) const {
  if (x.order() != order() || !x.is_integral()) return false;
  IntVector r = x.integer_coords();
  const std::size_t d = r.size();
  for (std::size_t k = d; k-- > 0;) {
    if (r[k] % basis_(k, k) != 0) return false;
    Integer c = r[k] / basis_(k, k);
    if (c == 0) continue;
    for (std::size_t i = 0; i <= k; ++i) r[i] -= c * basis_(i, k);
  }
  return true;
}

Integer CycIdeal::content() const {
  Integer g = 0;
  for (std::size_t i = 0; i < basis_.rows(); ++i)
    for (std::size_t j = 0; j < basis_.cols(); ++j) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), basis_(i, j).get_mpz_t());
  return g;
}

bool CycIdeal::is_zeta_stable() const {
  for (std::size_t j = 0; j < basis_.cols(); ++j) {
    CycElt b(field_, to_rational(basis_.column(j)));
    if (!contains(b.mul_zeta_power(1))) return false;
  }
  return true;
}

CycIdeal ideal_from_generators(const std::vector<CycElt>& gens) {
  if (gens.empty()) throw Error(ErrorCode::kZeroIdeal, "ideal needs at least one generator");
  CycFieldPtr field = gens.front().field();
  const std::size_t d = field->degree();
  IntMatrix h;
  for (const CycElt& g : gens) {
    if (g.order() != field->order()) throw Error(ErrorCode::kInvalidArgument, "generators from different fields");
    if (!g.is_integral()) throw Error(ErrorCode::kNotIntegral, "ideal generator is not integral");
    if (g.is_zero()) continue;
    const std::size_t old = h.cols();
    IntMatrix m(d, old + d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < old; ++j) m(i, j) = h(i, j);
    for (std::size_t j = 0; j < d; ++j) m.set_column(old + j, g.mul_zeta_power(static_cast<long>(j)).integer_coords());
    h = hnf_basis(m);
  }
  if (h.cols() == 0) throw Error(ErrorCode::kZeroIdeal, "all ideal generators are zero");
  return CycIdeal(field, std::move(h));
}

namespace {

// log |N(x)| from the complex embeddings, for cheap rejection.
class NormFilter {
 public:
  explicit NormFilter(const CycField& f) {
    const long q = f.order();
    for (long s = 1; s <= q; ++s) {
      if (gcd_long(s, q) != 1) continue;
      std::vector<std::complex<double>> row;
      for (std::size_t j = 0; j < f.degree(); ++j) row.push_back(std::polar(1.0, 2 * M_PI * double(s * long(j) % q) / double(q)));
      roots_.push_back(std::move(row));
    }
  }
  double log_norm(const std::vector<double>& x) const {
    double total = 0;
    for (const auto& row : roots_) {
      std::complex<double> v = 0;
      for (std::size_t j = 0; j < x.size(); ++j) v += x[j] * row[j];
      total += std::log(std::abs(v));
    }
    return total;
  }

 private:
  std::vector<std::vector<std::complex<double>>> roots_;
};

double log_of(const Integer& x) {
  long e = 0;
  double m = mpz_get_d_2exp(&e, x.get_mpz_t());
  return std::log(std::fabs(m)) + double(e) * std::log(2.0);
}

// Fincke-Pohst over the quadratic form g; calls visit(x) on every nonzero x
// (up to sign) with x^T g x <= bound until visit returns true.
class ShortVectors {
 public:
  explicit ShortVectors(const RatMatrix& g) : d_(g.rows()), q_(d_, std::vector<long double>(d_)) {
    for (std::size_t i = 0; i < d_; ++i)
      for (std::size_t j = 0; j < d_; ++j) q_[i][j] = g(i, j).get_d();
    for (std::size_t i = 0; i < d_; ++i) {
      for (std::size_t j = i + 1; j < d_; ++j) {
        q_[j][i] = q_[i][j];
        q_[i][j] /= q_[i][i];
      }
      for (std::size_t k = i + 1; k < d_; ++k)
        for (std::size_t l = k; l < d_; ++l) q_[k][l] -= q_[k][i] * q_[i][l];
    }
  }

  // Returns true when visit accepted a vector; throws kResourceLimit past cap.
  bool run(long double bound, std::size_t& nodes, std::size_t cap, const std::function<bool(const std::vector<long>&)>& visit) {
    std::vector<long> x(d_, 0);
    bound_ = bound * (1 + 1e-12L) + 1e-9L;
    nodes_ = &nodes;
    cap_ = cap;
    return descend(d_, bound_, true, x, visit);
  }

 private:
  bool descend(std::size_t level, long double remaining, bool all_zero, std::vector<long>& x,
               const std::function<bool(const std::vector<long>&)>& visit) {
    if (level == 0) return all_zero ? false : visit(x);
    const std::size_t i = level - 1;
    long double c = 0;
    for (std::size_t j = i + 1; j < d_; ++j) c -= q_[i][j] * x[j];
    const long double r = std::sqrt(std::max<long double>(remaining, 0) / q_[i][i]);
    long lo = static_cast<long>(std::ceil(c - r)), hi = static_cast<long>(std::floor(c + r));
    if (all_zero) lo = std::max(lo, 0L);
    for (long v = lo; v <= hi; ++v) {
      if (++*nodes_ > cap_) throw Error(ErrorCode::kResourceLimit, "short vector enumeration exceeded its node cap");
      const long double t = v - c;
      const long double rest = remaining - q_[i][i] * t * t;
      if (rest < -1e-9L * bound_) continue;
      x[i] = v;
      if (descend(i, rest, all_zero && v == 0, x, visit)) return true;
    }
    x[i] = 0;
    return false;
  }

  std::size_t d_;
  std::vector<std::vector<long double>> q_;
  long double bound_ = 0;
  std::size_t* nodes_ = nullptr;
  std::size_t cap_ = 0;
};

}  // namespace

CycElt find_generator(const CycIdeal& J, const GeneratorSearch& cfg) {
  const long q = J.order();
  if (!is_supported_order(q))
    throw Error(ErrorCode::kUnsupportedField, "cyclotomic order " + std::to_string(q) + " is outside the class-number-one list");
  CycFieldPtr field = J.field();
  const std::size_t d = field->degree();
  const Integer c = J.content();
  IntMatrix h = J.basis();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) mpz_divexact(h(i, j).get_mpz_t(), h(i, j).get_mpz_t(), c.get_mpz_t());
  const Integer target = abs(det(h));
  if (target == 1) return CycElt::from_rational(field, c);

  const RatMatrix t2 = to_rational(field->t2_gram());
  const RatMatrix hq = to_rational(h);
  RatMatrix gram = hq.transpose() * t2 * hq;
  const IntMatrix u = lll_reduce(gram);
  const IntMatrix b = h * u;
  const RatMatrix uq = to_rational(u);
  gram = uq.transpose() * gram * uq;

  NormFilter filter(*field);
  const double log_target = log_of(target);
  auto accept = [&](const IntVector& coords) -> std::optional<CycElt> {
    std::vector<double> xd(d);
    for (std::size_t i = 0; i < d; ++i) xd[i] = coords[i].get_d();
    if (std::fabs(filter.log_norm(xd) - log_target) > 1e-6 * (1 + log_target)) return std::nullopt;
    CycElt g = CycElt::from_integers(field, coords);
    if (abs(norm(g)) != target) return std::nullopt;
    return g;
  };

  ShortVectors sv(gram);
  // Generators satisfy T2 >= d N^(2/d); start just above that.
  long double radius = static_cast<long double>(cfg.slack.get_d()) * d * std::exp(2.0L * log_target / d);
  std::size_t nodes = 0;
  std::optional<CycElt> found;
  for (int attempt = 0; attempt <= cfg.max_doublings && !found; ++attempt, radius *= 2) {
    sv.run(radius, nodes, cfg.node_cap, [&](const std::vector<long>& x) {
      IntVector coords(d);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          if (x[j] != 0) coords[i] += b(i, j) * x[j];
      found = accept(coords);
      return found.has_value();
    });
  }
  if (!found) throw Error(ErrorCode::kResourceLimit, "no generator found within the search radius");
  CycIdeal reduced(field, hnf_basis(h));
  if (!reduced.contains(*found)) throw Error(ErrorCode::kInternal, "generator candidate is not in the ideal");
  return Rational(c) * *found;
}

std::vector<CycElt> unit_generators(long q) {
  CycFieldPtr field = CycField::get(q);
  std::vector<CycElt> out{CycElt::from_rational(field, -1)};
  if (q > 2) out.push_back(CycElt::zeta_power(field, 1));
  for (long m : divisors(q)) {
    if (m <= 2) continue;
    const bool prime_power = prime_factors(m).size() == 1;
    const long step = q / m;
    for (long a = 1; 2 * a < m; ++a) {
      if (gcd_long(a, m) != 1) continue;
      if (prime_power) {
        if (a == 1) continue;
        // (1 - z^a) / (1 - z) = 1 + z + ... + z^(a-1)
        RatVector acc(q);
        for (long j = 0; j < a; ++j) acc[(j * step) % q] += 1;
        out.push_back(CycElt::from_zeta_powers(field, acc));
      } else {
        out.push_back(CycElt::from_rational(field, 1) - CycElt::zeta_power(field, a * step));
      }
    }
  }
  return out;
}

bool unit_generators_complete(long q) {
  long conductor = (q % 4 == 2) ? q / 2 : q;
  return is_supported_order(q) && prime_factors(conductor).size() <= 3;
}

bool is_unit(const CycElt& x) {
  if (!x.is_integral() || x.is_zero()) return false;
  Rational n = norm(x);
  return n == 1 || n == -1;
}

ProductRing::ProductRing(std::vector<long> orders) : orders_(std::move(orders)) {
  for (long q : orders_) {
    offsets_.push_back(rank_);
    rank_ += static_cast<std::size_t>(euler_phi(q));
  }
}

ProductElt ProductRing::one() const {
  ProductElt e;
  for (long q : orders_) e.components.push_back(CycElt::from_rational(CycField::get(q), 1));
  return e;
}

ProductElt ProductRing::embed_component(std::size_t i, const CycElt& v) const {
  if (v.order() != orders_.at(i)) throw Error(ErrorCode::kInvalidArgument, "component lies in the wrong field");
  ProductElt e = one();
  e.components[i] = v;
  return e;
}

ProductElt mul(const ProductElt& a, const ProductElt& b) {
  if (a.components.size() != b.components.size()) throw Error(ErrorCode::kInvalidArgument, "component count mismatch");
  ProductElt r;
  for (std::size_t i = 0; i < a.components.size(); ++i) r.components.push_back(a.components[i] * b.components[i]);
  return r;
}

ProductElt inv(const ProductElt& a) {
  ProductElt r;
  for (const auto& c : a.components) r.components.push_back(inv(c));
  return r;
}

bool is_unit(const ProductElt& a) {
  for (const auto& c : a.components)
    if (!is_unit(c)) return false;
  return true;
}

bool congruent_mod_unitZG(const ProductElt& a, const ProductElt& b, const SystemPtr& sys) {
  if (!is_unit(a) || !is_unit(b)) throw Error(ErrorCode::kNotUnit, "congruence test needs units of the product ring");
  return psi_inverse(as_decomposed(mul(a, inv(b)), sys)).is_integral &&
         psi_inverse(as_decomposed(mul(b, inv(a)), sys)).is_integral;
}

Integer index_bound(const AbelianGroup& g) {
  const long n = static_cast<long>(g.order());
  Integer num;
  mpz_ui_pow_ui(num.get_mpz_t(), n, n);
  Rational denom = 1;
  for (auto [q, a] : multiplicity_check(g)) {
    if (a == 0) continue;
    const long phi = euler_phi(q);
    Rational term;
    Integer qp;
    mpz_ui_pow_ui(qp.get_mpz_t(), q, phi);
    term = qp;
    for (long p : prime_factors(q)) {
      Integer pp;
      mpz_ui_pow_ui(pp.get_mpz_t(), p, phi / (p - 1));
      term /= pp;
    }
    for (long i = 0; i < a; ++i) denom *= term;
  }
  return ceil_of(Rational(num) / denom);
}

}  // namespace nib
