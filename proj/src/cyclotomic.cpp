#include "nib/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace nib {

long gcd_long(long a, long b) { return std::gcd(a, b); }
long lcm_long(long a, long b) { return std::lcm(a, b); }

std::vector<long> prime_factors(long n) {
  std::vector<long> ps;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    ps.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

long euler_phi(long n) {
  long r = n;
  for (long p : prime_factors(n)) r = r / p * (p - 1);
  return r;
}

long mobius(long n) {
  long r = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    r = -r;
  }
  if (n > 1) r = -r;
  return r;
}

std::vector<long> divisors(long n) {
  std::vector<long> d;
  for (long i = 1; i <= n; ++i)
    if (n % i == 0) d.push_back(i);
  return d;
}

bool is_squarefree(long n) { return n >= 1 && mobius(n) != 0; }

Polynomial cyclotomic_polynomial(long q) {
  if (q < 1) throw Error(ErrorCode::kInvalidArgument, "cyclotomic order must be positive");
  Polynomial p = Polynomial::monomial(1, static_cast<std::size_t>(q)) - Polynomial(RatVector{1});
  for (long d : divisors(q)) {
    if (d == q) continue;
    p = p.divmod(cyclotomic_polynomial(d)).first;
  }
  return p;
}

CycField::CycField(long q) : q_(q), phi_(cyclotomic_polynomial(q)) {
  degree_ = static_cast<std::size_t>(phi_.degree());
  const IntVector phi_coeffs = phi_.integer_coeffs();
  powers_.assign(q_, std::vector<long>(degree_, 0));
  powers_[0][0] = 1;
  for (long j = 1; j < q_; ++j) {
    const auto& prev = powers_[j - 1];
    auto& cur = powers_[j];
    long top = prev[degree_ - 1];
    for (std::size_t i = degree_ - 1; i > 0; --i) cur[i] = prev[i - 1];
    cur[0] = 0;
    // zeta^deg = -sum_{i<deg} c_i zeta^i
    for (std::size_t i = 0; i < degree_; ++i) cur[i] -= top * phi_coeffs[i].get_si();
  }
  traces_.assign(q_, 0);
  for (long j = 0; j < q_; ++j)
    for (std::size_t i = 0; i < degree_; ++i) traces_[j] += powers_[mod(j + static_cast<long>(i))][i];
  t2_ = IntMatrix(degree_, degree_);
  for (std::size_t a = 0; a < degree_; ++a)
    for (std::size_t b = 0; b < degree_; ++b)
      t2_(a, b) = traces_[mod(static_cast<long>(a) - static_cast<long>(b))];
}

std::shared_ptr<const CycField> CycField::get(long q) {
  static std::mutex mu;
  static std::map<long, std::shared_ptr<const CycField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it != cache.end()) return it->second;
  auto f = std::make_shared<const CycField>(q);
  cache.emplace(q, f);
  return f;
}

RatMatrix t2_gram(long q) { return to_rational(CycField::get(q)->t2_gram()); }

namespace {

// Folds a length-q accumulator indexed by zeta powers into coordinates.
RatVector fold(const CycField& f, const RatVector& acc) {
  RatVector out(f.degree());
  for (long k = 0; k < static_cast<long>(acc.size()); ++k) {
    if (acc[k] == 0) continue;
    if (k < static_cast<long>(f.degree())) {
      out[k] += acc[k];
      continue;
    }
    const auto& p = f.power(k);
    for (std::size_t i = 0; i < f.degree(); ++i)
      if (p[i] != 0) out[i] += acc[k] * p[i];
  }
  return out;
}

void check_same_field(const CycElt& a, const CycElt& b) {
  if (a.order() != b.order()) throw Error(ErrorCode::kInvalidArgument, "cyclotomic elements from different fields");
}

}  // namespace

CycElt::CycElt(CycFieldPtr field) : field_(std::move(field)), coords_(field_->degree()) {}

CycElt::CycElt(CycFieldPtr field, RatVector coords) : field_(std::move(field)), coords_(std::move(coords)) {
  if (coords_.size() != field_->degree()) throw Error(ErrorCode::kInvalidArgument, "coordinate count must equal phi(q)");
}

CycElt CycElt::from_rational(CycFieldPtr field, const Rational& c) {
  CycElt e(std::move(field));
  e.coords_[0] = c;
  return e;
}

CycElt CycElt::from_integers(CycFieldPtr field, const IntVector& coords) {
  return CycElt(std::move(field), to_rational(coords));
}

CycElt CycElt::zeta_power(CycFieldPtr field, long j) {
  const auto& p = field->power(j);
  RatVector c(p.begin(), p.end());
  return CycElt(std::move(field), std::move(c));
}

CycElt CycElt::from_zeta_powers(CycFieldPtr field, const RatVector& acc) {
  if (acc.size() != static_cast<std::size_t>(field->order()))
    throw Error(ErrorCode::kInvalidArgument, "accumulator length must equal q");
  RatVector c = fold(*field, acc);
  return CycElt(std::move(field), std::move(c));
}

bool CycElt::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

bool CycElt::is_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

CycElt CycElt::operator-() const {
  CycElt r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

CycElt operator+(const CycElt& a, const CycElt& b) {
  CycElt r = a;
  r += b;
  return r;
}

CycElt& CycElt::operator+=(const CycElt& b) {
  check_same_field(*this, b);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += b.coords_[i];
  return *this;
}

CycElt operator-(const CycElt& a, const CycElt& b) { return a + (-b); }

CycElt operator*(const CycElt& a, const CycElt& b) {
  check_same_field(a, b);
  const CycField& f = *a.field_;
  RatVector acc(f.order());
  const std::size_t d = f.degree();
  for (std::size_t i = 0; i < d; ++i) {
    if (a.coords_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b.coords_[j] == 0) continue;
      acc[f.mod(static_cast<long>(i + j))] += a.coords_[i] * b.coords_[j];
    }
  }
  return CycElt(a.field_, fold(f, acc));
}

CycElt operator*(const Rational& c, const CycElt& a) {
  CycElt r = a;
  for (auto& x : r.coords_) x *= c;
  return r;
}

bool operator==(const CycElt& a, const CycElt& b) {
  return a.order() == b.order() && a.coords_ == b.coords_;
}

CycElt CycElt::mul_zeta_power(long j) const {
  const CycField& f = *field_;
  RatVector acc(f.order());
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i] != 0) acc[f.mod(static_cast<long>(i) + j)] += coords_[i];
  return CycElt(field_, fold(f, acc));
}

CycElt inv(const CycElt& a) {
  if (a.is_zero()) throw Error(ErrorCode::kDivisionByZero, "inverse of zero in cyclotomic field");
  Polynomial s = inverse_mod(Polynomial(a.coords()), a.field()->modulus());
  RatVector c(a.field()->degree());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = s.coeff(i);
  return CycElt(a.field(), std::move(c));
}

CycElt automorphism(long s, const CycElt& a) {
  const CycField& f = *a.field();
  if (gcd_long(f.mod(s), f.order()) != 1) throw Error(ErrorCode::kInvalidArgument, "automorphism exponent not coprime to q");
  RatVector acc(f.order());
  for (std::size_t i = 0; i < a.coords().size(); ++i)
    if (a[i] != 0) acc[f.mod(s * static_cast<long>(i))] += a[i];
  return CycElt(a.field(), fold(f, acc));
}

CycElt conj(const CycElt& a) { return automorphism(a.order() - 1 == 0 ? 1 : a.order() - 1, a); }

RatMatrix multiplication_matrix(const CycElt& a) {
  const std::size_t d = a.field()->degree();
  RatMatrix m(d, d);
  for (std::size_t j = 0; j < d; ++j) m.set_column(j, a.mul_zeta_power(static_cast<long>(j)).coords());
  return m;
}

Rational norm(const CycElt& a) { return det(multiplication_matrix(a)); }

Rational trace(const CycElt& a) {
  Rational t = 0;
  for (std::size_t i = 0; i < a.coords().size(); ++i)
    if (a[i] != 0) t += a[i] * a.field()->trace_of_power(static_cast<long>(i));
  return t;
}

CycElt embed(const CycElt& a, long r) {
  const long q = a.order();
  if (r % q != 0) throw Error(ErrorCode::kInvalidArgument, "embed: q must divide r");
  auto big = CycField::get(r);
  RatVector acc(r);
  const long step = r / q;
  for (std::size_t i = 0; i < a.coords().size(); ++i)
    if (a[i] != 0) acc[big->mod(static_cast<long>(i) * step)] += a[i];
  return CycElt(big, fold(*big, acc));
}

CycElt restrict_to(const CycElt& a, long q) {
  const long r = a.order();
  if (r % q != 0) throw Error(ErrorCode::kInvalidArgument, "restrict_to: q must divide r");
  auto small = CycField::get(q);
  RatMatrix m(a.field()->degree(), small->degree());
  for (std::size_t j = 0; j < small->degree(); ++j)
    m.set_column(j, embed(CycElt::zeta_power(small, static_cast<long>(j)), r).coords());
  auto x = solve_overdetermined(m, a.coords());
  if (!x) throw Error(ErrorCode::kInvalidArgument, "element does not lie in the subfield");
  return CycElt(small, std::move(*x));
}

std::string to_string(const CycElt& a) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < a.coords().size(); ++i) out << (i ? " " : "") << format_rational(a[i]);
  out << "]_" << a.order();
  return out.str();
}

}  // namespace nib
