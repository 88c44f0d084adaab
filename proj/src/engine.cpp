#include "nib/engine.hpp"

#include <chrono>
#include <map>

namespace nib {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::kInvalidInput, what); }

RatVector padded(const Polynomial& p, std::size_t n) {
  RatVector v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = p.coeff(k);
  return v;
}

RatMatrix columns_of(const std::vector<FieldElement>& xs, std::size_t n) {
  RatMatrix m(n, xs.size());
  for (std::size_t j = 0; j < xs.size(); ++j) m.set_column(j, xs[j].coords);
  return m;
}

// Images x_1..x_s in the action table of the standard generators, each of
// order d_j, spanning a subgroup of the full size.
bool find_isomorphism(const std::vector<std::vector<std::size_t>>& table, const std::vector<long>& orders,
                      const std::vector<long>& factors, std::vector<std::size_t>& images) {
  const std::size_t n = table.size();
  std::vector<std::size_t> span{0};
  auto rec = [&](auto&& self, std::size_t k) -> bool {
    if (k == factors.size()) return span.size() == n;
    const long d = factors[k];
    for (std::size_t x = 0; x < n; ++x) {
      if (orders[x] != d) continue;
      std::vector<bool> in(n, false);
      for (std::size_t y : span) in[y] = true;
      bool independent = true;
      for (std::size_t p = x; p != 0 && independent; p = table[p][x]) independent = !in[p];
      if (!independent) continue;
      const std::vector<std::size_t> saved = span;
      std::vector<std::size_t> grown;
      for (std::size_t p = 0, a = 0; a < static_cast<std::size_t>(d); ++a, p = table[p][x])
        for (std::size_t y : saved) grown.push_back(table[p][y]);
      span = std::move(grown);
      images.push_back(x);
      if (self(self, k + 1)) return true;
      images.pop_back();
      span = saved;
    }
    return false;
  };
  return rec(rec, 0);
}

class Stopwatch {
 public:
  explicit Stopwatch(std::vector<StageTime>& out) : out_(out), start_(std::chrono::steady_clock::now()) {}
  void lap(const std::string& stage) {
    auto now = std::chrono::steady_clock::now();
    out_.push_back({stage, std::chrono::duration<double, std::milli>(now - start_).count()});
    start_ = now;
  }

 private:
  std::vector<StageTime>& out_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

ValidatedField validate_input(const AbelianFieldInput& in) {
  ValidatedField v;
  v.input_ = in;
  if (in.minpoly.size() < 2) invalid("minpoly must have degree at least 1");
  if (in.minpoly.back() != 1) invalid("minpoly must be monic");
  v.field_ = std::make_shared<const NumberField>(in.minpoly);
  const NumberField& k = *v.field_;
  const std::size_t n = k.degree();
  try {
    v.group_ = std::make_shared<const AbelianGroup>(in.group);
  } catch (const Error& e) {
    invalid(std::string("group: ") + e.what());
  }
  if (v.group_->order() != n) invalid("group order " + std::to_string(v.group_->order()) + " differs from the degree " + std::to_string(n));
  if (in.action.size() != n) invalid("action must list " + std::to_string(n) + " polynomials");
  if (in.integral_basis.rows() != n || in.integral_basis.cols() != n) invalid("integral_basis must be " + std::to_string(n) + " x " + std::to_string(n));

  const Polynomial& m = k.modulus();
  std::map<RatVector, std::size_t> lookup;
  for (std::size_t i = 0; i < n; ++i) {
    const Polynomial& p = in.action[i];
    if (p.degree() >= static_cast<int>(n)) invalid("action polynomial " + std::to_string(i + 1) + " has degree >= n");
    if (!m.compose_mod(p, m).is_zero()) invalid("action polynomial " + std::to_string(i + 1) + " does not map alpha to a root of minpoly");
    if (!lookup.emplace(padded(p, n), i).second) invalid("action polynomials " + std::to_string(i + 1) + " repeat an earlier entry");
  }
  if (!(in.action[0] == Polynomial::x()) && n > 1) invalid("the first action polynomial must be x");
  if (n == 1 && !(padded(in.action[0], 1) == padded(Polynomial::x() % m, 1))) invalid("the first action polynomial must be x");

  // table[i][j]: g_i(g_j(alpha)) = p_j(p_i(alpha)).
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto it = lookup.find(padded(in.action[j].compose_mod(in.action[i], m), n));
      if (it == lookup.end()) invalid("action table does not close: g_" + std::to_string(i + 1) + " g_" + std::to_string(j + 1) + " is missing");
      table[i][j] = it->second;
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (table[i][j] != table[j][i]) invalid("action table is not abelian");
  std::vector<long> orders(n, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t p = i; p != 0; p = table[p][i]) {
      if (orders[i] > static_cast<long>(n)) invalid("action table is not a group");
      ++orders[i];
    }
  std::vector<std::size_t> images;
  if (!find_isomorphism(table, orders, v.group_->factors(), images)) invalid("action table is not isomorphic to the stated group");
  v.element_to_input_.resize(n);
  std::vector<Polynomial> ordered(n);
  for (std::size_t e = 0; e < n; ++e) {
    const auto tuple = v.group_->element(e);
    std::size_t p = 0;
    for (std::size_t j = 0; j < tuple.size(); ++j)
      for (long a = 0; a < tuple[j]; ++a) p = table[p][images[j]];
    v.element_to_input_[e] = p;
    ordered[e] = in.action[p];
  }
  v.action_ = GaloisAction(k, ordered);
  v.system_ = std::make_shared<const CharacterSystem>(v.group_);

  v.trace_form_ = RatMatrix(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b)
      v.trace_form_(a, b) = v.trace_form_(b, a) = k.trace(k.from_polynomial(Polynomial::monomial(1, a + b)));

  if (det(columns_of(conjugates(k.generator(), v), n)) == 0) invalid("the conjugates of alpha are linearly dependent");
  const RatMatrix& w = in.integral_basis;
  if (det(w) == 0) invalid("integral_basis is singular");
  v.basis_inverse_ = inverse(w);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      FieldElement p = k.mul({w.column(i)}, {w.column(j)});
      if (!is_integral(v.basis_inverse_ * p.coords))
        invalid("integral_basis is not closed under multiplication (beta_" + std::to_string(i + 1) + " beta_" + std::to_string(j + 1) + ")");
    }
  if (!is_integral(v.basis_inverse_ * k.one().coords)) invalid("integral_basis does not contain 1");
  std::vector<FieldElement> beta;
  for (std::size_t j = 0; j < n; ++j) beta.push_back({w.column(j)});
  const Rational d = discriminant_of_set(beta, v);
  if (d.get_den() != 1) invalid("integral basis has a non-integral discriminant");
  v.discriminant_ = d.get_num();
  return v;
}

std::vector<FieldElement> conjugates(const FieldElement& x, const ValidatedField& f) {
  std::vector<FieldElement> out;
  for (std::size_t i = 0; i < f.degree(); ++i) out.push_back(f.action().apply(i, x));
  return out;
}

Rational discriminant_of_set(const std::vector<FieldElement>& xs, const ValidatedField& f) {
  if (xs.size() != f.degree()) throw Error(ErrorCode::kInvalidArgument, "discriminant needs exactly n elements");
  const RatMatrix x = columns_of(xs, f.degree());
  return det(x.transpose() * f.trace_form() * x);
}

Integer field_discriminant(const ValidatedField& f) { return f.discriminant(); }

RatMatrix solve_bij(const ValidatedField& f, const Integer& d) {
  if (d == 0) throw Error(ErrorCode::kInvalidArgument, "D must be nonzero");
  const RatMatrix c = columns_of(conjugates(f.field().generator(), f), f.degree());
  RatMatrix b = inverse(c) * f.input().integral_basis;
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) *= d;
  return b;
}

IntMatrix compute_bij(const ValidatedField& f, const Integer& d) {
  RatMatrix b = solve_bij(f, d);
  if (!is_integral(b)) throw Error(ErrorCode::kNotIntegral, "b_ij is not integral for this D");
  return to_integer(b);
}

std::vector<CycIdeal> build_ideal_components(const IntMatrix& b, const SystemPtr& sys) {
  const std::size_t n = sys->size();
  if (b.rows() != n || b.cols() != n) throw Error(ErrorCode::kInvalidArgument, "b must be n x n");
  std::vector<std::vector<CycElt>> rows(sys->selected_count());
  for (std::size_t j = 0; j < n; ++j) {
    auto c = psi_forward(GroupRingElt(sys->group_ptr(), to_rational(b.column(j))), sys);
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i].push_back(c.values[i]);
  }
  std::vector<CycIdeal> out;
  for (const auto& r : rows) out.push_back(ideal_from_generators(r));
  return out;
}

RatVector basis_coordinates(const FieldElement& x, const ValidatedField& f) { return f.basis_inverse() * x.coords; }

FieldElement from_basis_coordinates(const RatVector& c, const ValidatedField& f) {
  if (c.size() != f.degree()) throw Error(ErrorCode::kInvalidArgument, "expected n coordinates");
  return {f.input().integral_basis * c};
}

bool verify_nib(const FieldElement& theta, const ValidatedField& f) {
  if (theta.coords.size() != f.degree()) return false;
  if (!is_integral(basis_coordinates(theta, f))) return false;
  return discriminant_of_set(conjugates(theta, f), f) == Rational(field_discriminant(f));
}

bool hilbert_speiser_check(const Integer& conductor) {
  if (conductor <= 0) throw Error(ErrorCode::kInvalidArgument, "conductor must be positive");
  Integer c = conductor;
  for (Integer p = 2; p * p <= c; ++p) {
    if (c % p != 0) continue;
    c /= p;
    if (c % p == 0) return false;
  }
  return true;
}

const char* status_name(Status s) {
  switch (s) {
    case Status::kFound: return "FOUND";
    case Status::kNonexistent: return "NONEXISTENT";
    case Status::kInconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

NIBResult solve(const ValidatedField& f, const SolveConfig& cfg) {
  NIBResult r;
  Stopwatch clock(r.timings);
  const NumberField& k = f.field();
  const SystemPtr& sys = f.system();
  for (long q : sys->selected_orders())
    if (!is_supported_order(q))
      throw Error(ErrorCode::kUnsupportedField, "character order " + std::to_string(q) + " is outside the class-number-one list");

  r.field_discriminant = field_discriminant(f);
  const FieldElement alpha = k.generator();
  const Rational dc = discriminant_of_set(conjugates(alpha, f), f);
  if (dc.get_den() != 1 || dc == 0) throw Error(ErrorCode::kInternal, "conjugate discriminant of alpha is not a nonzero integer");
  r.d = dc.get_num() * cfg.d_multiplier;
  clock.lap("discriminant");

  RatMatrix bq = solve_bij(f, r.d);
  if (!is_integral(bq)) {
    Integer l = 1;
    for (std::size_t i = 0; i < bq.rows(); ++i)
      for (std::size_t j = 0; j < bq.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), bq(i, j).get_den_mpz_t());
    r.d *= l;
    bq = solve_bij(f, r.d);
    if (!is_integral(bq)) throw Error(ErrorCode::kInternal, "b_ij stays non-integral after enlarging D");
  }
  r.b = to_integer(bq);
  const FieldElement alpha_prime = k.scale(Rational(1) / Rational(r.d), alpha);
  clock.lap("bij");

  r.ideals = build_ideal_components(r.b, sys);
  clock.lap("ideals");
  ProductElt d;
  try {
    for (const CycIdeal& j : r.ideals) d.components.push_back(find_generator(j, cfg.search));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kResourceLimit) throw;
    r.status = Status::kInconclusive;
    r.cap = std::string("generator search: ") + e.what();
    clock.lap("generators");
    return r;
  }
  r.generators = d.components;
  clock.lap("generators");

  CosetEnumerator cosets(sys, cfg.coset_cap);
  const Residue dres = cosets.residue(d);
  for (std::size_t i = 0; cosets.reach(i); ++i) {
    r.cosets_examined = i + 1;
    if (!cosets.lands_in_image(i, dres)) continue;
    const ProductElt ud = mul(cosets.unit(i), d);
    PsiInverse t = psi_inverse(as_decomposed(ud, sys));
    if (!t.is_integral) throw Error(ErrorCode::kInternal, "residue test and exact inverse disagree");
    FieldElement theta = act(t.h, alpha_prime, f.action());
    if (!verify_nib(theta, f)) continue;
    clock.lap("search");
    r.status = Status::kFound;
    r.theta = theta;
    r.theta_basis = to_integer(basis_coordinates(theta, f));
    r.theta_minpoly = squarefree_part(k.charpoly(theta));
    r.conjugate_discriminant = discriminant_of_set(conjugates(theta, f), f);
    r.t = t.h;
    r.coset_index = i;
    r.coset_word = cosets.exponents(i);
    r.cosets_complete = cosets.complete();
    clock.lap("verify");
    return r;
  }
  clock.lap("search");
  r.cosets_complete = cosets.complete();
  if (r.cosets_complete) {
    r.status = Status::kNonexistent;
    r.certificate = "S exhausted: no unit adjustment of the generators lies in the group ring (|S| = " + std::to_string(cosets.size()) + ")";
  } else {
    r.status = Status::kInconclusive;
    r.cap = cosets.capped() ? "coset cap " + std::to_string(cfg.coset_cap) + " reached"
                            : "unit generators do not cover the full unit group";
  }
  return r;
}

}  // namespace nib
