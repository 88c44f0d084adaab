#include "nib/abelian.hpp"

namespace nib {

AbelianGroup::AbelianGroup(std::vector<long> invariant_factors) : factors_(std::move(invariant_factors)) {
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    if (factors_[j] <= 1) throw Error(ErrorCode::kInvalidArgument, "invariant factors must exceed 1");
    if (j > 0 && factors_[j] % factors_[j - 1] != 0)
      throw Error(ErrorCode::kInvalidArgument, "invariant factors must form a divisibility chain");
    order_ *= static_cast<std::size_t>(factors_[j]);
  }
  mul_.resize(order_ * order_);
  inv_.resize(order_);
  orders_.resize(order_);
  std::vector<std::vector<long>> elems(order_);
  for (std::size_t i = 0; i < order_; ++i) elems[i] = element(i);
  for (std::size_t a = 0; a < order_; ++a) {
    std::vector<long> t(factors_.size());
    for (std::size_t b = 0; b < order_; ++b) {
      for (std::size_t j = 0; j < t.size(); ++j) t[j] = elems[a][j] + elems[b][j];
      mul_[a * order_ + b] = index(t);
    }
    for (std::size_t j = 0; j < t.size(); ++j) t[j] = -elems[a][j];
    inv_[a] = index(t);
    long o = 1;
    for (std::size_t j = 0; j < factors_.size(); ++j)
      o = lcm_long(o, factors_[j] / gcd_long(factors_[j], elems[a][j]));
    orders_[a] = o;
  }
}

std::vector<long> AbelianGroup::element(std::size_t i) const {
  std::vector<long> t(factors_.size());
  for (std::size_t j = factors_.size(); j-- > 0;) {
    t[j] = static_cast<long>(i % factors_[j]);
    i /= factors_[j];
  }
  return t;
}

std::size_t AbelianGroup::index(const std::vector<long>& tuple) const {
  std::size_t idx = 0;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    long v = tuple[j] % factors_[j];
    if (v < 0) v += factors_[j];
    idx = idx * factors_[j] + static_cast<std::size_t>(v);
  }
  return idx;
}

std::size_t AbelianGroup::power(std::size_t a, long k) const {
  auto t = element(a);
  for (auto& x : t) x *= k;
  return index(t);
}

GroupPresentation normalize_presentation(const IntMatrix& relations) {
  const std::size_t s = relations.rows();
  SnfResult f = snf(relations);
  if (f.diagonal.size() < s) throw Error(ErrorCode::kInvalidArgument, "presentation defines an infinite group");
  std::vector<long> factors;
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < s; ++i) {
    if (f.diagonal[i] == 0) throw Error(ErrorCode::kInvalidArgument, "presentation defines an infinite group");
    if (f.diagonal[i] == 1) continue;
    factors.push_back(f.diagonal[i].get_si());
    rows.push_back(i);
  }
  IntMatrix to(rows.size(), s), from(s, rows.size());
  IntMatrix uinv = to_integer(inverse(to_rational(f.u)));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < s; ++c) to(r, c) = f.u(rows[r], c);
    for (std::size_t c = 0; c < s; ++c) from(c, r) = uinv(c, rows[r]);
  }
  return {AbelianGroup(std::move(factors)), std::move(to), std::move(from)};
}

std::vector<Character> dual_group(const AbelianGroup& g) {
  std::vector<Character> chars(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) {
    chars[i].exponents = g.element(i);
    chars[i].order = g.element_order(i);
  }
  return chars;
}

long character_exponent(const AbelianGroup& g, const Character& chi, std::size_t element) {
  const long r = g.exponent();
  auto a = g.element(element);
  long e = 0;
  for (std::size_t j = 0; j < a.size(); ++j) e = (e + chi.exponents[j] * (r / g.factors()[j]) % r * a[j]) % r;
  return e;
}

std::vector<CycElt> character_matrix(const AbelianGroup& g) {
  auto field = CycField::get(g.exponent());
  auto chars = dual_group(g);
  const std::size_t n = g.order();
  std::vector<CycElt> a;
  a.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a.push_back(CycElt::zeta_power(field, character_exponent(g, chars[i], j)));
  return a;
}

Selection select_nonconjugate(const AbelianGroup& g, const std::vector<Character>& chars) {
  Selection sel;
  std::map<std::vector<long>, std::size_t> position;
  for (std::size_t i = 0; i < chars.size(); ++i) position[chars[i].exponents] = i;
  std::vector<bool> covered(chars.size(), false);
  const std::vector<long>& d = g.factors();
  const std::size_t m = d.size();
  for (std::size_t i = 0; i < chars.size(); ++i) {
    if (covered[i]) continue;
    covered[i] = true;
    sel.selected.push_back(i);
    const long q = chars[i].order;
    for (long s = 2; s < q; ++s) {
      if (gcd_long(s, q) != 1) continue;
      std::vector<long> e(m);
      for (std::size_t j = 0; j < m; ++j) e[j] = chars[i].exponents[j] * s % d[j];
      std::size_t idx = position.at(e);
      if (covered[idx]) throw Error(ErrorCode::kInternal, "character conjugacy classes overlap");
      covered[idx] = true;
      sel.conjugates[idx] = ConjugateRef{i, s};
    }
  }
  return sel;
}

std::map<long, long> multiplicity_check(const AbelianGroup& g) {
  std::map<long, long> counts;
  for (long q : divisors(static_cast<long>(g.order()))) counts[q] = 0;
  for (std::size_t i = 0; i < g.order(); ++i) ++counts[g.element_order(i)];
  std::map<long, long> a;
  for (auto [q, nq] : counts) {
    const long ph = euler_phi(q);
    if (nq % ph != 0) throw Error(ErrorCode::kInternal, "element count not divisible by phi(q)");
    a[q] = nq / ph;
  }
  return a;
}

std::map<long, long> cyclic_subgroup_counts(const AbelianGroup& g) {
  std::map<long, long> counts;
  for (long q : divisors(static_cast<long>(g.order()))) counts[q] = 0;
  std::vector<bool> seen(g.order(), false);
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (seen[i]) continue;
    const long o = g.element_order(i);
    // Mark all generators of <g_i>.
    for (long s = 1; s <= o; ++s)
      if (gcd_long(s, o) == 1) seen[g.power(i, s)] = true;
    ++counts[o];
  }
  return counts;
}

CharacterSystem::CharacterSystem(GroupPtr group) : group_(std::move(group)) {
  auto all = dual_group(*group_);
  Selection sel = select_nonconjugate(*group_, all);
  const std::size_t n = all.size();
  k_ = sel.selected.size();
  std::vector<std::size_t> slot_of(n);
  for (std::size_t idx : sel.selected) {
    slot_of[idx] = original_.size();
    original_.push_back(idx);
  }
  for (const auto& [idx, ref] : sel.conjugates) {
    slot_of[idx] = original_.size();
    original_.push_back(idx);
  }
  conj_slot_.assign(n, 0);
  conj_s_.assign(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    chars_.push_back(all[original_[i]]);
    conj_slot_[i] = i;
  }
  for (const auto& [idx, ref] : sel.conjugates) {
    conj_slot_[slot_of[idx]] = slot_of[ref.selected];
    conj_s_[slot_of[idx]] = ref.s;
  }
  exps_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) exps_[i * n + j] = character_exponent(*group_, chars_[i], j);
}

CycElt CharacterSystem::value(std::size_t i, std::size_t j) const {
  return CycElt::zeta_power(CycField::get(order(i)), local_exponent(i, j));
}

std::vector<CycElt> CharacterSystem::matrix() const {
  auto field = CycField::get(exponent());
  const std::size_t n = size();
  std::vector<CycElt> a;
  a.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a.push_back(CycElt::zeta_power(field, value_exponent(i, j)));
  return a;
}

std::vector<CycElt> CharacterSystem::inverse_matrix() const {
  auto field = CycField::get(exponent());
  const std::size_t n = size();
  const Rational scale(1, static_cast<unsigned long>(n));
  std::vector<CycElt> a;
  a.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a.push_back(scale * CycElt::zeta_power(field, -value_exponent(j, i)));
  return a;
}

std::vector<long> CharacterSystem::selected_orders() const {
  std::vector<long> q;
  for (std::size_t i = 0; i < k_; ++i) q.push_back(order(i));
  return q;
}

}  // namespace nib
