#include "nib/group_ring.hpp"

namespace nib {

GroupRingElt::GroupRingElt(GroupPtr group) : group_(std::move(group)), coeffs_(group_->order()) {}

GroupRingElt::GroupRingElt(GroupPtr group, RatVector coeffs) : group_(std::move(group)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != group_->order())
    throw Error(ErrorCode::kInvalidArgument, "group ring coefficient count must equal |G|");
}

GroupRingElt GroupRingElt::identity(GroupPtr group) { return basis(std::move(group), 0); }

GroupRingElt GroupRingElt::basis(GroupPtr group, std::size_t element) {
  GroupRingElt e(std::move(group));
  e.coeffs_.at(element) = 1;
  return e;
}

bool GroupRingElt::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

namespace {

void check_same_group(const GroupRingElt& a, const GroupRingElt& b) {
  if (!(*a.group() == *b.group())) throw Error(ErrorCode::kInvalidArgument, "group ring elements over different groups");
}

}  // namespace

GroupRingElt operator+(const GroupRingElt& a, const GroupRingElt& b) {
  check_same_group(a, b);
  GroupRingElt r = a;
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
  return r;
}

GroupRingElt operator-(const GroupRingElt& a, const GroupRingElt& b) { return a + Rational(-1) * b; }

GroupRingElt operator*(const Rational& c, const GroupRingElt& a) {
  GroupRingElt r = a;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

GroupRingElt gr_mul(const GroupRingElt& a, const GroupRingElt& b) {
  check_same_group(a, b);
  const AbelianGroup& g = *a.group();
  RatVector out(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < g.order(); ++j)
      if (b[j] != 0) out[g.mul(i, j)] += a[i] * b[j];
  }
  return GroupRingElt(a.group(), std::move(out));
}

std::vector<CycElt> idempotent(const AbelianGroup& g, const Character& chi) {
  auto field = CycField::get(g.exponent());
  const Rational inv_n(1, static_cast<long>(g.order()));
  std::vector<CycElt> out;
  out.reserve(g.order());
  for (std::size_t j = 0; j < g.order(); ++j)
    out.push_back(inv_n * CycElt::zeta_power(field, character_exponent(g, chi, g.inv(j))));
  return out;
}

std::vector<CycElt> cyc_gr_mul(const AbelianGroup& g, const std::vector<CycElt>& a, const std::vector<CycElt>& b) {
  auto field = CycField::get(g.exponent());
  std::vector<CycElt> out(g.order(), CycElt(field));
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < g.order(); ++j)
      if (!b[j].is_zero()) out[g.mul(i, j)] += a[i] * b[j];
  }
  return out;
}

GroupRingElt rational_idempotent(GroupPtr group, const Character& chi) {
  if (chi.order > 2) throw Error(ErrorCode::kInvalidArgument, "idempotent is not rational for characters of order > 2");
  std::vector<CycElt> e = idempotent(*group, chi);
  RatVector c(e.size());
  for (std::size_t j = 0; j < e.size(); ++j) c[j] = e[j][0];
  return GroupRingElt(std::move(group), std::move(c));
}

GroupRingElt orbit_idempotent(const CharacterSystem& sys, std::size_t selected) {
  const AbelianGroup& g = sys.group();
  auto field = CycField::get(g.exponent());
  std::vector<CycElt> sum(g.order(), CycElt(field));
  for (std::size_t i = 0; i < sys.size(); ++i) {
    std::size_t owner = i < sys.selected_count() ? i : sys.conjugate_of(i);
    if (owner != selected) continue;
    std::vector<CycElt> e = idempotent(g, sys.character(i));
    for (std::size_t j = 0; j < g.order(); ++j) sum[j] += e[j];
  }
  RatVector c(g.order());
  for (std::size_t j = 0; j < g.order(); ++j) {
    if (!sum[j].is_rational()) throw Error(ErrorCode::kInternal, "orbit idempotent is not rational");
    c[j] = sum[j][0];
  }
  return GroupRingElt(sys.group_ptr(), std::move(c));
}

DecomposedElt psi_forward(const GroupRingElt& h, const SystemPtr& sys) {
  if (!(*h.group() == sys->group())) throw Error(ErrorCode::kInvalidArgument, "group ring element over a different group");
  DecomposedElt out{sys, {}};
  out.values.reserve(sys->selected_count());
  for (std::size_t i = 0; i < sys->selected_count(); ++i) {
    const long q = sys->order(i);
    RatVector acc(q);
    for (std::size_t j = 0; j < h.size(); ++j)
      if (h[j] != 0) acc[sys->local_exponent(i, j)] += h[j];
    out.values.push_back(CycElt::from_zeta_powers(CycField::get(q), acc));
  }
  return out;
}

std::vector<CycElt> psi_extend(const DecomposedElt& c) {
  const CharacterSystem& sys = *c.system;
  if (c.values.size() != sys.selected_count())
    throw Error(ErrorCode::kInvalidArgument, "decomposed element has the wrong number of components");
  std::vector<CycElt> full = c.values;
  for (std::size_t i = sys.selected_count(); i < sys.size(); ++i)
    full.push_back(automorphism(sys.conjugate_exponent(i), c.values[sys.conjugate_of(i)]));
  return full;
}

PsiInverse psi_inverse(const DecomposedElt& c) {
  const CharacterSystem& sys = *c.system;
  const std::vector<CycElt> full = psi_extend(c);
  const long r = sys.exponent();
  auto field = CycField::get(r);
  const std::size_t n = sys.size();
  // Each c_i lifted to Q(zeta_r) as an accumulator over zeta_r powers.
  std::vector<RatVector> lifted(n, RatVector(r));
  for (std::size_t i = 0; i < n; ++i) {
    const long step = r / full[i].order();
    for (std::size_t a = 0; a < full[i].coords().size(); ++a)
      if (full[i][a] != 0) lifted[i][(static_cast<long>(a) * step) % r] += full[i][a];
  }
  // h_l = (1/n) sum_i chi_i(g_l^-1) c_i
  RatVector h(n);
  const Rational inv_n(1, static_cast<long>(n));
  for (std::size_t l = 0; l < n; ++l) {
    RatVector acc(r);
    for (std::size_t i = 0; i < n; ++i) {
      const long shift = r - sys.value_exponent(i, l);
      for (long a = 0; a < r; ++a)
        if (lifted[i][a] != 0) acc[(a + shift) % r] += lifted[i][a];
    }
    CycElt v = CycElt::from_zeta_powers(field, acc);
    if (!v.is_rational()) throw Error(ErrorCode::kInternal, "psi inverse produced a non-rational coefficient");
    h[l] = v[0] * inv_n;
  }
  PsiInverse out;
  out.is_integral = nib::is_integral(h);
  out.h = GroupRingElt(sys.group_ptr(), std::move(h));
  return out;
}

DecomposedElt operator*(const DecomposedElt& a, const DecomposedElt& b) {
  if (a.values.size() != b.values.size()) throw Error(ErrorCode::kInvalidArgument, "component count mismatch");
  DecomposedElt out{a.system, {}};
  for (std::size_t i = 0; i < a.values.size(); ++i) out.values.push_back(a.values[i] * b.values[i]);
  return out;
}

FieldElement act(const GroupRingElt& h, const FieldElement& x, const GaloisAction& action) {
  if (action.size() != h.size()) throw Error(ErrorCode::kInvalidArgument, "action table size must equal |G|");
  FieldElement out{RatVector(x.coords.size())};
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i] == 0) continue;
    FieldElement y = action.apply(i, x);
    for (std::size_t k = 0; k < y.coords.size(); ++k) out.coords[k] += h[i] * y.coords[k];
  }
  return out;
}

}  // namespace nib
