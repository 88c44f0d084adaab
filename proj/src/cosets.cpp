#include "nib/cosets.hpp"

#include <limits>

namespace nib {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) {
  a %= n;
  return a < 0 ? a + n : a;
}

// a * x + b * y = g > 0 for x > 0.
std::int64_t ext_gcd(std::int64_t x, std::int64_t y, std::int64_t& a, std::int64_t& b) {
  std::int64_t r0 = x, r1 = y, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1, t;
    t = r0 - q * r1, r0 = r1, r1 = t;
    t = s0 - q * s1, s0 = s1, s1 = t;
    t = t0 - q * t1, t0 = t1, t1 = t;
  }
  if (r0 < 0) r0 = -r0, s0 = -s0, t0 = -t0;
  a = s0, b = t0;
  return r0;
}

}  // namespace

CosetEnumerator::CosetEnumerator(SystemPtr sys, std::size_t cap)
    : sys_(std::move(sys)), ring_(*sys_), n_(static_cast<std::int64_t>(sys_->size())), cap_(std::max<std::size_t>(cap, 1)) {
  if (n_ >= std::numeric_limits<char16_t>::max()) throw Error(ErrorCode::kResourceLimit, "group too large for coset keys");
  units_complete_ = true;
  for (std::size_t i = 0; i < ring_.size(); ++i) {
    const long q = ring_.orders()[i];
    units_complete_ = units_complete_ && unit_generators_complete(q);
    for (const CycElt& v : unit_generators(q)) gens_.push_back(ring_.embed_component(i, v));
  }
  for (const auto& g : gens_) gen_residues_.push_back(residue(g));

  const std::size_t k = ring_.size();
  image_shifts_.assign(sys_->size(), std::vector<long>(k));
  for (std::size_t j = 0; j < sys_->size(); ++j)
    for (std::size_t i = 0; i < k; ++i) image_shifts_[j][i] = sys_->local_exponent(i, j);

  const Residue one = residue(ring_.one());
  std::vector<Residue> image;
  for (std::size_t j = 0; j < sys_->size(); ++j) image.push_back(shifted(one, j));
  image_rows_ = hermite_rows(std::move(image));

  remember(0, one);
}

Residue CosetEnumerator::residue(const ProductElt& x) const {
  if (x.components.size() != ring_.size()) throw Error(ErrorCode::kInvalidArgument, "component count mismatch");
  Residue r(ring_.rank());
  for (std::size_t i = 0; i < ring_.size(); ++i) {
    const CycElt& c = x.components[i];
    if (!c.is_integral()) throw Error(ErrorCode::kNotIntegral, "residue of a non-integral element");
    for (std::size_t a = 0; a < c.coords().size(); ++a) {
      Integer v = c[a].get_num();
      mpz_fdiv_r_ui(v.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(n_));
      r[ring_.offset(i) + a] = v.get_si();
    }
  }
  return r;
}

Residue CosetEnumerator::multiply(const Residue& a, const Residue& b) const {
  Residue out(a.size());
  for (std::size_t i = 0; i < ring_.size(); ++i) {
    const long q = ring_.orders()[i];
    const CycField& f = *CycField::get(q);
    const std::size_t d = f.degree(), off = ring_.offset(i);
    std::vector<std::int64_t> acc(q, 0);
    for (std::size_t s = 0; s < d; ++s) {
      if (a[off + s] == 0) continue;
      for (std::size_t t = 0; t < d; ++t)
        if (b[off + t] != 0) acc[(s + t) % q] = (acc[(s + t) % q] + a[off + s] * b[off + t]) % n_;
    }
    for (long e = 0; e < q; ++e) {
      if (acc[e] == 0) continue;
      const auto& p = f.power(e);
      for (std::size_t l = 0; l < d; ++l)
        if (p[l] != 0) out[off + l] += acc[e] * p[l];
    }
    for (std::size_t l = 0; l < d; ++l) out[off + l] = mod(out[off + l], n_);
  }
  return out;
}

Residue CosetEnumerator::shifted(const Residue& r, std::size_t element) const {
  Residue out(r.size());
  for (std::size_t i = 0; i < ring_.size(); ++i) {
    const long q = ring_.orders()[i];
    const CycField& f = *CycField::get(q);
    const std::size_t d = f.degree(), off = ring_.offset(i);
    const long e = image_shifts_[element][i];
    for (std::size_t s = 0; s < d; ++s) {
      if (r[off + s] == 0) continue;
      const auto& p = f.power(static_cast<long>(s) + e);
      for (std::size_t l = 0; l < d; ++l)
        if (p[l] != 0) out[off + l] += r[off + s] * p[l];
    }
    for (std::size_t l = 0; l < d; ++l) out[off + l] = mod(out[off + l], n_);
  }
  return out;
}

std::vector<Residue> CosetEnumerator::hermite_rows(std::vector<Residue> gens) const {
  const std::size_t dim = ring_.rank();
  std::vector<Residue> piv(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    Residue p(dim, 0);
    p[j] = n_;
    for (auto& g : gens) {
      if (g[j] == 0) continue;
      std::int64_t a, b;
      const std::int64_t gg = ext_gcd(p[j], g[j], a, b);
      const std::int64_t u = p[j] / gg, v = g[j] / gg;
      for (std::size_t k = j + 1; k < dim; ++k) {
        const std::int64_t pk = p[k], gk = g[k];
        p[k] = mod(a * pk + b * gk, n_);
        g[k] = mod(u * gk - v * pk, n_);
      }
      p[j] = gg;
      g[j] = 0;
    }
    piv[j] = std::move(p);
  }
  for (std::size_t j = 0; j < dim; ++j) {
    Residue& p = piv[j];
    for (std::size_t k = j + 1; k < dim; ++k) {
      const std::int64_t c = p[k] / piv[k][k];
      if (c == 0) continue;
      for (std::size_t l = k; l < dim; ++l) p[l] = mod(p[l] - c * piv[k][l], n_);
    }
  }
  return piv;
}

std::u16string CosetEnumerator::key(const Residue& r) const {
  std::vector<Residue> gens;
  gens.reserve(sys_->size());
  for (std::size_t j = 0; j < sys_->size(); ++j) gens.push_back(shifted(r, j));
  const auto rows = hermite_rows(std::move(gens));
  std::u16string k;
  const std::size_t dim = ring_.rank();
  k.reserve(dim * (dim + 1) / 2);
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t l = j; l < dim; ++l) k.push_back(static_cast<char16_t>(rows[j][l]));
  return k;
}

bool CosetEnumerator::in_image(Residue v) const {
  const std::size_t dim = ring_.rank();
  for (std::size_t j = 0; j < dim; ++j) {
    v[j] = mod(v[j], n_);
    if (v[j] == 0) continue;
    const Residue& p = image_rows_[j];
    if (v[j] % p[j] != 0) return false;
    const std::int64_t c = v[j] / p[j];
    for (std::size_t l = j; l < dim; ++l) v[l] = mod(v[l] - c * p[l], n_);
  }
  return true;
}

std::vector<std::pair<std::size_t, long>> CosetEnumerator::exponents(std::size_t i) const {
  if (i >= size_) throw Error(ErrorCode::kInvalidArgument, "coset index out of range");
  std::vector<std::pair<std::size_t, long>> out;
  for (auto l = levels_.rbegin(); l != levels_.rend(); ++l) {
    const std::size_t e = i / l->base;
    i %= l->base;
    if (e != 0) out.emplace_back(l->generator, static_cast<long>(e));
  }
  return {out.rbegin(), out.rend()};
}

Residue CosetEnumerator::unit_residue(std::size_t i) const {
  Residue r = residue(ring_.one());
  for (auto l = levels_.rbegin(); l != levels_.rend(); ++l) {
    const std::size_t e = i / l->base;
    i %= l->base;
    if (e != 0) r = multiply(r, l->powers.at(e));
  }
  return r;
}

ProductElt CosetEnumerator::unit(std::size_t i) const {
  ProductElt u = ring_.one();
  for (auto [g, e] : exponents(i))
    for (long k = 0; k < e; ++k) u = mul(u, gens_[g]);
  return u;
}

bool CosetEnumerator::lands_in_image(std::size_t i, const Residue& x) const {
  return in_image(multiply(unit_residue(i), x));
}

bool CosetEnumerator::lands_in_image(std::size_t i, const ProductElt& x) const {
  return lands_in_image(i, residue(x));
}

bool CosetEnumerator::known(const Residue& r, std::size_t below) const {
  const std::u16string k = key(r);
  auto [lo, hi] = seen_.equal_range(std::hash<std::u16string>{}(k));
  for (auto it = lo; it != hi; ++it)
    if (it->second < below && key(unit_residue(it->second)) == k) return true;
  return false;
}

void CosetEnumerator::remember(std::size_t index, const Residue& r) {
  seen_.emplace(std::hash<std::u16string>{}(key(r)), static_cast<std::uint32_t>(index));
}

void CosetEnumerator::step() {
  if (!level_open_) {
    if (next_gen_ == gens_.size()) {
      closed_ = true;
      return;
    }
    const std::size_t g = next_gen_++;
    if (known(gen_residues_[g], size_)) return;
    levels_.push_back({g, size_, {residue(ring_.one()), gen_residues_[g]}});
    level_open_ = true;
    fill_ = 0;
    return;
  }
  if (size_ >= cap_) {
    capped_ = true;
    return;
  }
  Level& l = levels_.back();
  const std::size_t j = l.powers.size() - 1;
  Residue r = multiply(l.powers[j], unit_residue(fill_));
  remember(j * l.base + fill_, r);
  ++size_;
  if (++fill_ < l.base) return;
  Residue h = multiply(l.powers[j], gen_residues_[l.generator]);
  if (known(h, l.base)) {
    level_open_ = false;
  } else {
    l.powers.push_back(std::move(h));
    fill_ = 0;
  }
}

bool CosetEnumerator::reach(std::size_t i) {
  while (size_ <= i && !closed_ && !capped_) step();
  return i < size_;
}

void CosetEnumerator::close() {
  while (!closed_ && !capped_) step();
}

CosetRepSet coset_representatives(const SystemPtr& sys, std::size_t cap) {
  CosetEnumerator e(sys, cap);
  e.close();
  CosetRepSet out;
  for (std::size_t i = 0; i < e.size(); ++i) out.units.push_back(e.unit(i));
  out.complete = e.complete();
  out.generator_count = e.generator_count();
  return out;
}

}  // namespace nib
