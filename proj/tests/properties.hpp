#pragma once

// Property checks shared by the unit tests and the acceptance run. Each
// returns an empty string on success, otherwise the first failure.

#include <cmath>
#include <complex>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "nib/group_ring.hpp"
#include "nib/ideals.hpp"
#include "support.hpp"

namespace nib::testing {

namespace oracle {

// Coefficients of Phi_q, ascending, for the three fields of the oracle.
inline std::vector<long> phi_coeffs(long q) {
  if (q == 3) return {1, 1, 1};
  if (q == 4) return {1, 0, 1};
  return {1, 1, 1, 1, 1};
}

inline std::vector<long> times_zeta(const std::vector<long>& v, const std::vector<long>& phi) {
  const std::size_t d = v.size();
  std::vector<long> out(d, 0);
  for (std::size_t i = 0; i + 1 < d; ++i) out[i + 1] = v[i];
  for (std::size_t i = 0; i < d; ++i) out[i] -= v[d - 1] * phi[i];
  return out;
}

// cols[j] is the column j of an upper-triangular basis.
inline bool lattice_contains(const std::vector<std::vector<long>>& cols, std::vector<long> v) {
  for (std::size_t k = v.size(); k-- > 0;) {
    if (v[k] % cols[k][k] != 0) return false;
    const long c = v[k] / cols[k][k];
    for (std::size_t i = 0; i <= k; ++i) v[i] -= c * cols[k][i];
  }
  return true;
}

inline long numeric_norm(long q, const std::vector<long>& x) {
  std::complex<double> p = 1;
  for (long s = 1; s < q; ++s) {
    if (std::gcd(s, q) != 1) continue;
    std::complex<double> v = 0;
    for (std::size_t j = 0; j < x.size(); ++j) v += double(x[j]) * std::polar(1.0, 2 * M_PI * double(s * long(j)) / double(q));
    p *= v;
  }
  return std::lround(std::fabs(p.real()));
}

// All zeta-stable full sublattices of Z^d of index <= max_norm, as column HNFs.
inline std::vector<std::vector<std::vector<long>>> all_ideals(long q, long max_norm) {
  const auto phi = phi_coeffs(q);
  const std::size_t d = phi.size() - 1;
  std::vector<std::vector<std::vector<long>>> out;
  std::vector<std::vector<long>> cols(d, std::vector<long>(d, 0));
  std::vector<long> diag(d);
  auto fill = [&](auto&& self, std::size_t pos) -> void {
    // pos enumerates the strictly upper entries (i, j), i < j, row by row.
    std::size_t i = 0, j = 0, p = pos;
    bool done = true;
    for (i = 0; i < d && done; ++i)
      for (j = i + 1; j < d; ++j) {
        if (p == 0) {
          done = false;
          break;
        }
        --p;
      }
    if (done) {
      for (std::size_t k = 0; k < d; ++k)
        if (!lattice_contains(cols, times_zeta(cols[k], phi))) return;
      out.push_back(cols);
      return;
    }
    --i;
    for (long v = 0; v < diag[i]; ++v) {
      cols[j][i] = v;
      self(self, pos + 1);
    }
    cols[j][i] = 0;
  };
  auto diags = [&](auto&& self, std::size_t k, long prod) -> void {
    if (k == d) {
      for (std::size_t t = 0; t < d; ++t) cols[t][t] = diag[t];
      fill(fill, 0);
      return;
    }
    for (long v = 1; prod * v <= max_norm; ++v) {
      diag[k] = v;
      self(self, k + 1, prod * v);
    }
  };
  diags(diags, 0, 1);
  return out;
}

inline IntMatrix to_matrix(const std::vector<std::vector<long>>& cols) {
  const std::size_t d = cols.size();
  IntMatrix m(d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) m(i, j) = cols[j][i];
  return m;
}

}  // namespace oracle

// psi is a ring homomorphism into the product of cyclotomic rings, integral on
// Z[G], and psi_inverse undoes it.
inline std::string check_psi_laws(int samples, unsigned seed = 31) {
  std::mt19937 rng(seed);
  const auto groups = all_invariant_factors(8);
  for (int t = 0; t < samples; ++t) {
    const auto& factors = groups[t % groups.size()];
    auto g = make_group(factors);
    auto sys = std::make_shared<const CharacterSystem>(g);
    GroupRingElt a(g, random_coeffs(rng, g->order(), -5, 5)), b(g, random_coeffs(rng, g->order(), -5, 5));
    auto pa = psi_forward(a, sys), pb = psi_forward(b, sys);
    std::ostringstream where;
    where << "sample " << t << " group " << g->order();
    if (psi_forward(gr_mul(a, b), sys).values != (pa * pb).values) return where.str() + ": psi(ab) != psi(a)psi(b)";
    const auto sum = psi_forward(a + b, sys).values;
    for (std::size_t i = 0; i < sum.size(); ++i)
      if (sum[i] != pa.values[i] + pb.values[i]) return where.str() + ": psi(a+b) != psi(a)+psi(b)";
    for (const auto& c : pa.values)
      if (!c.is_integral()) return where.str() + ": psi(a) not integral";
    auto back = psi_inverse(pa);
    if (!back.is_integral || back.h != a) return where.str() + ": psi_inverse(psi(a)) != a";
    if (!a.is_zero()) {
      bool all_zero = true;
      for (const auto& c : pa.values) all_zero = all_zero && c.is_zero();
      if (all_zero) return where.str() + ": nonzero a with psi(a) = 0";
    }
  }
  return "";
}

// e_chi e_chi' = delta e_chi and sum e_chi = 1, over Q(zeta_exp) and over Q.
inline std::string check_idempotents(long max_order) {
  for (const auto& factors : all_invariant_factors(max_order)) {
    AbelianGroup g(factors);
    auto chars = dual_group(g);
    auto field = CycField::get(g.exponent());
    std::vector<std::vector<CycElt>> es;
    for (const auto& chi : chars) es.push_back(idempotent(g, chi));
    std::vector<CycElt> total(g.order(), CycElt(field));
    for (std::size_t i = 0; i < es.size(); ++i) {
      for (std::size_t l = 0; l < g.order(); ++l) total[l] += es[i][l];
      for (std::size_t j = 0; j < es.size(); ++j) {
        auto p = cyc_gr_mul(g, es[i], es[j]);
        for (std::size_t l = 0; l < g.order(); ++l)
          if (p[l] != (i == j ? es[i][l] : CycElt(field)))
            return "order " + std::to_string(g.order()) + ": idempotents not orthogonal";
      }
    }
    for (std::size_t l = 0; l < g.order(); ++l)
      if (total[l] != CycElt::from_rational(field, l == 0 ? 1 : 0))
        return "order " + std::to_string(g.order()) + ": idempotents do not sum to 1";
    auto gp = make_group(factors);
    CharacterSystem sys(gp);
    GroupRingElt sum(gp);
    for (std::size_t i = 0; i < sys.selected_count(); ++i) {
      GroupRingElt e = orbit_idempotent(sys, i);
      if (gr_mul(e, e) != e) return "order " + std::to_string(g.order()) + ": rational idempotent not idempotent";
      sum = sum + e;
    }
    if (sum != GroupRingElt::identity(gp)) return "order " + std::to_string(g.order()) + ": rational idempotents incomplete";
  }
  return "";
}

// A A* = n I for the character matrix.
inline std::string check_character_orthogonality(long max_order) {
  for (const auto& factors : all_invariant_factors(max_order)) {
    AbelianGroup g(factors);
    const std::size_t n = g.order();
    auto a = character_matrix(g);
    auto field = CycField::get(g.exponent());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        CycElt s(field);
        for (std::size_t l = 0; l < n; ++l) s += a[i * n + l] * conj(a[j * n + l]);
        if (s != CycElt::from_rational(field, i == j ? long(n) : 0))
          return "order " + std::to_string(n) + ": A A* != n I at (" + std::to_string(i) + ", " + std::to_string(j) + ")";
      }
  }
  return "";
}

// Every zeta-stable lattice of norm <= max_norm in Z[zeta_q] is matched by a
// brute-force search for an element of that norm inside it, and find_generator
// returns a generator of it. Sets *count to the number of ideals checked.
inline std::string check_find_generator_oracle(long q, long max_norm, std::size_t* count = nullptr) {
  using namespace oracle;
  const std::size_t d = phi_coeffs(q).size() - 1;
  const long box = d == 2 ? 8 : 4;
  std::map<long, std::vector<std::vector<long>>> by_norm;
  std::vector<long> x(d, -box);
  while (true) {
    const long nm = numeric_norm(q, x);
    if (nm >= 1 && nm <= max_norm) by_norm[nm].push_back(x);
    std::size_t k = 0;
    while (k < d && x[k] == box) x[k++] = -box;
    if (k == d) break;
    ++x[k];
  }
  const auto ideals = all_ideals(q, max_norm);
  if (count) *count = ideals.size();
  for (const auto& cols : ideals) {
    CycIdeal j(CycField::get(q), to_matrix(cols));
    const std::string where = "q=" + std::to_string(q) + " norm=" + j.norm().get_str();
    bool found = false;
    for (const auto& v : by_norm[j.norm().get_si()])
      if (lattice_contains(cols, v)) {
        found = true;
        break;
      }
    if (!found) return where + ": no element of that norm in the lattice";
    CycElt g = find_generator(j);
    if (abs(norm(g)) != j.norm() || !j.contains(g) || principal_ideal(g) != j)
      return where + ": find_generator disagrees with the oracle";
  }
  return "";
}

}  // namespace nib::testing
