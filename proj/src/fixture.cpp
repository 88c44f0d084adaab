#include "nib/fixture.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace nib {

namespace {

struct UnitGroup {
  long f;
  std::vector<long> units;

  explicit UnitGroup(long modulus) : f(modulus) {
    for (long a = 1; a < f; ++a)
      if (gcd_long(a, f) == 1) units.push_back(a);
  }
  long mul(long a, long b) const { return a * b % f; }
  long pow(long a, long e) const {
    long r = 1 % f;
    for (; e > 0; --e) r = mul(r, a);
    return r;
  }
  // Closure of gens under multiplication, as a sorted list.
  std::vector<long> span(const std::vector<long>& gens) const {
    std::set<long> s{1 % f};
    std::vector<long> frontier{1 % f};
    while (!frontier.empty()) {
      std::vector<long> next;
      for (long x : frontier)
        for (long g : gens)
          if (s.insert(mul(x, g)).second) next.push_back(mul(x, g));
      frontier = std::move(next);
    }
    return {s.begin(), s.end()};
  }
};

std::vector<long> subgroup_elements(const UnitGroup& u, const std::vector<long>& gens) {
  std::vector<long> reduced;
  for (long g : gens) {
    long r = ((g % u.f) + u.f) % u.f;
    if (gcd_long(r, u.f) != 1) throw Error(ErrorCode::kInvalidArgument, "subgroup generator " + std::to_string(g) + " is not a unit mod " + std::to_string(u.f));
    reduced.push_back(r);
  }
  return u.span(reduced);
}

// (Z/f)^* / H in invariant-factor form; rep[i] is a unit in the coset of
// group element i.
struct Quotient {
  std::vector<long> factors;
  std::vector<long> rep;
};

Quotient quotient_structure(const UnitGroup& u, const std::vector<long>& h) {
  std::vector<long> xs;
  std::vector<std::vector<long>> relations;
  std::map<long, std::vector<long>> exps;  // unit -> exponents over xs, modulo H
  for (long a : h) exps[a] = {};
  for (long a : u.units) {
    if (exps.count(a)) continue;
    std::map<long, std::vector<long>> grown;
    long p = 1 % u.f, j = 0;
    for (; j == 0 || !exps.count(p); p = u.mul(p, a), ++j)
      for (const auto& [y, e] : exps) {
        auto v = e;
        v.push_back(j);
        grown[u.mul(p, y)] = std::move(v);
      }
    // a^j = prod x_l^(e_l) modulo H
    std::vector<long> rel;
    for (long e : exps.at(p)) rel.push_back(-e);
    rel.push_back(j);
    relations.push_back(std::move(rel));
    exps = std::move(grown);
    xs.push_back(a);
  }
  Quotient q;
  const std::size_t s = xs.size();
  if (s == 0) {
    q.rep = {1 % u.f};
    return q;
  }
  IntMatrix rel(s, s);
  for (std::size_t k = 0; k < s; ++k)
    for (std::size_t l = 0; l < relations[k].size(); ++l) rel(l, k) = relations[k][l];
  GroupPresentation pres = normalize_presentation(rel);
  q.factors = pres.group.factors();
  std::vector<long> full(s, 1);
  for (std::size_t l = 0; l < s; ++l)
    for (long y = xs[l]; y != 1 % u.f; y = u.mul(y, xs[l])) ++full[l];
  for (std::size_t i = 0; i < pres.group.order(); ++i) {
    const auto tuple = pres.group.element(i);
    long r = 1 % u.f;
    for (std::size_t l = 0; l < s; ++l) {
      Integer e = 0;
      for (std::size_t c = 0; c < tuple.size(); ++c) e += pres.from_invariant(l, c) * tuple[c];
      Integer m = e % full[l];
      if (m < 0) m += full[l];
      r = u.mul(r, u.pow(xs[l], m.get_si()));
    }
    q.rep.push_back(r);
  }
  // Distinct cosets, one per group element.
  std::set<long> seen;
  for (long r : q.rep) {
    std::vector<long> coset;
    for (long y : h) coset.push_back(u.mul(r, y));
    if (!seen.insert(*std::min_element(coset.begin(), coset.end())).second)
      throw Error(ErrorCode::kInternal, "quotient presentation is not a bijection");
  }
  return q;
}

// Coordinates over 1, alpha, ..., alpha^(n-1) of elements of Q(alpha) inside Q(zeta_f).
class SubfieldCoordinates {
 public:
  SubfieldCoordinates(const CycElt& alpha, std::size_t n) {
    const std::size_t d = alpha.field()->degree();
    powers_ = RatMatrix(d, n);
    CycElt p = CycElt::from_rational(alpha.field(), 1);
    for (std::size_t k = 0; k < n; ++k) {
      powers_.set_column(k, p.coords());
      p = p * alpha;
    }
  }
  RatVector operator()(const CycElt& y) const {
    auto c = solve_overdetermined(powers_, y.coords());
    if (!c) throw Error(ErrorCode::kInternal, "element does not lie in the subfield");
    return *c;
  }

 private:
  RatMatrix powers_;
};

bool independent_conjugates(const CycElt& alpha, const std::vector<long>& reps) {
  const std::size_t d = alpha.field()->degree();
  RatMatrix m(d, reps.size());
  for (std::size_t j = 0; j < reps.size(); ++j) m.set_column(j, automorphism(reps[j], alpha).coords());
  return det(m) != 0;
}

// First 0/1 combination of powers of zeta, by weight then lexicographically,
// whose conjugates are linearly independent.
CycElt normal_element(const CycFieldPtr& field, const std::vector<long>& reps) {
  const std::size_t d = field->degree();
  for (std::size_t weight = 1; weight <= d; ++weight) {
    std::vector<bool> mask(d, false);
    std::fill(mask.begin(), mask.begin() + static_cast<long>(weight), true);
    do {
      RatVector c(d);
      for (std::size_t j = 0; j < d; ++j) c[j] = mask[j] ? 1 : 0;
      CycElt a(field, c);
      if (independent_conjugates(a, reps)) return a;
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
  throw Error(ErrorCode::kInternal, "no normal basis element among 0/1 combinations");
}

}  // namespace

long fixture_conductor(long f, const std::vector<long>& subgroup) {
  UnitGroup u(f);
  const auto h = subgroup_elements(u, subgroup);
  for (long c : divisors(f)) {
    bool inside = true;
    for (long a : u.units)
      if (a % c == 1 % c && !std::binary_search(h.begin(), h.end(), a)) inside = false;
    if (inside) return c <= 2 ? 1 : c;
  }
  return f;
}

std::vector<std::vector<long>> unit_subgroups(long f) {
  if (f < 1) throw Error(ErrorCode::kInvalidArgument, "modulus must be positive");
  UnitGroup u(f);
  std::map<std::vector<long>, std::vector<long>> found{{{1 % f}, {}}};
  std::vector<std::vector<long>> frontier{{1 % f}};
  while (!frontier.empty()) {
    std::vector<std::vector<long>> next;
    for (const auto& s : frontier)
      for (long a : u.units) {
        if (std::binary_search(s.begin(), s.end(), a)) continue;
        auto gens = found[s];
        gens.push_back(a);
        auto t = u.span(gens);
        if (found.emplace(t, gens).second) next.push_back(t);
      }
    frontier = std::move(next);
  }
  std::vector<std::pair<std::vector<long>, std::vector<long>>> all(found.begin(), found.end());
  std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first.size() < b.first.size(); });
  std::vector<std::vector<long>> out;
  for (auto& [elems, gens] : all) out.push_back(gens);
  return out;
}

AbelianFieldInput gaussian_period_fixture(long f, const std::vector<long>& subgroup) {
  if (f < 3) throw Error(ErrorCode::kUnsupportedFixture, "fixture conductor must be at least 3");
  UnitGroup u(f);
  const auto h = subgroup_elements(u, subgroup);
  const bool squarefree = is_squarefree(f);
  if (!squarefree && h.size() > 1)
    throw Error(ErrorCode::kUnsupportedFixture, "non-squarefree " + std::to_string(f) + " is supported only with the trivial subgroup");

  const Quotient q = quotient_structure(u, h);
  const std::size_t n = q.rep.size();
  CycFieldPtr field = CycField::get(f);
  CycElt alpha(field);
  if (squarefree) {
    RatVector acc(f);
    for (long a : h) acc[a] += 1;
    alpha = CycElt::from_zeta_powers(field, acc);
  } else {
    alpha = normal_element(field, q.rep);
  }

  Polynomial m = squarefree_part(Polynomial(charpoly(multiplication_matrix(alpha))));
  if (m.degree() != static_cast<int>(n) || !m.has_integer_coeffs())
    throw Error(ErrorCode::kInternal, "fixture minimal polynomial has the wrong shape");
  SubfieldCoordinates coords(alpha, n);

  AbelianFieldInput in;
  in.minpoly = m.integer_coeffs();
  in.group = q.factors;
  for (long s : q.rep) in.action.push_back(Polynomial(coords(automorphism(s, alpha))));
  in.integral_basis = RatMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    RatVector c = squarefree ? in.action[j].coeffs() : coords(CycElt::zeta_power(field, static_cast<long>(j)));
    c.resize(n, 0);
    in.integral_basis.set_column(j, c);
  }
  in.conductor = Integer(fixture_conductor(f, subgroup));
  if (h.size() == 1) {
    in.label = "cyclotomic-" + std::to_string(f);
  } else {
    in.label = "period-" + std::to_string(f) + "-h";
    for (std::size_t i = 0; i < subgroup.size(); ++i) in.label += (i ? "." : "") + std::to_string(subgroup[i]);
  }
  return in;
}

}  // namespace nib
