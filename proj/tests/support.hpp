#pragma once

#include <memory>
#include <random>
#include <vector>

#include "nib/abelian.hpp"

namespace nib::testing {

// Every abelian group of order <= max_order, as invariant-factor lists.
inline std::vector<std::vector<long>> all_invariant_factors(long max_order) {
  std::vector<std::vector<long>> out;
  std::vector<long> cur;
  // Factors are built largest-last; each new factor is a multiple of the previous.
  auto rec = [&](auto&& self, long order) -> void {
    out.push_back(cur);
    long last = cur.empty() ? 2 : cur.back();
    for (long d = last; order * d <= max_order; d += (cur.empty() ? 1 : last)) {
      if (d < 2) continue;
      cur.push_back(d);
      self(self, order * d);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

inline GroupPtr make_group(std::vector<long> factors) {
  return std::make_shared<const AbelianGroup>(std::move(factors));
}

inline RatVector random_coeffs(std::mt19937& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  RatVector v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

}  // namespace nib::testing
