#pragma once

// Test fields inside Q(zeta_f): the fixed field L of a subgroup H of
// (Z/f)^*, generated by the Gaussian period alpha = sum_{a in H} zeta_f^a.

#include "nib/engine.hpp"

namespace nib {

// Supported shapes: f squarefree with any H, or H trivial with any f.
// For squarefree f the conjugates of alpha are the integral basis; for the
// full field Q(zeta_f) it is the power basis of zeta_f and alpha is the first
// small combination of powers of zeta_f whose conjugates are independent.
// Throws kUnsupportedFixture for other shapes.
AbelianFieldInput gaussian_period_fixture(long f, const std::vector<long>& subgroup);

// Every subgroup of (Z/f)^*, each as a generator list; the trivial group first.
std::vector<std::vector<long>> unit_subgroups(long f);

// Conductor of the fixed field of H: the least f' | f with
// ker((Z/f)^* -> (Z/f')^*) inside H (1 for Q).
long fixture_conductor(long f, const std::vector<long>& subgroup);

}  // namespace nib
