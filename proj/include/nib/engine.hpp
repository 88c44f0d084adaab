#pragma once

// The normal integral basis solver: an abelian field L = Q(alpha) with its
// Galois action and an integral basis, reduced to principality of the ideal
// I of Z[G] with O_L = I alpha', alpha' = alpha / D.

#include <optional>
#include <string>

#include "nib/cosets.hpp"
#include "nib/number_field.hpp"

namespace nib {

struct AbelianFieldInput {
  IntVector minpoly;                   // ascending, monic
  std::vector<long> group;             // invariant factors
  std::vector<Polynomial> action;      // g_i(alpha) = action[i](alpha), identity first
  RatMatrix integral_basis;            // column j: beta_j over 1, alpha, ..., alpha^(n-1)
  std::optional<Integer> conductor;
  std::string label;
};

// Checked input with the action reordered to match the group's element order.
class ValidatedField {
 public:
  const AbelianFieldInput& input() const { return input_; }
  const NumberField& field() const { return *field_; }
  const GaloisAction& action() const { return action_; }
  const GroupPtr& group() const { return group_; }
  const SystemPtr& system() const { return system_; }
  std::size_t degree() const { return field_->degree(); }
  // Group element i acts as input().action[input_index(i)].
  std::size_t input_index(std::size_t i) const { return element_to_input_[i]; }
  // Tr(alpha^(a+b)), the trace form on the power basis.
  const RatMatrix& trace_form() const { return trace_form_; }
  const RatMatrix& basis_inverse() const { return basis_inverse_; }
  const Integer& discriminant() const { return discriminant_; }

 private:
  friend ValidatedField validate_input(const AbelianFieldInput& in);
  AbelianFieldInput input_;
  std::shared_ptr<const NumberField> field_;
  GaloisAction action_;
  GroupPtr group_;
  SystemPtr system_;
  std::vector<std::size_t> element_to_input_;
  RatMatrix trace_form_;
  RatMatrix basis_inverse_;
  Integer discriminant_;
};

// Throws kInvalidInput naming the violated condition.
ValidatedField validate_input(const AbelianFieldInput& in);

// g_i(x) in group element order.
std::vector<FieldElement> conjugates(const FieldElement& x, const ValidatedField& f);
// det(Tr(x_i x_j)).
Rational discriminant_of_set(const std::vector<FieldElement>& xs, const ValidatedField& f);
// Discriminant of the integral basis; validate_input checks it is an integer.
Integer field_discriminant(const ValidatedField& f);

// beta_j = sum_i b_ij g_i(alpha / D), solved exactly.
RatMatrix solve_bij(const ValidatedField& f, const Integer& d);
// As above; throws kNotIntegral when some b_ij is not an integer.
IntMatrix compute_bij(const ValidatedField& f, const Integer& d);
// J_i generated by the entries of row i of B b, one ideal per selected character.
std::vector<CycIdeal> build_ideal_components(const IntMatrix& b, const SystemPtr& sys);

// Integral coordinates over the integral basis and conjugate discriminant
// equal to the field discriminant.
bool verify_nib(const FieldElement& theta, const ValidatedField& f);
// Coordinates of x over the integral basis.
RatVector basis_coordinates(const FieldElement& x, const ValidatedField& f);
FieldElement from_basis_coordinates(const RatVector& c, const ValidatedField& f);

bool hilbert_speiser_check(const Integer& conductor);

enum class Status { kFound, kNonexistent, kInconclusive };
const char* status_name(Status s);

struct SolveConfig {
  GeneratorSearch search;
  std::size_t coset_cap = 4'000'000;
  // D is taken as this multiple of the conjugate discriminant of alpha.
  Integer d_multiplier = 1;
};

struct StageTime {
  std::string stage;
  double ms = 0;
};

struct NIBResult {
  Status status = Status::kInconclusive;
  // Found
  FieldElement theta;
  IntVector theta_basis;
  Polynomial theta_minpoly;
  Rational conjugate_discriminant;
  GroupRingElt t;
  std::size_t coset_index = 0;
  std::vector<std::pair<std::size_t, long>> coset_word;  // unit generator, exponent
  // Intermediate data of the reduction.
  Integer field_discriminant;
  Integer d;
  IntMatrix b;
  std::vector<CycIdeal> ideals;
  std::vector<CycElt> generators;
  // Cosets examined, and whether they cover the full quotient.
  std::size_t cosets_examined = 0;
  bool cosets_complete = false;
  std::string certificate;  // nonexistent
  std::string cap;          // inconclusive
  std::vector<StageTime> timings;
};

NIBResult solve(const ValidatedField& f, const SolveConfig& cfg = {});

}  // namespace nib
