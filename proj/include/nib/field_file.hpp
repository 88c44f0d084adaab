#pragma once

// Text format for field descriptions and solver reports.
//
//   label cyclotomic-5
//   conductor 5
//   minpoly 1 1 1 1 1
//   group 4
//   action
//     0 1 0 0
//     ...
//   integral_basis
//     1 0 0 0
//     ...
//
// minpoly lists integer coefficients in ascending order. Each action row
// holds the n coefficients of p_i, each integral_basis row one basis element
// over 1, alpha, ..., alpha^(n-1). Rationals are written p/q. Lines starting
// with # are comments.

#include <string>
#include <string_view>

#include "nib/engine.hpp"

namespace nib {

// Throws kParse with the offending line number.
AbelianFieldInput parse_field_file(std::string_view text);
AbelianFieldInput load_field_file(const std::string& path);
std::string format_field_file(const AbelianFieldInput& in);

// Key/value lines, or a JSON object when json is set.
std::string format_report(const NIBResult& r, const ValidatedField& f, bool json);
std::string format_verify_report(const FieldElement& theta, const ValidatedField& f, bool json);

}  // namespace nib
