#pragma once

#include <stdexcept>
#include <string>

namespace nib {

enum class ErrorCode {
  kInvalidArgument = 1,
  kSingular,
  kNotPositiveDefinite,
  kNotIntegral,
  kDivisionByZero,
  kZeroIdeal,
  kUnsupportedField,
  kResourceLimit,
  kNotUnit,
  kInvalidInput,
  kParse,
  kUnsupportedFixture,
  kInternal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nib
