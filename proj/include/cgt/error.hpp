#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cgt {

enum class Errc {
  InvalidPermutation,
  DegreeMismatch,
  OrderCapExceeded,
  LatticeCapExceeded,
  TupleCapExceeded,
  NotSolvable,
  NotNilpotent,
  NotNormal,
  NotSubgroup,
  NonTrivialRadical,
  NoSuitablePrime,
  VerificationFailed,
  EmptyFiber,
  EmptySet,
  TrivialN,
  NotPrime,
  ParseError,
  ValidationFailed,
  ConfigError,
};

std::string_view errc_name(Errc code) noexcept;

/// True for the error codes that signal an exhausted size limit.
bool is_resource_cap(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace cgt
