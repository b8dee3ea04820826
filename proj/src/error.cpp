#include "cgt/error.hpp"

namespace cgt {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidPermutation: return "InvalidPermutation";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::OrderCapExceeded: return "OrderCapExceeded";
    case Errc::LatticeCapExceeded: return "LatticeCapExceeded";
    case Errc::TupleCapExceeded: return "TupleCapExceeded";
    case Errc::NotSolvable: return "NotSolvable";
    case Errc::NotNilpotent: return "NotNilpotent";
    case Errc::NotNormal: return "NotNormal";
    case Errc::NotSubgroup: return "NotSubgroup";
    case Errc::NonTrivialRadical: return "NonTrivialRadical";
    case Errc::NoSuitablePrime: return "NoSuitablePrime";
    case Errc::VerificationFailed: return "VerificationFailed";
    case Errc::EmptyFiber: return "EmptyFiber";
    case Errc::EmptySet: return "EmptySet";
    case Errc::TrivialN: return "TrivialN";
    case Errc::NotPrime: return "NotPrime";
    case Errc::ParseError: return "ParseError";
    case Errc::ValidationFailed: return "ValidationFailed";
    case Errc::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

bool is_resource_cap(Errc code) noexcept {
  return code == Errc::OrderCapExceeded || code == Errc::LatticeCapExceeded ||
         code == Errc::TupleCapExceeded;
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

}  // namespace cgt
