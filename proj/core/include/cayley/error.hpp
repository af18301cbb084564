#pragma once

#include <stdexcept>
#include <string>

namespace cayley {

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid Cartan data request (bad type/rank pair, bad crossed set, ...).
class ConstructionError : public Error {
  using Error::Error;
};

/// An operation was invoked outside its stated domain.
class PreconditionError : public Error {
  using Error::Error;
};

/// Text input that does not match a documented grammar.
class ParseError : public Error {
  using Error::Error;
};

/// Operation defined only for maximal parabolics (or a shape we refuse).
class UnsupportedParabolicError : public Error {
  using Error::Error;
};

/// An exact-arithmetic self-check failed. Always a bug, never a valid outcome.
class InternalError : public Error {
  using Error::Error;
};

}  // namespace cayley
