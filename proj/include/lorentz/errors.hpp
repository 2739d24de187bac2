#pragma once

#include <stdexcept>
#include <string>

namespace lorentz {

/// Base class for errors caused by bad caller input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Vector lengths or variable counts that do not line up.
class ArityError : public Error {
 public:
  using Error::Error;
};

/// Input that has the right shape but violates a domain rule
/// (negative exponent, bad sparsity pattern, axiom violation, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Two computation routes that must agree did not. Always a library bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

inline void require_arity(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw ArityError(std::string(what) + ": expected length " + std::to_string(want) +
                     ", got " + std::to_string(got));
  }
}

}  // namespace detail
}  // namespace lorentz
