#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polyvdw {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad user-facing input: config files, expressions, CLI values.
struct ConfigError : Error {
  using Error::Error;
};

// Expression text did not match the grammar; position is a 0-based offset.
struct SyntaxError : Error {
  std::size_t position;
  SyntaxError(const std::string& what, std::size_t pos)
      : Error(what + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

struct IncompatibleTerms : Error {
  using Error::Error;
};

struct ArityMismatch : Error {
  using Error::Error;
};

struct DegreeExceedsK : Error {
  using Error::Error;
};

struct NotPositiveNearZero : Error {
  using Error::Error;
};

struct InvalidPolynomial : Error {
  using Error::Error;
};

struct InvalidSequence : Error {
  using Error::Error;
};

struct NotInGround : Error {
  using Error::Error;
};

struct NotIrreducible : Error {
  using Error::Error;
};

struct ColoringNotTotal : Error {
  using Error::Error;
};

struct UniverseTooLarge : Error {
  using Error::Error;
};

}  // namespace polyvdw
