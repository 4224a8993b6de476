#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cff {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed term text; `position()` is the byte offset of the offending token.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnboundVariable : public Error {
 public:
  explicit UnboundVariable(std::string name);
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// An input lies outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An input lies outside the range an enumeration oracle is willing to scan.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// A computation would need more bits than the configured ceiling allows.
class CapacityError : public Error {
 public:
  CapacityError(std::string what, std::uint64_t required_bits, std::uint64_t budget_bits);
  std::uint64_t required_bits() const noexcept { return required_; }
  std::uint64_t budget_bits() const noexcept { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

/// An identity that must hold exactly did not (inexact division, negative M, ...).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// A constructed witness failed one of the equations or bounds it must satisfy.
class PropertyViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace cff
