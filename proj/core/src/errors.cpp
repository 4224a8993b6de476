#include "cff/errors.hpp"

#include <utility>

namespace cff {

ParseError::ParseError(std::size_t position, const std::string& what)
    : Error("parse error at " + std::to_string(position) + ": " + what), position_(position) {}

UnboundVariable::UnboundVariable(std::string name)
    : Error("unbound variable '" + name + "'"), name_(std::move(name)) {}

CapacityError::CapacityError(std::string what, std::uint64_t required_bits, std::uint64_t budget_bits)
    : Error(what + ": needs " + std::to_string(required_bits) + " bits, budget is " +
            std::to_string(budget_bits)),
      required_(required_bits),
      budget_(budget_bits) {}

}  // namespace cff
