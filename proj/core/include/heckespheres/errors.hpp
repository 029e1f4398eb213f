#pragma once

#include <stdexcept>
#include <string>

namespace hsp {

struct DivisionByZero : std::domain_error {
  explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

// Raised when a specialisation hits a genuine pole (the scalar is kept in
// lowest terms, so a vanishing denominator cannot be a removable singularity).
struct DenominatorVanishes : std::domain_error {
  explicit DenominatorVanishes(const std::string& what) : std::domain_error(what) {}
};

struct RankMismatch : std::invalid_argument {
  explicit RankMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct DomainError : std::invalid_argument {
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

struct CapExceeded : std::length_error {
  explicit CapExceeded(const std::string& what) : std::length_error(what) {}
};

// Signals an internal inconsistency: an operator that must act diagonally on
// the character basis produced off-diagonal terms.
struct NotDiagonal : std::logic_error {
  explicit NotDiagonal(const std::string& what) : std::logic_error(what) {}
};

struct ParseError : std::invalid_argument {
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace hsp
