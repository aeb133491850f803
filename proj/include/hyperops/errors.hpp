#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperops {

/// Root of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed text or bundle input.
class ParseError : public Error {
public:
  using Error::Error;
};

/// Division by zero in the scalar field.
class ArithmeticError : public Error {
public:
  using Error::Error;
};

/// Shape mismatch between matrices, maps or declared dimensions.
class DimensionError : public Error {
public:
  using Error::Error;
};

class SingularError : public Error {
public:
  SingularError(const std::string& what, std::size_t rank)
      : Error(what), rank_(rank) {}
  std::size_t rank() const noexcept { return rank_; }

private:
  std::size_t rank_;
};

/// An operation was called on inputs that violate its stated precondition.
/// `basis` carries the 1-based basis tuple exhibiting the violation, if any.
class PreconditionError : public Error {
public:
  explicit PreconditionError(const std::string& what, std::vector<int> basis = {})
      : Error(what), basis_(std::move(basis)) {}
  const std::vector<int>& basis() const noexcept { return basis_; }

private:
  std::vector<int> basis_;
};

/// Input lies outside the domain of an operation
/// (e.g. a sign-product gate).
class DomainError : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

}  // namespace hyperops
