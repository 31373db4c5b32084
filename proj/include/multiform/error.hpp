#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace multiform {

// A mathematical precondition of an operation does not hold. The CLI maps
// every DomainError to exit code 2.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration budget or size guard was hit. The CLI maps these to exit 3.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

class DimensionMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

// No dual tuple exists for the requested subspace in the given ambient space.
class NotGenericHere : public DomainError {
 public:
  using DomainError::DomainError;
};

// A prescribed-pairing system has no solution outside the excluded span.
class NoSolution : public DomainError {
 public:
  using DomainError::DomainError;
};

class InsufficientHeadroom : public DomainError {
 public:
  using DomainError::DomainError;
};

// The image ambient of a partial isomorphism has no room for a fresh witness.
class TargetExhausted : public DomainError {
 public:
  using DomainError::DomainError;
};

class TooLarge : public BudgetError {
 public:
  using BudgetError::BudgetError;
};

class BudgetExceeded : public BudgetError {
 public:
  using BudgetError::BudgetError;
};

class SizeGuard : public BudgetError {
 public:
  using BudgetError::BudgetError;
};

// Enumeration budget: the value of MULTIFORM_BUDGET when set to a positive
// integer, otherwise `fallback`.
std::uint64_t enumeration_budget(std::uint64_t fallback);

}  // namespace multiform
