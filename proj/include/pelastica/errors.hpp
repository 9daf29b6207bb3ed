#pragma once

#include <stdexcept>
#include <string>

namespace pelastica {

// Violated precondition or argument outside the mathematical domain.
class DomainError : public std::domain_error {
public:
  explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

// A transcendental equation has no solution for the given parameters
// (e.g. loop modulus outside its existence window).
class NoSolutionError : public DomainError {
public:
  explicit NoSolutionError(const std::string& msg) : DomainError(msg) {}
};

// Quadrature or root finding failed to reach the requested tolerance.
class ConvergenceError : public std::runtime_error {
public:
  explicit ConvergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace pelastica
