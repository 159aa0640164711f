#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qsm {

/// Input outside an operation's domain (bad symbol, k >= m, K < m, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A simulator or builder would exceed its configured qubit budget.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::size_t required_qubits, std::size_t budget)
      : std::runtime_error(what), required_(required_qubits), budget_(budget) {}

  std::size_t required_qubits() const noexcept { return required_; }
  std::size_t budget() const noexcept { return budget_; }

 private:
  std::size_t required_;
  std::size_t budget_;
};

/// The basis-state simulator met a gate that creates superposition or phase.
class NonClassicalGateError : public std::runtime_error {
 public:
  NonClassicalGateError(std::size_t gate_index, const std::string& kind)
      : std::runtime_error("non-classical gate " + kind + " at index " + std::to_string(gate_index)),
        gate_index_(gate_index) {}

  std::size_t gate_index() const noexcept { return gate_index_; }

 private:
  std::size_t gate_index_;
};

}  // namespace qsm
