#include <algorithm>

#include "qsm/errors.hpp"
#include "qsm/qcore/circuit.hpp"

namespace qsm {

std::vector<Qubit> Register::qubits() const { return slice(0, size); }

std::vector<Qubit> Register::slice(std::size_t first, std::size_t count) const {
  if (first + count > size) throw DomainError("slice exceeds register " + name);
  std::vector<Qubit> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = (*this)[first + i];
  return out;
}

const Register& RegisterLayout::add(std::string name, std::size_t size) {
  if (contains(name)) throw DomainError("duplicate register name " + name);
  registers_.push_back(Register{std::move(name), static_cast<Qubit>(total_), size});
  total_ += size;
  return registers_.back();
}

const Register& RegisterLayout::operator[](std::string_view name) const {
  const auto it = std::find_if(registers_.begin(), registers_.end(),
                               [&](const Register& r) { return r.name == name; });
  if (it == registers_.end()) throw DomainError("unknown register " + std::string(name));
  return *it;
}

bool RegisterLayout::contains(std::string_view name) const {
  return std::any_of(registers_.begin(), registers_.end(),
                     [&](const Register& r) { return r.name == name; });
}

}  // namespace qsm
