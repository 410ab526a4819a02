#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lsqc/gates.hpp"

namespace lsqc {

// Length-n Pauli word with a +/-1 sign. Stored as per-qubit x/z bits.
struct PauliString {
  std::vector<uint8_t> x, z;
  // Quarter-phase exponent of i; valid observables keep phase in {0, 2} (+1/-1).
  uint8_t phase = 0;

  PauliString() = default;
  explicit PauliString(size_t n) : x(n, 0), z(n, 0) {}
  // Parses e.g. "+XIZ", "-Y", "ZZ".
  static PauliString from_text(const std::string& text);
  static PauliString single(size_t n, size_t qubit, char pauli, int sign = +1);

  size_t num_qubits() const { return x.size(); }
  bool is_identity() const;
  int sign() const;  // +1 or -1; throws if phase is imaginary
  void set_sign(int s) { phase = (s < 0) ? 2 : 0; }
  char pauli_at(size_t q) const;
  int weight() const;

  // In-place multiply (this = this * other), tracking i-phases.
  PauliString& operator*=(const PauliString& other);
  friend PauliString operator*(PauliString a, const PauliString& b) { return a *= b; }

  bool commutes_with(const PauliString& other) const;
  bool operator==(const PauliString& other) const;
  std::string str() const;
};

}  // namespace lsqc
