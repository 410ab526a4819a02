#pragma once

#include <vector>

#include "lsqc/circuit.hpp"
#include "lsqc/pauli.hpp"

namespace lsqc {

// Conjugates p in place by a Clifford gate: p -> g p g^dagger.
void conjugate_by_gate(PauliString& p, const Gate& g);

// Heisenberg action of a Clifford circuit: images of X_i and Z_i generators.
struct CliffordTableau {
  std::vector<PauliString> img_x, img_z;

  static CliffordTableau identity(size_t n);
  size_t num_qubits() const { return img_x.size(); }

  // Appends gate g to the represented circuit.
  void apply(const Gate& g);

  // Image of an arbitrary Pauli under conjugation by the represented circuit.
  PauliString conj(const PauliString& p) const;

  // this := other \circ this (run `this` first, then `other`).
  void compose_after(const CliffordTableau& other);

  CliffordTableau inverse() const;
  bool is_symplectic() const;
  bool operator==(const CliffordTableau& o) const;
};

struct StabilizerFlow {
  PauliString input;
  PauliString output;
};

// All 2n generator flows of a Clifford tableau.
std::vector<StabilizerFlow> flows_of(const CliffordTableau& t);

// Tableau of a measurement-free Clifford circuit; throws on non-Clifford gates.
CliffordTableau tableau_of(const LogicalCircuit& c);

}  // namespace lsqc
