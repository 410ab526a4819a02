#pragma once

#include <cstdint>
#include <vector>

#include "lsqc/circuit.hpp"
#include "lsqc/statevector.hpp"

namespace lsqc::apps {

// One Pauli-Z product term: coefficient * prod_{q in support} Z_q.
struct ZTerm {
  int coefficient;
  std::vector<uint32_t> support;  // sorted, distinct
};

// Expanded LABS Hamiltonian. Term coefficients follow the halved convention
// (weight-4 terms coefficient 2, weight-2 coefficient 1 at N=5); the energy
// sum_k A_k^2 equals offset + 2 * sum(terms).
struct LabsInstance {
  uint32_t n = 0;
  std::vector<ZTerm> terms;
  long offset = 0;

  // Eq.-5 energy of a +/-1 sequence, equal to labs_energy.
  long energy(const std::vector<int>& bits) const;
};

long labs_energy(const std::vector<int>& bits);
LabsInstance expand_hamiltonian(uint32_t n);

struct QaoaParams {
  std::vector<double> gammas, betas;
  size_t layers() const { return gammas.size(); }
};

// H^n, then per layer: CX-ladder-conjugated RZ(2*gamma*coeff) per term
// (ascending qubit order), then RX(2*beta) per qubit; terminal MZ per qubit.
LogicalCircuit build_qaoa(const LabsInstance& instance, const QaoaParams& params,
                          bool with_measurements = true);

// Dense oracle for Eq. 4: exact evaluation via diagonal phase + product mixer.
Amplitudes qaoa_state_oracle(const LabsInstance& instance, const QaoaParams& params);

// Textbook QPE for RZ(pi/4): `bits` register qubits (qubit 0 = most
// significant phase bit, measured first), target qubit last. The eigenstate
// selects |0> or |1> on the target.
LogicalCircuit build_qpe(uint32_t bits, int eigenstate, bool with_measurements = true);

// Expected deterministic register readout (MSB first) for the QPE circuit.
std::vector<int> qpe_expected_bits(uint32_t bits, int eigenstate);

// 2D grid adjacency for routing; qubits are placed row-major.
struct Grid {
  uint32_t width = 1, height = 1;
  bool adjacent(uint32_t a, uint32_t b) const;
  size_t size() const { return size_t(width) * height; }
};

struct RoutedCircuit {
  LogicalCircuit circuit;
  // logical qubit -> physical slot at the end of the circuit
  std::vector<uint32_t> final_placement;
};

// Inserts SWAP chains (3 CX each) so every CX acts on grid-adjacent qubits.
RoutedCircuit map_to_grid(const LogicalCircuit& c, const Grid& grid);

}  // namespace lsqc::apps
