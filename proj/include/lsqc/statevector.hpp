#pragma once

#include <complex>
#include <vector>

#include "lsqc/circuit.hpp"
#include "lsqc/pauli.hpp"

namespace lsqc {

using Amplitudes = std::vector<Complex>;

struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Final state of a unitary circuit on |0...0>. Qubit q is bit q of the index.
// Trailing measurements are tolerated and skipped; mid-circuit measurement or
// reset is an error. n <= 12.
Amplitudes statevector(const LogicalCircuit& c);

// Applies one unitary gate in place.
void apply_gate(Amplitudes& psi, const Gate& g, uint32_t num_qubits);

double norm(const Amplitudes& psi);
// |<a|b>|^2
double overlap2(const Amplitudes& a, const Amplitudes& b);

// Expectation <psi|P|psi> of a Pauli string (real for Hermitian P).
double pauli_expectation(const Amplitudes& psi, const PauliString& p);

// Dense unitary of a small circuit (n <= 6), column-major by input index.
std::vector<Complex> unitary_of(const LogicalCircuit& c);
// |Tr(A^dagger B)| / dim, 1 iff equal up to global phase.
double unitary_trace_fidelity(const std::vector<Complex>& a, const std::vector<Complex>& b,
                              size_t dim);

}  // namespace lsqc
