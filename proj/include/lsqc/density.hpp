#pragma once

#include "lsqc/noise.hpp"
#include "lsqc/statevector.hpp"

namespace lsqc {

struct DensityMatrix {
  uint32_t num_qubits = 0;
  std::vector<Complex> rho;  // row-major (1 << n)^2

  size_t dim() const { return size_t(1) << num_qubits; }
  Complex& at(size_t r, size_t c) { return rho[r * dim() + c]; }
  const Complex& at(size_t r, size_t c) const { return rho[r * dim() + c]; }
  double trace_real() const;
  // <psi|rho|psi>
  double fidelity_with(const Amplitudes& psi) const;
  // True if rho + tol*I admits a Cholesky factorization.
  bool is_positive_semidefinite(double tol = 1e-10) const;
};

// Schedules gates into ASAP moments and simulates under SI1000: p/10 1q
// depolarizing after 1q gates, p 2q depolarizing after CX, 5p flip before a
// measurement, 2p reset error, p/10 idle depolarizing per idle moment, and 2p
// resonator idling on qubits idle during a measurement/reset moment.
// Measurements at the end are noise-annotated but not projected. n <= 6.
DensityMatrix density_matrix_sim(const LogicalCircuit& c, const NoiseModel& noise);

// Moment structure used by the simulator (exposed for tests / cycle counts).
std::vector<std::vector<size_t>> schedule_moments(const LogicalCircuit& c);

}  // namespace lsqc
