#pragma once

#include <array>
#include <vector>

#include "lsqc/circuit.hpp"
#include "lsqc/normalform.hpp"

namespace lsqc::synth {

// Per-T execution error model. e_T follows
//   e_T = 1 - (1 - e_unit)^(n_idle + 1.25) * (1 - e_cultiv).
struct TErrorModel {
  double e_unit = 0.0;
  double e_cultiv = 0.0;
  double n_idle = 0.0;
  double e_T = 0.0;

  static TErrorModel from_rates(double e_unit, double e_cultiv, double n_idle);
  static TErrorModel from_e_T(double e_T);
};

double compute_e_T(double e_unit, double e_cultiv, double n_idle);

// 4x4 Pauli-transfer-matrix helpers (row/col order I,X,Y,Z).
using Ptm = std::array<double, 16>;
Ptm ptm_of_unitary(const Mat2& u);
Ptm ptm_depolarizing(double q);
Ptm ptm_multiply(const Ptm& late, const Ptm& early);

// Process fidelity of a Clifford+T gate sequence against a target unitary,
// with a depolarizing channel of rate e_T attached to each T/Tdg.
double process_fidelity(const Mat2& target, const std::vector<Gate>& sequence, double e_T);
// Squared-trace synthesis fidelity |Tr(U^dag V)|^2 / 4.
double synthesis_fidelity(const Mat2& target, const Mat2& actual);

struct SynthesizedRotation {
  normalform::TSequence sequence;
  size_t t_count = 0;
  double synthesis_fidelity = 0.0;
  double process_fidelity = 0.0;
  bool clifford_fallback = false;  // budget exhausted at 0 with non-Clifford target
};

struct SynthesisOptions {
  size_t budget = 40;       // max T count explored
  size_t beam_width = 8192; // breadth cap per level
  uint64_t seed = 0;        // reserved; search is deterministic regardless
};

// Breadth-limited enumeration over the (H|S)?(TH|TdgH)*C normal form with
// beam pruning by running process fidelity.
SynthesizedRotation synthesize(const Mat2& target, const TErrorModel& model,
                               const SynthesisOptions& options = {});

// Replaces every U3 in a Clifford+U3 circuit by its synthesized sequence.
struct CircuitSynthesis {
  LogicalCircuit circuit;
  std::vector<SynthesizedRotation> rotations;
};
CircuitSynthesis synthesize_circuit(const LogicalCircuit& c, const TErrorModel& model,
                                    const SynthesisOptions& options = {});

// |<psi_logical | psi_synth>|^2 via statevectors; n <= 12.
double circuit_synthesis_fidelity(const LogicalCircuit& logical, const LogicalCircuit& synthesized);

}  // namespace lsqc::synth
