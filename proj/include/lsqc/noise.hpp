#pragma once

namespace lsqc {

// SI1000 noise model: all rates fixed ratios of the two-qubit error rate p.
struct NoiseModel {
  double p = 0.0;

  double two_qubit() const { return p; }
  double one_qubit() const { return p / 10; }
  double measure_flip() const { return 5 * p; }
  double reset_error() const { return 2 * p; }
  double idle() const { return p / 10; }
  double resonator_idle() const { return 2 * p; }
};

}  // namespace lsqc
