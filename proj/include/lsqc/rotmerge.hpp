#pragma once

#include "lsqc/circuit.hpp"

namespace lsqc::rotmerge {

struct U3Params {
  double theta, phi, lambda;
};

// ZYZ-style parameter extraction; reconstruction |Tr(U^dag V)|/2 >= 1-1e-10.
U3Params u3_params_of(const Mat2& u);

// Merges runs of single-qubit gates into U3 gates, commuting diagonal
// rotations through CX controls and X-type rotations through CX targets.
// Merged gates within 1e-9 (in angle) of a Clifford are re-emitted as
// Clifford gates. Output contains only Clifford, U3, and measurement gates.
LogicalCircuit merge_rotations(const LogicalCircuit& c);

}  // namespace lsqc::rotmerge
