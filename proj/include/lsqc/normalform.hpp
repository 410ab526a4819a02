#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "lsqc/circuit.hpp"
#include "lsqc/gates.hpp"

namespace lsqc::normalform {

// The 24-element single-qubit Clifford group (mod global phase), generated
// programmatically from <H, S> closure. Index 0 is the identity.
class CliffordGroup {
 public:
  static const CliffordGroup& instance();

  static constexpr int kSize = 24;

  const Mat2& matrix(int idx) const { return matrices_[idx]; }
  const std::vector<GateKind>& word(int idx) const { return words_[idx]; }
  int compose(int a, int b) const { return compose_[a][b]; }  // M_a * M_b
  int inverse(int idx) const { return inverse_[idx]; }
  int index_of(const Mat2& u) const;  // up to global phase; -1 if not Clifford
  int index_of_gate(GateKind k) const;

  // Conjugation action on Pauli axes: M_c sigma_p M_c^dag = sign * sigma_p'.
  // p in {0,1,2} = {X,Y,Z}.
  std::pair<int, int> conj_axis(int c, int axis) const { return conj_[c][axis]; }

 private:
  CliffordGroup();
  std::array<Mat2, kSize> matrices_;
  std::array<std::vector<GateKind>, kSize> words_;
  std::array<std::array<int, kSize>, kSize> compose_;
  std::array<int, kSize> inverse_;
  std::array<std::array<std::pair<int, int>, 3>, kSize> conj_;
  std::array<int, 9> gate_index_;
};

// T_X^+/- or T_Z^+/- injection token.
struct TToken {
  char axis;    // 'X' or 'Z'
  bool dagger;  // true => T^-
  bool operator==(const TToken& o) const { return axis == o.axis && dagger == o.dagger; }
};

// C_lead, then alternating tokens, then C_trail (circuit order).
struct TSequence {
  int leading_clifford = 0;
  std::vector<TToken> tokens;
  int trailing_clifford = 0;

  Mat2 unitary() const;
  // Expansion over {H, S, T, Tdg} gates acting on `qubit`.
  std::vector<Gate> to_gates(uint32_t qubit) const;
  bool axes_alternate() const;
};

Mat2 token_matrix(const TToken& t);

// Rewrites a single-qubit Clifford+T gate run into the token normal form.
// Token count equals the run's T count when the run is T-minimal; reducible
// pairs (e.g. T;T) are folded into Cliffords.
TSequence normalize(const std::vector<Gate>& run);

// Alternating decomposition of a Clifford+T circuit. segments.size() ==
// layers.size() + 1; layer i sits between segments i and i+1 and holds
// boundary-Clifford-free token sequences per qubit. Terminal measurements are
// collected separately.
struct SegmentedCircuit {
  uint32_t num_qubits = 0;
  std::vector<LogicalCircuit> segments;
  std::vector<std::map<uint32_t, TSequence>> layers;
  std::vector<Gate> final_measurements;

  LogicalCircuit flatten() const;
  size_t total_tokens() const;
};

SegmentedCircuit segment_circuit(const LogicalCircuit& c, size_t token_cap = 8);

}  // namespace lsqc::normalform
