#include "lsqc/statevector.hpp"

#include <cmath>

namespace lsqc {

namespace {

void apply_1q(Amplitudes& psi, const Mat2& u, uint32_t q) {
  const size_t step = size_t(1) << q;
  for (size_t base = 0; base < psi.size(); base += 2 * step) {
    for (size_t i = base; i < base + step; ++i) {
      Complex a0 = psi[i], a1 = psi[i + step];
      psi[i] = u(0, 0) * a0 + u(0, 1) * a1;
      psi[i + step] = u(1, 0) * a0 + u(1, 1) * a1;
    }
  }
}

void apply_cx(Amplitudes& psi, uint32_t c, uint32_t t) {
  const size_t cb = size_t(1) << c, tb = size_t(1) << t;
  for (size_t i = 0; i < psi.size(); ++i) {
    if ((i & cb) && !(i & tb)) std::swap(psi[i], psi[i | tb]);
  }
}

}  // namespace

void apply_gate(Amplitudes& psi, const Gate& g, uint32_t) {
  if (g.kind == GateKind::CX) {
    apply_cx(psi, g.qubit(0), g.qubit(1));
  } else {
    apply_1q(psi, gate_matrix_1q(g.kind, g.params), g.qubit());
  }
}

Amplitudes statevector(const LogicalCircuit& c) {
  if (c.num_qubits > 12) throw CapacityError("statevector limited to 12 qubits");
  bool seen_measure = false;
  for (const auto& g : c.gates) {
    if (is_measurement(g.kind)) {
      seen_measure = true;
    } else if (g.kind == GateKind::Reset) {
      throw std::invalid_argument("statevector: reset not supported");
    } else if (seen_measure) {
      throw std::invalid_argument("statevector: mid-circuit measurement not supported");
    }
  }
  Amplitudes psi(size_t(1) << c.num_qubits, Complex(0));
  psi[0] = Complex(1);
  for (const auto& g : c.gates) {
    if (is_measurement(g.kind)) continue;
    apply_gate(psi, g, c.num_qubits);
  }
  return psi;
}

double norm(const Amplitudes& psi) {
  double s = 0;
  for (const auto& a : psi) s += std::norm(a);
  return std::sqrt(s);
}

double overlap2(const Amplitudes& a, const Amplitudes& b) {
  Complex acc(0);
  for (size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return std::norm(acc);
}

double pauli_expectation(const Amplitudes& psi, const PauliString& p) {
  Amplitudes phi = psi;
  size_t n = p.num_qubits();
  for (size_t q = 0; q < n; ++q) {
    char pc = p.pauli_at(q);
    if (pc == 'I') continue;
    GateKind k = pc == 'X' ? GateKind::X : pc == 'Y' ? GateKind::Y : GateKind::Z;
    apply_1q(phi, gate_matrix_1q(k, {}), static_cast<uint32_t>(q));
  }
  Complex acc(0);
  for (size_t i = 0; i < psi.size(); ++i) acc += std::conj(psi[i]) * phi[i];
  return p.sign() * acc.real();
}

std::vector<Complex> unitary_of(const LogicalCircuit& c) {
  if (c.num_qubits > 6) throw CapacityError("unitary_of limited to 6 qubits");
  const size_t dim = size_t(1) << c.num_qubits;
  std::vector<Complex> u(dim * dim, Complex(0));
  for (size_t col = 0; col < dim; ++col) {
    Amplitudes psi(dim, Complex(0));
    psi[col] = Complex(1);
    for (const auto& g : c.gates) {
      if (is_measurement(g.kind)) continue;
      apply_gate(psi, g, c.num_qubits);
    }
    for (size_t row = 0; row < dim; ++row) u[col * dim + row] = psi[row];
  }
  return u;
}

double unitary_trace_fidelity(const std::vector<Complex>& a, const std::vector<Complex>& b,
                              size_t dim) {
  Complex tr(0);
  for (size_t col = 0; col < dim; ++col)
    for (size_t row = 0; row < dim; ++row)
      tr += std::conj(a[col * dim + row]) * b[col * dim + row];
  return std::abs(tr) / static_cast<double>(dim);
}

}  // namespace lsqc
