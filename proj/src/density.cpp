#include "lsqc/density.hpp"

#include <cmath>

namespace lsqc {

double DensityMatrix::trace_real() const {
  double t = 0;
  for (size_t i = 0; i < dim(); ++i) t += at(i, i).real();
  return t;
}

double DensityMatrix::fidelity_with(const Amplitudes& psi) const {
  Complex acc(0);
  const size_t d = dim();
  for (size_t r = 0; r < d; ++r)
    for (size_t c = 0; c < d; ++c) acc += std::conj(psi[r]) * rho[r * d + c] * psi[c];
  return acc.real();
}

bool DensityMatrix::is_positive_semidefinite(double tol) const {
  const size_t d = dim();
  std::vector<Complex> a = rho;
  for (size_t i = 0; i < d; ++i) a[i * d + i] += tol;
  // In-place Cholesky; fails iff a pivot goes non-positive.
  for (size_t j = 0; j < d; ++j) {
    double diag = a[j * d + j].real();
    for (size_t k = 0; k < j; ++k) diag -= std::norm(a[j * d + k]);
    if (diag <= 0) return false;
    double l = std::sqrt(diag);
    a[j * d + j] = l;
    for (size_t i = j + 1; i < d; ++i) {
      Complex v = a[i * d + j];
      for (size_t k = 0; k < j; ++k) v -= a[i * d + k] * std::conj(a[j * d + k]);
      a[i * d + j] = v / l;
    }
  }
  return true;
}

namespace {

void apply_left(DensityMatrix& dm, const Mat2& u, uint32_t q) {
  const size_t d = dm.dim(), step = size_t(1) << q;
  for (size_t col = 0; col < d; ++col) {
    for (size_t base = 0; base < d; base += 2 * step) {
      for (size_t r = base; r < base + step; ++r) {
        Complex a0 = dm.rho[r * d + col], a1 = dm.rho[(r + step) * d + col];
        dm.rho[r * d + col] = u(0, 0) * a0 + u(0, 1) * a1;
        dm.rho[(r + step) * d + col] = u(1, 0) * a0 + u(1, 1) * a1;
      }
    }
  }
}

void apply_right_dagger(DensityMatrix& dm, const Mat2& u, uint32_t q) {
  const size_t d = dm.dim(), step = size_t(1) << q;
  for (size_t row = 0; row < d; ++row) {
    Complex* r = &dm.rho[row * d];
    for (size_t base = 0; base < d; base += 2 * step) {
      for (size_t c = base; c < base + step; ++c) {
        Complex a0 = r[c], a1 = r[c + step];
        r[c] = a0 * std::conj(u(0, 0)) + a1 * std::conj(u(0, 1));
        r[c + step] = a0 * std::conj(u(1, 0)) + a1 * std::conj(u(1, 1));
      }
    }
  }
}

void apply_unitary_1q(DensityMatrix& dm, const Mat2& u, uint32_t q) {
  apply_left(dm, u, q);
  apply_right_dagger(dm, u, q);
}

void apply_cx_rho(DensityMatrix& dm, uint32_t c, uint32_t t) {
  const size_t d = dm.dim(), cb = size_t(1) << c, tb = size_t(1) << t;
  for (size_t col = 0; col < d; ++col)
    for (size_t r = 0; r < d; ++r)
      if ((r & cb) && !(r & tb)) std::swap(dm.rho[r * d + col], dm.rho[(r | tb) * d + col]);
  for (size_t row = 0; row < d; ++row)
    for (size_t c2 = 0; c2 < d; ++c2)
      if ((c2 & cb) && !(c2 & tb)) std::swap(dm.rho[row * d + c2], dm.rho[row * d + (c2 | tb)]);
}

void apply_pauli_1q(DensityMatrix& dm, char p, uint32_t q) {
  GateKind k = p == 'X' ? GateKind::X : p == 'Y' ? GateKind::Y : GateKind::Z;
  apply_unitary_1q(dm, gate_matrix_1q(k, {}), q);
}

// rate q: each non-identity Pauli applied with probability q/3.
void depolarize_1q(DensityMatrix& dm, double q, uint32_t a) {
  if (q <= 0) return;
  DensityMatrix mix = dm;
  for (auto& v : mix.rho) v *= (1 - q);
  const char paulis[3] = {'X', 'Y', 'Z'};
  for (char p : paulis) {
    DensityMatrix t = dm;
    apply_pauli_1q(t, p, a);
    for (size_t i = 0; i < t.rho.size(); ++i) mix.rho[i] += (q / 3) * t.rho[i];
  }
  dm = std::move(mix);
}

// rate p: each of the 15 non-identity Pauli pairs with probability p/15.
void depolarize_2q(DensityMatrix& dm, double p, uint32_t a, uint32_t b) {
  if (p <= 0) return;
  DensityMatrix mix = dm;
  for (auto& v : mix.rho) v *= (1 - p);
  const char paulis[4] = {'I', 'X', 'Y', 'Z'};
  for (char pa : paulis) {
    for (char pb : paulis) {
      if (pa == 'I' && pb == 'I') continue;
      DensityMatrix t = dm;
      if (pa != 'I') apply_pauli_1q(t, pa, a);
      if (pb != 'I') apply_pauli_1q(t, pb, b);
      for (size_t i = 0; i < t.rho.size(); ++i) mix.rho[i] += (p / 15) * t.rho[i];
    }
  }
  dm = std::move(mix);
}

void flip_channel(DensityMatrix& dm, double r, char pauli, uint32_t q) {
  if (r <= 0) return;
  DensityMatrix t = dm;
  apply_pauli_1q(t, pauli, q);
  for (size_t i = 0; i < dm.rho.size(); ++i) dm.rho[i] = (1 - r) * dm.rho[i] + r * t.rho[i];
}

}  // namespace

std::vector<std::vector<size_t>> schedule_moments(const LogicalCircuit& c) {
  std::vector<std::vector<size_t>> moments;
  std::vector<size_t> ready(c.num_qubits, 0);
  for (size_t gi = 0; gi < c.gates.size(); ++gi) {
    const auto& g = c.gates[gi];
    size_t m = 0;
    for (uint32_t q : g.qubits) m = std::max(m, ready[q]);
    if (m >= moments.size()) moments.resize(m + 1);
    moments[m].push_back(gi);
    for (uint32_t q : g.qubits) ready[q] = m + 1;
  }
  return moments;
}

DensityMatrix density_matrix_sim(const LogicalCircuit& c, const NoiseModel& noise) {
  if (c.num_qubits > 6) throw CapacityError("density_matrix_sim limited to 6 qubits");
  DensityMatrix dm;
  dm.num_qubits = c.num_qubits;
  dm.rho.assign(dm.dim() * dm.dim(), Complex(0));
  dm.rho[0] = Complex(1);

  auto moments = schedule_moments(c);
  for (const auto& moment : moments) {
    std::vector<bool> busy(c.num_qubits, false);
    bool has_meas_or_reset = false;
    for (size_t gi : moment) {
      const auto& g = c.gates[gi];
      for (uint32_t q : g.qubits) busy[q] = true;
      switch (g.kind) {
        case GateKind::CX:
          apply_cx_rho(dm, g.qubit(0), g.qubit(1));
          depolarize_2q(dm, noise.two_qubit(), g.qubit(0), g.qubit(1));
          break;
        case GateKind::MeasureZ:
          has_meas_or_reset = true;
          flip_channel(dm, noise.measure_flip(), 'X', g.qubit());
          break;
        case GateKind::MeasureX:
          has_meas_or_reset = true;
          flip_channel(dm, noise.measure_flip(), 'Z', g.qubit());
          break;
        case GateKind::Reset: {
          has_meas_or_reset = true;
          // Project to |0><0| by zeroing cross terms, then reset error.
          const size_t d = dm.dim(), qb = size_t(1) << g.qubit();
          for (size_t r = 0; r < d; ++r)
            for (size_t col = 0; col < d; ++col)
              if (((r & qb) != 0) || ((col & qb) != 0)) {
                if ((r & qb) && (col & qb)) {
                  dm.rho[(r & ~qb) * d + (col & ~qb)] += dm.rho[r * d + col];
                }
                dm.rho[r * d + col] = Complex(0);
              }
          flip_channel(dm, noise.reset_error(), 'X', g.qubit());
          break;
        }
        default:
          apply_unitary_1q(dm, gate_matrix_1q(g.kind, g.params), g.qubit());
          depolarize_1q(dm, noise.one_qubit(), g.qubit());
      }
    }
    for (uint32_t q = 0; q < c.num_qubits; ++q) {
      if (!busy[q]) {
        depolarize_1q(dm, noise.idle(), q);
        if (has_meas_or_reset) depolarize_1q(dm, noise.resonator_idle(), q);
      }
    }
  }
  return dm;
}

}  // namespace lsqc
