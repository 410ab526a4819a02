#include "lsqc/apps.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

namespace lsqc::apps {

long labs_energy(const std::vector<int>& bits) {
  const int n = static_cast<int>(bits.size());
  for (int b : bits)
    if (b != 1 && b != -1) throw std::invalid_argument("labs_energy: entries must be +/-1");
  long e = 0;
  for (int k = 1; k < n; ++k) {
    long a = 0;
    for (int i = 0; i + k < n; ++i) a += bits[i] * bits[i + k];
    e += a * a;
  }
  return e;
}

long LabsInstance::energy(const std::vector<int>& bits) const {
  long acc = 0;
  for (const auto& t : terms) {
    int prod = 1;
    for (uint32_t q : t.support) prod *= bits[q];
    acc += static_cast<long>(t.coefficient) * prod;
  }
  return offset + 2 * acc;
}

LabsInstance expand_hamiltonian(uint32_t n) {
  if (n < 2) throw std::invalid_argument("expand_hamiltonian: N >= 2");
  LabsInstance inst;
  inst.n = n;
  // sum_k A_k^2 with A_k = sum_i Z_i Z_{i+k}; squares give the identity
  // offset, unordered cross pairs give 2x each product (stored halved).
  std::map<std::vector<uint32_t>, long> acc;
  for (uint32_t k = 1; k < n; ++k) {
    std::vector<std::vector<uint32_t>> factors;
    for (uint32_t i = 0; i + k < n; ++i) factors.push_back({i, i + k});
    inst.offset += static_cast<long>(factors.size());
    for (size_t a = 0; a < factors.size(); ++a) {
      for (size_t b = a + 1; b < factors.size(); ++b) {
        // XOR of supports (Z^2 = I).
        std::vector<uint32_t> sup;
        for (uint32_t q : factors[a])
          if (std::find(factors[b].begin(), factors[b].end(), q) == factors[b].end())
            sup.push_back(q);
        for (uint32_t q : factors[b])
          if (std::find(factors[a].begin(), factors[a].end(), q) == factors[a].end())
            sup.push_back(q);
        std::sort(sup.begin(), sup.end());
        if (sup.empty()) {
          inst.offset += 2;
        } else {
          acc[sup] += 1;
        }
      }
    }
  }
  for (auto& [sup, coeff] : acc) {
    if (coeff != 0) inst.terms.push_back({static_cast<int>(coeff), sup});
  }
  return inst;
}

LogicalCircuit build_qaoa(const LabsInstance& inst, const QaoaParams& params,
                          bool with_measurements) {
  if (params.gammas.size() != params.betas.size())
    throw std::invalid_argument("qaoa: |gammas| != |betas|");
  LogicalCircuit c(inst.n, "qaoa-labs-" + std::to_string(inst.n));
  for (uint32_t q = 0; q < inst.n; ++q) c.append(GateKind::H, {q});
  for (size_t layer = 0; layer < params.layers(); ++layer) {
    double gamma = params.gammas[layer], beta = params.betas[layer];
    for (const auto& term : inst.terms) {
      const auto& s = term.support;
      for (size_t i = 0; i + 1 < s.size(); ++i) c.append(GateKind::CX, {s[i], s[i + 1]});
      c.append(GateKind::RZ, {s.back()}, {2.0 * gamma * term.coefficient});
      for (size_t i = s.size() - 1; i-- > 0;) c.append(GateKind::CX, {s[i], s[i + 1]});
    }
    for (uint32_t q = 0; q < inst.n; ++q) c.append(GateKind::RX, {q}, {2.0 * beta});
  }
  if (with_measurements)
    for (uint32_t q = 0; q < inst.n; ++q) c.append(GateKind::MeasureZ, {q});
  return c;
}

Amplitudes qaoa_state_oracle(const LabsInstance& inst, const QaoaParams& params) {
  const size_t dim = size_t(1) << inst.n;
  Amplitudes psi(dim, Complex(1.0 / std::sqrt(double(dim))));
  // Diagonal phase values of the stored Hamiltonian (terms only; the offset
  // is a global phase).
  std::vector<double> diag(dim, 0.0);
  for (size_t idx = 0; idx < dim; ++idx) {
    std::vector<int> bits(inst.n);
    for (uint32_t q = 0; q < inst.n; ++q) bits[q] = ((idx >> q) & 1) ? -1 : 1;
    for (const auto& t : inst.terms) {
      int prod = 1;
      for (uint32_t q : t.support) prod *= bits[q];
      diag[idx] += t.coefficient * prod;
    }
  }
  for (size_t layer = 0; layer < params.layers(); ++layer) {
    double gamma = params.gammas[layer], beta = params.betas[layer];
    for (size_t idx = 0; idx < dim; ++idx) psi[idx] *= std::exp(Complex(0, -gamma * diag[idx]));
    // exp(-i beta sum X) = tensor of RX(2 beta)
    Gate rx(GateKind::RX, {0}, {2 * beta});
    for (uint32_t q = 0; q < inst.n; ++q) {
      rx.qubits[0] = q;
      apply_gate(psi, rx, inst.n);
    }
  }
  return psi;
}

namespace {

// Controlled-RZ(theta) decomposed over {RZ, CX}.
void append_crz(LogicalCircuit& c, uint32_t ctrl, uint32_t tgt, double theta) {
  c.append(GateKind::RZ, {tgt}, {theta / 2});
  c.append(GateKind::CX, {ctrl, tgt});
  c.append(GateKind::RZ, {tgt}, {-theta / 2});
  c.append(GateKind::CX, {ctrl, tgt});
}

// Controlled-phase(phi) = CRZ(phi) with an extra RZ(phi/2) on the control.
void append_cphase(LogicalCircuit& c, uint32_t ctrl, uint32_t tgt, double phi) {
  c.append(GateKind::RZ, {ctrl}, {phi / 2});
  append_crz(c, ctrl, tgt, phi);
}

}  // namespace

LogicalCircuit build_qpe(uint32_t bits, int eigenstate, bool with_measurements) {
  if (bits < 1) throw std::invalid_argument("qpe: precision >= 1");
  if (eigenstate != 0 && eigenstate != 1) throw std::invalid_argument("qpe: eigenstate 0 or 1");
  const uint32_t target = bits;  // register 0..bits-1, target last
  LogicalCircuit c(bits + 1, "qpe-" + std::to_string(bits));
  if (eigenstate == 1) c.append(GateKind::X, {target});
  for (uint32_t q = 0; q < bits; ++q) c.append(GateKind::H, {q});
  // Register qubit q controls U^{2^q} with U = RZ(pi/4); after the inverse
  // QFT below, qubit 0 then carries the most significant phase bit.
  for (uint32_t q = 0; q < bits; ++q) {
    double theta = (kPi / 4) * std::pow(2.0, double(q));
    append_crz(c, q, target, theta);
  }
  // Inverse QFT with MSB-first register, bit-reversal free form.
  for (uint32_t j = bits; j-- > 0;) {
    for (uint32_t k = bits - 1; k > j; --k) {
      double phi = -kPi / std::pow(2.0, double(k - j));
      append_cphase(c, k, j, phi);
    }
    c.append(GateKind::H, {j});
  }
  if (with_measurements)
    for (uint32_t q = 0; q < bits; ++q) c.append(GateKind::MeasureZ, {q});
  return c;
}

std::vector<int> qpe_expected_bits(uint32_t bits, int eigenstate) {
  // RZ(pi/4) eigenvalues: exp(-i pi/8) on |0>, exp(+i pi/8) on |1>.
  // Phase as a fraction of 2 pi: |1> -> 1/16, |0> -> 15/16 at 4 bits.
  long denom = 1L << bits;
  double phase = (eigenstate == 1 ? 1.0 : -1.0) * (kPi / 8) / (2 * kPi);
  long value = std::lround(phase * denom);
  value = ((value % denom) + denom) % denom;
  std::vector<int> out(bits);
  for (uint32_t q = 0; q < bits; ++q) out[q] = (value >> (bits - 1 - q)) & 1;
  return out;
}

bool Grid::adjacent(uint32_t a, uint32_t b) const {
  uint32_t ax = a % width, ay = a / width, bx = b % width, by = b / width;
  return (ax == bx && (ay + 1 == by || by + 1 == ay)) ||
         (ay == by && (ax + 1 == bx || bx + 1 == ax));
}

RoutedCircuit map_to_grid(const LogicalCircuit& c, const Grid& grid) {
  if (grid.size() < c.num_qubits) throw CapacityError("grid too small for circuit");
  const uint32_t n = c.num_qubits;
  // placement[logical] = slot; slot_of[slot] = logical (or UINT32_MAX)
  std::vector<uint32_t> placement(n);
  for (uint32_t q = 0; q < n; ++q) placement[q] = q;
  std::vector<uint32_t> occupant(grid.size(), UINT32_MAX);
  for (uint32_t q = 0; q < n; ++q) occupant[q] = q;

  LogicalCircuit out(static_cast<uint32_t>(grid.size()), c.name + "-routed");
  auto emit_swap = [&](uint32_t sa, uint32_t sb) {
    // SWAP decomposed into 3 CX on slots.
    out.append(GateKind::CX, {sa, sb});
    out.append(GateKind::CX, {sb, sa});
    out.append(GateKind::CX, {sa, sb});
    uint32_t la = occupant[sa], lb = occupant[sb];
    if (la != UINT32_MAX) placement[la] = sb;
    if (lb != UINT32_MAX) placement[lb] = sa;
    std::swap(occupant[sa], occupant[sb]);
  };

  auto slot_path = [&](uint32_t from, uint32_t to) {
    std::vector<uint32_t> prev(grid.size(), UINT32_MAX);
    std::queue<uint32_t> bfs;
    bfs.push(from);
    prev[from] = from;
    while (!bfs.empty()) {
      uint32_t s = bfs.front();
      bfs.pop();
      if (s == to) break;
      for (uint32_t t = 0; t < grid.size(); ++t) {
        if (prev[t] == UINT32_MAX && grid.adjacent(s, t)) {
          prev[t] = s;
          bfs.push(t);
        }
      }
    }
    std::vector<uint32_t> path;
    for (uint32_t s = to; s != from; s = prev[s]) path.push_back(s);
    path.push_back(from);
    std::reverse(path.begin(), path.end());
    return path;
  };

  for (const auto& g : c.gates) {
    if (g.kind == GateKind::CX) {
      uint32_t sc = placement[g.qubit(0)], st = placement[g.qubit(1)];
      if (!grid.adjacent(sc, st)) {
        auto path = slot_path(sc, st);
        // Walk the control toward the target, stopping one step short.
        for (size_t i = 0; i + 2 < path.size(); ++i) emit_swap(path[i], path[i + 1]);
        sc = placement[g.qubit(0)];
        st = placement[g.qubit(1)];
      }
      out.append(GateKind::CX, {sc, st});
    } else {
      Gate moved = g;
      for (auto& q : moved.qubits) q = placement[q];
      out.append(std::move(moved));
    }
  }
  return {std::move(out), std::move(placement)};
}

}  // namespace lsqc::apps
