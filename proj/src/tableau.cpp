#include "lsqc/tableau.hpp"

#include <stdexcept>

namespace lsqc {

void conjugate_by_gate(PauliString& p, const Gate& g) {
  switch (g.kind) {
    case GateKind::H: {
      uint32_t q = g.qubit();
      if (p.x[q] && p.z[q]) p.phase = (p.phase + 2) & 3;  // H Y H = -Y
      std::swap(p.x[q], p.z[q]);
      break;
    }
    case GateKind::S: {
      uint32_t q = g.qubit();
      if (p.x[q] && p.z[q]) p.phase = (p.phase + 2) & 3;  // S Y Sdg = -X
      p.z[q] ^= p.x[q];
      break;
    }
    case GateKind::Sdg: {
      uint32_t q = g.qubit();
      if (p.x[q] && !p.z[q]) p.phase = (p.phase + 2) & 3;  // Sdg X S = -Y
      p.z[q] ^= p.x[q];
      break;
    }
    case GateKind::X: {
      uint32_t q = g.qubit();
      if (p.z[q]) p.phase = (p.phase + 2) & 3;
      break;
    }
    case GateKind::Y: {
      uint32_t q = g.qubit();
      if (p.x[q] != p.z[q]) p.phase = (p.phase + 2) & 3;
      break;
    }
    case GateKind::Z: {
      uint32_t q = g.qubit();
      if (p.x[q]) p.phase = (p.phase + 2) & 3;
      break;
    }
    case GateKind::CX: {
      uint32_t c = g.qubit(0), t = g.qubit(1);
      if (p.x[c] && p.z[t] && (p.x[t] == p.z[c])) p.phase = (p.phase + 2) & 3;
      p.x[t] ^= p.x[c];
      p.z[c] ^= p.z[t];
      break;
    }
    default:
      throw std::invalid_argument("conjugate_by_gate: unsupported gate " +
                                  std::string(gate_info(g.kind).name));
  }
}

CliffordTableau CliffordTableau::identity(size_t n) {
  CliffordTableau t;
  t.img_x.reserve(n);
  t.img_z.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    t.img_x.push_back(PauliString::single(n, i, 'X'));
    t.img_z.push_back(PauliString::single(n, i, 'Z'));
  }
  return t;
}

void CliffordTableau::apply(const Gate& g) {
  for (auto& row : img_x) conjugate_by_gate(row, g);
  for (auto& row : img_z) conjugate_by_gate(row, g);
}

PauliString CliffordTableau::conj(const PauliString& p) const {
  size_t n = num_qubits();
  if (p.num_qubits() != n) throw std::invalid_argument("pauli size mismatch");
  PauliString r(n);
  r.phase = p.phase;
  for (size_t q = 0; q < n; ++q) {
    if (p.x[q] && p.z[q]) r.phase = (r.phase + 1) & 3;  // Y = i X Z
    if (p.x[q]) r *= img_x[q];
    if (p.z[q]) r *= img_z[q];
  }
  return r;
}

void CliffordTableau::compose_after(const CliffordTableau& other) {
  for (auto& row : img_x) row = other.conj(row);
  for (auto& row : img_z) row = other.conj(row);
}

CliffordTableau CliffordTableau::inverse() const {
  size_t n = num_qubits();
  // The inverse tableau's rows solve conj(inv_row) = generator. Build via
  // symplectic transpose: inverse images follow from commutation pairings.
  CliffordTableau inv = CliffordTableau::identity(n);
  // inv.img_x[j] bits: X_j appears in inv-image of X_i iff images pair up
  // symplectically. Use: inv_x[j].x[i] = <img_z[i], Z-part...>; derive by
  // brute pairing: P = X_j; its preimage Q satisfies conj(Q)=P.
  // Solve with the symplectic inner products against img rows.
  for (size_t j = 0; j < n; ++j) {
    PauliString qx(n), qz(n);
    for (size_t i = 0; i < n; ++i) {
      // X_j anticommutes with conj(Q) iff Q anticommutes with preimage of X_j.
      // Coefficients via symplectic duality between rows:
      qx.x[i] = !img_z[i].commutes_with(PauliString::single(n, j, 'X'));
      qx.z[i] = !img_x[i].commutes_with(PauliString::single(n, j, 'X'));
      qz.x[i] = !img_z[i].commutes_with(PauliString::single(n, j, 'Z'));
      qz.z[i] = !img_x[i].commutes_with(PauliString::single(n, j, 'Z'));
    }
    inv.img_x[j] = qx;
    inv.img_z[j] = qz;
  }
  // Fix signs: conj(inv_row) must equal the generator exactly.
  for (size_t j = 0; j < n; ++j) {
    if (conj(inv.img_x[j]).phase != 0) inv.img_x[j].phase ^= 2;
    if (conj(inv.img_z[j]).phase != 0) inv.img_z[j].phase ^= 2;
  }
  return inv;
}

bool CliffordTableau::is_symplectic() const {
  size_t n = num_qubits();
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      if (img_x[i].commutes_with(img_z[j]) != (i != j)) return false;
      if (!img_x[i].commutes_with(img_x[j])) return false;
      if (!img_z[i].commutes_with(img_z[j])) return false;
    }
    if ((img_x[i].phase & 1) || (img_z[i].phase & 1)) return false;
  }
  return true;
}

bool CliffordTableau::operator==(const CliffordTableau& o) const {
  return img_x == o.img_x && img_z == o.img_z;
}

std::vector<StabilizerFlow> flows_of(const CliffordTableau& t) {
  std::vector<StabilizerFlow> fl;
  size_t n = t.num_qubits();
  for (size_t i = 0; i < n; ++i) {
    fl.push_back({PauliString::single(n, i, 'X'), t.img_x[i]});
    fl.push_back({PauliString::single(n, i, 'Z'), t.img_z[i]});
  }
  return fl;
}

CliffordTableau tableau_of(const LogicalCircuit& c) {
  for (const auto& g : c.gates) {
    if (!is_clifford(g.kind)) {
      throw std::invalid_argument("tableau_of: unsupported non-Clifford gate " +
                                  std::string(gate_info(g.kind).name));
    }
  }
  CliffordTableau t = CliffordTableau::identity(c.num_qubits);
  for (const auto& g : c.gates) t.apply(g);
  return t;
}

}  // namespace lsqc
