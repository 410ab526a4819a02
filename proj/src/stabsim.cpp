#include "lsqc/stabsim.hpp"

#include <bit>
#include <stdexcept>

namespace lsqc {

void PackedPauli::mul(const PackedPauli& o) {
  int ph = phase + o.phase;
  int acc = 0;
  for (size_t w = 0; w < x.size(); ++w) {
    uint64_t x1 = x[w], z1 = z[w], x2 = o.x[w], z2 = o.z[w];
    uint64_t plus = (x1 & z1 & z2 & ~x2) | (x1 & ~z1 & x2 & z2) | (~x1 & z1 & x2 & ~z2);
    uint64_t minus = (x1 & z1 & x2 & ~z2) | (x1 & ~z1 & z2 & ~x2) | (~x1 & z1 & x2 & z2);
    acc += std::popcount(plus) - std::popcount(minus);
    x[w] ^= x2;
    z[w] ^= z2;
  }
  phase = static_cast<uint8_t>((((ph + acc) % 4) + 4) % 4);
}

bool PackedPauli::commutes_with(const PackedPauli& o) const {
  int acc = 0;
  for (size_t w = 0; w < x.size(); ++w)
    acc ^= std::popcount((x[w] & o.z[w]) ^ (z[w] & o.x[w])) & 1;
  return acc == 0;
}

bool PackedPauli::is_identity_bits() const {
  for (size_t w = 0; w < x.size(); ++w)
    if (x[w] | z[w]) return false;
  return true;
}

PackedPauli pack(const PauliString& p, size_t n) {
  PackedPauli out(n);
  for (size_t q = 0; q < p.num_qubits() && q < n; ++q) {
    out.set_x(q, p.x[q]);
    out.set_z(q, p.z[q]);
  }
  out.phase = p.phase;
  return out;
}

PauliString unpack(const PackedPauli& p, size_t n) {
  PauliString out(n);
  for (size_t q = 0; q < n; ++q) {
    out.x[q] = p.get_x(q);
    out.z[q] = p.get_z(q);
  }
  out.phase = p.phase;
  return out;
}

StabilizerSim::StabilizerSim(size_t n, uint64_t seed) : n_(n), rng_(seed) {
  destab_.reserve(n);
  stab_.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    PackedPauli d(n), s(n);
    d.set_x(i, true);
    s.set_z(i, true);
    destab_.push_back(std::move(d));
    stab_.push_back(std::move(s));
  }
}

void StabilizerSim::h(size_t q) {
  for (auto* rows : {&destab_, &stab_}) {
    for (auto& r : *rows) {
      bool xv = r.get_x(q), zv = r.get_z(q);
      if (xv && zv) r.phase = (r.phase + 2) & 3;
      r.set_x(q, zv);
      r.set_z(q, xv);
    }
  }
}

void StabilizerSim::s(size_t q) {
  for (auto* rows : {&destab_, &stab_}) {
    for (auto& r : *rows) {
      bool xv = r.get_x(q), zv = r.get_z(q);
      if (xv && zv) r.phase = (r.phase + 2) & 3;
      r.set_z(q, zv ^ xv);
    }
  }
}

void StabilizerSim::sdg(size_t q) {
  for (auto* rows : {&destab_, &stab_}) {
    for (auto& r : *rows) {
      bool xv = r.get_x(q), zv = r.get_z(q);
      if (xv && !zv) r.phase = (r.phase + 2) & 3;
      r.set_z(q, zv ^ xv);
    }
  }
}

void StabilizerSim::x(size_t q) {
  for (auto* rows : {&destab_, &stab_})
    for (auto& r : *rows)
      if (r.get_z(q)) r.phase = (r.phase + 2) & 3;
}

void StabilizerSim::y(size_t q) {
  for (auto* rows : {&destab_, &stab_})
    for (auto& r : *rows)
      if (r.get_x(q) != r.get_z(q)) r.phase = (r.phase + 2) & 3;
}

void StabilizerSim::z(size_t q) {
  for (auto* rows : {&destab_, &stab_})
    for (auto& r : *rows)
      if (r.get_x(q)) r.phase = (r.phase + 2) & 3;
}

void StabilizerSim::cx(size_t c, size_t t) {
  for (auto* rows : {&destab_, &stab_}) {
    for (auto& r : *rows) {
      bool xc = r.get_x(c), zc = r.get_z(c), xt = r.get_x(t), zt = r.get_z(t);
      if (xc && zt && (xt == zc)) r.phase = (r.phase + 2) & 3;
      r.set_x(t, xt ^ xc);
      r.set_z(c, zc ^ zt);
    }
  }
}

MeasureResult StabilizerSim::measure(const PackedPauli& op, std::optional<bool> force) {
  if ((op.phase & 1) != 0) throw std::invalid_argument("measured operator must be Hermitian");
  // Find a stabilizer generator anticommuting with op.
  size_t pivot = n_;
  for (size_t i = 0; i < n_; ++i) {
    if (!stab_[i].commutes_with(op)) {
      pivot = i;
      break;
    }
  }
  if (pivot < n_) {
    bool outcome = force ? *force : (rng_() & 1);
    for (size_t i = 0; i < n_; ++i) {
      if (i != pivot && !stab_[i].commutes_with(op)) stab_[i].mul(stab_[pivot]);
      if (!destab_[i].commutes_with(op)) destab_[i].mul(stab_[pivot]);
    }
    destab_[pivot] = stab_[pivot];
    stab_[pivot] = op;
    if (outcome) stab_[pivot].phase = (stab_[pivot].phase + 2) & 3;
    return {outcome, false};
  }
  // Deterministic: op is a product of stabilizers; identify it via destabilizers.
  PackedPauli acc(n_);
  for (size_t i = 0; i < n_; ++i)
    if (!destab_[i].commutes_with(op)) acc.mul(stab_[i]);
  // acc has op's bits; outcome from relative sign.
  bool outcome = (((op.phase - acc.phase) & 3) == 2);
  return {outcome, true};
}

MeasureResult StabilizerSim::measure(const PauliString& op, std::optional<bool> force) {
  return measure(pack(op, n_), force);
}

MeasureResult StabilizerSim::measure_z(size_t q, std::optional<bool> force) {
  PackedPauli op(n_);
  op.set_z(q, true);
  return measure(op, force);
}

MeasureResult StabilizerSim::measure_x(size_t q, std::optional<bool> force) {
  PackedPauli op(n_);
  op.set_x(q, true);
  return measure(op, force);
}

void StabilizerSim::reset_z(size_t q) {
  auto r = measure_z(q);
  if (r.outcome) x(q);
}

void StabilizerSim::reset_x(size_t q) {
  auto r = measure_x(q);
  if (r.outcome) z(q);
}

std::vector<PauliString> StabilizerSim::stabilizers() const {
  std::vector<PauliString> out;
  out.reserve(n_);
  for (const auto& s : stab_) out.push_back(unpack(s, n_));
  return out;
}

}  // namespace lsqc
