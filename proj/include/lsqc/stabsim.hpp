#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "lsqc/pauli.hpp"

namespace lsqc {

// Bit-packed Pauli row used by the stabilizer simulator.
struct PackedPauli {
  std::vector<uint64_t> x, z;
  uint8_t phase = 0;  // i-exponent; valid rows stay in {0, 2}

  PackedPauli() = default;
  explicit PackedPauli(size_t n) : x((n + 63) / 64, 0), z((n + 63) / 64, 0) {}

  bool get_x(size_t q) const { return (x[q >> 6] >> (q & 63)) & 1; }
  bool get_z(size_t q) const { return (z[q >> 6] >> (q & 63)) & 1; }
  void set_x(size_t q, bool v) { x[q >> 6] = (x[q >> 6] & ~(uint64_t(1) << (q & 63))) | (uint64_t(v) << (q & 63)); }
  void set_z(size_t q, bool v) { z[q >> 6] = (z[q >> 6] & ~(uint64_t(1) << (q & 63))) | (uint64_t(v) << (q & 63)); }

  void mul(const PackedPauli& o);  // this *= o with phase tracking
  bool commutes_with(const PackedPauli& o) const;
  bool is_identity_bits() const;
};

PackedPauli pack(const PauliString& p, size_t n);
PauliString unpack(const PackedPauli& p, size_t n);

struct MeasureResult {
  bool outcome;        // false => +1 eigenvalue
  bool deterministic;  // outcome fixed by the current state
};

// Aaronson-Gottesman tableau simulator with destabilizers and arbitrary
// Pauli-product measurements. Deterministic for a fixed seed.
class StabilizerSim {
 public:
  explicit StabilizerSim(size_t n, uint64_t seed = 0);

  size_t num_qubits() const { return n_; }

  void h(size_t q);
  void s(size_t q);
  void sdg(size_t q);
  void x(size_t q);
  void y(size_t q);
  void z(size_t q);
  void cx(size_t c, size_t t);

  // Measures a Pauli product. If `force` is set and the outcome is random,
  // the forced value is imposed (used for reference frames / Choi extraction).
  MeasureResult measure(const PackedPauli& op, std::optional<bool> force = std::nullopt);
  MeasureResult measure(const PauliString& op, std::optional<bool> force = std::nullopt);
  MeasureResult measure_z(size_t q, std::optional<bool> force = std::nullopt);
  MeasureResult measure_x(size_t q, std::optional<bool> force = std::nullopt);
  void reset_z(size_t q);
  void reset_x(size_t q);

  // Stabilizer group generators (for Choi-state flow extraction).
  std::vector<PauliString> stabilizers() const;

 private:
  size_t n_;
  std::vector<PackedPauli> destab_, stab_;
  std::mt19937_64 rng_;
};

}  // namespace lsqc
