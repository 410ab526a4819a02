#include <doctest.h>

#include <climits>
#include <map>
#include <random>

#include "lsqc/apps.hpp"
#include "lsqc/pauli.hpp"
#include "lsqc/statevector.hpp"

using namespace lsqc;
using namespace lsqc::apps;

TEST_CASE("labs energy: direct values") {
  CHECK(labs_energy({1, 1, 1, 1, 1}) == 30);
  CHECK(labs_energy({1, -1}) == 1);
}

TEST_CASE("labs minimum at N=5 via exhaustive scan") {
  long best = LONG_MAX;
  for (int m = 0; m < 32; ++m) {
    std::vector<int> bits(5);
    for (int q = 0; q < 5; ++q) bits[q] = (m >> q) & 1 ? -1 : 1;
    best = std::min(best, labs_energy(bits));
  }
  CHECK(best == 2);  // frozen from the brute-force oracle
  // And the expanded instance reproduces energies exactly on all 32 states.
  auto inst = expand_hamiltonian(5);
  for (int m = 0; m < 32; ++m) {
    std::vector<int> bits(5);
    for (int q = 0; q < 5; ++q) bits[q] = (m >> q) & 1 ? -1 : 1;
    CHECK(inst.energy(bits) == labs_energy(bits));
  }
}

TEST_CASE("expand_hamiltonian(5) matches the closed-form term list") {
  auto inst = expand_hamiltonian(5);
  int w4 = 0, w2 = 0;
  for (const auto& t : inst.terms) {
    if (t.support.size() == 4) {
      CHECK(t.coefficient == 2);
      ++w4;
    } else {
      REQUIRE(t.support.size() == 2);
      CHECK(t.coefficient == 1);
      ++w2;
    }
  }
  CHECK(w4 == 3);
  CHECK(w2 == 4);
  CHECK(inst.offset == 10);
  auto has = [&](std::vector<uint32_t> s) {
    for (const auto& t : inst.terms)
      if (t.support == s) return true;
    return false;
  };
  CHECK(has({0, 1, 3, 4}));
  CHECK(has({1, 2, 3, 4}));
  CHECK(has({0, 1, 2, 3}));
  CHECK(has({0, 2}));
  CHECK(has({0, 4}));
  CHECK(has({1, 3}));
  CHECK(has({2, 4}));
}

TEST_CASE("expand_hamiltonian(2) collapses to a constant") {
  auto inst = expand_hamiltonian(2);
  CHECK(inst.terms.empty());
  CHECK(inst.offset == 1);
}

namespace {

// Independent symbolic-Pauli-multiplication oracle for expand_hamiltonian.
std::map<std::vector<uint32_t>, long> expand_oracle(uint32_t n, long& offset) {
  // Multiply out (sum_i t_i)^2 term by term over Z-words as bitmasks.
  std::map<std::vector<uint32_t>, long> acc;
  offset = 0;
  for (uint32_t k = 1; k < n; ++k) {
    std::vector<uint32_t> masks;
    for (uint32_t i = 0; i + k < n; ++i) masks.push_back((1u << i) | (1u << (i + k)));
    for (uint32_t a : masks) {
      for (uint32_t b : masks) {
        uint32_t m = a ^ b;
        if (m == 0) {
          offset += 1;
        } else {
          std::vector<uint32_t> sup;
          for (uint32_t q = 0; q < n; ++q)
            if (m & (1u << q)) sup.push_back(q);
          acc[sup] += 1;
        }
      }
    }
  }
  return acc;
}

}  // namespace

TEST_CASE("expand_hamiltonian(3) cross-checked against Pauli algebra oracle") {
  for (uint32_t n : {3u, 4u, 6u}) {
    long oracle_offset = 0;
    auto oracle = expand_oracle(n, oracle_offset);
    auto inst = expand_hamiltonian(n);
    CHECK(inst.offset == oracle_offset);
    std::map<std::vector<uint32_t>, long> mine;
    for (const auto& t : inst.terms) mine[t.support] = 2L * t.coefficient;  // halved storage
    CHECK(mine.size() == oracle.size());
    for (const auto& [sup, coeff] : oracle) CHECK(mine[sup] == coeff);
  }
}

TEST_CASE("qaoa N=5 l=1 gate census") {
  auto inst = expand_hamiltonian(5);
  QaoaParams params{{0.4}, {0.7}};
  auto c = build_qaoa(inst, params, false);
  CHECK(c.count_kind(GateKind::RZ) == 7);
  CHECK(c.count_kind(GateKind::RX) == 5);
}

TEST_CASE("qaoa with zero angles is H^n") {
  auto inst = expand_hamiltonian(5);
  QaoaParams params{{0.0}, {0.0}};
  auto c = build_qaoa(inst, params, false);
  auto psi = statevector(c);
  for (const auto& a : psi) CHECK(std::abs(a - Complex(1.0 / std::sqrt(32.0))) < 1e-12);
}

TEST_CASE("qaoa circuit matches dense oracle, 20 random draws at N=5") {
  auto inst = expand_hamiltonian(5);
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> ad(-2.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    size_t layers = 1 + trial % 2;
    QaoaParams params;
    for (size_t l = 0; l < layers; ++l) {
      params.gammas.push_back(ad(rng));
      params.betas.push_back(ad(rng));
    }
    auto circ = build_qaoa(inst, params, false);
    auto psi = statevector(circ);
    auto ref = qaoa_state_oracle(inst, params);
    CHECK(overlap2(psi, ref) >= 1.0 - 1e-10);
  }
}

TEST_CASE("qpe deterministic readout for both eigenstates") {
  for (int eig : {1, 0}) {
    auto c = build_qpe(4, eig, false);
    auto psi = statevector(c);
    auto expected = qpe_expected_bits(4, eig);
    // Register must be a deterministic basis state on qubits 0..3.
    size_t want = 0;
    for (uint32_t q = 0; q < 4; ++q)
      if (expected[q]) want |= size_t(1) << q;
    double p = 0;
    for (size_t idx = 0; idx < psi.size(); ++idx)
      if ((idx & 0xF) == want) p += std::norm(psi[idx]);
    CHECK(p == doctest::Approx(1.0).epsilon(1e-10));
  }
  CHECK(qpe_expected_bits(4, 1) == std::vector<int>{0, 0, 0, 1});
  CHECK(qpe_expected_bits(4, 0) == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("qpe precision 1 with Z-like phase") {
  auto c = build_qpe(1, 1, false);
  auto psi = statevector(c);
  // phase 1/16 at 1 bit rounds to 0 -> deterministic |0> readout dominates?
  // RZ(pi/4) at 1 bit: phase 1/16 not representable; instead use the spec's
  // trivial case: precision 1 readout must still be normalized.
  CHECK(norm(psi) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("map_to_grid: adjacent CX unchanged, empty unchanged") {
  Grid line{5, 1};
  LogicalCircuit c(5);
  c.append(GateKind::CX, {2, 3});
  auto routed = map_to_grid(c, line);
  CHECK(routed.circuit.gates.size() == 1);

  LogicalCircuit empty(5);
  auto r2 = map_to_grid(empty, line);
  CHECK(r2.circuit.gates.empty());
}

TEST_CASE("map_to_grid: CX(0,4) on a line inserts swaps; unitary preserved") {
  Grid line{5, 1};
  LogicalCircuit c(5);
  c.append(GateKind::H, {0});
  c.append(GateKind::CX, {0, 4});
  c.append(GateKind::RZ, {4}, {0.3});
  auto routed = map_to_grid(c, line);
  size_t cx = routed.circuit.count_kind(GateKind::CX);
  CHECK(cx >= 4);  // >= 3 extra CX from swaps

  auto psi_orig = statevector(c);
  auto psi_routed = statevector(routed.circuit);
  // Permute routed amplitudes back: logical q lives at slot placement[q].
  Amplitudes back(psi_orig.size());
  for (size_t idx = 0; idx < psi_routed.size(); ++idx) {
    size_t logical_idx = 0;
    bool unused_excited = false;
    for (uint32_t q = 0; q < 5; ++q)
      if ((idx >> routed.final_placement[q]) & 1) logical_idx |= size_t(1) << q;
    // All slots host logical qubits here (5 slots, 5 qubits).
    (void)unused_excited;
    back[logical_idx] = psi_routed[idx];
  }
  CHECK(overlap2(psi_orig, back) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("map_to_grid distribution preservation on random circuits") {
  std::mt19937_64 rng(8);
  Grid grid{3, 2};
  for (int trial = 0; trial < 10; ++trial) {
    LogicalCircuit c(5);
    std::uniform_int_distribution<uint32_t> qd(0, 4);
    std::uniform_real_distribution<double> ad(-2, 2);
    for (int i = 0; i < 12; ++i) {
      uint32_t a = qd(rng), b = qd(rng);
      switch (i % 3) {
        case 0:
          if (a != b) c.append(GateKind::CX, {a, b});
          break;
        case 1: c.append(GateKind::RZ, {a}, {ad(rng)}); break;
        case 2: c.append(GateKind::H, {a}); break;
      }
    }
    auto routed = map_to_grid(c, grid);
    for (const auto& g : routed.circuit.gates)
      if (g.kind == GateKind::CX) CHECK(grid.adjacent(g.qubit(0), g.qubit(1)));
    auto psi = statevector(c);
    auto psir = statevector(routed.circuit);
    // Compare per-logical-qubit Z expectations through the placement map.
    for (uint32_t q = 0; q < 5; ++q) {
      auto pz = PauliString::single(5, q, 'Z');
      auto pzr = PauliString::single(6, routed.final_placement[q], 'Z');
      CHECK(pauli_expectation(psi, pz) ==
            doctest::Approx(pauli_expectation(psir, pzr)).epsilon(1e-9));
    }
  }
}
