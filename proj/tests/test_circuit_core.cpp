#include <doctest.h>

#include <random>

#include "lsqc/density.hpp"
#include "lsqc/stabsim.hpp"
#include "lsqc/statevector.hpp"
#include "lsqc/tableau.hpp"

using namespace lsqc;

TEST_CASE("parse basic circuit") {
  auto c = parse_circuit("QUBITS 2\nH 0\nCX 0 1\n");
  CHECK(c.num_qubits == 2);
  REQUIRE(c.gates.size() == 2);
  CHECK(c.gates[0].kind == GateKind::H);
  CHECK(c.gates[1].kind == GateKind::CX);
  CHECK(c.gates[1].qubits == std::vector<uint32_t>{0, 1});
}

TEST_CASE("parse literal angle") {
  auto c = parse_circuit("QUBITS 3\nRZ(0.7853981633974483) 2\n");
  REQUIRE(c.gates.size() == 1);
  CHECK(c.gates[0].kind == GateKind::RZ);
  CHECK(c.gates[0].qubit() == 2);
  CHECK(c.gates[0].param() == doctest::Approx(kPi / 4).epsilon(1e-15));
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_AS(parse_circuit("QUBITS 2\nCX 0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("QUBITS 2\nFOO 0\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("QUBITS 2\nCX 0\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("QUBITS 2\nRZ(abc) 0\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("QUBITS 1\nH 3\n"), ParseError);
  try {
    parse_circuit("QUBITS 2\n# fine\nCX 0 0\n");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
  }
}

namespace {

LogicalCircuit random_circuit(std::mt19937_64& rng, uint32_t n, size_t len, bool clifford_only) {
  LogicalCircuit c(n, "rand");
  std::vector<GateKind> pool = {GateKind::H, GateKind::S,  GateKind::Sdg, GateKind::X,
                                GateKind::Y, GateKind::Z,  GateKind::CX};
  if (!clifford_only) {
    pool.push_back(GateKind::T);
    pool.push_back(GateKind::RZ);
    pool.push_back(GateKind::RX);
    pool.push_back(GateKind::U3);
  }
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<uint32_t> qd(0, n - 1);
  std::uniform_real_distribution<double> ad(-3.0, 3.0);
  while (c.gates.size() < len) {
    GateKind k = pool[pick(rng)];
    const auto& info = gate_info(k);
    if (info.arity == 2) {
      if (n < 2) continue;
      uint32_t a = qd(rng), b = qd(rng);
      if (a == b) continue;
      c.append(k, {a, b});
    } else {
      std::vector<double> params;
      for (int i = 0; i < info.num_params; ++i) params.push_back(ad(rng));
      c.append(k, {qd(rng)}, params);
    }
  }
  return c;
}

}  // namespace

TEST_CASE("parser round-trip is idempotent on 50 random circuits") {
  std::mt19937_64 rng(1234);
  for (int i = 0; i < 50; ++i) {
    auto c = random_circuit(rng, 1 + (i % 5), 20, false);
    auto once = serialize_circuit(parse_circuit(serialize_circuit(c)));
    auto twice = serialize_circuit(parse_circuit(once));
    CHECK(once == twice);
    auto back = parse_circuit(once);
    REQUIRE(back.gates.size() == c.gates.size());
    for (size_t g = 0; g < c.gates.size(); ++g) {
      CHECK(back.gates[g].kind == c.gates[g].kind);
      CHECK(back.gates[g].qubits == c.gates[g].qubits);
      for (size_t p = 0; p < c.gates[g].params.size(); ++p)
        CHECK(back.gates[g].params[p] == doctest::Approx(c.gates[g].params[p]).epsilon(1e-15));
    }
  }
}

TEST_CASE("tableau of CX / H basics") {
  LogicalCircuit cx(2);
  cx.append(GateKind::CX, {0, 1});
  auto t = tableau_of(cx);
  CHECK(t.img_x[0].str() == "+XX");
  CHECK(t.img_x[1].str() == "+IX");
  CHECK(t.img_z[0].str() == "+ZI");
  CHECK(t.img_z[1].str() == "+ZZ");

  LogicalCircuit h(1);
  h.append(GateKind::H, {0});
  auto th = tableau_of(h);
  CHECK(th.img_x[0].str() == "+Z");
  CHECK(th.img_z[0].str() == "+X");
}

TEST_CASE("S;S equals Z tableau") {
  LogicalCircuit ss(1);
  ss.append(GateKind::S, {0});
  ss.append(GateKind::S, {0});
  LogicalCircuit z(1);
  z.append(GateKind::Z, {0});
  CHECK(tableau_of(ss) == tableau_of(z));
}

TEST_CASE("tableau_of rejects non-Clifford") {
  LogicalCircuit c(1);
  c.append(GateKind::T, {0});
  CHECK_THROWS(tableau_of(c));
}

namespace {

// Statevector-based conjugation oracle: compares U P U^dag with tableau image
// by checking expectation values on a batch of random stabilizer-free states.
// Cleaner: form the conjugated operator via dense matrices.
std::vector<Complex> dense_pauli(const PauliString& p) {
  size_t n = p.num_qubits(), dim = size_t(1) << n;
  std::vector<Complex> m(dim * dim, Complex(0));
  for (size_t col = 0; col < dim; ++col) {
    size_t row = col;
    Complex amp(p.sign(), 0);
    for (size_t q = 0; q < n; ++q) {
      char pc = p.pauli_at(q);
      bool bit = (col >> q) & 1;
      if (pc == 'X') {
        row ^= size_t(1) << q;
      } else if (pc == 'Y') {
        row ^= size_t(1) << q;
        amp *= bit ? Complex(0, -1) : Complex(0, 1);
      } else if (pc == 'Z') {
        if (bit) amp = -amp;
      }
    }
    m[col * dim + row] = amp;
  }
  return m;
}

}  // namespace

TEST_CASE("tableau conjugation equals statevector conjugation, n<=5") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 15; ++trial) {
    uint32_t n = 2 + (trial % 4);
    auto c = random_circuit(rng, n, 25, true);
    auto t = tableau_of(c);
    auto u = unitary_of(c);
    size_t dim = size_t(1) << n;
    auto flows = flows_of(t);
    for (const auto& fl : flows) {
      // Check U P = Q U elementwise (avoids inverting U).
      auto pm = dense_pauli(fl.input);
      auto qm = dense_pauli(fl.output);
      // up = U * P ; qu = Q * U  (row-major col = input index)
      std::vector<Complex> up(dim * dim, Complex(0)), qu(dim * dim, Complex(0));
      for (size_t cix = 0; cix < dim; ++cix)
        for (size_t k = 0; k < dim; ++k) {
          if (pm[cix * dim + k] != Complex(0))
            for (size_t r = 0; r < dim; ++r) up[cix * dim + r] += u[k * dim + r] * pm[cix * dim + k];
          if (u[cix * dim + k] != Complex(0))
            for (size_t r = 0; r < dim; ++r) qu[cix * dim + r] += qm[k * dim + r] * u[cix * dim + k];
        }
      double err = 0;
      for (size_t i = 0; i < dim * dim; ++i) err = std::max(err, std::abs(up[i] - qu[i]));
      CHECK(err < 1e-9);
    }
  }
}

TEST_CASE("statevector H and T phases") {
  LogicalCircuit c(1);
  c.append(GateKind::H, {0});
  auto psi = statevector(c);
  CHECK(std::abs(psi[0] - Complex(1 / std::sqrt(2))) < 1e-12);
  CHECK(std::abs(psi[1] - Complex(1 / std::sqrt(2))) < 1e-12);

  LogicalCircuit ct(1);
  ct.append(GateKind::X, {0});
  ct.append(GateKind::T, {0});
  auto psit = statevector(ct);
  CHECK(std::abs(psit[1] - std::exp(Complex(0, kPi / 4))) < 1e-12);
}

TEST_CASE("statevector norm preserved on random 5q circuit") {
  std::mt19937_64 rng(5);
  auto c = random_circuit(rng, 5, 60, false);
  CHECK(norm(statevector(c)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("density sim: noiseless equals statevector outer product") {
  std::mt19937_64 rng(9);
  auto c = random_circuit(rng, 3, 30, false);
  auto psi = statevector(c);
  auto dm = density_matrix_sim(c, NoiseModel{0.0});
  CHECK(dm.trace_real() == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(dm.is_positive_semidefinite());
  CHECK(dm.fidelity_with(psi) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("density sim: single idle step fidelity 1 - (2/3)(p/10)") {
  // One moment: q1 busy with X, q0 idles. Each qubit sees exactly one
  // depolarizing channel, so the state fidelity factorizes exactly.
  LogicalCircuit c(2);
  c.append(GateKind::X, {1});
  double p = 1e-2;
  auto dm = density_matrix_sim(c, NoiseModel{p});
  auto psi = statevector(c);
  double unit = 1 - (2.0 / 3.0) * (p / 10);
  CHECK(dm.fidelity_with(psi) == doctest::Approx(unit * unit).epsilon(1e-12));

  // Single-channel case: 1q gate noise on |+>.
  LogicalCircuit nc(1);
  nc.append(GateKind::H, {0});
  auto dm1 = density_matrix_sim(nc, NoiseModel{p});
  CHECK(dm1.fidelity_with(statevector(nc)) == doctest::Approx(unit).epsilon(1e-12));
}

TEST_CASE("density sim rejects 7 qubits") {
  LogicalCircuit c(7);
  CHECK_THROWS_AS(density_matrix_sim(c, NoiseModel{0}), CapacityError);
}

TEST_CASE("stabilizer sim: basics and forced outcomes") {
  StabilizerSim sim(2, 42);
  sim.h(0);
  sim.cx(0, 1);
  auto zz = PauliString::from_text("ZZ");
  auto m = sim.measure(zz);
  CHECK(m.deterministic);
  CHECK_FALSE(m.outcome);
  auto xx = sim.measure(PauliString::from_text("XX"));
  CHECK(xx.deterministic);
  CHECK_FALSE(xx.outcome);
  auto z0 = sim.measure_z(0, true);
  CHECK_FALSE(z0.deterministic);
  CHECK(z0.outcome);
  auto z1 = sim.measure_z(1);
  CHECK(z1.deterministic);
  CHECK(z1.outcome);  // correlated with forced z0
}

TEST_CASE("stabilizer sim agrees with tableau on random conjugations") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 10; ++trial) {
    uint32_t n = 2 + (trial % 3);
    auto c = random_circuit(rng, n, 30, true);
    auto t = tableau_of(c);
    // Prepare stabilizer state U|0..0>; its stabilizer group must be
    // generated by conj(Z_i) rows.
    StabilizerSim sim(n, 7);
    for (const auto& g : c.gates) {
      switch (g.kind) {
        case GateKind::H: sim.h(g.qubit()); break;
        case GateKind::S: sim.s(g.qubit()); break;
        case GateKind::Sdg: sim.sdg(g.qubit()); break;
        case GateKind::X: sim.x(g.qubit()); break;
        case GateKind::Y: sim.y(g.qubit()); break;
        case GateKind::Z: sim.z(g.qubit()); break;
        case GateKind::CX: sim.cx(g.qubit(0), g.qubit(1)); break;
        default: break;
      }
    }
    for (uint32_t q = 0; q < n; ++q) {
      auto m = sim.measure(t.img_z[q]);
      CHECK(m.deterministic);
      CHECK_FALSE(m.outcome);
    }
  }
}
