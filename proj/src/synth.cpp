#include "lsqc/synth.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "lsqc/statevector.hpp"

namespace lsqc::synth {

double compute_e_T(double e_unit, double e_cultiv, double n_idle) {
  if (e_unit < 0 || e_unit >= 1 || e_cultiv < 0 || e_cultiv >= 1 || n_idle < 0)
    throw std::invalid_argument("compute_e_T: rates must be in [0,1)");
  return 1.0 - std::pow(1.0 - e_unit, n_idle + 1.25) * (1.0 - e_cultiv);
}

TErrorModel TErrorModel::from_rates(double e_unit, double e_cultiv, double n_idle) {
  TErrorModel m;
  m.e_unit = e_unit;
  m.e_cultiv = e_cultiv;
  m.n_idle = n_idle;
  m.e_T = compute_e_T(e_unit, e_cultiv, n_idle);
  return m;
}

TErrorModel TErrorModel::from_e_T(double e_T) {
  TErrorModel m;
  m.e_T = e_T;
  return m;
}

Ptm ptm_of_unitary(const Mat2& u) {
  static const std::array<Mat2, 4> sigma = {Mat2::identity(), gate_matrix_1q(GateKind::X, {}),
                                            gate_matrix_1q(GateKind::Y, {}),
                                            gate_matrix_1q(GateKind::Z, {})};
  Ptm r{};
  Mat2 ud = u.adjoint();
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      Mat2 m = sigma[i] * u * sigma[j] * ud;
      r[i * 4 + j] = 0.5 * m.trace().real();
    }
  }
  return r;
}

Ptm ptm_depolarizing(double q) {
  Ptm r{};
  r[0] = 1.0;
  for (int i = 1; i < 4; ++i) r[i * 4 + i] = 1.0 - 4.0 * q / 3.0;
  return r;
}

Ptm ptm_multiply(const Ptm& late, const Ptm& early) {
  Ptm r{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      double v = late[i * 4 + k];
      if (v == 0) continue;
      for (int j = 0; j < 4; ++j) r[i * 4 + j] += v * early[k * 4 + j];
    }
  return r;
}

double process_fidelity(const Mat2& target, const std::vector<Gate>& sequence, double e_T) {
  Ptm acc{};
  for (int i = 0; i < 4; ++i) acc[i * 4 + i] = 1.0;
  Ptm dep = ptm_depolarizing(e_T);
  for (const auto& g : sequence) {
    acc = ptm_multiply(ptm_of_unitary(gate_matrix_1q(g.kind, g.params)), acc);
    if ((g.kind == GateKind::T || g.kind == GateKind::Tdg) && e_T > 0)
      acc = ptm_multiply(dep, acc);
  }
  Ptm rt = ptm_of_unitary(target);
  double f = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) f += rt[j * 4 + i] * acc[j * 4 + i];
  return f / 4.0;
}

double synthesis_fidelity(const Mat2& target, const Mat2& actual) {
  double t = trace_fidelity(target, actual);  // |Tr|/2
  return t * t;
}

namespace {

// SU(2) elements as unit quaternions (w, x, y, z); global phase quotiented by
// the +/-q identification. U = w I - i (x X + y Y + z Z).
struct Quat {
  double w, x, y, z;
};

Quat quat_mul(const Quat& a, const Quat& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

Quat quat_conj(const Quat& a) { return {a.w, -a.x, -a.y, -a.z}; }

Quat quat_of(const Mat2& u_in) {
  Complex det = u_in(0, 0) * u_in(1, 1) - u_in(0, 1) * u_in(1, 0);
  Complex s = std::sqrt(det);
  Mat2 u = u_in;
  for (auto& v : u.m) v /= s;
  return {0.5 * (u(0, 0) + u(1, 1)).real(), -(u(0, 1)).imag() * 0.5 - (u(1, 0)).imag() * 0.5,
          0.5 * ((u(1, 0)).real() - (u(0, 1)).real()), -(u(0, 0)).imag() * 0.5 + (u(1, 1)).imag() * 0.5};
}

// max over the 48-element binary octahedral group (single-qubit Cliffords up
// to phase) of |<q, c>|; equals max_C |Tr(C^dag M)|/2.
double clifford_orbit_max(const Quat& q) {
  double a = std::abs(q.w), b = std::abs(q.x), c = std::abs(q.y), d = std::abs(q.z);
  double m1 = std::max(std::max(a, b), std::max(c, d));
  double hi1 = m1;
  double hi2 = std::min(std::max(a, b), std::max(c, d));
  // second largest of the four
  double arr[4] = {a, b, c, d};
  std::sort(arr, arr + 4);
  double pair = (arr[3] + arr[2]) / std::sqrt(2.0);
  double all4 = (a + b + c + d) / 2.0;
  (void)hi1;
  (void)hi2;
  return std::max(std::max(m1, pair), all4);
}

uint64_t quat_key(const Quat& q_in) {
  Quat q = q_in;
  // canonicalize sign: first significant component positive
  double comp[4] = {q.w, q.x, q.y, q.z};
  for (int i = 0; i < 4; ++i) {
    if (std::abs(comp[i]) > 1e-7) {
      if (comp[i] < 0) {
        q.w = -q.w, q.x = -q.x, q.y = -q.y, q.z = -q.z;
      }
      break;
    }
  }
  uint64_t key = 1469598103934665603ull;
  for (double v : {q.w, q.x, q.y, q.z}) {
    int64_t t = std::llround(v * (1 << 24));
    key ^= static_cast<uint64_t>(t) + 0x9e3779b97f4a7c15ull + (key << 6) + (key >> 2);
  }
  return key;
}

struct BeamEntry {
  Quat w;             // partial product (prefix + k blocks, no trailing C)
  uint64_t sign_bits; // s_i as bits, LSB = first block
  uint8_t prefix;     // 0 = none, 1 = H, 2 = S
  float true_score;   // process fidelity with optimal trailing Clifford
  float relaxed;      // lookahead-relaxed score used for pruning
};

// Covering radius (rotation angle) reachable with r further T steps; the
// 2^r sign words spread quasi-uniformly over SU(2)/phase.
double reach_angle(size_t r) { return 0.80 * std::pow(2.0, -double(r) / 3.0); }

}  // namespace

SynthesizedRotation synthesize(const Mat2& target, const TErrorModel& model,
                               const SynthesisOptions& options) {
  const auto& grp = normalform::CliffordGroup::instance();
  const Mat2 h = gate_matrix_1q(GateKind::H, {});
  const double c_factor = 1.0 - 4.0 * model.e_T / 3.0;
  const Quat q_target = quat_of(target);
  const Quat q_ht = quat_of(h * gate_matrix_1q(GateKind::T, {}));
  const Quat q_htdg = quat_of(h * gate_matrix_1q(GateKind::Tdg, {}));

  // True score: process fidelity [1 + c^k (|Tr(C W^dag U)|^2 - 1)] / 4
  // maximized over the trailing Cliffords (closed form on the quaternion
  // orbit). The relaxed score assumes up to `remaining` further steps can
  // close the residual rotation angle down to the covering radius, which
  // keeps the beam exploring instead of stalling on locally-close prefixes.
  auto score = [&](const Quat& w, size_t k, size_t remaining, float* relaxed) {
    Quat m = quat_mul(q_target, quat_conj(w));  // U W^dag
    double tfid = std::clamp(clifford_orbit_max(m), 0.0, 1.0);
    double t2 = tfid * tfid;
    double delta = 2.0 * std::acos(tfid);
    double rel = -1;
    for (size_t r = 0; r <= remaining; ++r) {
      double d_eff = std::max(0.0, delta - reach_angle(r));
      double ch = std::cos(d_eff / 2);
      double f = (1.0 + std::pow(c_factor, double(k + r)) * (4.0 * ch * ch - 1.0)) / 4.0;
      rel = std::max(rel, f);
      if (d_eff == 0.0 && c_factor >= 1.0) break;
    }
    *relaxed = static_cast<float>(rel);
    return (1.0 + std::pow(c_factor, double(k)) * (4.0 * t2 - 1.0)) / 4.0;
  };

  struct Best {
    double f = -1;
    size_t k = 0;
    uint64_t signs = 0;
    uint8_t prefix = 0;
  } best;

  std::vector<BeamEntry> beam;
  const std::array<Mat2, 3> prefixes = {Mat2::identity(), h, gate_matrix_1q(GateKind::S, {})};
  for (uint8_t p = 0; p < 3; ++p) {
    BeamEntry e;
    e.w = quat_of(prefixes[p]);
    e.sign_bits = 0;
    e.prefix = p;
    e.true_score = static_cast<float>(score(e.w, 0, options.budget, &e.relaxed));
    beam.push_back(e);
  }
  auto consider = [&](const BeamEntry& e, size_t k) {
    if (e.true_score > best.f + 1e-12 ||
        (std::abs(e.true_score - best.f) <= 1e-12 && k < best.k)) {
      best = {e.true_score, k, e.sign_bits, e.prefix};
    }
  };
  for (const auto& e : beam) consider(e, 0);

  std::vector<BeamEntry> next;
  for (size_t k = 1; k <= options.budget && k <= 62; ++k) {
    next.clear();
    next.reserve(beam.size() * 2);
    for (const auto& e : beam) {
      for (int s = 0; s < 2; ++s) {
        BeamEntry child;
        child.w = quat_mul(s ? q_htdg : q_ht, e.w);
        child.sign_bits = e.sign_bits | (uint64_t(s) << (k - 1));
        child.prefix = e.prefix;
        child.true_score =
            static_cast<float>(score(child.w, k, options.budget - k, &child.relaxed));
        next.push_back(child);
      }
    }
    std::stable_sort(next.begin(), next.end(), [](const BeamEntry& a, const BeamEntry& b) {
      if (a.relaxed != b.relaxed) return a.relaxed > b.relaxed;
      if (a.true_score != b.true_score) return a.true_score > b.true_score;
      if (a.prefix != b.prefix) return a.prefix < b.prefix;
      return a.sign_bits < b.sign_bits;
    });
    std::unordered_set<uint64_t> seen;
    seen.reserve(options.beam_width * 2);
    std::vector<BeamEntry> pruned;
    pruned.reserve(std::min(next.size(), options.beam_width));
    for (const auto& e : next) {
      if (pruned.size() >= options.beam_width) break;
      if (seen.insert(quat_key(e.w)).second) pruned.push_back(e);
    }
    beam = std::move(pruned);
    for (const auto& e : beam) consider(e, k);
    if (beam.empty()) break;
  }

  // Reconstruct the winning word, pick its exact trailing Clifford, and
  // normalize into tokens.
  std::vector<Gate> gates;
  if (best.prefix == 1) gates.emplace_back(GateKind::H, std::vector<uint32_t>{0});
  if (best.prefix == 2) gates.emplace_back(GateKind::S, std::vector<uint32_t>{0});
  Mat2 w = best.prefix == 1 ? h : best.prefix == 2 ? gate_matrix_1q(GateKind::S, {})
                                                   : Mat2::identity();
  const Mat2 t_mat = gate_matrix_1q(GateKind::T, {});
  const Mat2 tdg_mat = gate_matrix_1q(GateKind::Tdg, {});
  for (size_t i = 0; i < best.k; ++i) {
    bool s = (best.signs >> i) & 1;
    gates.emplace_back(s ? GateKind::Tdg : GateKind::T, std::vector<uint32_t>{0});
    gates.emplace_back(GateKind::H, std::vector<uint32_t>{0});
    w = h * ((s ? tdg_mat : t_mat) * w);
  }
  int best_trailing = 0;
  double best_tf = -1;
  for (int ci = 0; ci < normalform::CliffordGroup::kSize; ++ci) {
    double tf = trace_fidelity(target, grp.matrix(ci) * w);
    if (tf > best_tf + 1e-15) {
      best_tf = tf;
      best_trailing = ci;
    }
  }
  for (GateKind kk : grp.word(best_trailing)) gates.emplace_back(kk, std::vector<uint32_t>{0});

  SynthesizedRotation out;
  out.sequence = normalform::normalize(gates);
  out.t_count = out.sequence.tokens.size();
  Mat2 v = out.sequence.unitary();
  out.synthesis_fidelity = synthesis_fidelity(target, v);
  out.process_fidelity = process_fidelity(target, out.sequence.to_gates(0), model.e_T);
  out.clifford_fallback = (options.budget == 0 && out.synthesis_fidelity < 1.0 - 1e-9);
  return out;
}

CircuitSynthesis synthesize_circuit(const LogicalCircuit& c, const TErrorModel& model,
                                    const SynthesisOptions& options) {
  CircuitSynthesis out;
  out.circuit = LogicalCircuit(c.num_qubits, c.name + "-synth");
  for (const auto& g : c.gates) {
    if (g.kind == GateKind::U3) {
      Mat2 target = u3_matrix(g.param(0), g.param(1), g.param(2));
      auto rot = synthesize(target, model, options);
      for (const auto& sg : rot.sequence.to_gates(g.qubit())) out.circuit.append(sg);
      out.rotations.push_back(std::move(rot));
    } else if (is_rotation(g.kind)) {
      throw std::invalid_argument("synthesize_circuit: merge rotations into U3 first");
    } else {
      out.circuit.append(g);
    }
  }
  return out;
}

double circuit_synthesis_fidelity(const LogicalCircuit& logical,
                                  const LogicalCircuit& synthesized) {
  if (logical.num_qubits != synthesized.num_qubits)
    throw std::invalid_argument("qubit count mismatch");
  auto a = statevector(logical);
  auto b = statevector(synthesized);
  return overlap2(a, b);
}

}  // namespace lsqc::synth
