#include "lsqc/normalform.hpp"

#include <cmath>
#include <deque>
#include <stdexcept>

namespace lsqc::normalform {

namespace {

// Canonical key of a 2x2 unitary modulo global phase.
uint64_t phase_canonical_key(const Mat2& u) {
  // Normalize by the phase of the first entry with significant magnitude.
  Complex ref(0);
  for (const auto& v : u.m) {
    if (std::abs(v) > 0.3) {
      ref = v / std::abs(v);
      break;
    }
  }
  uint64_t key = 0;
  for (const auto& v : u.m) {
    Complex w = v / ref;
    auto q = [](double x) { return static_cast<uint64_t>(std::llround(x * 64.0)) & 0xFF; };
    key = (key << 16) | (q(w.real()) << 8) | q(w.imag());
  }
  return key;
}

}  // namespace

const CliffordGroup& CliffordGroup::instance() {
  static const CliffordGroup g;
  return g;
}

CliffordGroup::CliffordGroup() {
  const Mat2 h = gate_matrix_1q(GateKind::H, {});
  const Mat2 s = gate_matrix_1q(GateKind::S, {});
  std::map<uint64_t, int> seen;
  std::deque<int> frontier;
  matrices_[0] = Mat2::identity();
  words_[0] = {};
  seen[phase_canonical_key(matrices_[0])] = 0;
  frontier.push_back(0);
  int count = 1;
  while (!frontier.empty()) {
    int cur = frontier.front();
    frontier.pop_front();
    for (GateKind g : {GateKind::H, GateKind::S}) {
      Mat2 next = (g == GateKind::H ? h : s) * matrices_[cur];
      uint64_t key = phase_canonical_key(next);
      if (!seen.count(key)) {
        if (count >= kSize) throw std::logic_error("clifford group overflow");
        int idx = count++;
        seen[key] = idx;
        matrices_[idx] = next;
        words_[idx] = words_[cur];
        words_[idx].push_back(g);  // applied after the current word
        frontier.push_back(idx);
      }
    }
  }
  if (count != kSize) throw std::logic_error("clifford group closure != 24");

  for (int a = 0; a < kSize; ++a) {
    for (int b = 0; b < kSize; ++b) {
      Mat2 prod = matrices_[a] * matrices_[b];
      auto it = seen.find(phase_canonical_key(prod));
      if (it == seen.end()) throw std::logic_error("clifford composition fell outside group");
      compose_[a][b] = it->second;
    }
  }
  for (int a = 0; a < kSize; ++a) {
    inverse_[a] = -1;
    for (int b = 0; b < kSize; ++b)
      if (compose_[a][b] == 0) {
        inverse_[a] = b;
        break;
      }
    if (inverse_[a] < 0) throw std::logic_error("clifford inverse missing");
  }
  const std::array<Mat2, 3> paulis = {gate_matrix_1q(GateKind::X, {}),
                                      gate_matrix_1q(GateKind::Y, {}),
                                      gate_matrix_1q(GateKind::Z, {})};
  for (int c = 0; c < kSize; ++c) {
    for (int p = 0; p < 3; ++p) {
      Mat2 img = matrices_[c] * paulis[p] * matrices_[c].adjoint();
      bool found = false;
      for (int p2 = 0; p2 < 3 && !found; ++p2) {
        for (int sign : {1, -1}) {
          double err = 0;
          for (int e = 0; e < 4; ++e)
            err = std::max(err, std::abs(img.m[e] - double(sign) * paulis[p2].m[e]));
          if (err < 1e-9) {
            conj_[c][p] = {p2, sign};
            found = true;
            break;
          }
        }
      }
      if (!found) throw std::logic_error("pauli conjugation image not found");
    }
  }
  gate_index_.fill(-1);
  for (GateKind k : {GateKind::H, GateKind::S, GateKind::Sdg, GateKind::X, GateKind::Y,
                     GateKind::Z}) {
    auto it = seen.find(phase_canonical_key(gate_matrix_1q(k, {})));
    gate_index_[static_cast<int>(k)] = it->second;
  }
}

int CliffordGroup::index_of(const Mat2& u) const {
  for (int i = 0; i < kSize; ++i)
    if (trace_fidelity(matrices_[i], u) > 1.0 - 1e-9) return i;
  return -1;
}

int CliffordGroup::index_of_gate(GateKind k) const {
  int idx = gate_index_[static_cast<int>(k)];
  if (idx < 0) throw std::invalid_argument("not a 1q clifford gate");
  return idx;
}

Mat2 token_matrix(const TToken& t) {
  Mat2 tm = gate_matrix_1q(t.dagger ? GateKind::Tdg : GateKind::T, {});
  if (t.axis == 'Z') return tm;
  Mat2 h = gate_matrix_1q(GateKind::H, {});
  return h * tm * h;
}

Mat2 TSequence::unitary() const {
  const auto& grp = CliffordGroup::instance();
  Mat2 u = grp.matrix(leading_clifford);
  for (const auto& t : tokens) u = token_matrix(t) * u;
  return grp.matrix(trailing_clifford) * u;
}

std::vector<Gate> TSequence::to_gates(uint32_t q) const {
  const auto& grp = CliffordGroup::instance();
  std::vector<Gate> out;
  for (GateKind k : grp.word(leading_clifford)) out.emplace_back(k, std::vector<uint32_t>{q});
  for (const auto& t : tokens) {
    if (t.axis == 'X') out.emplace_back(GateKind::H, std::vector<uint32_t>{q});
    out.emplace_back(t.dagger ? GateKind::Tdg : GateKind::T, std::vector<uint32_t>{q});
    if (t.axis == 'X') out.emplace_back(GateKind::H, std::vector<uint32_t>{q});
  }
  for (GateKind k : grp.word(trailing_clifford)) out.emplace_back(k, std::vector<uint32_t>{q});
  return out;
}

bool TSequence::axes_alternate() const {
  for (size_t i = 0; i + 1 < tokens.size(); ++i)
    if (tokens[i].axis == tokens[i + 1].axis) return false;
  return true;
}

namespace {

// Rewrite table for pushing T through a trailing Clifford:
//   M_{T^sigma} M_R = M_{R'} M_{T_a^s} M_leak   (up to global phase)
// The leak is a Pauli where possible (it then commutes through earlier
// tokens up to sign flips); for the Y-conjugating cosets only a general
// Clifford leak exists, which forces re-normalization of the prefix.
struct TPushRule {
  int new_trailing;
  TToken token;
  int leak;          // group index of the leaked Clifford
  bool leak_pauli;   // true if leak is I/X/Y/Z
};

class TPushTable {
 public:
  static const TPushTable& instance() {
    static const TPushTable t;
    return t;
  }
  const TPushRule& rule(int clifford, bool dagger) const { return rules_[clifford][dagger]; }

 private:
  TPushTable() {
    const auto& grp = CliffordGroup::instance();
    std::array<int, 4> pauli_idx = {0, grp.index_of_gate(GateKind::X),
                                    grp.index_of_gate(GateKind::Y),
                                    grp.index_of_gate(GateKind::Z)};
    for (int r = 0; r < CliffordGroup::kSize; ++r) {
      for (int dag = 0; dag < 2; ++dag) {
        Mat2 target = gate_matrix_1q(dag ? GateKind::Tdg : GateKind::T, {}) * grp.matrix(r);
        bool found = false;
        // Pauli leaks first.
        for (int q : pauli_idx) {
          for (char axis : {'Z', 'X'}) {
            for (bool tdag : {false, true}) {
              for (int r2 = 0; r2 < CliffordGroup::kSize && !found; ++r2) {
                Mat2 cand = grp.matrix(r2) * token_matrix({axis, tdag}) * grp.matrix(q);
                if (trace_fidelity(cand, target) > 1.0 - 1e-9)
                  rules_[r][dag] = {r2, {axis, tdag}, q, true}, found = true;
              }
              if (found) break;
            }
            if (found) break;
          }
          if (found) break;
        }
        for (int k = 0; k < CliffordGroup::kSize && !found; ++k) {
          for (char axis : {'Z', 'X'}) {
            for (bool tdag : {false, true}) {
              for (int r2 = 0; r2 < CliffordGroup::kSize && !found; ++r2) {
                Mat2 cand = grp.matrix(r2) * token_matrix({axis, tdag}) * grp.matrix(k);
                if (trace_fidelity(cand, target) > 1.0 - 1e-9)
                  rules_[r][dag] = {r2, {axis, tdag}, k, false}, found = true;
              }
              if (found) break;
            }
            if (found) break;
          }
        }
        if (!found) throw std::logic_error("T-push rule missing");
      }
    }
  }
  TPushRule rules_[CliffordGroup::kSize][2];
};

// Clifford index of the square of a token (T_a^s)^2.
int token_square_clifford(const TToken& t) {
  const auto& grp = CliffordGroup::instance();
  Mat2 sq = token_matrix(t) * token_matrix(t);
  int idx = grp.index_of(sq);
  if (idx < 0) throw std::logic_error("token square not clifford");
  return idx;
}

}  // namespace

namespace {

// Which Pauli (as group index) conjugates which token axis trivially.
bool pauli_commutes_with_axis(int pauli_group_idx, char axis) {
  const auto& grp = CliffordGroup::instance();
  if (pauli_group_idx == 0) return true;
  int ax = axis == 'X' ? 0 : 2;
  return grp.conj_axis(pauli_group_idx, ax).second == 1;
}

int token_key(const TToken& t) { return (t.axis == 'X' ? 2 : 0) | (t.dagger ? 1 : 0); }

// One-shot rewrites for the Y-conjugating trailing cosets, consuming the last
// one or two tokens so all leftovers are lead-absorbable.
//   pair:   M_{T^s} M_R M_{t1}        = M_{R2} M_a M_b M_K        (K Clifford)
//   triple: M_{T^s} M_R M_{tk} M_{tk1} = M_{R2} M_a M_b M_c M_Q    (Q Pauli)
struct PairRule {
  int new_trailing;
  TToken a, b;  // application order: b first, then a
  int lead_clifford;
};
struct TripleRule {
  int new_trailing;
  TToken a, b, c;  // application order: c, b, a
  int pauli;
};

class YRewriteTables {
 public:
  static const YRewriteTables& instance() {
    static const YRewriteTables t;
    return t;
  }
  const PairRule& pair(int r, bool dag, const TToken& t1) const {
    return pair_[key(r, dag, token_key(t1))];
  }
  const TripleRule& triple(int r, bool dag, const TToken& tk, const TToken& tk1) const {
    return triple_[key(r, dag, token_key(tk)) * 4 + token_key(tk1)];
  }

 private:
  static int key(int r, bool dag, int tk) { return (r * 2 + dag) * 4 + tk; }
  YRewriteTables() {
    const auto& grp = CliffordGroup::instance();
    std::array<int, 4> pidx = {0, grp.index_of_gate(GateKind::X), grp.index_of_gate(GateKind::Y),
                               grp.index_of_gate(GateKind::Z)};
    pair_.resize(24 * 2 * 4);
    triple_.resize(24 * 2 * 4 * 4);
    for (int r = 0; r < CliffordGroup::kSize; ++r) {
      for (int dag = 0; dag < 2; ++dag) {
        if (TPushTable::instance().rule(r, dag).leak_pauli) continue;
        Mat2 t_mat = gate_matrix_1q(dag ? GateKind::Tdg : GateKind::T, {});
        for (int tkk = 0; tkk < 4; ++tkk) {
          TToken t1{tkk & 2 ? 'X' : 'Z', bool(tkk & 1)};
          {  // pair rule
            Mat2 target = t_mat * grp.matrix(r) * token_matrix(t1);
            bool ok = false;
            for (int r2 = 0; r2 < CliffordGroup::kSize && !ok; ++r2)
              for (char aa : {'Z', 'X'})
                for (bool ad : {false, true})
                  for (bool bd : {false, true}) {
                    char ba = aa == 'Z' ? 'X' : 'Z';
                    Mat2 left = grp.matrix(r2) * token_matrix({aa, ad}) * token_matrix({ba, bd});
                    for (int k = 0; k < CliffordGroup::kSize; ++k) {
                      if (trace_fidelity(left * grp.matrix(k), target) > 1.0 - 1e-9) {
                        pair_[key(r, dag, tkk)] = {r2, {aa, ad}, {ba, bd}, k};
                        ok = true;
                        break;
                      }
                    }
                    if (ok) break;
                  }
            if (!ok) throw std::logic_error("pair rewrite missing");
          }
          for (int tk1k = 0; tk1k < 4; ++tk1k) {
            TToken tk1{tk1k & 2 ? 'X' : 'Z', bool(tk1k & 1)};
            if (tk1.axis == t1.axis) continue;  // tokens alternate
            Mat2 target = t_mat * grp.matrix(r) * token_matrix(t1) * token_matrix(tk1);
            bool ok = false;
            char ca = tk1.axis, ba = ca == 'Z' ? 'X' : 'Z', aa = ca;
            for (int r2 = 0; r2 < CliffordGroup::kSize && !ok; ++r2)
              for (bool ad : {false, true})
                for (bool bd : {false, true})
                  for (bool cd : {false, true}) {
                    Mat2 left = grp.matrix(r2) * token_matrix({aa, ad}) *
                                token_matrix({ba, bd}) * token_matrix({ca, cd});
                    for (int q : pidx) {
                      if (trace_fidelity(left * grp.matrix(q), target) > 1.0 - 1e-9) {
                        triple_[key(r, dag, tkk) * 4 + tk1k] = {r2, {aa, ad}, {ba, bd}, {ca, cd}, q};
                        ok = true;
                        break;
                      }
                    }
                    if (ok) break;
                  }
            if (!ok) throw std::logic_error("triple rewrite missing");
          }
        }
      }
    }
  }
  std::vector<PairRule> pair_;
  std::vector<TripleRule> triple_;
};

}  // namespace

TSequence normalize(const std::vector<Gate>& run) {
  const auto& grp = CliffordGroup::instance();
  const auto& table = TPushTable::instance();
  TSequence seq;  // lead = trail = identity initially

  auto push_pauli = [&](int pauli_idx) {
    if (pauli_idx == 0) return;
    for (auto& tok : seq.tokens)
      if (!pauli_commutes_with_axis(pauli_idx, tok.axis)) tok.dagger = !tok.dagger;
    seq.leading_clifford = grp.compose(pauli_idx, seq.leading_clifford);
  };

  auto append_token = [&](const TToken& tok) {
    if (!seq.tokens.empty() && seq.tokens.back().axis == tok.axis) {
      // Same-axis adjacency: T^2-type product folds into a Clifford.
      TToken last = seq.tokens.back();
      seq.tokens.pop_back();
      if (last.dagger == tok.dagger)
        seq.trailing_clifford = grp.compose(seq.trailing_clifford, token_square_clifford(tok));
      // Opposite signs cancel exactly.
    } else {
      seq.tokens.push_back(tok);
    }
  };

  for (const auto& g : run) {
    if (g.qubits.size() != 1) throw std::invalid_argument("normalize: multi-qubit gate in run");
    if (is_clifford(g.kind)) {
      seq.trailing_clifford = grp.compose(grp.index_of_gate(g.kind), seq.trailing_clifford);
      continue;
    }
    if (g.kind != GateKind::T && g.kind != GateKind::Tdg)
      throw std::invalid_argument("normalize: unsupported gate kind " +
                                  std::string(gate_info(g.kind).name));
    bool dag = g.kind == GateKind::Tdg;
    const auto& rule = table.rule(seq.trailing_clifford, dag);
    if (rule.leak_pauli) {
      seq.trailing_clifford = rule.new_trailing;
      push_pauli(rule.leak);
      append_token(rule.token);
    } else if (seq.tokens.empty()) {
      seq.leading_clifford = grp.compose(rule.leak, seq.leading_clifford);
      seq.trailing_clifford = rule.new_trailing;
      append_token(rule.token);
    } else if (seq.tokens.size() == 1) {
      const auto& pr = YRewriteTables::instance().pair(seq.trailing_clifford, dag, seq.tokens[0]);
      seq.tokens.clear();
      seq.leading_clifford = grp.compose(pr.lead_clifford, seq.leading_clifford);
      seq.trailing_clifford = pr.new_trailing;
      seq.tokens.push_back(pr.b);
      seq.tokens.push_back(pr.a);
    } else {
      TToken tk = seq.tokens.back();
      seq.tokens.pop_back();
      TToken tk1 = seq.tokens.back();
      seq.tokens.pop_back();
      const auto& tr = YRewriteTables::instance().triple(seq.trailing_clifford, dag, tk, tk1);
      seq.trailing_clifford = tr.new_trailing;
      push_pauli(tr.pauli);
      seq.tokens.push_back(tr.c);
      seq.tokens.push_back(tr.b);
      seq.tokens.push_back(tr.a);
    }
  }
  return seq;
}

LogicalCircuit SegmentedCircuit::flatten() const {
  LogicalCircuit out(num_qubits, "flattened");
  for (size_t i = 0; i < segments.size(); ++i) {
    for (const auto& g : segments[i].gates) out.append(g);
    if (i < layers.size()) {
      for (const auto& [q, seq] : layers[i])
        for (const auto& g : seq.to_gates(q)) out.append(g);
    }
  }
  for (const auto& g : final_measurements) out.append(g);
  return out;
}

size_t SegmentedCircuit::total_tokens() const {
  size_t n = 0;
  for (const auto& layer : layers)
    for (const auto& [q, seq] : layer) n += seq.tokens.size();
  return n;
}

SegmentedCircuit segment_circuit(const LogicalCircuit& c, size_t token_cap) {
  if (token_cap == 0) throw std::invalid_argument("token cap must be positive");
  SegmentedCircuit out;
  out.num_qubits = c.num_qubits;
  out.segments.emplace_back(c.num_qubits);
  std::vector<std::vector<Gate>> pending(c.num_qubits);
  std::vector<bool> measured(c.num_qubits, false);

  auto current_segment = [&]() -> LogicalCircuit& { return out.segments.back(); };

  auto flush = [&](uint32_t q) {
    auto run = std::move(pending[q]);
    pending[q].clear();
    if (run.empty()) return;
    bool has_t = false;
    for (const auto& g : run)
      if (!is_clifford(g.kind)) has_t = true;
    if (!has_t) {
      for (const auto& g : run) current_segment().append(g);
      return;
    }
    TSequence seq = normalize(run);
    const auto& grp = CliffordGroup::instance();
    // A flush may join the most recent layer when nothing has been emitted
    // after it yet (e.g. several qubits flushed by the same trigger).
    bool join = !out.layers.empty() && current_segment().gates.empty() &&
                !out.layers.back().count(q);
    // Leading Clifford belongs to the segment before the first chunk's layer.
    LogicalCircuit& lead_seg = join ? out.segments[out.segments.size() - 2] : current_segment();
    for (GateKind k : grp.word(seq.leading_clifford)) lead_seg.append(k, {q});
    // Chunk tokens by the cap; chunks go to consecutive layers.
    std::vector<std::vector<TToken>> chunks;
    for (size_t i = 0; i < seq.tokens.size(); i += token_cap)
      chunks.emplace_back(seq.tokens.begin() + i,
                          seq.tokens.begin() + std::min(seq.tokens.size(), i + token_cap));
    for (size_t ci = 0; ci < chunks.size(); ++ci) {
      if (!(join && ci == 0)) {
        out.layers.emplace_back();
        out.segments.emplace_back(c.num_qubits);
      }
      TSequence chunk;
      chunk.tokens = chunks[ci];
      out.layers.back()[q] = std::move(chunk);
    }
    // Trailing Clifford opens the following segment.
    for (GateKind k : grp.word(seq.trailing_clifford))
      current_segment().append(k, {q});
  };

  for (const auto& g : c.gates) {
    if (is_rotation(g.kind) || g.kind == GateKind::Reset)
      throw std::invalid_argument("segment_circuit: circuit must be Clifford+T");
    for (uint32_t q : g.qubits)
      if (measured[q]) throw std::invalid_argument("segment_circuit: gate after measurement");
    if (is_measurement(g.kind)) {
      flush(g.qubit());
      measured[g.qubit()] = true;
      out.final_measurements.push_back(g);
    } else if (g.kind == GateKind::CX) {
      flush(g.qubit(0));
      flush(g.qubit(1));
      current_segment().append(g);
    } else {
      pending[g.qubit()].push_back(g);
    }
  }
  for (uint32_t q = 0; q < c.num_qubits; ++q) flush(q);
  return out;
}

}  // namespace lsqc::normalform
