#include "lsqc/rotmerge.hpp"

#include <cmath>
#include <optional>

#include "lsqc/normalform.hpp"

namespace lsqc::rotmerge {

namespace {

double snap_quarter(double a, double tol) {
  double snapped = std::round(a / (kPi / 2)) * (kPi / 2);
  return std::abs(canonical_angle(a - snapped)) < tol ? snapped : a;
}

bool is_diagonal(const Mat2& u, double tol = 1e-12) {
  return std::abs(u(0, 1)) < tol && std::abs(u(1, 0)) < tol;
}

// a*I + b*X form: commutes through a CX target.
bool is_x_type(const Mat2& u, double tol = 1e-12) {
  return std::abs(u(0, 0) - u(1, 1)) < tol && std::abs(u(0, 1) - u(1, 0)) < tol;
}

}  // namespace

U3Params u3_params_of(const Mat2& u_in) {
  if (!u_in.is_unitary(1e-10)) throw std::invalid_argument("u3_params_of: input not unitary");
  Mat2 u = u_in;
  double n00 = std::abs(u(0, 0)), n10 = std::abs(u(1, 0));
  Complex ref;
  if (n00 > 1e-9) {
    ref = u(0, 0) / n00;
  } else {
    ref = u(1, 0) / n10;  // theta = pi column
  }
  for (auto& v : u.m) v /= ref;
  double theta = 2.0 * std::atan2(std::abs(u(1, 0)), std::abs(u(0, 0)));
  double phi = 0, lambda = 0;
  if (n00 <= 1e-9) {
    phi = 0;  // absorbed into the normalization
    lambda = std::arg(-u(0, 1));
  } else if (n10 <= 1e-9) {
    // theta ~ 0: only phi+lambda matters; put it all in lambda.
    phi = 0;
    lambda = std::arg(u(1, 1));
  } else {
    phi = std::arg(u(1, 0));
    lambda = std::arg(-u(0, 1));
  }
  return {canonical_angle(theta), canonical_angle(phi), canonical_angle(lambda)};
}

LogicalCircuit merge_rotations(const LogicalCircuit& c) {
  const auto& grp = normalform::CliffordGroup::instance();
  LogicalCircuit out(c.num_qubits, c.name.empty() ? "merged" : c.name + "-merged");
  std::vector<std::optional<Mat2>> pending(c.num_qubits);

  auto flush = [&](uint32_t q) {
    if (!pending[q]) return;
    Mat2 u = *pending[q];
    pending[q].reset();
    if (trace_fidelity(u, Mat2::identity()) > 1.0 - 1e-12) return;
    U3Params p = u3_params_of(u);
    double st = snap_quarter(p.theta, 1e-9);
    double sp = snap_quarter(p.phi, 1e-9);
    double sl = snap_quarter(p.lambda, 1e-9);
    // Clifford iff all three angles sit within 1e-9 of quarter multiples.
    auto is_quarter = [](double orig, double snapped) {
      return std::abs(canonical_angle(orig - snapped)) < 1e-9 &&
             std::abs(std::remainder(snapped, kPi / 2)) < 1e-12;
    };
    if (is_quarter(p.theta, st) && is_quarter(p.phi, sp) && is_quarter(p.lambda, sl)) {
      int idx = grp.index_of(u3_matrix(st, sp, sl));
      if (idx >= 0) {
        for (GateKind k : grp.word(idx)) out.append(k, {q});
        return;
      }
    }
    out.append(GateKind::U3, {q}, {p.theta, p.phi, p.lambda});
  };

  for (const auto& g : c.gates) {
    switch (g.kind) {
      case GateKind::CX: {
        uint32_t ctrl = g.qubit(0), tgt = g.qubit(1);
        if (pending[ctrl] && !is_diagonal(*pending[ctrl])) flush(ctrl);
        if (pending[tgt] && !is_x_type(*pending[tgt])) flush(tgt);
        out.append(g);
        break;
      }
      case GateKind::MeasureZ:
      case GateKind::MeasureX:
      case GateKind::Reset:
        flush(g.qubit());
        out.append(g);
        break;
      default: {
        uint32_t q = g.qubit();
        Mat2 m = gate_matrix_1q(g.kind, g.params);
        pending[q] = pending[q] ? m * (*pending[q]) : m;
      }
    }
  }
  for (uint32_t q = 0; q < c.num_qubits; ++q) flush(q);
  return out;
}

}  // namespace lsqc::rotmerge
