#include "lsqc/gates.hpp"

#include <algorithm>
#include <unordered_map>

namespace lsqc {

namespace {

const std::array<GateInfo, 15> kGateTable = {{
    {"H", 1, 0},
    {"S", 1, 0},
    {"SDG", 1, 0},
    {"X", 1, 0},
    {"Y", 1, 0},
    {"Z", 1, 0},
    {"CX", 2, 0},
    {"T", 1, 0},
    {"TDG", 1, 0},
    {"RZ", 1, 1},
    {"RX", 1, 1},
    {"U3", 1, 3},
    {"MZ", 1, 0},
    {"MX", 1, 0},
    {"RESET", 1, 0},
}};

}  // namespace

const GateInfo& gate_info(GateKind kind) {
  return kGateTable[static_cast<size_t>(kind)];
}

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
  std::string up(name);
  std::transform(up.begin(), up.end(), up.begin(), [](unsigned char c) { return std::toupper(c); });
  for (size_t i = 0; i < kGateTable.size(); ++i) {
    if (kGateTable[i].name == up) return static_cast<GateKind>(i);
  }
  return std::nullopt;
}

double canonical_angle(double a) {
  double r = std::fmod(a, 2 * kPi);
  if (r <= -kPi) r += 2 * kPi;
  if (r > kPi) r -= 2 * kPi;
  // fmod can leave -pi; map to +pi.
  if (r <= -kPi + 0.0) r = kPi;
  return r;
}

bool angles_equal(double a, double b, double tol) {
  double d = canonical_angle(a - b);
  return std::abs(d) < tol || std::abs(std::abs(d) - 2 * kPi) < tol;
}

Gate::Gate(GateKind k, std::vector<uint32_t> qs, std::vector<double> ps)
    : kind(k), qubits(std::move(qs)), params(std::move(ps)) {
  const auto& info = gate_info(kind);
  if (static_cast<int>(qubits.size()) != info.arity) {
    throw std::invalid_argument(std::string("gate ") + std::string(info.name) + ": expected " +
                                std::to_string(info.arity) + " qubits, got " +
                                std::to_string(qubits.size()));
  }
  if (static_cast<int>(params.size()) != info.num_params) {
    throw std::invalid_argument(std::string("gate ") + std::string(info.name) + ": expected " +
                                std::to_string(info.num_params) + " params, got " +
                                std::to_string(params.size()));
  }
  for (size_t i = 0; i < qubits.size(); ++i) {
    for (size_t j = i + 1; j < qubits.size(); ++j) {
      if (qubits[i] == qubits[j]) {
        throw std::invalid_argument(std::string("gate ") + std::string(info.name) +
                                    ": duplicate qubit " + std::to_string(qubits[i]));
      }
    }
  }
  for (double p : params) {
    if (!std::isfinite(p)) throw std::invalid_argument("gate angle must be finite");
  }
}

Mat2 Mat2::adjoint() const {
  Mat2 r;
  r(0, 0) = std::conj((*this)(0, 0));
  r(0, 1) = std::conj((*this)(1, 0));
  r(1, 0) = std::conj((*this)(0, 1));
  r(1, 1) = std::conj((*this)(1, 1));
  return r;
}

Mat2 operator*(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
  return r;
}

bool Mat2::is_unitary(double tol) const {
  Mat2 p = (*this) * adjoint();
  return std::abs(p(0, 0) - Complex(1)) < tol && std::abs(p(1, 1) - Complex(1)) < tol &&
         std::abs(p(0, 1)) < tol && std::abs(p(1, 0)) < tol;
}

double trace_fidelity(const Mat2& a, const Mat2& b) {
  Mat2 p = a.adjoint() * b;
  return std::abs(p.trace()) / 2.0;
}

Mat2 u3_matrix(double theta, double phi, double lambda) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  Mat2 r;
  r(0, 0) = c;
  r(0, 1) = -std::exp(Complex(0, lambda)) * s;
  r(1, 0) = std::exp(Complex(0, phi)) * s;
  r(1, 1) = std::exp(Complex(0, phi + lambda)) * c;
  return r;
}

Mat2 rz_matrix(double theta) {
  Mat2 r;
  r(0, 0) = std::exp(Complex(0, -theta / 2));
  r(1, 1) = std::exp(Complex(0, theta / 2));
  return r;
}

Mat2 rx_matrix(double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  Mat2 r;
  r(0, 0) = c;
  r(0, 1) = Complex(0, -s);
  r(1, 0) = Complex(0, -s);
  r(1, 1) = c;
  return r;
}

Mat2 gate_matrix_1q(GateKind kind, const std::vector<double>& params) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  switch (kind) {
    case GateKind::H:
      return Mat2{{inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2}};
    case GateKind::S:
      return Mat2{{Complex(1), Complex(0), Complex(0), Complex(0, 1)}};
    case GateKind::Sdg:
      return Mat2{{Complex(1), Complex(0), Complex(0), Complex(0, -1)}};
    case GateKind::X:
      return Mat2{{Complex(0), Complex(1), Complex(1), Complex(0)}};
    case GateKind::Y:
      return Mat2{{Complex(0), Complex(0, -1), Complex(0, 1), Complex(0)}};
    case GateKind::Z:
      return Mat2{{Complex(1), Complex(0), Complex(0), Complex(-1)}};
    case GateKind::T:
      return Mat2{{Complex(1), Complex(0), Complex(0), std::exp(Complex(0, kPi / 4))}};
    case GateKind::Tdg:
      return Mat2{{Complex(1), Complex(0), Complex(0), std::exp(Complex(0, -kPi / 4))}};
    case GateKind::RZ:
      return rz_matrix(params.at(0));
    case GateKind::RX:
      return rx_matrix(params.at(0));
    case GateKind::U3:
      return u3_matrix(params.at(0), params.at(1), params.at(2));
    default:
      throw std::invalid_argument("not a single-qubit unitary gate");
  }
}

}  // namespace lsqc
