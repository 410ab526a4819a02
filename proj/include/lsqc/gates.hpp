#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lsqc {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kAngleTol = 1e-12;

enum class GateKind : uint8_t {
  H,
  S,
  Sdg,
  X,
  Y,
  Z,
  CX,
  T,
  Tdg,
  RZ,
  RX,
  U3,
  MeasureZ,
  MeasureX,
  Reset,
};

struct GateInfo {
  std::string_view name;
  int arity;
  int num_params;
};

const GateInfo& gate_info(GateKind kind);
std::optional<GateKind> gate_kind_from_name(std::string_view name);

inline bool is_clifford(GateKind k) {
  switch (k) {
    case GateKind::H:
    case GateKind::S:
    case GateKind::Sdg:
    case GateKind::X:
    case GateKind::Y:
    case GateKind::Z:
    case GateKind::CX:
      return true;
    default:
      return false;
  }
}

inline bool is_measurement(GateKind k) {
  return k == GateKind::MeasureZ || k == GateKind::MeasureX;
}

inline bool is_rotation(GateKind k) {
  return k == GateKind::RZ || k == GateKind::RX || k == GateKind::U3;
}

inline bool is_unitary(GateKind k) {
  return !is_measurement(k) && k != GateKind::Reset;
}

// Canonicalizes an angle to (-pi, pi].
double canonical_angle(double a);
bool angles_equal(double a, double b, double tol = kAngleTol);

struct Gate {
  GateKind kind;
  std::vector<uint32_t> qubits;
  std::vector<double> params;

  Gate(GateKind k, std::vector<uint32_t> qs, std::vector<double> ps = {});

  uint32_t qubit(size_t i = 0) const { return qubits.at(i); }
  double param(size_t i = 0) const { return params.at(i); }
};

using Complex = std::complex<double>;

// Row-major 2x2 complex matrix; the workhorse for single-qubit algebra.
struct Mat2 {
  std::array<Complex, 4> m{};

  Complex& operator()(int r, int c) { return m[2 * r + c]; }
  const Complex& operator()(int r, int c) const { return m[2 * r + c]; }

  static Mat2 identity() { return Mat2{{Complex(1), Complex(0), Complex(0), Complex(1)}}; }
  Mat2 adjoint() const;
  Complex trace() const { return m[0] + m[3]; }
  friend Mat2 operator*(const Mat2& a, const Mat2& b);
  bool is_unitary(double tol = 1e-10) const;
};

// |Tr(a^dagger b)| / 2, i.e. 1 for equal unitaries up to global phase.
double trace_fidelity(const Mat2& a, const Mat2& b);

Mat2 gate_matrix_1q(GateKind kind, const std::vector<double>& params);
Mat2 u3_matrix(double theta, double phi, double lambda);
Mat2 rz_matrix(double theta);
Mat2 rx_matrix(double theta);

}  // namespace lsqc
