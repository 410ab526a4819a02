#pragma once

#include <string>
#include <vector>

#include "lsqc/gates.hpp"

namespace lsqc {

// Gate-level IR shared by all pre-surgery pipeline stages.
struct LogicalCircuit {
  uint32_t num_qubits = 0;
  std::vector<Gate> gates;
  std::string name;

  LogicalCircuit() = default;
  explicit LogicalCircuit(uint32_t n, std::string name = "") : num_qubits(n), name(std::move(name)) {}

  void append(Gate g);
  void append(GateKind kind, std::vector<uint32_t> qubits, std::vector<double> params = {});

  bool is_clifford_only() const;
  bool has_measurement() const;
  size_t count_kind(GateKind k) const;
  size_t t_count() const { return count_kind(GateKind::T) + count_kind(GateKind::Tdg); }
  size_t rotation_count() const;
};

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
};

// Line-oriented circuit text: `QUBITS n` header, then `KIND[(a[,b,c])] q0 [q1]`,
// `#` comments.
LogicalCircuit parse_circuit(const std::string& text);
std::string serialize_circuit(const LogicalCircuit& c);

LogicalCircuit read_circuit_file(const std::string& path);
void write_circuit_file(const LogicalCircuit& c, const std::string& path);

}  // namespace lsqc
