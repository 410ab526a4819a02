#include "lsqc/circuit.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace lsqc {

void LogicalCircuit::append(Gate g) {
  for (uint32_t q : g.qubits) {
    if (q >= num_qubits) {
      throw std::invalid_argument("qubit index " + std::to_string(q) + " out of range (n=" +
                                  std::to_string(num_qubits) + ")");
    }
  }
  gates.push_back(std::move(g));
}

void LogicalCircuit::append(GateKind kind, std::vector<uint32_t> qubits, std::vector<double> params) {
  append(Gate(kind, std::move(qubits), std::move(params)));
}

bool LogicalCircuit::is_clifford_only() const {
  for (const auto& g : gates)
    if (!is_clifford(g.kind)) return false;
  return true;
}

bool LogicalCircuit::has_measurement() const {
  for (const auto& g : gates)
    if (is_measurement(g.kind) || g.kind == GateKind::Reset) return true;
  return false;
}

size_t LogicalCircuit::count_kind(GateKind k) const {
  size_t n = 0;
  for (const auto& g : gates)
    if (g.kind == k) ++n;
  return n;
}

size_t LogicalCircuit::rotation_count() const {
  size_t n = 0;
  for (const auto& g : gates)
    if (is_rotation(g.kind)) ++n;
  return n;
}

namespace {

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<double> parse_params(const std::string& body, int line) {
  std::vector<double> out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = strip(item);
    if (item.empty()) throw ParseError(line, "empty angle");
    try {
      size_t pos = 0;
      out.push_back(std::stod(item, &pos));
      if (pos != item.size()) throw ParseError(line, "malformed angle '" + item + "'");
    } catch (const ParseError&) {
      throw;
    } catch (...) {
      throw ParseError(line, "malformed angle '" + item + "'");
    }
  }
  return out;
}

}  // namespace

LogicalCircuit parse_circuit(const std::string& text) {
  LogicalCircuit c;
  bool have_header = false;
  std::stringstream ss(text);
  std::string raw;
  int line = 0;
  while (std::getline(ss, raw)) {
    ++line;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::string s = strip(raw);
    if (s.empty()) continue;

    std::stringstream ls(s);
    std::string head;
    ls >> head;
    if (!have_header) {
      if (head != "QUBITS") throw ParseError(line, "expected QUBITS header");
      long n = -1;
      if (!(ls >> n) || n < 0) throw ParseError(line, "bad qubit count");
      std::string extra;
      if (ls >> extra) throw ParseError(line, "trailing tokens after QUBITS");
      c.num_qubits = static_cast<uint32_t>(n);
      have_header = true;
      continue;
    }

    std::vector<double> params;
    std::string kind_name = head;
    auto paren = head.find('(');
    if (paren != std::string::npos) {
      // Angles may contain spaces after commas; re-scan the full line.
      auto open = s.find('(');
      auto close = s.find(')', open);
      if (close == std::string::npos) throw ParseError(line, "missing ')'");
      kind_name = strip(s.substr(0, open));
      params = parse_params(s.substr(open + 1, close - open - 1), line);
      ls = std::stringstream(strip(s.substr(close + 1)));
    }
    auto kind = gate_kind_from_name(kind_name);
    if (!kind) throw ParseError(line, "unknown gate kind '" + kind_name + "'");

    std::vector<uint32_t> qubits;
    long q;
    while (ls >> q) {
      if (q < 0) throw ParseError(line, "negative qubit index");
      qubits.push_back(static_cast<uint32_t>(q));
    }
    if (!ls.eof()) throw ParseError(line, "malformed qubit index");
    try {
      c.append(Gate(*kind, std::move(qubits), std::move(params)));
    } catch (const std::exception& e) {
      throw ParseError(line, e.what());
    }
  }
  if (!have_header) throw ParseError(line ? line : 1, "missing QUBITS header");
  return c;
}

std::string serialize_circuit(const LogicalCircuit& c) {
  std::ostringstream out;
  if (!c.name.empty()) out << "# " << c.name << "\n";
  out << "QUBITS " << c.num_qubits << "\n";
  out.precision(17);
  for (const auto& g : c.gates) {
    out << gate_info(g.kind).name;
    if (!g.params.empty()) {
      out << '(';
      for (size_t i = 0; i < g.params.size(); ++i) {
        if (i) out << ',';
        out << g.params[i];
      }
      out << ')';
    }
    for (uint32_t q : g.qubits) out << ' ' << q;
    out << '\n';
  }
  return out.str();
}

LogicalCircuit read_circuit_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open circuit file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_circuit(buf.str());
}

void write_circuit_file(const LogicalCircuit& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write circuit file: " + path);
  out << serialize_circuit(c);
}

}  // namespace lsqc
