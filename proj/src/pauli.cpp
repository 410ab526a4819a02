#include "lsqc/pauli.hpp"

#include <stdexcept>

namespace lsqc {

PauliString PauliString::from_text(const std::string& text) {
  size_t i = 0;
  uint8_t phase = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    if (text[i] == '-') phase = 2;
    ++i;
  }
  PauliString p(text.size() - i);
  p.phase = phase;
  for (size_t q = 0; i < text.size(); ++i, ++q) {
    switch (std::toupper(static_cast<unsigned char>(text[i]))) {
      case 'I': break;
      case 'X': p.x[q] = 1; break;
      case 'Z': p.z[q] = 1; break;
      case 'Y': p.x[q] = p.z[q] = 1; break;
      default: throw std::invalid_argument("bad pauli char in '" + text + "'");
    }
  }
  return p;
}

PauliString PauliString::single(size_t n, size_t qubit, char pauli, int sign) {
  PauliString p(n);
  switch (std::toupper(static_cast<unsigned char>(pauli))) {
    case 'X': p.x[qubit] = 1; break;
    case 'Z': p.z[qubit] = 1; break;
    case 'Y': p.x[qubit] = p.z[qubit] = 1; break;
    case 'I': break;
    default: throw std::invalid_argument("bad pauli char");
  }
  p.set_sign(sign);
  return p;
}

bool PauliString::is_identity() const {
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i] || z[i]) return false;
  return true;
}

int PauliString::sign() const {
  if (phase == 0) return +1;
  if (phase == 2) return -1;
  throw std::logic_error("pauli string has imaginary phase");
}

char PauliString::pauli_at(size_t q) const {
  if (x[q] && z[q]) return 'Y';
  if (x[q]) return 'X';
  if (z[q]) return 'Z';
  return 'I';
}

int PauliString::weight() const {
  int w = 0;
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i] || z[i]) ++w;
  return w;
}

PauliString& PauliString::operator*=(const PauliString& o) {
  if (o.x.size() != x.size()) throw std::invalid_argument("pauli length mismatch");
  int ph = phase + o.phase;
  for (size_t i = 0; i < x.size(); ++i) {
    // Phase of (x1,z1)*(x2,z2): i-exponent from reordering X^x Z^z factors.
    // g(x1,z1,x2,z2) per Aaronson-Gottesman.
    int x1 = x[i], z1 = z[i], x2 = o.x[i], z2 = o.z[i];
    if (x1 && z1) {                       // Y * ...
      ph += z2 - x2;                      // Y*X=-i(..), Y*Z=+i(..)
    } else if (x1) {                      // X * ...
      ph += z2 * (2 * x2 - 1);            // X*Z=-i Y, X*Y=+i Z
    } else if (z1) {                      // Z * ...
      ph += x2 * (1 - 2 * z2);            // Z*X=+i Y, Z*Y=-i X
    }
    x[i] ^= x2;
    z[i] ^= z2;
  }
  phase = static_cast<uint8_t>(((ph % 4) + 4) % 4);
  return *this;
}

bool PauliString::commutes_with(const PauliString& o) const {
  int acc = 0;
  for (size_t i = 0; i < x.size(); ++i) acc ^= (x[i] & o.z[i]) ^ (z[i] & o.x[i]);
  return acc == 0;
}

bool PauliString::operator==(const PauliString& o) const {
  return x == o.x && z == o.z && phase == o.phase;
}

std::string PauliString::str() const {
  std::string s;
  s += (phase == 0 ? '+' : phase == 2 ? '-' : '?');
  for (size_t q = 0; q < x.size(); ++q) s += pauli_at(q);
  return s;
}

}  // namespace lsqc
