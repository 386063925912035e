// Copyright 2026 The hcbmeas Authors
// SPDX-License-Identifier: Apache-2.0

#include "hcbmeas/pauli/pauli_string.hpp"

#include <bit>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace hcbmeas::pauli {

PauliString::PauliString(int n, std::uint64_t x_mask, std::uint64_t z_mask)
    : n_qubits(n), x(x_mask), z(z_mask) {
  if (n < 0 || n > kMaxQubits)
    throw std::invalid_argument("qubit count out of range");
  const std::uint64_t allowed = n == 64 ? ~0ULL : ((1ULL << n) - 1);
  if (((x | z) & ~allowed) != 0)
    throw std::invalid_argument("Pauli mask exceeds qubit count");
}

PauliString PauliString::parse(std::string_view text, int n_qubits) {
  std::uint64_t x = 0, z = 0;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token == "I") continue;
    const char op = static_cast<char>(std::toupper(token[0]));
    int q = 0;
    try {
      std::size_t used = 0;
      q = std::stoi(token.substr(1), &used);
      if (used != token.size() - 1) throw std::invalid_argument("");
    } catch (const std::logic_error&) {
      throw std::invalid_argument("malformed Pauli token '" + token + "'");
    }
    if (q < 0 || q >= n_qubits)
      throw std::invalid_argument("Pauli qubit index out of range: " + token);
    const std::uint64_t bit = 1ULL << q;
    if (((x | z) & bit) != 0)
      throw std::invalid_argument("qubit repeated in Pauli string: " + token);
    switch (op) {
      case 'X': x |= bit; break;
      case 'Y': x |= bit; z |= bit; break;
      case 'Z': z |= bit; break;
      default: throw std::invalid_argument("unknown Pauli '" + token + "'");
    }
  }
  return PauliString(n_qubits, x, z);
}

int PauliString::weight() const { return std::popcount(x | z); }

char PauliString::letter(int qubit) const {
  const bool xb = (x >> qubit) & 1ULL, zb = (z >> qubit) & 1ULL;
  if (xb && zb) return 'Y';
  if (xb) return 'X';
  if (zb) return 'Z';
  return 'I';
}

std::string PauliString::to_string() const {
  if (is_identity()) return "I";
  std::string out;
  for (int q = 0; q < n_qubits; ++q) {
    const char c = letter(q);
    if (c == 'I') continue;
    if (!out.empty()) out += ' ';
    out += c;
    out += std::to_string(q);
  }
  return out;
}

std::complex<double> i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

PauliProduct multiply(const PauliString& a, const PauliString& b) {
  if (a.n_qubits != b.n_qubits)
    throw std::invalid_argument("Pauli qubit counts differ");
  // Per-qubit phase exponents of single-qubit products (Aaronson-Gottesman g).
  int phase = 0;
  std::uint64_t active = (a.x | a.z) & (b.x | b.z);
  while (active) {
    const int q = std::countr_zero(active);
    active &= active - 1;
    const int x1 = (a.x >> q) & 1, z1 = (a.z >> q) & 1;
    const int x2 = (b.x >> q) & 1, z2 = (b.z >> q) & 1;
    if (x1 && z1)
      phase += z2 - x2;
    else if (x1)
      phase += z2 * (2 * x2 - 1);
    else
      phase += x2 * (1 - 2 * z2);
  }
  return {PauliString(a.n_qubits, a.x ^ b.x, a.z ^ b.z), ((phase % 4) + 4) % 4};
}

bool commutes(const PauliString& a, const PauliString& b, Commutation mode) {
  if (a.n_qubits != b.n_qubits)
    throw std::invalid_argument("Pauli qubit counts differ");
  const std::uint64_t anti = (a.x & b.z) ^ (a.z & b.x);
  if (mode == Commutation::fully) return std::popcount(anti) % 2 == 0;
  return anti == 0;
}

std::string to_string(Commutation mode) {
  return mode == Commutation::fully ? "fully" : "qubitwise";
}

Commutation parse_commutation(std::string_view text) {
  if (text == "fully" || text == "fc") return Commutation::fully;
  if (text == "qubitwise" || text == "qwc") return Commutation::qubitwise;
  throw std::invalid_argument("unknown commutation mode '" +
                              std::string(text) + "'");
}

}  // namespace hcbmeas::pauli
