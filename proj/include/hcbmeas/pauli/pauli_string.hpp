// Copyright 2026 The hcbmeas Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

namespace hcbmeas::pauli {

inline constexpr int kMaxQubits = 64;

/**
 * Tensor product of single-qubit Paulis in symplectic form.
 *
 * Bit q of (x, z) encodes qubit q: (0,0) I, (1,0) X, (0,1) Z, (1,1) Y. The
 * string carries no phase; a product's phase is returned separately.
 */
struct PauliString {
  int n_qubits = 0;
  std::uint64_t x = 0;
  std::uint64_t z = 0;

  PauliString() = default;
  PauliString(int n, std::uint64_t x_mask, std::uint64_t z_mask);
  static PauliString identity(int n) { return PauliString(n, 0, 0); }
  /// "X0 Y3 Z5" (order-insensitive); "I" or "" for the identity.
  static PauliString parse(std::string_view text, int n_qubits);

  bool is_identity() const { return (x | z) == 0; }
  bool is_diagonal() const { return x == 0; }
  std::uint64_t support() const { return x | z; }
  int weight() const;
  /// 'I', 'X', 'Y' or 'Z'.
  char letter(int qubit) const;
  /// Sorted "X0 Y3 Z5"; "I" for the identity.
  std::string to_string() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;
  friend std::strong_ordering operator<=>(const PauliString& a,
                                          const PauliString& b) {
    if (auto c = a.n_qubits <=> b.n_qubits; c != 0) return c;
    if (auto c = a.x <=> b.x; c != 0) return c;
    return a.z <=> b.z;
  }
};

/// Power k of i, k in {0,1,2,3}.
std::complex<double> i_power(int k);

/// a * b = i^phase * result.
struct PauliProduct {
  PauliString result;
  int phase = 0;  // exponent of i, mod 4
  std::complex<double> factor() const { return i_power(phase); }
};

PauliProduct multiply(const PauliString& a, const PauliString& b);

enum class Commutation { qubitwise, fully };

bool commutes(const PauliString& a, const PauliString& b,
              Commutation mode = Commutation::fully);

std::string to_string(Commutation mode);
Commutation parse_commutation(std::string_view text);

struct PauliStringHash {
  std::size_t operator()(const PauliString& p) const noexcept {
    return std::hash<std::uint64_t>{}(p.x * 0x9E3779B97F4A7C15ULL ^ p.z) ^
           static_cast<std::size_t>(p.n_qubits);
  }
};

}  // namespace hcbmeas::pauli
