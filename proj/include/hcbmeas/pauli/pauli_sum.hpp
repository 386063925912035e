// Copyright 2026 The hcbmeas Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hcbmeas/pauli/pauli_string.hpp"

namespace hcbmeas::pauli {

inline constexpr double kDefaultPrune = 1e-12;

/// Real linear combination of Pauli strings, iterated in (x, z) mask order.
class PauliSum {
 public:
  using Map = std::map<PauliString, double>;

  PauliSum() = default;
  explicit PauliSum(int n_qubits) : n_qubits_(n_qubits) {}

  int n_qubits() const { return n_qubits_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const Map& terms() const { return terms_; }
  Map::const_iterator begin() const { return terms_.begin(); }
  Map::const_iterator end() const { return terms_.end(); }

  /// Adds c * p, merging with an existing entry. Exact zeros are erased.
  void add(const PauliString& p, double c);
  void add(const PauliSum& other, double scale = 1.0);
  double coefficient(const PauliString& p) const;
  double identity_coefficient() const;
  bool contains_identity() const;
  std::size_t count_without_identity() const;

  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator-=(const PauliSum& other);
  PauliSum& operator*=(double s);
  friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
  friend PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
  friend PauliSum operator*(double s, PauliSum a) { return a *= s; }

  /// Sum of |c|.
  double one_norm() const;
  /// Largest coefficient difference over the union of supports.
  friend double max_abs_diff(const PauliSum& a, const PauliSum& b);

  std::vector<PauliString> strings() const;

  /// One term per line: "%+.11e X0 Y3 Z5".
  std::string to_text() const;
  static PauliSum parse(std::string_view text, int n_qubits);

 private:
  int n_qubits_ = 0;
  Map terms_;
};

struct PruneResult {
  PauliSum sum;
  double dropped_weight = 0.0;
  std::size_t dropped_terms = 0;
};

/// Drops terms with |c| < threshold. A zero threshold is the identity.
PruneResult prune(const PauliSum& sum, double threshold = kDefaultPrune);

/// Complex accumulator used for intermediate fermionic products.
class ComplexPauliSum {
 public:
  using Map = std::map<PauliString, std::complex<double>>;

  ComplexPauliSum() = default;
  explicit ComplexPauliSum(int n_qubits) : n_qubits_(n_qubits) {}

  int n_qubits() const { return n_qubits_; }
  const Map& terms() const { return terms_; }
  void add(const PauliString& p, std::complex<double> c);
  void add(const ComplexPauliSum& other, std::complex<double> scale = 1.0);
  ComplexPauliSum& operator*=(std::complex<double> s);

  friend ComplexPauliSum operator*(const ComplexPauliSum& a,
                                   const ComplexPauliSum& b);

  double max_imag() const;
  /// Real part; throws std::domain_error if any |Im c| exceeds `tol`.
  PauliSum to_real(double tol = 1e-10) const;

 private:
  int n_qubits_ = 0;
  Map terms_;
};

}  // namespace hcbmeas::pauli
