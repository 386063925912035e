// Copyright 2026 The hcbmeas Authors
// SPDX-License-Identifier: Apache-2.0

#include "hcbmeas/pauli/pauli_sum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace hcbmeas::pauli {

namespace {

void check_size(int expected, int got) {
  if (expected != got)
    throw std::invalid_argument("Pauli sum qubit counts differ");
}

}  // namespace

void PauliSum::add(const PauliString& p, double c) {
  check_size(n_qubits_, p.n_qubits);
  if (c == 0.0) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0.0) terms_.erase(it);
  }
}

void PauliSum::add(const PauliSum& other, double scale) {
  check_size(n_qubits_, other.n_qubits_);
  for (const auto& [p, c] : other.terms_) add(p, scale * c);
}

double PauliSum::coefficient(const PauliString& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? 0.0 : it->second;
}

double PauliSum::identity_coefficient() const {
  return coefficient(PauliString::identity(n_qubits_));
}

bool PauliSum::contains_identity() const {
  return terms_.count(PauliString::identity(n_qubits_)) != 0;
}

std::size_t PauliSum::count_without_identity() const {
  return size() - (contains_identity() ? 1 : 0);
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  add(other, 1.0);
  return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& other) {
  add(other, -1.0);
  return *this;
}

PauliSum& PauliSum::operator*=(double s) {
  if (s == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, c] : terms_) c *= s;
  return *this;
}

double PauliSum::one_norm() const {
  double s = 0.0;
  for (const auto& [p, c] : terms_) s += std::abs(c);
  return s;
}

double max_abs_diff(const PauliSum& a, const PauliSum& b) {
  check_size(a.n_qubits_, b.n_qubits_);
  double worst = 0.0;
  for (const auto& [p, c] : a.terms_)
    worst = std::max(worst, std::abs(c - b.coefficient(p)));
  for (const auto& [p, c] : b.terms_)
    if (!a.terms_.count(p)) worst = std::max(worst, std::abs(c));
  return worst;
}

std::vector<PauliString> PauliSum::strings() const {
  std::vector<PauliString> out;
  out.reserve(terms_.size());
  for (const auto& [p, c] : terms_) out.push_back(p);
  return out;
}

std::string PauliSum::to_text() const {
  std::string out;
  char buf[64];
  for (const auto& [p, c] : terms_) {
    std::snprintf(buf, sizeof buf, "%+.11e", c);
    out += buf;
    if (!p.is_identity()) {
      out += ' ';
      out += p.to_string();
    }
    out += '\n';
  }
  return out;
}

PauliSum PauliSum::parse(std::string_view text, int n_qubits) {
  PauliSum sum(n_qubits);
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::size_t used = 0;
    double c = 0.0;
    try {
      c = std::stod(line.substr(first), &used);
    } catch (const std::logic_error&) {
      throw std::invalid_argument("bad coefficient on line " +
                                  std::to_string(line_no));
    }
    const auto rest = line.substr(first + used);
    const auto p = PauliString::parse(rest, n_qubits);
    if (sum.terms_.count(p))
      throw std::invalid_argument("duplicate Pauli string on line " +
                                  std::to_string(line_no));
    sum.terms_.emplace(p, c);
  }
  return sum;
}

PruneResult prune(const PauliSum& sum, double threshold) {
  if (threshold < 0.0) throw std::invalid_argument("negative prune threshold");
  PruneResult r{PauliSum(sum.n_qubits()), 0.0, 0};
  for (const auto& [p, c] : sum) {
    if (std::abs(c) < threshold) {
      r.dropped_weight += std::abs(c);
      ++r.dropped_terms;
    } else {
      r.sum.add(p, c);
    }
  }
  return r;
}

void ComplexPauliSum::add(const PauliString& p, std::complex<double> c) {
  check_size(n_qubits_, p.n_qubits);
  if (c == 0.0) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0.0) terms_.erase(it);
  }
}

void ComplexPauliSum::add(const ComplexPauliSum& other,
                          std::complex<double> scale) {
  check_size(n_qubits_, other.n_qubits_);
  for (const auto& [p, c] : other.terms_) add(p, scale * c);
}

ComplexPauliSum& ComplexPauliSum::operator*=(std::complex<double> s) {
  for (auto& [p, c] : terms_) c *= s;
  return *this;
}

ComplexPauliSum operator*(const ComplexPauliSum& a, const ComplexPauliSum& b) {
  check_size(a.n_qubits_, b.n_qubits_);
  ComplexPauliSum out(a.n_qubits_);
  for (const auto& [pa, ca] : a.terms_)
    for (const auto& [pb, cb] : b.terms_) {
      const auto prod = multiply(pa, pb);
      out.add(prod.result, ca * cb * prod.factor());
    }
  return out;
}

double ComplexPauliSum::max_imag() const {
  double worst = 0.0;
  for (const auto& [p, c] : terms_) worst = std::max(worst, std::abs(c.imag()));
  return worst;
}

PauliSum ComplexPauliSum::to_real(double tol) const {
  if (max_imag() > tol)
    throw std::domain_error("operator has non-real Pauli coefficients");
  PauliSum out(n_qubits_);
  for (const auto& [p, c] : terms_) out.add(p, c.real());
  return out;
}

}  // namespace hcbmeas::pauli
