// Copyright 2026 The hcbmeas Authors
// SPDX-License-Identifier: Apache-2.0

#include "hcbmeas/sim/circuit.hpp"

#include <bit>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace hcbmeas::sim {

namespace {

using pauli::spin_orbital;

struct LadderStep {
  int mode;
  bool dagger;
};

// Applies ladder operators right to left to a basis state. Returns the sign,
// or nullopt when the product annihilates the state.
std::optional<int> apply_ladders(std::uint64_t& bits,
                                 const std::vector<LadderStep>& ops) {
  int sign = 1;
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    const std::uint64_t bit = 1ULL << it->mode;
    const bool occupied = (bits & bit) != 0;
    if (occupied == it->dagger) return std::nullopt;
    if (std::popcount(bits & (bit - 1)) & 1) sign = -sign;
    bits ^= bit;
  }
  return sign;
}

// exp(t (E - E+)) for a real excitation operator E given as ladder steps.
void apply_excitation(Statevector& psi, const std::vector<LadderStep>& e,
                      double t) {
  if (t == 0.0) return;
  const double c = std::cos(t), sn = std::sin(t);
  auto& a = psi.mutable_amplitudes();
  for (std::uint64_t b = 0; b < psi.dim(); ++b) {
    std::uint64_t target = b;
    const auto sign = apply_ladders(target, e);
    if (!sign || target == b) continue;
    const auto ib = static_cast<Eigen::Index>(b);
    const auto it = static_cast<Eigen::Index>(target);
    const complex alpha = a[ib], beta = a[it];
    a[ib] = c * alpha - *sign * sn * beta;
    a[it] = c * beta + *sign * sn * alpha;
  }
}

void check_qubit(int q, int n) {
  if (q < 0 || q >= n)
    throw std::out_of_range("gate qubit " + std::to_string(q) +
                            " outside register of " + std::to_string(n));
}

GateKind parse_kind(std::string token) {
  for (auto& ch : token) ch = static_cast<char>(std::toupper(ch));
  if (token == "X") return GateKind::X;
  if (token == "Z") return GateKind::Z;
  if (token == "H") return GateKind::H;
  if (token == "S") return GateKind::S;
  if (token == "SDG") return GateKind::Sdg;
  if (token == "RZ") return GateKind::Rz;
  if (token == "RX") return GateKind::Rx;
  if (token == "CNOT" || token == "CX") return GateKind::CNOT;
  if (token == "CZ") return GateKind::CZ;
  if (token == "UR") return GateKind::UR;
  if (token == "UC") return GateKind::UC;
  throw std::invalid_argument("unknown gate '" + token + "'");
}

bool has_angle(GateKind k) {
  return k == GateKind::Rz || k == GateKind::Rx || k == GateKind::UR ||
         k == GateKind::UC;
}

bool is_orbital_gate(GateKind k) { return k == GateKind::UR || k == GateKind::UC; }

}  // namespace

std::string to_string(GateKind kind) {
  switch (kind) {
    case GateKind::X: return "X";
    case GateKind::Z: return "Z";
    case GateKind::H: return "H";
    case GateKind::S: return "S";
    case GateKind::Sdg: return "SDG";
    case GateKind::Rz: return "RZ";
    case GateKind::Rx: return "RX";
    case GateKind::CNOT: return "CNOT";
    case GateKind::CZ: return "CZ";
    case GateKind::UR: return "UR";
    case GateKind::UC: return "UC";
  }
  return "?";
}

bool is_two_qubit(GateKind kind) {
  return kind == GateKind::CNOT || kind == GateKind::CZ;
}

bool is_clifford(GateKind kind) {
  switch (kind) {
    case GateKind::X:
    case GateKind::Z:
    case GateKind::H:
    case GateKind::S:
    case GateKind::Sdg:
    case GateKind::CNOT:
    case GateKind::CZ:
      return true;
    default:
      return false;
  }
}

Circuit::Circuit(int n_qubits, pauli::QubitOrdering ordering)
    : n_qubits_(n_qubits), ordering_(ordering) {
  if (n_qubits < 1 || n_qubits > pauli::kMaxQubits)
    throw std::invalid_argument("circuit qubit count out of range");
}

Circuit& Circuit::add(const Gate& gate) {
  if (is_orbital_gate(gate.kind)) {
    if (n_qubits_ % 2 != 0)
      throw std::invalid_argument("orbital gates need an even register");
    check_qubit(gate.a, n_orb());
    check_qubit(gate.b, n_orb());
    if (gate.a == gate.b)
      throw std::invalid_argument(to_string(gate.kind) +
                                  " needs two distinct orbitals");
  } else {
    check_qubit(gate.a, n_qubits_);
    if (is_two_qubit(gate.kind)) {
      check_qubit(gate.b, n_qubits_);
      if (gate.a == gate.b)
        throw std::invalid_argument("two-qubit gate on a single qubit");
    }
  }
  if (!std::isfinite(gate.angle))
    throw std::invalid_argument("non-finite gate angle");
  gates_.push_back(gate);
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.n_qubits_ != n_qubits_)
    throw std::invalid_argument("cannot append circuits of different width");
  for (const auto& g : other.gates_) add(g);
  return *this;
}

Circuit Circuit::inverse() const {
  Circuit out(n_qubits_, ordering_);
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
    Gate g = *it;
    switch (g.kind) {
      case GateKind::S: g.kind = GateKind::Sdg; break;
      case GateKind::Sdg: g.kind = GateKind::S; break;
      case GateKind::Rz:
      case GateKind::Rx:
      case GateKind::UR:
      case GateKind::UC: g.angle = -g.angle; break;
      default: break;
    }
    out.gates_.push_back(g);
  }
  return out;
}

std::string Circuit::to_text() const {
  std::string out;
  char buf[64];
  for (const auto& g : gates_) {
    out += to_string(g.kind);
    out += ' ' + std::to_string(g.a);
    if (is_two_qubit(g.kind) || is_orbital_gate(g.kind))
      out += ' ' + std::to_string(g.b);
    if (has_angle(g.kind)) {
      std::snprintf(buf, sizeof buf, " %.17g", g.angle);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

Circuit Circuit::parse(std::string_view text, int n_qubits,
                       pauli::QubitOrdering ordering) {
  Circuit c(n_qubits, ordering);
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string name;
    if (!(ls >> name) || name[0] == '#') continue;
    Gate g;
    try {
      g.kind = parse_kind(name);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(std::string(e.what()) + " on line " +
                                  std::to_string(line_no));
    }
    bool ok = static_cast<bool>(ls >> g.a);
    if (ok && (is_two_qubit(g.kind) || is_orbital_gate(g.kind)))
      ok = static_cast<bool>(ls >> g.b);
    if (ok && has_angle(g.kind)) ok = static_cast<bool>(ls >> g.angle);
    std::string extra;
    if (!ok || (ls >> extra))
      throw std::invalid_argument("malformed gate on line " +
                                  std::to_string(line_no));
    c.add(g);
  }
  return c;
}

void apply_gate(const Gate& g, const Circuit& ctx, Statevector& psi) {
  auto& a = psi.mutable_amplitudes();
  const std::uint64_t dim = psi.dim();
  const std::uint64_t ma = 1ULL << g.a;
  const double r2 = 1.0 / std::sqrt(2.0);
  switch (g.kind) {
    case GateKind::X:
      for (std::uint64_t b = 0; b < dim; ++b)
        if (!(b & ma)) std::swap(a[b], a[b | ma]);
      return;
    case GateKind::Z:
      for (std::uint64_t b = 0; b < dim; ++b)
        if (b & ma) a[b] = -a[b];
      return;
    case GateKind::S:
    case GateKind::Sdg: {
      const complex ph(0.0, g.kind == GateKind::S ? 1.0 : -1.0);
      for (std::uint64_t b = 0; b < dim; ++b)
        if (b & ma) a[b] *= ph;
      return;
    }
    case GateKind::H:
      for (std::uint64_t b = 0; b < dim; ++b)
        if (!(b & ma)) {
          const complex u = a[b], v = a[b | ma];
          a[b] = r2 * (u + v);
          a[b | ma] = r2 * (u - v);
        }
      return;
    case GateKind::Rz: {
      const complex lo = std::polar(1.0, -g.angle / 2), hi = std::polar(1.0, g.angle / 2);
      for (std::uint64_t b = 0; b < dim; ++b) a[b] *= (b & ma) ? hi : lo;
      return;
    }
    case GateKind::Rx: {
      const double c = std::cos(g.angle / 2), s = std::sin(g.angle / 2);
      const complex mis(0.0, -s);
      for (std::uint64_t b = 0; b < dim; ++b)
        if (!(b & ma)) {
          const complex u = a[b], v = a[b | ma];
          a[b] = c * u + mis * v;
          a[b | ma] = mis * u + c * v;
        }
      return;
    }
    case GateKind::CNOT: {
      const std::uint64_t mt = 1ULL << g.b;
      for (std::uint64_t b = 0; b < dim; ++b)
        if ((b & ma) && !(b & mt)) std::swap(a[b], a[b | mt]);
      return;
    }
    case GateKind::CZ: {
      const std::uint64_t mb = 1ULL << g.b;
      for (std::uint64_t b = 0; b < dim; ++b)
        if ((b & ma) && (b & mb)) a[b] = -a[b];
      return;
    }
    case GateKind::UR: {
      const int N = ctx.n_orb();
      for (int s = 0; s < 2; ++s) {
        const int i = spin_orbital(g.a, s, N, ctx.ordering());
        const int j = spin_orbital(g.b, s, N, ctx.ordering());
        apply_excitation(psi, {{i, true}, {j, false}}, g.angle / 2);
      }
      return;
    }
    case GateKind::UC: {
      const int N = ctx.n_orb();
      const auto o = ctx.ordering();
      apply_excitation(psi,
                       {{spin_orbital(g.a, 0, N, o), true},
                        {spin_orbital(g.a, 1, N, o), true},
                        {spin_orbital(g.b, 1, N, o), false},
                        {spin_orbital(g.b, 0, N, o), false}},
                       g.angle / 2);
      return;
    }
  }
}

void apply_in_place(const Circuit& circuit, Statevector& psi) {
  if (circuit.n_qubits() != psi.n_qubits())
    throw std::invalid_argument("circuit and state widths differ");
  for (const auto& g : circuit.gates()) apply_gate(g, circuit, psi);
}

Statevector apply(const Circuit& circuit, const Statevector& psi) {
  Statevector out = psi;
  apply_in_place(circuit, out);
  return out;
}

Circuit rotation_circuit(const chem::OrbitalRotation& rotation,
                         pauli::QubitOrdering ordering) {
  const int N = rotation.n_orb();
  Circuit c(2 * N, ordering);
  std::vector<chem::GivensFactor> factors = rotation.factors;
  if (factors.empty()) {
    const auto dec = chem::decompose_givens(rotation.matrix);
    // R = G_0 ... G_k D, so U_R = U_G0 ... U_Gk U_D and U_D acts first.
    for (int k = 0; k < N; ++k)
      if (dec.signs[k] < 0) {
        c.z(spin_orbital(k, 0, N, ordering));
        c.z(spin_orbital(k, 1, N, ordering));
      }
    factors = dec.factors;
  }
  for (auto it = factors.rbegin(); it != factors.rend(); ++it)
    if (it->theta != 0.0) c.ur(it->p, it->q, it->theta);
  return c;
}

std::uint64_t lowest_determinant(int n_orb, int n_elec,
                                 pauli::QubitOrdering ordering) {
  if (n_elec % 2 != 0 || n_elec < 0 || n_elec > 2 * n_orb)
    throw std::invalid_argument("closed-shell determinant needs even n_elec");
  std::uint64_t bits = 0;
  for (int k = 0; k < n_elec / 2; ++k)
    for (int s = 0; s < 2; ++s)
      bits |= 1ULL << spin_orbital(k, s, n_orb, ordering);
  return bits;
}

}  // namespace hcbmeas::sim
