// Copyright 2026 The hcbmeas Authors
// SPDX-License-Identifier: Apache-2.0

#include "hcbmeas/chem/sto3g.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hcbmeas::chem {
namespace {

// Hydrogen STO-3G (zeta = 1.24).
constexpr std::array<double, 3> kExponents{3.425250914, 0.6239137298,
                                           0.1688554040};
constexpr std::array<double, 3> kCoefficients{0.1543289673, 0.5353281423,
                                              0.4446345422};

struct Primitive {
  double alpha;
  double weight;  // contraction coefficient times primitive normalization
};

struct Shell {
  Eigen::Vector3d center;  // bohr
  std::array<Primitive, 3> prims;
};

constexpr double kPi = std::numbers::pi;

double primitive_overlap(double a, double b, double r2) {
  const double p = a + b;
  return std::pow(kPi / p, 1.5) * std::exp(-a * b / p * r2);
}

std::array<Primitive, 3> normalized_contraction() {
  std::array<Primitive, 3> prims{};
  for (int i = 0; i < 3; ++i) {
    const double a = kExponents[i];
    prims[i] = {a, kCoefficients[i] * std::pow(2.0 * a / kPi, 0.75)};
  }
  double norm = 0.0;
  for (const auto& x : prims)
    for (const auto& y : prims)
      norm += x.weight * y.weight * primitive_overlap(x.alpha, y.alpha, 0.0);
  for (auto& x : prims) x.weight /= std::sqrt(norm);
  return prims;
}

}  // namespace

double boys_f0(double t) {
  if (t < 1e-8) return 1.0 - t / 3.0 + t * t / 10.0;
  const double st = std::sqrt(t);
  return 0.5 * std::sqrt(kPi / t) * std::erf(st);
}

AtomicIntegrals hydrogen_sto3g(const Geometry& geometry) {
  validate(geometry);
  const int n = static_cast<int>(geometry.size());
  const auto prims = normalized_contraction();
  std::vector<Shell> shells;
  for (const auto& atom : geometry.atoms) {
    if (atom.element != "H" && atom.element != "h")
      throw std::invalid_argument(
          "in-house STO-3G integrals support hydrogen only, got '" +
          atom.element + "'");
    shells.push_back({atom.position / kBohrAngstrom, prims});
  }

  AtomicIntegrals out;
  out.overlap = Eigen::MatrixXd::Zero(n, n);
  out.core = Eigen::MatrixXd::Zero(n, n);

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Eigen::Vector3d& A = shells[i].center;
      const Eigen::Vector3d& B = shells[j].center;
      const double rab2 = (A - B).squaredNorm();
      double s = 0.0, t = 0.0, v = 0.0;
      for (const auto& pa : shells[i].prims) {
        for (const auto& pb : shells[j].prims) {
          const double a = pa.alpha, b = pb.alpha, p = a + b;
          const double w = pa.weight * pb.weight;
          const double sab = primitive_overlap(a, b, rab2);
          s += w * sab;
          t += w * a * b / p * (3.0 - 2.0 * a * b / p * rab2) * sab;
          const Eigen::Vector3d P = (a * A + b * B) / p;
          for (const auto& nucleus : shells) {
            const double rpc2 = (P - nucleus.center).squaredNorm();
            v -= w * 2.0 * kPi / p * std::exp(-a * b / p * rab2) *
                 boys_f0(p * rpc2);
          }
        }
      }
      out.overlap(i, j) = s;
      out.core(i, j) = t + v;
    }
  }

  const auto N = static_cast<std::size_t>(n);
  out.eri.assign(N * N * N * N, 0.0);
  auto at = [N](std::size_t p, std::size_t q, std::size_t r, std::size_t s) {
    return ((p * N + q) * N + r) * N + s;
  };
  for (std::size_t p = 0; p < N; ++p)
    for (std::size_t q = 0; q <= p; ++q)
      for (std::size_t r = 0; r < N; ++r)
        for (std::size_t s = 0; s <= r; ++s) {
          if (p * (p + 1) / 2 + q < r * (r + 1) / 2 + s) continue;
          const Eigen::Vector3d& A = shells[p].center;
          const Eigen::Vector3d& B = shells[q].center;
          const Eigen::Vector3d& C = shells[r].center;
          const Eigen::Vector3d& D = shells[s].center;
          const double rab2 = (A - B).squaredNorm();
          const double rcd2 = (C - D).squaredNorm();
          double value = 0.0;
          for (const auto& pa : shells[p].prims)
            for (const auto& pb : shells[q].prims)
              for (const auto& pc : shells[r].prims)
                for (const auto& pd : shells[s].prims) {
                  const double a = pa.alpha, b = pb.alpha;
                  const double c = pc.alpha, d = pd.alpha;
                  const double p1 = a + b, q1 = c + d;
                  const Eigen::Vector3d P = (a * A + b * B) / p1;
                  const Eigen::Vector3d Q = (c * C + d * D) / q1;
                  const double pref = 2.0 * std::pow(kPi, 2.5) /
                                      (p1 * q1 * std::sqrt(p1 + q1));
                  const double expo =
                      std::exp(-a * b / p1 * rab2 - c * d / q1 * rcd2);
                  value += pa.weight * pb.weight * pc.weight * pd.weight *
                           pref * expo *
                           boys_f0(p1 * q1 / (p1 + q1) * (P - Q).squaredNorm());
                }
          for (auto [i, j, k, l] :
               {std::array{p, q, r, s}, std::array{q, p, r, s},
                std::array{p, q, s, r}, std::array{q, p, s, r},
                std::array{r, s, p, q}, std::array{s, r, p, q},
                std::array{r, s, q, p}, std::array{s, r, q, p}})
            out.eri[at(i, j, k, l)] = value;
        }

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      out.e_nuc += 1.0 / (shells[i].center - shells[j].center).norm();
  return out;
}

Eigen::MatrixXd lowdin_orthogonalizer(const Eigen::MatrixXd& overlap) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(overlap);
  if (eig.eigenvalues().minCoeff() < 1e-8)
    throw std::invalid_argument("overlap matrix is near singular");
  return eig.eigenvectors() *
         eig.eigenvalues().cwiseInverse().cwiseSqrt().asDiagonal() *
         eig.eigenvectors().transpose();
}

namespace {

Eigen::MatrixXd coulomb_exchange(const AtomicIntegrals& ao,
                                 const Eigen::MatrixXd& density) {
  // Fock two-electron part for a closed-shell density P = 2 C_occ C_occ^T.
  const auto n = static_cast<std::size_t>(ao.overlap.rows());
  Eigen::MatrixXd G = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      double acc = 0.0;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) {
          const double J = ao.eri[((p * n + q) * n + r) * n + s];
          const double K = ao.eri[((p * n + r) * n + q) * n + s];
          acc += density(r, s) * (J - 0.5 * K);
        }
      G(p, q) = acc;
    }
  return G;
}

}  // namespace

Eigen::MatrixXd rhf_orbitals(const AtomicIntegrals& ao, int n_elec) {
  if (n_elec % 2 != 0)
    throw std::invalid_argument("restricted Hartree-Fock needs even NELEC");
  const int n = static_cast<int>(ao.overlap.rows());
  const int n_occ = n_elec / 2;
  const Eigen::MatrixXd X = lowdin_orthogonalizer(ao.overlap);

  auto diagonalize = [&](const Eigen::MatrixXd& fock) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(
        X.transpose() * fock * X);
    return Eigen::MatrixXd(X * eig.eigenvectors());
  };
  auto density_of = [&](const Eigen::MatrixXd& C) {
    const Eigen::MatrixXd occ = C.leftCols(n_occ);
    return Eigen::MatrixXd(2.0 * occ * occ.transpose());
  };

  Eigen::MatrixXd C = diagonalize(ao.core);
  Eigen::MatrixXd P = density_of(C);
  std::vector<Eigen::MatrixXd> focks, errors;
  double energy = 0.0;
  for (int iter = 0; iter < 200; ++iter) {
    Eigen::MatrixXd F = ao.core + coulomb_exchange(ao, P);
    const double e_new = 0.5 * (P.cwiseProduct(ao.core + F)).sum();
    Eigen::MatrixXd err = F * P * ao.overlap - ao.overlap * P * F;
    focks.push_back(F);
    errors.push_back(err);
    if (focks.size() > 8) {
      focks.erase(focks.begin());
      errors.erase(errors.begin());
    }
    if (iter > 0 && std::abs(e_new - energy) < 1e-12 &&
        err.cwiseAbs().maxCoeff() < 1e-9)
      return C;
    energy = e_new;

    // DIIS extrapolation.
    const int m = static_cast<int>(focks.size());
    Eigen::MatrixXd B = Eigen::MatrixXd::Constant(m + 1, m + 1, -1.0);
    B(m, m) = 0.0;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) B(i, j) = errors[i].cwiseProduct(errors[j]).sum();
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m + 1);
    rhs(m) = -1.0;
    const Eigen::VectorXd w = B.completeOrthogonalDecomposition().solve(rhs);
    Eigen::MatrixXd F_diis = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < m; ++i) F_diis += w(i) * focks[i];
    C = diagonalize(F_diis);
    P = density_of(C);
  }
  throw std::runtime_error("RHF did not converge in 200 iterations");
}

IntegralTensors transform_atomic(const AtomicIntegrals& ao,
                                 const Eigen::MatrixXd& coefficients,
                                 int n_elec, std::string basis_tag) {
  const int n = static_cast<int>(coefficients.cols());
  const auto N = static_cast<std::size_t>(n);
  const auto nao = static_cast<std::size_t>(coefficients.rows());
  IntegralTensors out(n, std::move(basis_tag));
  out.h = coefficients.transpose() * ao.core * coefficients;
  out.h = 0.5 * (out.h + out.h.transpose()).eval();
  out.e_nuc = ao.e_nuc;
  out.n_elec = n_elec;

  if (nao != N)
    throw std::invalid_argument("coefficient matrix must be square");
  // Quarter transforms, one chemist index at a time.
  std::vector<double> cur = ao.eri, next(N * N * N * N);
  const std::size_t strides[4] = {N * N * N, N * N, N, 1};
  for (int which = 0; which < 4; ++which) {
    const std::size_t stride = strides[which];
    for (std::size_t flat = 0; flat < cur.size(); ++flat) {
      const std::size_t i = (flat / stride) % N;
      const std::size_t base = flat - i * stride;
      double acc = 0.0;
      for (std::size_t a = 0; a < N; ++a)
        acc += coefficients(a, i) * cur[base + a * stride];
      next[flat] = acc;
    }
    cur.swap(next);
  }
  out.g = chemist_to_internal(cur, n);
  return out;
}

IntegralTensors compute_minimal_basis_integrals(const Geometry& geometry,
                                                OrbitalMode mode) {
  const AtomicIntegrals ao = hydrogen_sto3g(geometry);
  const int n_elec = static_cast<int>(geometry.size());
  if (mode == OrbitalMode::lowdin)
    return transform_atomic(ao, lowdin_orthogonalizer(ao.overlap), n_elec,
                            "sto-3g/lowdin");
  return transform_atomic(ao, rhf_orbitals(ao, n_elec), n_elec, "sto-3g/rhf");
}

}  // namespace hcbmeas::chem
