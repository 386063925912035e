// Copyright 2026 The hcbmeas Authors
// SPDX-License-Identifier: Apache-2.0

#include "hcbmeas/sim/ansatz.hpp"

#include <gsl/gsl_multimin.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "hcbmeas/sim/rdm.hpp"

namespace hcbmeas::sim {

std::size_t PairAnsatz::parameter_count() const {
  std::size_t n = graphs.size();
  for (const auto& g : graphs) n += g.edges.size();
  return n;
}

int PairAnsatz::n_electrons() const {
  return graphs.empty() ? 0 : 2 * static_cast<int>(graphs.front().edges.size());
}

void validate(const PairAnsatz& ansatz) {
  if (ansatz.graphs.empty()) throw std::invalid_argument("ansatz needs a graph");
  for (const auto& g : ansatz.graphs) chem::validate(g, ansatz.n_orb);
  if (ansatz.graphs.front().edges.empty())
    throw std::invalid_argument("first ansatz graph has no edges");
}

Circuit build_scenario2_ansatz(const PairAnsatz& ansatz,
                               const std::vector<double>& params) {
  validate(ansatz);
  if (params.size() != ansatz.parameter_count())
    throw std::invalid_argument("ansatz expects " +
                                std::to_string(ansatz.parameter_count()) +
                                " parameters, got " + std::to_string(params.size()));
  const int N = ansatz.n_orb;
  Circuit c(2 * N, ansatz.ordering);
  const std::size_t K = ansatz.graphs.size();
  std::size_t uc = K;
  auto rotate = [&](const chem::PairingGraph& g, double phi) {
    for (const auto& [p, q] : g.edges) c.ur(p, q, phi);
  };

  const auto& g1 = ansatz.graphs.front();
  for (const auto& [p, q] : g1.edges) {
    c.x(pauli::spin_orbital(p, 0, N, ansatz.ordering));
    c.x(pauli::spin_orbital(p, 1, N, ansatz.ordering));
    c.uc(p, q, params[uc++]);
  }
  rotate(g1, -params[0]);
  for (std::size_t k = 1; k < K; ++k) {
    const auto& g = ansatz.graphs[k];
    rotate(g, params[k]);
    for (const auto& [p, q] : g.edges) c.uc(p, q, params[uc++]);
    rotate(g, -params[k]);
  }
  return c;
}

Statevector ansatz_state(const PairAnsatz& ansatz,
                         const std::vector<double>& params) {
  return apply(build_scenario2_ansatz(ansatz, params),
               Statevector(2 * ansatz.n_orb));
}

namespace {

struct Objective {
  const chem::IntegralTensors* tensors;
  const PairAnsatz* ansatz;
  int evaluations = 0;
};

double objective(const gsl_vector* x, void* data) {
  auto* obj = static_cast<Objective*>(data);
  std::vector<double> p(x->size);
  for (std::size_t i = 0; i < x->size; ++i) p[i] = gsl_vector_get(x, i);
  ++obj->evaluations;
  return tensor_expectation(*obj->tensors, ansatz_state(*obj->ansatz, p),
                            obj->ansatz->ordering);
}

AnsatzFit simplex(Objective& obj, const std::vector<double>& start,
                  const AnsatzOptions& options) {
  const std::size_t n = start.size();
  gsl_multimin_function f{&objective, n, &obj};
  gsl_vector* x = gsl_vector_alloc(n);
  gsl_vector* step = gsl_vector_alloc(n);
  for (std::size_t i = 0; i < n; ++i) gsl_vector_set(x, i, start[i]);
  gsl_vector_set_all(step, options.initial_step);
  gsl_multimin_fminimizer* s =
      gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, n);
  gsl_multimin_fminimizer_set(s, &f, x, step);

  AnsatzFit fit;
  for (int it = 0; it < options.max_iterations; ++it) {
    if (gsl_multimin_fminimizer_iterate(s) != GSL_SUCCESS) break;
    if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(s),
                               options.size_tolerance) == GSL_SUCCESS) {
      fit.converged = true;
      break;
    }
  }
  fit.params.resize(n);
  for (std::size_t i = 0; i < n; ++i) fit.params[i] = gsl_vector_get(s->x, i);
  fit.energy = s->fval;
  gsl_multimin_fminimizer_free(s);
  gsl_vector_free(step);
  gsl_vector_free(x);
  return fit;
}

}  // namespace

AnsatzFit optimize_ansatz(const chem::IntegralTensors& tensors,
                          const PairAnsatz& ansatz, const AnsatzOptions& options) {
  validate(ansatz);
  if (tensors.n_orb != ansatz.n_orb)
    throw std::invalid_argument("ansatz and tensors disagree on orbital count");
  Objective obj{&tensors, &ansatz};
  const std::size_t K = ansatz.graphs.size(), n = ansatz.parameter_count();

  std::vector<std::vector<double>> starts;
  const double half_pi = std::numbers::pi / 2;
  for (double phi : {0.0, half_pi, -half_pi})
    for (double f : {0.5, -0.5}) {
      std::vector<double> p(n, f);
      for (std::size_t k = 0; k < K; ++k) p[k] = k == 0 ? phi : 0.0;
      starts.push_back(std::move(p));
      if (!options.multi_start) break;
    }
  if (!options.multi_start) starts.resize(1);
  if (!options.initial.empty()) {
    if (options.initial.size() != n)
      throw std::invalid_argument("initial parameters have the wrong length");
    starts = {options.initial};
  }

  AnsatzFit best;
  best.energy = std::numeric_limits<double>::infinity();
  for (const auto& start : starts) {
    AnsatzFit fit = simplex(obj, start, options);
    // One restart from the optimum guards against a collapsed simplex.
    fit = simplex(obj, fit.params, options);
    if (fit.energy < best.energy) best = fit;
  }
  best.evaluations = obj.evaluations;
  return best;
}

}  // namespace hcbmeas::sim
