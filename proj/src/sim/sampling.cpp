// Copyright 2026 The hcbmeas Authors
// SPDX-License-Identifier: Apache-2.0

#include "hcbmeas/sim/sampling.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <stdexcept>

#include "hcbmeas/grouping/clifford.hpp"

namespace hcbmeas::sim {

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  // splitmix64 finalizer over the combined words
  std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

GroupSampler::GroupSampler(const Statevector& state,
                           const grouping::CommutingGroup& group,
                           const Circuit& diag) {
  if (!grouping::certify(group, diag))
    throw std::invalid_argument("diagonalizer is not certified for the group");
  const Statevector rotated = apply(diag, state);
  probabilities_.resize(rotated.dim());
  for (std::size_t b = 0; b < rotated.dim(); ++b)
    probabilities_[b] = std::norm(rotated[b]);
  distribution_ = std::discrete_distribution<std::uint64_t>(
      probabilities_.begin(), probabilities_.end());
  for (const auto& [p, c] : group.members) {
    const auto image = grouping::conjugate(p, diag);
    coefficients_.push_back(c);
    z_masks_.push_back(image.p.z);
    signs_.push_back(image.negative ? -1 : 1);
  }
}

GroupSample GroupSampler::evaluate(
    const std::vector<std::pair<std::uint64_t, double>>& outcomes) const {
  GroupSample s;
  s.member_estimates.assign(coefficients_.size(), 0.0);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    double v = 0.0;
    for (const auto& [b, w] : outcomes)
      v += (std::popcount(b & z_masks_[i]) & 1) ? -w : w;
    s.member_estimates[i] = signs_[i] * v;
    s.energy += coefficients_[i] * s.member_estimates[i];
  }
  return s;
}

GroupSample GroupSampler::sample(std::size_t shots, std::uint64_t seed) const {
  if (shots == 0) return exact();
  std::mt19937_64 rng(seed);
  std::map<std::uint64_t, std::size_t> counts;
  for (std::size_t s = 0; s < shots; ++s) ++counts[distribution_(rng)];
  std::vector<std::pair<std::uint64_t, double>> outcomes;
  outcomes.reserve(counts.size());
  for (const auto& [b, n] : counts)
    outcomes.emplace_back(b, static_cast<double>(n) / static_cast<double>(shots));
  return evaluate(outcomes);
}

GroupSample GroupSampler::exact() const {
  std::vector<std::pair<std::uint64_t, double>> outcomes;
  for (std::size_t b = 0; b < probabilities_.size(); ++b)
    if (probabilities_[b] > 0.0) outcomes.emplace_back(b, probabilities_[b]);
  return evaluate(outcomes);
}

GroupSample sample_group(const Statevector& state,
                         const grouping::CommutingGroup& group,
                         const Circuit& diag, std::size_t shots,
                         std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("shots must be at least 1");
  return GroupSampler(state, group, diag).sample(shots, seed);
}

std::size_t shots_from_estimate(double m_group) {
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(m_group)));
}

ExperimentResult finite_sample_experiment(const std::vector<MeasurementJob>& jobs,
                                          int repetitions, std::uint64_t seed) {
  if (repetitions < 1) throw std::invalid_argument("need at least one repetition");
  std::vector<GroupSampler> samplers;
  ExperimentResult r;
  for (const auto& job : jobs) {
    if (!job.group || !job.state) throw std::invalid_argument("incomplete job");
    const Circuit diag = job.group->diagonalizer
                             ? *job.group->diagonalizer
                             : grouping::diagonalizer(*job.group);
    samplers.emplace_back(*job.state, *job.group, diag);
    r.reference += samplers.back().exact().energy;
    r.shots_per_repetition += job.shots;
  }
  double sum = 0.0, sum_abs = 0.0;
  for (int rep = 0; rep < repetitions; ++rep) {
    const std::uint64_t rep_seed = derive_seed(seed, static_cast<std::uint64_t>(rep));
    double estimate = 0.0;
    for (std::size_t j = 0; j < jobs.size(); ++j)
      estimate += samplers[j].sample(jobs[j].shots, derive_seed(rep_seed, j)).energy;
    r.errors.push_back(estimate - r.reference);
    sum += r.errors.back();
    sum_abs += std::abs(r.errors.back());
  }
  const double n = repetitions;
  r.mean_error = sum / n;
  r.mean_abs_error = sum_abs / n;
  r.abs_mean_error = std::abs(r.mean_error);
  double var = 0.0;
  for (double e : r.errors) var += (e - r.mean_error) * (e - r.mean_error);
  r.stddev = repetitions > 1 ? std::sqrt(var / (n - 1)) : 0.0;
  return r;
}

std::string experiment_csv(const ExperimentResult& result) {
  std::string out = "repetition,error\n";
  char buf[64];
  for (std::size_t i = 0; i < result.errors.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%zu,%.12e\n", i, result.errors[i]);
    out += buf;
  }
  return out;
}

}  // namespace hcbmeas::sim
