// Copyright 2026 The hcbmeas Authors
// SPDX-License-Identifier: Apache-2.0

#include "hcbmeas/grouping/coloring.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace hcbmeas::grouping {

namespace {

using Terms = std::vector<std::pair<pauli::PauliString, double>>;

// Dense bitset rows of the non-commutation graph.
class ConflictGraph {
 public:
  ConflictGraph(const Terms& terms, pauli::Commutation mode)
      : n_(terms.size()), words_((n_ + 63) / 64), rows_(n_ * words_, 0) {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if (!pauli::commutes(terms[i].first, terms[j].first, mode)) {
          set(i, j);
          set(j, i);
        }
  }

  std::size_t size() const { return n_; }
  bool adjacent(std::size_t i, std::size_t j) const {
    return (rows_[i * words_ + j / 64] >> (j % 64)) & 1ULL;
  }
  std::size_t degree(std::size_t i) const {
    std::size_t d = 0;
    for (std::size_t w = 0; w < words_; ++w) d += std::popcount(rows_[i * words_ + w]);
    return d;
  }
  /// |N(i) & mask|
  std::size_t degree_in(std::size_t i, const std::vector<std::uint64_t>& mask) const {
    std::size_t d = 0;
    for (std::size_t w = 0; w < words_; ++w)
      d += std::popcount(rows_[i * words_ + w] & mask[w]);
    return d;
  }
  const std::uint64_t* row(std::size_t i) const { return &rows_[i * words_]; }
  std::size_t words() const { return words_; }

 private:
  void set(std::size_t i, std::size_t j) {
    rows_[i * words_ + j / 64] |= 1ULL << (j % 64);
  }
  std::size_t n_, words_;
  std::vector<std::uint64_t> rows_;
};

Terms canonical_terms(const pauli::PauliSum& sum) {
  if (sum.empty()) throw std::invalid_argument("cannot group an empty sum");
  return Terms(sum.begin(), sum.end());
}

GroupingResult from_colors(const Terms& terms, const std::vector<int>& color,
                           const std::vector<std::size_t>& visit,
                           std::string method, pauli::Commutation mode) {
  const int n_colors = *std::max_element(color.begin(), color.end()) + 1;
  GroupingResult r{std::vector<CommutingGroup>(n_colors), std::move(method), mode};
  for (std::size_t v : visit) r.groups[color[v]].members.push_back(terms[v]);
  for (auto& g : r.groups) g.kind = classify(g);
  check_grouping(r);
  return r;
}

}  // namespace

GroupingResult lf_grouping(const pauli::PauliSum& sum, pauli::Commutation mode) {
  const Terms terms = canonical_terms(sum);
  const ConflictGraph graph(terms, mode);
  const std::size_t n = terms.size();
  std::vector<std::size_t> degree(n), order(n);
  for (std::size_t i = 0; i < n; ++i) degree[i] = graph.degree(i);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return degree[a] > degree[b];
  });
  std::vector<int> color(n, -1);
  for (std::size_t v : order) {
    std::vector<bool> used;
    for (std::size_t u = 0; u < n; ++u)
      if (color[u] >= 0 && graph.adjacent(v, u)) {
        if (used.size() <= static_cast<std::size_t>(color[u]))
          used.resize(color[u] + 1, false);
        used[color[u]] = true;
      }
    int c = 0;
    while (c < static_cast<int>(used.size()) && used[c]) ++c;
    color[v] = c;
  }
  return from_colors(terms, color, order, "LF", mode);
}

GroupingResult rlf_grouping(const pauli::PauliSum& sum, pauli::Commutation mode) {
  const Terms terms = canonical_terms(sum);
  const ConflictGraph graph(terms, mode);
  const std::size_t n = terms.size(), words = graph.words();
  std::vector<std::uint64_t> uncolored(words, 0);
  for (std::size_t i = 0; i < n; ++i) uncolored[i / 64] |= 1ULL << (i % 64);
  auto test = [](const std::vector<std::uint64_t>& m, std::size_t i) {
    return (m[i / 64] >> (i % 64)) & 1ULL;
  };
  auto clear = [](std::vector<std::uint64_t>& m, std::size_t i) {
    m[i / 64] &= ~(1ULL << (i % 64));
  };

  std::vector<int> color(n, -1);
  std::vector<std::size_t> visit;
  int current = 0;
  std::size_t remaining = n;
  while (remaining > 0) {
    // Seed: uncolored vertex with most uncolored neighbours.
    std::size_t seed = n, best = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!test(uncolored, i)) continue;
      const std::size_t d = graph.degree_in(i, uncolored);
      if (seed == n || d > best) {
        seed = i;
        best = d;
      }
    }
    std::vector<std::uint64_t> cand(words), excluded(words);
    const std::uint64_t* nb = graph.row(seed);
    for (std::size_t w = 0; w < words; ++w) {
      cand[w] = uncolored[w] & ~nb[w];
      excluded[w] = uncolored[w] & nb[w];
    }
    clear(cand, seed);
    std::size_t v = seed;
    for (;;) {
      color[v] = current;
      visit.push_back(v);
      clear(uncolored, v);
      --remaining;
      if (v != seed) {
        const std::uint64_t* r = graph.row(v);
        for (std::size_t w = 0; w < words; ++w) {
          excluded[w] |= cand[w] & r[w];
          cand[w] &= ~r[w];
        }
        clear(cand, v);
      }
      std::size_t next = n, best_w = 0, best_u = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (!test(cand, i)) continue;
        const std::size_t dw = graph.degree_in(i, excluded);
        const std::size_t du = graph.degree_in(i, cand);
        if (next == n || dw > best_w || (dw == best_w && du < best_u)) {
          next = i;
          best_w = dw;
          best_u = du;
        }
      }
      if (next == n) break;
      v = next;
    }
    ++current;
  }
  return from_colors(terms, color, visit, "RLF", mode);
}

GroupingResult si_grouping(const pauli::PauliSum& sum, pauli::Commutation mode) {
  Terms terms = canonical_terms(sum);
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    return std::abs(a.second) > std::abs(b.second);
  });
  GroupingResult r{{}, "SI", mode};
  for (const auto& term : terms) {
    bool placed = false;
    for (auto& g : r.groups) {
      const bool fits = std::all_of(g.members.begin(), g.members.end(),
                                    [&](const auto& m) {
                                      return pauli::commutes(m.first, term.first, mode);
                                    });
      if (fits) {
        g.members.push_back(term);
        placed = true;
        break;
      }
    }
    if (!placed) r.groups.push_back({{term}, GroupKind::general, std::nullopt});
  }
  for (auto& g : r.groups) g.kind = classify(g);
  return r;
}

}  // namespace hcbmeas::grouping
