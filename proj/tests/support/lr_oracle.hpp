#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "fano10/schubert.hpp"

namespace fano10::oracle {

// Independent oracle: Littlewood-Richardson coefficients counted by brute-force
// enumeration of LR tableaux of shape nu/lambda and content mu.
inline long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  const std::size_t rows = nu.size();
  for (std::size_t i = 0; i < rows; ++i) {
    if (lambda[i] > nu[i]) return 0;
  }
  int content_rows = 0;
  for (int m : mu) content_rows += m > 0 ? 1 : 0;
  std::vector<std::pair<std::size_t, int>> cells;
  for (std::size_t r = 0; r < rows; ++r) {
    for (int c = lambda[r]; c < nu[r]; ++c) cells.emplace_back(r, c);
  }
  int total_mu = 0;
  for (int m : mu) total_mu += m;
  if (static_cast<int>(cells.size()) != total_mu) return 0;
  std::map<std::pair<std::size_t, int>, int> fill;
  std::vector<int> used(mu.size(), 0);
  long count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == cells.size()) {
      // Reverse reading word: rows top to bottom, right to left.
      std::vector<int> seen(mu.size(), 0);
      for (std::size_t r = 0; r < rows; ++r) {
        for (int c = nu[r] - 1; c >= lambda[r]; --c) {
          const int v = fill[{r, c}];
          ++seen[v];
          if (v > 0 && seen[v] > seen[v - 1]) return;
        }
      }
      ++count;
      return;
    }
    const auto [r, c] = cells[idx];
    for (int v = 0; v < content_rows; ++v) {
      if (used[v] >= mu[v]) continue;
      if (c > lambda[r] && fill[{r, c - 1}] > v) continue;
      if (r > 0 && c >= lambda[r - 1] && c < nu[r - 1] && fill[{r - 1, c}] >= v) continue;
      fill[{r, c}] = v;
      ++used[v];
      rec(idx + 1);
      --used[v];
    }
  };
  rec(0);
  return count;
}

inline SchubertClass lr_product(const GrassmannRingSpec& spec, const Partition& a, const Partition& b) {
  SchubertClass out(spec);
  for (const auto& nu : spec.partitions()) {
    const long c = lr_coefficient(a, b, nu);
    if (c != 0) out.add(nu, c);
  }
  return out;
}

}  // namespace fano10::oracle
