#pragma once

// O(n^3)-and-worse reference agglomerator: recomputes every cluster-pair
// average distance from the raw point matrix at each step. Used to verify
// the Lance-Williams implementation.

#include <Eigen/Core>

#include <algorithm>
#include <limits>
#include <vector>

namespace roadloc::testing {

inline std::vector<std::vector<int>> brute_force_average_cut(const Eigen::MatrixXd& d,
                                                             double merge_threshold,
                                                             int min_support = 0) {
  const int n = static_cast<int>(d.rows());
  std::vector<std::vector<int>> clusters;
  for (int i = 0; i < n; ++i) clusters.push_back({i});

  while (clusters.size() > 1) {
    double best = std::numeric_limits<double>::infinity();
    size_t bi = 0, bj = 0;
    for (size_t i = 0; i < clusters.size(); ++i) {
      for (size_t j = i + 1; j < clusters.size(); ++j) {
        double sum = 0.0;
        for (int a : clusters[i])
          for (int b : clusters[j]) sum += d(a, b);
        const double avg = sum / (clusters[i].size() * clusters[j].size());
        if (avg < best) {
          best = avg;
          bi = i;
          bj = j;
        }
      }
    }
    if (best > merge_threshold) break;
    clusters[bi].insert(clusters[bi].end(), clusters[bj].begin(), clusters[bj].end());
    std::sort(clusters[bi].begin(), clusters[bi].end());
    clusters.erase(clusters.begin() + bj);
  }

  std::erase_if(clusters,
                [&](const auto& c) { return static_cast<int>(c.size()) < min_support; });
  for (auto& c : clusters) std::sort(c.begin(), c.end());
  std::sort(clusters.begin(), clusters.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return clusters;
}

}  // namespace roadloc::testing
