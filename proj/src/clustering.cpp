#include "roadloc/clustering.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace roadloc {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<LinkageMerge> average_linkage(Eigen::MatrixXd d) {
  const int n = static_cast<int>(d.rows());
  if (d.cols() != n) throw std::invalid_argument("average_linkage: matrix not square");
  std::vector<LinkageMerge> merges;
  if (n <= 1) return merges;
  merges.reserve(n - 1);

  std::vector<bool> active(n, true);
  std::vector<double> size(n, 1.0);
  std::vector<int> cluster_id(n);
  std::iota(cluster_id.begin(), cluster_id.end(), 0);
  int next_id = n;
  int remaining = n;

  std::vector<int> chain;
  chain.reserve(n);

  auto nearest_active = [&](int slot) {
    int best = -1;
    double best_d = std::numeric_limits<double>::infinity();
    for (int k = 0; k < n; ++k) {
      if (!active[k] || k == slot) continue;
      if (d(slot, k) < best_d) {
        best_d = d(slot, k);
        best = k;
      }
    }
    return best;
  };

  while (remaining > 1) {
    if (chain.size() < 2) {
      chain.clear();
      for (int k = 0; k < n; ++k) {
        if (active[k]) {
          chain.push_back(k);
          break;
        }
      }
    }
    // Extend the chain until a reciprocal nearest-neighbor pair appears.
    while (true) {
      const int top = chain.back();
      const int nn = nearest_active(top);
      if (chain.size() >= 2 && nn == chain[chain.size() - 2]) break;
      chain.push_back(nn);
    }
    const int b_slot = chain.back();
    const int a_slot = chain[chain.size() - 2];
    chain.pop_back();
    chain.pop_back();

    const int lo = std::min(a_slot, b_slot);
    const int hi = std::max(a_slot, b_slot);
    merges.push_back({cluster_id[lo], cluster_id[hi], next_id, d(lo, hi)});

    for (int k = 0; k < n; ++k) {
      if (!active[k] || k == lo || k == hi) continue;
      const double merged =
          (size[lo] * d(lo, k) + size[hi] * d(hi, k)) / (size[lo] + size[hi]);
      d(lo, k) = merged;
      d(k, lo) = merged;
    }
    size[lo] += size[hi];
    cluster_id[lo] = next_id++;
    active[hi] = false;
    --remaining;
  }
  return merges;
}

std::vector<std::vector<int>> cut_at_threshold(const std::vector<LinkageMerge>& merges, int n,
                                               double merge_threshold) {
  UnionFind uf(n + static_cast<int>(merges.size()));
  for (const auto& m : merges) {
    if (m.distance <= merge_threshold) {
      uf.unite(m.left_id, m.new_id);
      uf.unite(m.right_id, m.new_id);
    }
  }
  std::vector<std::vector<int>> by_root(n + merges.size());
  for (int i = 0; i < n; ++i) by_root[uf.find(i)].push_back(i);

  std::vector<std::vector<int>> clusters;
  for (auto& members : by_root) {
    if (!members.empty()) clusters.push_back(std::move(members));
  }
  std::sort(clusters.begin(), clusters.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return clusters;
}

std::vector<std::vector<int>> cluster_features(int n,
                                               const std::function<double(int, int)>& distance,
                                               double merge_threshold, int min_support) {
  if (n == 0) return {};
  Eigen::MatrixXd d(n, n);
  for (int i = 0; i < n; ++i) {
    d(i, i) = 0.0;
    for (int j = i + 1; j < n; ++j) {
      const double dist = distance(i, j);
      d(i, j) = dist;
      d(j, i) = dist;
    }
  }
  auto clusters = cut_at_threshold(average_linkage(std::move(d)), n, merge_threshold);
  std::erase_if(clusters, [&](const auto& c) { return static_cast<int>(c.size()) < min_support; });
  return clusters;
}

std::vector<std::vector<int>> dbscan_geo(const std::vector<GeoPoint>& points, double eps_m,
                                         int min_pts) {
  const int n = static_cast<int>(points.size());
  std::vector<std::vector<int>> neighbors(n);
  for (int i = 0; i < n; ++i) {
    neighbors[i].push_back(i);
    for (int j = i + 1; j < n; ++j) {
      if (geo_distance(points[i], points[j]) <= eps_m) {
        neighbors[i].push_back(j);
        neighbors[j].push_back(i);
      }
    }
  }
  std::vector<bool> core(n, false);
  for (int i = 0; i < n; ++i) core[i] = static_cast<int>(neighbors[i].size()) >= min_pts;

  UnionFind uf(n);
  for (int i = 0; i < n; ++i) {
    if (!core[i]) continue;
    for (int j : neighbors[i]) {
      if (core[j]) uf.unite(i, j);
    }
  }
  // Border points attach to their first core neighbor.
  std::vector<int> attach(n, -1);
  for (int i = 0; i < n; ++i) {
    if (core[i]) continue;
    for (int j : neighbors[i]) {
      if (core[j]) {
        attach[i] = j;
        break;
      }
    }
  }

  std::vector<std::vector<int>> by_root(n);
  for (int i = 0; i < n; ++i) {
    if (core[i])
      by_root[uf.find(i)].push_back(i);
    else if (attach[i] >= 0)
      by_root[uf.find(attach[i])].push_back(i);
  }
  std::vector<std::vector<int>> groups;
  for (auto& g : by_root) {
    if (!g.empty()) {
      std::sort(g.begin(), g.end());
      groups.push_back(std::move(g));
    }
  }
  std::sort(groups.begin(), groups.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return groups;
}

}  // namespace roadloc
