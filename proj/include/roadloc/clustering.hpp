#pragma once

#include "roadloc/geo.hpp"

#include <Eigen/Core>

#include <functional>
#include <vector>

namespace roadloc {

/// One agglomeration step. Leaves are ids 0..n-1; merge t creates id n+t.
struct LinkageMerge {
  int left_id = 0;
  int right_id = 0;
  int new_id = 0;
  double distance = 0.0;
};

/// Exact average-linkage agglomerative clustering (nearest-neighbor chain,
/// Lance-Williams updates). `distances` must be symmetric with a zero
/// diagonal. Returns the n-1 merges of the full dendrogram.
std::vector<LinkageMerge> average_linkage(Eigen::MatrixXd distances);

/// Flat clusters from a dendrogram: applies every merge with
/// distance <= merge_threshold. Clusters are ordered by smallest member and
/// members are sorted.
std::vector<std::vector<int>> cut_at_threshold(const std::vector<LinkageMerge>& merges, int n,
                                               double merge_threshold);

/// Stage-1 clustering: average linkage cut at merge_threshold, keeping only
/// clusters with at least min_support members.
std::vector<std::vector<int>> cluster_features(int n,
                                               const std::function<double(int, int)>& distance,
                                               double merge_threshold, int min_support);

/// Density-based spatial grouping with radius eps_m and min_pts support
/// (neighborhood counts include the point itself). Returns the density-
/// connected groups, ordered by smallest member; noise points are dropped.
std::vector<std::vector<int>> dbscan_geo(const std::vector<GeoPoint>& points, double eps_m,
                                         int min_pts);

}  // namespace roadloc
