#pragma once

#include <vector>

#include "etalepi/intersection.hpp"

namespace etalepi {

/// A maximal set of branch points agreeing to depth `depth`, stored as the
/// interval {first, ..., first + length - 1} of 1-based point indices.
struct Cluster {
  int first = 1;
  int length = 2;
  int depth = 1;

  int last() const { return first + length - 1; }
  bool contains(int i) const { return first <= i && i <= last(); }
  bool contains(const Cluster& other) const { return first <= other.first && other.last() <= last(); }

  friend auto operator<=>(const Cluster&, const Cluster&) = default;
};

struct ClusterForest {
  int d = 0;
  /// Sorted by (depth, first).
  std::vector<Cluster> clusters;

  bool empty() const { return clusters.empty(); }
};

/// Throws Error(NotCanonicallyOrdered) if some cluster is not an interval.
ClusterForest compute_clusters(const IntersectionMatrix& m);

/// Containment tree over a forest; indices refer to forest.clusters.
struct ClusterTree {
  std::vector<int> parent;  // -1 for roots
  std::vector<std::vector<int>> children;
  std::vector<int> roots;
};

ClusterTree nesting_tree(const ClusterForest& forest);

}  // namespace etalepi
