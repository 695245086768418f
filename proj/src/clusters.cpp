#include "etalepi/clusters.hpp"

#include <algorithm>
#include <numeric>

#include "etalepi/errors.hpp"

namespace etalepi {

ClusterForest compute_clusters(const IntersectionMatrix& m) {
  ClusterForest forest;
  forest.d = m.size();
  const int d = m.size();
  for (int n = 1; n <= m.max_entry(); ++n) {
    // Maximal subsets with pairwise e >= n are the classes of an
    // equivalence relation, because m is ultrametric.
    std::vector<int> label(static_cast<std::size_t>(d), -1);
    for (int i = 0; i < d; ++i) {
      if (label[static_cast<std::size_t>(i)] >= 0) continue;
      label[static_cast<std::size_t>(i)] = i;
      std::vector<int> members{i};
      for (int j = i + 1; j < d; ++j) {
        if (label[static_cast<std::size_t>(j)] < 0 && m(i, j) >= n) {
          label[static_cast<std::size_t>(j)] = i;
          members.push_back(j);
        }
      }
      if (members.size() < 2) continue;
      if (members.back() - members.front() + 1 != static_cast<int>(members.size())) {
        throw Error(ErrorCode::NotCanonicallyOrdered,
                    "cluster at depth " + std::to_string(n) + " containing point " +
                        std::to_string(i + 1) + " is not an interval");
      }
      forest.clusters.push_back({members.front() + 1, static_cast<int>(members.size()), n});
    }
  }
  std::sort(forest.clusters.begin(), forest.clusters.end(),
            [](const Cluster& a, const Cluster& b) {
              return std::tie(a.depth, a.first) < std::tie(b.depth, b.first);
            });
  return forest;
}

ClusterTree nesting_tree(const ClusterForest& forest) {
  const auto& cs = forest.clusters;
  ClusterTree tree;
  tree.parent.assign(cs.size(), -1);
  tree.children.resize(cs.size());
  for (std::size_t k = 0; k < cs.size(); ++k) {
    // Ancestors are the clusters containing this interval at smaller depth;
    // they form a chain, so the parent is the deepest of them.
    int best = -1;
    for (std::size_t a = 0; a < cs.size(); ++a) {
      if (a == k || !cs[a].contains(cs[k]) || cs[a].depth >= cs[k].depth) continue;
      if (best < 0 || cs[a].depth > cs[static_cast<std::size_t>(best)].depth) best = static_cast<int>(a);
    }
    tree.parent[k] = best;
    if (best < 0) tree.roots.push_back(static_cast<int>(k));
    else tree.children[static_cast<std::size_t>(best)].push_back(static_cast<int>(k));
  }
  auto by_position = [&](int a, int b) {
    return std::tie(cs[static_cast<std::size_t>(a)].first, cs[static_cast<std::size_t>(a)].depth) <
           std::tie(cs[static_cast<std::size_t>(b)].first, cs[static_cast<std::size_t>(b)].depth);
  };
  std::sort(tree.roots.begin(), tree.roots.end(), by_position);
  for (auto& c : tree.children) std::sort(c.begin(), c.end(), by_position);
  return tree;
}

}  // namespace etalepi
