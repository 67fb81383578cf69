#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace chroma {

/// Vertex count plus a deduplicated, lexicographically sorted set of
/// nonempty hyperedges (each a sorted index set).
class Hypergraph {
 public:
  Hypergraph() = default;
  /// Sorts each edge, drops empties, deduplicates, validates index range.
  static Hypergraph from_edges(int n, std::vector<std::vector<int>> edges);

  int n() const { return n_; }
  const std::vector<std::vector<int>>& edges() const { return edges_; }
  bool contains(const std::vector<int>& sorted_edge) const;
  bool operator==(const Hypergraph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  int n_ = 0;
  std::vector<std::vector<int>> edges_;
};

/// A set of unordered vertex pairs, stored sorted as (i<j).
class EdgeSet {
 public:
  EdgeSet() = default;
  static EdgeSet from_pairs(std::vector<std::pair<int, int>> pairs);

  int size() const { return static_cast<int>(pairs_.size()); }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  bool contains(int i, int j) const;
  bool operator==(const EdgeSet& o) const { return pairs_ == o.pairs_; }

 private:
  std::vector<std::pair<int, int>> pairs_;
};

/// Plain undirected simple graph; used for the conflict graph and the
/// planarity test.
struct SimpleGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

} // namespace chroma
