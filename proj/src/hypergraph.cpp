#include "chroma/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace chroma {

Hypergraph Hypergraph::from_edges(int n, std::vector<std::vector<int>> edges) {
  Hypergraph h;
  h.n_ = n;
  for (auto& e : edges) {
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    if (e.empty()) continue;
    if (e.front() < 0 || e.back() >= n)
      throw std::invalid_argument("hyperedge index out of range [0," + std::to_string(n) + ")");
    h.edges_.push_back(std::move(e));
  }
  std::sort(h.edges_.begin(), h.edges_.end());
  h.edges_.erase(std::unique(h.edges_.begin(), h.edges_.end()), h.edges_.end());
  return h;
}

bool Hypergraph::contains(const std::vector<int>& sorted_edge) const {
  return std::binary_search(edges_.begin(), edges_.end(), sorted_edge);
}

EdgeSet EdgeSet::from_pairs(std::vector<std::pair<int, int>> pairs) {
  EdgeSet s;
  for (auto& [i, j] : pairs) {
    if (i == j) throw std::invalid_argument("self-loop in edge set");
    if (i > j) std::swap(i, j);
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  s.pairs_ = std::move(pairs);
  return s;
}

bool EdgeSet::contains(int i, int j) const {
  if (i > j) std::swap(i, j);
  return std::binary_search(pairs_.begin(), pairs_.end(), std::make_pair(i, j));
}

} // namespace chroma
