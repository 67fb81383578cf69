#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace chroma {

/// A finite strict partial order with its directed Hasse diagram.
class Poset {
 public:
  Poset() = default;

  /// Builds the transitive closure of the given strict pairs; throws on
  /// cycles (including reflexive pairs).
  static Poset from_strict_pairs(int n, const std::vector<std::pair<int, int>>& pairs);

  int n() const { return n_; }
  bool less(int a, int b) const { return (rows_[a][b >> 6] >> (b & 63)) & 1; }

  /// Arcs (x,y) with x an immediate predecessor of y, sorted.
  const std::vector<std::pair<int, int>>& hasse() const { return hasse_; }

  /// Deterministic linear extension: topological order with smallest-index
  /// tie-breaking.
  std::vector<int> linear_extension() const;

 private:
  int n_ = 0;
  int words_ = 0;
  std::vector<std::vector<uint64_t>> rows_; // rows_[a] bitmask of {b : a < b}
  std::vector<std::pair<int, int>> hasse_;
};

} // namespace chroma
