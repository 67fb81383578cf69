#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "chroma/families.hpp"
#include "chroma/geometry.hpp"
#include "chroma/hypergraph.hpp"
#include "chroma/poset.hpp"

namespace chroma {

/// Thin deterministic RNG wrapper; all generated fixtures are functions of
/// the seed alone.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}
  uint64_t next() { return eng_(); }
  uint64_t below(uint64_t bound) { return bound ? eng_() % bound : 0; }
  int range(int lo, int hi) { return lo + static_cast<int>(below(hi - lo + 1)); } // inclusive

 private:
  std::mt19937_64 eng_;
};

struct GenRequirements {
  bool distinct_coords = true; // per axis
  bool no_collinear = false;   // d=2 halfplane-style general position
  bool disk_gp = false;        // no cocircular quadruple / equidistant pair
};

/// Random integer-coordinate points in [0, 2^20)^dim, redrawn until the
/// requirements hold.
PointSet random_point_set(int n, int dim, uint64_t seed, const GenRequirements& req = {});

/// First n points of an axis-aligned lattice walk; intentionally full of
/// shared coordinates (shear fodder).
PointSet grid_point_set(int n, int dim = 2);

/// n points in convex position with exact integer coordinates: a subset of
/// the lattice points on a circle x^2 + y^2 = 5^(2k), angularly sorted.
PointSet convex_position_point_set(int n);

Poset random_poset(int n, uint64_t seed);

/// Random hypergraph: `edges` random subsets of [0,n), each drawn by
/// including vertices with probability ~1/2 (empty draws discarded).
Hypergraph random_hypergraph(int n, int edges, uint64_t seed);

std::vector<int> random_vertex_coloring(int n, int k, uint64_t seed);

} // namespace chroma
