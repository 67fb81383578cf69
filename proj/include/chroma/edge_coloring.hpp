#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "chroma/families.hpp"
#include "chroma/geometry.hpp"
#include "chroma/hypergraph.hpp"
#include "chroma/poset.hpp"

namespace chroma {

/// Explicit map from unordered vertex pairs to colors 1..k. The domain is
/// exactly the edge set it was built for.
class EdgeColoring {
 public:
  EdgeColoring() = default;
  static EdgeColoring from_assignments(std::vector<std::pair<std::pair<int, int>, int>> items);

  int k() const { return k_; }
  int size() const { return static_cast<int>(items_.size()); }
  const std::vector<std::pair<std::pair<int, int>, int>>& items() const { return items_; }
  int color_of(int i, int j) const; // throws if the pair is not in the domain
  bool has(int i, int j) const;
  EdgeSet domain() const;

 private:
  int k_ = 0;
  std::vector<std::pair<std::pair<int, int>, int>> items_; // sorted by pair
};

// --- halfplanes --------------------------------------------------------------

/// The order in which the hull walk visits the halfplane Delaunay-edges:
/// start at the lexicographically smallest hull vertex, walk the hull
/// clockwise, and sweep each vertex's incident edges counter-clockwise from
/// the hull side toward the next walk vertex.
std::vector<std::pair<int, int>> halfplane_edge_traversal(const PointSet& s);

/// 2-coloring by alternating along the traversal. Every halfplane containing
/// at least three Delaunay-edges sees both colors.
EdgeColoring color_halfplane_edges(const PointSet& s);

// --- bottomless rectangles ---------------------------------------------------

struct BottomlessSweepStep {
  int inserted;                      // original point index added this step
  std::vector<int> left_to_right;    // inserted points in x order
  std::vector<int> neighborly_colors; // colors of consecutive neighborly edges
};

/// 2-coloring built by the bottom-to-top sweep; the observer (optional) sees
/// the neighborly-edge colors after every insertion. Every bottomless
/// rectangle with at least four points sees both colors.
EdgeColoring color_bottomless_edges(
    const PointSet& s,
    const std::function<void(const BottomlessSweepStep&)>& observer = nullptr);

// --- Hasse diagrams and axis-parallel rectangles -----------------------------

/// Colors the Hasse arcs with at most ceil(log2 n) colors so that no two
/// consecutive arcs share a color: recursively halve a fixed linear
/// extension and give arcs crossing the cut a fresh color.
EdgeColoring hasse_edge_coloring(const Poset& p);

/// Colors the rectangle Delaunay-edges with at most 2*ceil(log2 n) colors by
/// splitting them into the Hasse diagrams of the dominance and
/// anti-dominance orders. Requires pairwise distinct x- and y-coordinates.
EdgeColoring color_rectangle_edges(const PointSet& s);

// --- disks -------------------------------------------------------------------

struct ConflictGraph {
  std::vector<std::pair<int, int>> delaunay_edges; // vertex labels of g
  SimpleGraph g;
};

/// Conflict graph J: vertices are the disk Delaunay-edges; two edges are
/// adjacent iff they share an endpoint and their three endpoints form a
/// canonical disk hyperedge.
ConflictGraph build_conflict_graph_j(const PointSet& s);

/// Proper coloring of J with at most four colors, applied to the
/// Delaunay-edges. Every disk with at least three points sees both colors.
EdgeColoring color_disk_edges(const PointSet& s);

/// Exact graph coloring (DSATUR-ordered backtracking); nullopt if the graph
/// needs more than max_colors.
std::optional<std::vector<int>> color_graph_exact(const SimpleGraph& g, int max_colors);

} // namespace chroma
