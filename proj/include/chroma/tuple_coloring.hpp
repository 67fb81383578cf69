#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "chroma/exec.hpp"
#include "chroma/families.hpp"
#include "chroma/geometry.hpp"
#include "chroma/hypergraph.hpp"

namespace chroma {

uint64_t binomial(int n, int k);

/// Lexicographic rank of a sorted t-subset of [0,n) among all C(n,t) of them.
uint64_t combination_rank(int n, std::span<const int> tuple);

/// Total coloring of the t-subsets of [0,n) with colors 1..k, stored densely
/// by lexicographic rank.
class TupleColoring {
 public:
  TupleColoring() = default;
  TupleColoring(int n, int t, int k, std::vector<int32_t> colors_by_rank);

  int n() const { return n_; }
  int t() const { return t_; }
  int k() const { return k_; }
  int color_of(std::span<const int> tuple) const;
  const std::vector<int32_t>& colors() const { return colors_; }

 private:
  int n_ = 0, t_ = 0, k_ = 0;
  std::vector<int32_t> colors_;
};

// --- geometric pair colorings -------------------------------------------------

/// Pair coloring for axis-parallel boxes: orient each pair by increasing
/// first coordinate, take its directed type, and color by the length of the
/// longest same-type monotone path between its endpoints, capped at k. Every
/// box with at least k^(2^(d-1))+1 points contains pairs of all k colors.
TupleColoring color_pairs_boxes(const PointSet& s, int k);

/// Optimal 2-coloring for planar rectangles: red iff NE/SW with an empty
/// bounding box or SE/NW with a nonempty one. Every rectangle with at least
/// three points contains pairs of both colors.
TupleColoring color_pairs_rectangles_optimal(const PointSet& s);

// --- liftings ------------------------------------------------------------------

/// Lifts a t-tuple coloring to t'-tuples: order points by decreasing depth
/// inside a translate of H covering all of S (i.e. increasing normal.p), and
/// color each t'-tuple by its t deepest members. Polychromatic thresholds
/// lift as m' = m + t' - t.
TupleColoring lift_tuples(const TupleColoring& base, const PointSet& s,
                          const HalfspaceSpec& h, int t_prime);

/// Composition for H-regions: reduce to boxes in R^h, color pairs there, and
/// lift to t-tuples if t > 2. Guaranteed threshold is h_region_threshold.
TupleColoring color_tuples_h_regions(const PointSet& s, const std::vector<HalfspaceSpec>& hs,
                                     int t, int k);
long long h_region_threshold(int t, int k, int h);

/// Proper 2-coloring of t'-tuples from any k-coloring of t-tuples: red iff
/// all t-subtuples agree. The threshold becomes max(m, R) where R is the
/// matching tuple Ramsey number.
TupleColoring lift_proper_two_coloring(const TupleColoring& base, int t_prime);

/// Smallest N such that every k-coloring of the t-subsets of an N-set has a
/// monochromatic t'-subset, by exhaustive search; nullopt when the search
/// space exceeds the budget.
std::optional<int> ramsey_min_size(int t, int k, int t_prime, long long budget = 1 << 24);

// --- vertex-coloring lift (polychromatic) --------------------------------------

/// Number of colors produced by polychromatic_tuples_from_vertex_coloring.
long long derived_palette_size(int k, int t_prime);

/// Polychromatic t'-tuple coloring derived from a polychromatic vertex
/// k-coloring via color multisets: all-distinct tuples keep their color set,
/// single-repeat tuples map through the rotation bijection to a subset of
/// [k-1], everything else takes the first palette color. Threshold becomes
/// max(m, k(t'-1)+1).
TupleColoring polychromatic_tuples_from_vertex_coloring(const std::vector<int>& vertex_colors,
                                                        int k, int t_prime);

// --- local triple-coloring rules ------------------------------------------------

/// A map from the ten 3-element multisets over {1,2,3} to {1,2,3}. Multisets
/// are indexed in the fixed order 111,112,113,122,222,223,133,233,333,123.
struct MultisetColorRule {
  std::array<int, 10> color_of_multiset{};
  static int multiset_index(int a, int b, int c);
};

/// Exhaustively checks all 3^10 rules against the two gadget hypergraphs
/// whose pair colorings force contradictory constraints; returns how many
/// rules survive (expected: 0). max_gadget_size caps the gadget
/// instantiation (at least 12).
long long verify_no_local_mapping(int max_gadget_size = 12,
                                  ExecPolicy policy = ExecPolicy::Parallel);

} // namespace chroma
