#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chroma/edge_coloring.hpp"
#include "chroma/exec.hpp"
#include "chroma/families.hpp"
#include "chroma/hypergraph.hpp"
#include "chroma/planarity.hpp"
#include "chroma/tuple_coloring.hpp"

namespace chroma {

enum class ThresholdKind { Points, Edges };
enum class VerifyMode { Proper, Polychromatic };

struct VerificationReport {
  bool passed = true;
  long long checked_regions = 0; // canonical regions that met the threshold
  int threshold = 0;
  ThresholdKind threshold_kind = ThresholdKind::Points;
  VerifyMode mode = VerifyMode::Proper;
  int palette = 0; // k for polychromatic mode

  struct Witness {
    std::vector<int> hyperedge;
    std::string detail;
  };
  std::optional<Witness> witness; // present iff !passed; first in canonical order
};

// --- guarantee checking -------------------------------------------------------

/// Scans every canonical region of the family; a region qualifies when it
/// holds >= threshold points (Points kind) or >= threshold Delaunay-edges
/// (Edges kind), and must then contain edges of two different colors.
/// Requires the coloring domain to equal delaunay_edges(s, family).
VerificationReport verify_edge_coloring(const PointSet& s, const FamilyKind& family,
                                        const EdgeColoring& coloring, int threshold,
                                        ThresholdKind kind,
                                        ExecPolicy policy = ExecPolicy::Parallel);

/// Serial reference: same contract, runs over the materialized canonical
/// hypergraph. Kept small and obviously correct; cross-checked against the
/// scan kernels in tests.
VerificationReport verify_edge_coloring_ref(const PointSet& s, const FamilyKind& family,
                                            const EdgeColoring& coloring, int threshold,
                                            ThresholdKind kind);

/// Scans every canonical region with >= m points and requires two tuple
/// colors (Proper) or all coloring.k() colors (Polychromatic) among the
/// t-subsets inside.
VerificationReport verify_tuple_coloring(const PointSet& s, const FamilyKind& family,
                                         const TupleColoring& coloring, int m, VerifyMode mode,
                                         ExecPolicy policy = ExecPolicy::Parallel);

VerificationReport verify_tuple_coloring_ref(const PointSet& s, const FamilyKind& family,
                                             const TupleColoring& coloring, int m,
                                             VerifyMode mode);

/// Same check against an abstract hypergraph instead of a geometric family.
VerificationReport verify_tuple_coloring_on_hypergraph(const Hypergraph& h,
                                                       const TupleColoring& coloring, int m,
                                                       VerifyMode mode);

/// Recheck a reported witness from scratch (recount and recolor inside it).
bool witness_violates_edge_guarantee(const std::vector<int>& hyperedge,
                                     const EdgeColoring& coloring, int threshold,
                                     ThresholdKind kind);
bool witness_violates_tuple_guarantee(const std::vector<int>& hyperedge,
                                      const TupleColoring& coloring, int m, VerifyMode mode);

// --- impossibility ------------------------------------------------------------

enum class ImpossibilityTarget { DelaunayEdges, AllPairs };

/// True iff NO coloring of the target domain with num_colors colors makes
/// every qualifying canonical region non-monochromatic. Exhaustive over
/// num_colors^|domain| colorings; throws BudgetExceededError beyond budget.
bool exhaustive_impossibility(const PointSet& s, const FamilyKind& family, int threshold,
                              int num_colors, ImpossibilityTarget target, ThresholdKind kind,
                              long long budget = 1 << 24,
                              ExecPolicy policy = ExecPolicy::Parallel);

/// Searches rank-canonical 5-point sets (x = 0..4, y a permutation of 0..4,
/// in lexicographic order) for one whose bottomless Delaunay-edges admit no
/// 2-coloring at threshold 3 points; returns the first hit.
PointSet find_bottomless_counterexample(long long budget = 1'000'000);

/// The frozen first-found witness: (0,0),(1,1),(2,4),(3,2),(4,3).
PointSet bottomless_counterexample_fixture();

// --- generic relation hypergraph ------------------------------------------------

enum class Relation { Containment, ReverseContainment, Intersection };

/// Vertices are the hyperedges of h1; each hyperedge h2 of h2 contributes the
/// set of h1-hyperedges standing in the relation with it.
Hypergraph relation_hypergraph(const Hypergraph& h1, const Hypergraph& h2, Relation relation);

} // namespace chroma
