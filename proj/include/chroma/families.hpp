#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "chroma/geometry.hpp"
#include "chroma/hypergraph.hpp"

namespace chroma {

/// One halfspace direction {x : normal.x <= beta} with a free offset beta.
struct HalfspaceSpec {
  std::vector<Rat> normal;
  int dim() const { return static_cast<int>(normal.size()); }
  Rat dot(const Point& p) const;
};

enum class FamilyType { Halfplane, BottomlessRect, AxisRect, Disk, HRegion, BoxD };

struct FamilyKind {
  FamilyType type = FamilyType::Halfplane;
  std::vector<HalfspaceSpec> halfspaces; // HRegion only

  static FamilyKind halfplane() { return {FamilyType::Halfplane, {}}; }
  static FamilyKind bottomless() { return {FamilyType::BottomlessRect, {}}; }
  static FamilyKind axis_rect() { return {FamilyType::AxisRect, {}}; }
  static FamilyKind disk() { return {FamilyType::Disk, {}}; }
  static FamilyKind box_d() { return {FamilyType::BoxD, {}}; }
  static FamilyKind h_region(std::vector<HalfspaceSpec> hs);

  const char* name() const;
};

struct EnumLimits {
  int hregion_max_halfspaces = 4;
  int hregion_max_points = 40;
  long long max_region_candidates = 20'000'000;
};

// --- general position -------------------------------------------------------

/// Lists every violated predicate required by the family: shared coordinates
/// for rectangle-like families, collinear triples for halfplanes, cocircular
/// quadruples / equidistant pairs for disks, projection ties for H-regions.
GeneralPositionReport check_general_position(const PointSet& s, const FamilyKind& family);

// --- canonical regions ------------------------------------------------------

/// Witness descriptions for canonical regions; points_in_region rechecks a
/// hyperedge directly against its witness.
struct HalfplaneRegion {
  int i, j;           // boundary line through points i -> j, region strictly left
  bool inc_i, inc_j;  // boundary points included by infinitesimal rotation
};
struct BottomlessRegion {
  Rat xlo, xhi, ytop;
};
struct RectRegion {
  Rat xlo, xhi, ylo, yhi;
};
struct DiskRegion {
  Circle circle;
  std::vector<int> included_boundary; // realized by infinitesimal inflation/deflation
};
struct HalfspaceProductRegion {
  std::vector<HalfspaceSpec> normals;
  std::vector<std::optional<Rat>> offsets; // nullopt = that constraint absent
};
using Region = std::variant<HalfplaneRegion, BottomlessRegion, RectRegion, DiskRegion,
                            HalfspaceProductRegion>;

std::vector<int> points_in_region(const PointSet& s, const Region& region);

struct CanonicalHyperedge {
  std::vector<int> vertices; // sorted
  Region witness;
};

/// The full Delaunay-hypergraph G(S,F): exactly { S∩F : F in family, nonempty },
/// computed by finite enumeration of canonical regions. Requires the family's
/// general position (throws GeneralPositionError otherwise).
Hypergraph canonical_hyperedges(const PointSet& s, const FamilyKind& family,
                                const EnumLimits& limits = {});

/// Same enumeration, keeping one witness region per distinct hyperedge.
std::vector<CanonicalHyperedge> canonical_hyperedges_with_witnesses(
    const PointSet& s, const FamilyKind& family, const EnumLimits& limits = {});

/// Independent O(n^4) rectangle enumerator over corner-point quadruples;
/// cross-checks the slab-based one.
Hypergraph axis_rect_hyperedges_by_quadruples(const PointSet& s);

/// Size-2 hyperedges of G(S,F).
EdgeSet delaunay_edges(const PointSet& s, const FamilyKind& family,
                       const EnumLimits& limits = {});

// --- structure checks -------------------------------------------------------

struct ShrinkabilityResult {
  bool shrinkable = true;
  // Violating (hyperedge, point): no sub-hyperedge keeps the point and drops
  // exactly one other.
  std::optional<std::pair<std::vector<int>, int>> witness;
};
ShrinkabilityResult is_shrinkable(const Hypergraph& h);

/// Maps x -> (A_1.x, ..., A_h.x); H-region hyperedges of s correspond to
/// downward-orthant hyperedges of the image under the same indices.
PointSet h_region_reduction(const PointSet& s, const std::vector<HalfspaceSpec>& hs);

/// Axis-aligned downward orthants {y : y_i <= b_i} in dimension dim; the
/// image family of the H-region reduction.
FamilyKind downward_orthant_family(int dim);

} // namespace chroma
