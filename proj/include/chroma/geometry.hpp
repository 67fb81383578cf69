#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chroma/rational.hpp"

namespace chroma {

/// A point with exact rational coordinates in dimension d >= 1.
struct Point {
  std::vector<Rat> coords;

  Point() = default;
  explicit Point(std::vector<Rat> c) : coords(std::move(c)) {}

  int dim() const { return static_cast<int>(coords.size()); }
  const Rat& operator[](int i) const { return coords[i]; }
  Rat& operator[](int i) { return coords[i]; }
  bool operator==(const Point& o) const { return coords == o.coords; }
};

Point make_point(std::initializer_list<long> coords);

/// An ordered list of distinct points of equal dimension. The order is the
/// vertex indexing used by every hypergraph and coloring built on the set.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<Point> points);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(points_.size()); }
  bool empty() const { return points_.empty(); }
  const Point& operator[](int i) const { return points_[i]; }
  const std::vector<Point>& points() const { return points_; }

  /// Flat n*d array of int64 coordinates when every coordinate is an
  /// integer with |v| <= 2^40, else empty. Predicates use this to run on
  /// native integers; results are identical to the rational path.
  const std::vector<long long>& int_view() const { return int_view_; }
  bool has_int_view() const { return !int_view_.empty() || points_.empty(); }

 private:
  std::vector<Point> points_;
  std::vector<long long> int_view_;
  int dim_ = 0;
};

/// Axis-parallel box given by componentwise bounds, low <= high.
struct Box {
  Point low;
  Point high;
  bool contains(const Point& p) const;
};

/// Sign pattern of an ordered pair's coordinate differences, normalized so
/// the first entry is +. Entries are +1/-1.
struct SignSequence {
  std::vector<int> signs;
  bool operator==(const SignSequence& o) const { return signs == o.signs; }

  /// Packs signs[1..d-1] into a bitmask (bit set for '-'); there are
  /// 2^(d-1) possible values.
  int type_index() const;
};

// --- exact predicates ------------------------------------------------------

/// Sign of cross(b-a, c-a): +1 when a,b,c make a left turn.
int orientation(const Point& a, const Point& b, const Point& c);

/// Same predicate by index, using the point set's int64 fast path when
/// available.
int orientation(const PointSet& s, int a, int b, int c);

int compare_coord(const PointSet& s, int axis, int a, int b);

/// Circumcircle of three non-collinear points as (center, squared radius).
struct Circle {
  Rat cx, cy, r2;
  /// -1 strictly inside, 0 on the circle, +1 strictly outside.
  int side(const Point& p) const;
};
std::optional<Circle> circumcircle(const Point& a, const Point& b, const Point& c);
Circle diametral_circle(const Point& a, const Point& b);

// --- operations -------------------------------------------------------------

/// Smallest axis-parallel box containing p and q. Throws on dimension
/// mismatch.
Box bounding_box(const Point& p, const Point& q);

/// Directed type of the unordered pair {p,q}. Throws GeneralPositionError
/// if some coordinate of q-p is zero.
SignSequence directed_type(const Point& p, const Point& q);

/// Indices of the convex hull vertices in counter-clockwise order, starting
/// at the lexicographically smallest point. Requires d=2.
std::vector<int> convex_hull(const PointSet& s);

/// Applies (x,y) -> (x+eps*y, y+eps*x) with eps > 0 chosen small enough that
/// the result is ordered exactly like the eps->0+ limit (lexicographic
/// tie-breaking). The output has pairwise distinct x- and y-coordinates and
/// the same rectangle/bottomless hyperedges as the input.
PointSet shear_general_position(const PointSet& s);

struct GeneralPositionReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

struct GeneralPositionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BudgetExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Signals a broken internal expectation (e.g. the disk conflict graph
/// needing more than four colors).
struct InternalInconsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace chroma
