#include "chroma/generators.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace chroma {

namespace {

constexpr long long kCoordRange = 1LL << 20;

bool meets_requirements(const PointSet& s, const GenRequirements& req) {
  if (req.distinct_coords) {
    for (int axis = 0; axis < s.dim(); ++axis)
      for (int i = 0; i < s.size(); ++i)
        for (int j = i + 1; j < s.size(); ++j)
          if (compare_coord(s, axis, i, j) == 0) return false;
  }
  if (req.no_collinear && s.dim() == 2) {
    for (int i = 0; i < s.size(); ++i)
      for (int j = i + 1; j < s.size(); ++j)
        for (int k = j + 1; k < s.size(); ++k)
          if (orientation(s, i, j, k) == 0) return false;
  }
  if (req.disk_gp && s.dim() == 2)
    if (!check_general_position(s, FamilyKind::disk()).ok()) return false;
  return true;
}

} // namespace

PointSet random_point_set(int n, int dim, uint64_t seed, const GenRequirements& req) {
  if (n < 1 || dim < 1) throw std::invalid_argument("random_point_set: need n >= 1, dim >= 1");
  Rng rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Point> pts;
    std::set<std::vector<long long>> seen;
    while (static_cast<int>(pts.size()) < n) {
      std::vector<long long> raw(dim);
      for (int a = 0; a < dim; ++a) raw[a] = static_cast<long long>(rng.below(kCoordRange));
      if (!seen.insert(raw).second) continue;
      std::vector<Rat> coords;
      coords.reserve(dim);
      for (long long v : raw) coords.emplace_back(static_cast<long>(v));
      pts.push_back(Point(std::move(coords)));
    }
    PointSet s(std::move(pts));
    if (meets_requirements(s, req)) return s;
  }
  throw std::runtime_error("random_point_set: could not satisfy general position");
}

PointSet grid_point_set(int n, int dim) {
  if (n < 1 || dim < 1) throw std::invalid_argument("grid_point_set: need n >= 1, dim >= 1");
  int side = 1;
  while (true) {
    long long cap = 1;
    for (int a = 0; a < dim; ++a) cap *= side;
    if (cap >= n) break;
    ++side;
  }
  std::vector<Point> pts;
  std::vector<int> idx(dim, 0);
  for (int count = 0; count < n; ++count) {
    std::vector<Rat> coords;
    for (int a = 0; a < dim; ++a) coords.emplace_back(idx[a]);
    pts.push_back(Point(std::move(coords)));
    for (int a = 0; a < dim; ++a) {
      if (++idx[a] < side) break;
      idx[a] = 0;
    }
  }
  return PointSet(std::move(pts));
}

PointSet convex_position_point_set(int n) {
  if (n < 1) throw std::invalid_argument("convex_position_point_set: need n >= 1");
  // Lattice points on x^2 + y^2 = 25^k; there are 4(2k+1) of them.
  int k = 1;
  while (4 * (2 * k + 1) < n) ++k;
  long long radius = 1;
  for (int i = 0; i < k; ++i) radius *= 5;
  const long long r2 = radius * radius;

  std::vector<std::pair<long long, long long>> circle;
  for (long long x = -radius; x <= radius; ++x) {
    long long rest = r2 - x * x;
    long long y = static_cast<long long>(std::sqrt(static_cast<double>(rest)));
    while (y * y < rest) ++y;
    while (y * y > rest) --y;
    if (y >= 0 && y * y == rest) {
      circle.emplace_back(x, y);
      if (y > 0) circle.emplace_back(x, -y);
    }
  }
  // Sort by angle, starting at (radius, 0), counter-clockwise.
  auto half = [](std::pair<long long, long long> p) { return p.second < 0 || (p.second == 0 && p.first < 0); };
  std::sort(circle.begin(), circle.end(), [&](auto a, auto b) {
    if (half(a) != half(b)) return half(a) < half(b);
    long long cross = a.first * b.second - a.second * b.first;
    return cross > 0;
  });

  std::vector<Point> pts;
  const size_t total = circle.size();
  for (int i = 0; i < n; ++i) {
    auto [x, y] = circle[i * total / n];
    pts.push_back(make_point({static_cast<long>(x), static_cast<long>(y)}));
  }
  return PointSet(std::move(pts));
}

Poset random_poset(int n, uint64_t seed) {
  Rng rng(seed);
  // Random permutation as a topological order, then random forward pairs.
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i > 0; --i)
    std::swap(perm[i], perm[rng.below(static_cast<uint64_t>(i) + 1)]);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.below(100) < 25) pairs.emplace_back(perm[i], perm[j]);
  return Poset::from_strict_pairs(n, pairs);
}

Hypergraph random_hypergraph(int n, int edges, uint64_t seed) {
  Rng rng(seed);
  std::vector<std::vector<int>> out;
  while (static_cast<int>(out.size()) < edges) {
    std::vector<int> e;
    for (int v = 0; v < n; ++v)
      if (rng.below(2)) e.push_back(v);
    if (!e.empty()) out.push_back(std::move(e));
  }
  return Hypergraph::from_edges(n, std::move(out));
}

std::vector<int> random_vertex_coloring(int n, int k, uint64_t seed) {
  Rng rng(seed);
  std::vector<int> colors(n);
  for (int i = 0; i < n; ++i) colors[i] = 1 + static_cast<int>(rng.below(k));
  return colors;
}

} // namespace chroma
