#include "chroma/families.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace chroma {

namespace {

std::string idx2(int i, int j) { return std::to_string(i) + "," + std::to_string(j); }

std::vector<Rat> axis_values_sorted(const std::vector<Rat>& vals) {
  std::vector<Rat> v = vals;
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void require_dim2(const PointSet& s, const char* who) {
  if (s.dim() != 2) throw std::invalid_argument(std::string(who) + ": requires d=2");
}

// Accumulates distinct hyperedges, keeping the first witness seen for each.
class EdgeCollector {
 public:
  void add(std::vector<int> vertices, Region witness) {
    std::sort(vertices.begin(), vertices.end());
    if (vertices.empty()) return;
    map_.try_emplace(std::move(vertices), std::move(witness));
  }
  std::vector<CanonicalHyperedge> take() {
    std::vector<CanonicalHyperedge> out;
    out.reserve(map_.size());
    for (auto& [v, w] : map_) out.push_back({v, w});
    return out;
  }

 private:
  std::map<std::vector<int>, Region> map_;
};

void enumerate_halfplane(const PointSet& s, EdgeCollector& out) {
  require_dim2(s, "halfplane family");
  const int n = s.size();
  if (n == 1) {
    HalfspaceProductRegion r{{HalfspaceSpec{{Rat(1), Rat(0)}}}, {s[0][0]}};
    out.add({0}, r);
    return;
  }
  // Every halfplane hyperedge is realized by a boundary line through two
  // points plus inclusion variants for the boundary points; collinear triples
  // would make some variants unrealizable.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      std::vector<int> left;
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        int o = orientation(s, i, j, k);
        if (o == 0)
          throw GeneralPositionError("halfplane family: collinear triple " + idx2(i, j) +
                                     "," + std::to_string(k));
        if (o > 0) left.push_back(k);
      }
      for (int variant = 0; variant < 4; ++variant) {
        std::vector<int> verts = left;
        if (variant & 1) verts.push_back(i);
        if (variant & 2) verts.push_back(j);
        out.add(std::move(verts), HalfplaneRegion{i, j, (variant & 1) != 0, (variant & 2) != 0});
      }
    }
}

void enumerate_bottomless(const PointSet& s, EdgeCollector& out) {
  require_dim2(s, "bottomless family");
  const int n = s.size();
  std::vector<Rat> xs, ys;
  for (int i = 0; i < n; ++i) xs.push_back(s[i][0]);
  std::vector<Rat> vx = axis_values_sorted(xs);
  const int m = static_cast<int>(vx.size());

  for (int a = 0; a < m; ++a)
    for (int b = a; b < m; ++b) {
      Rat xlo = a == 0 ? Rat(vx[0] - 1) : Rat((vx[a - 1] + vx[a]) / 2);
      Rat xhi = b == m - 1 ? Rat(vx[b] + 1) : Rat((vx[b] + vx[b + 1]) / 2);
      std::vector<int> slab;
      for (int i = 0; i < n; ++i)
        if (s[i][0] >= vx[a] && s[i][0] <= vx[b]) slab.push_back(i);
      std::sort(slab.begin(), slab.end(),
                [&](int p, int q) { return s[p][1] < s[q][1]; });
      // Prefixes cut between consecutive distinct y-values of the slab.
      size_t pos = 0;
      std::vector<int> prefix;
      while (pos < slab.size()) {
        size_t group_end = pos;
        while (group_end < slab.size() && s[slab[group_end]][1] == s[slab[pos]][1]) ++group_end;
        for (size_t t = pos; t < group_end; ++t) prefix.push_back(slab[t]);
        Rat ytop = group_end == slab.size()
                       ? Rat(s[slab[group_end - 1]][1] + 1)
                       : Rat((s[slab[group_end - 1]][1] + s[slab[group_end]][1]) / 2);
        out.add(prefix, BottomlessRegion{xlo, xhi, ytop});
        pos = group_end;
      }
    }
}

void enumerate_axis_rect(const PointSet& s, EdgeCollector& out, const EnumLimits& limits) {
  require_dim2(s, "axis-rect family");
  const int n = s.size();
  std::vector<Rat> xs;
  for (int i = 0; i < n; ++i) xs.push_back(s[i][0]);
  std::vector<Rat> vx = axis_values_sorted(xs);
  const int m = static_cast<int>(vx.size());
  long long slabs = static_cast<long long>(m) * (m + 1) / 2;
  if (slabs * n * n > limits.max_region_candidates)
    throw BudgetExceededError("axis-rect canonical enumeration too large");

  for (int a = 0; a < m; ++a)
    for (int b = a; b < m; ++b) {
      Rat xlo = a == 0 ? Rat(vx[0] - 1) : Rat((vx[a - 1] + vx[a]) / 2);
      Rat xhi = b == m - 1 ? Rat(vx[b] + 1) : Rat((vx[b] + vx[b + 1]) / 2);
      std::vector<int> slab;
      for (int i = 0; i < n; ++i)
        if (s[i][0] >= vx[a] && s[i][0] <= vx[b]) slab.push_back(i);
      std::sort(slab.begin(), slab.end(),
                [&](int p, int q) { return s[p][1] < s[q][1]; });
      // Distinct y-values of the slab; runs span whole tie groups.
      std::vector<size_t> group_start;
      for (size_t t = 0; t < slab.size(); ++t)
        if (t == 0 || s[slab[t]][1] != s[slab[t - 1]][1]) group_start.push_back(t);
      const size_t groups = group_start.size();
      auto group_end = [&](size_t g) {
        return g + 1 < groups ? group_start[g + 1] : slab.size();
      };
      for (size_t gc = 0; gc < groups; ++gc) {
        std::vector<int> run;
        Rat ylo = gc == 0
                      ? Rat(s[slab.front()][1] - 1)
                      : Rat((s[slab[group_start[gc] - 1]][1] + s[slab[group_start[gc]]][1]) / 2);
        for (size_t gd = gc; gd < groups; ++gd) {
          for (size_t t = group_start[gd]; t < group_end(gd); ++t) run.push_back(slab[t]);
          Rat yhi = gd + 1 == groups
                        ? Rat(s[slab.back()][1] + 1)
                        : Rat((s[slab[group_end(gd) - 1]][1] + s[slab[group_end(gd)]][1]) / 2);
          out.add(run, RectRegion{xlo, xhi, ylo, yhi});
        }
      }
    }
}

void add_circle_variants(const PointSet& s, const Circle& circle, EdgeCollector& out) {
  const int n = s.size();
  std::vector<int> inside, boundary;
  for (int k = 0; k < n; ++k) {
    int side = circle.side(s[k]);
    if (side < 0) inside.push_back(k);
    else if (side == 0) boundary.push_back(k);
  }
  if (boundary.size() > 3)
    throw GeneralPositionError("disk family: >=4 cocircular points");
  for (int mask = 0; mask < (1 << boundary.size()); ++mask) {
    std::vector<int> verts = inside, included;
    for (size_t t = 0; t < boundary.size(); ++t)
      if (mask & (1 << t)) {
        verts.push_back(boundary[t]);
        included.push_back(boundary[t]);
      }
    out.add(std::move(verts), DiskRegion{circle, std::move(included)});
  }
}

void enumerate_disk(const PointSet& s, EdgeCollector& out) {
  require_dim2(s, "disk family");
  const int n = s.size();
  if (n == 1) {
    out.add({0}, DiskRegion{Circle{s[0][0], s[0][1], Rat(0)}, {0}});
    return;
  }
  // Candidate circles: through two diametral points and through three points.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      add_circle_variants(s, diametral_circle(s[i], s[j]), out);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (auto c = circumcircle(s[i], s[j], s[k])) add_circle_variants(s, *c, out);
}

std::vector<HalfspaceSpec> box_normals(int dim) {
  std::vector<HalfspaceSpec> hs;
  for (int axis = 0; axis < dim; ++axis)
    for (int sign : {1, -1}) {
      std::vector<Rat> normal(dim, Rat(0));
      normal[axis] = sign;
      hs.push_back(HalfspaceSpec{std::move(normal)});
    }
  return hs;
}

void enumerate_halfspace_products(const PointSet& s, const std::vector<HalfspaceSpec>& hs,
                                  EdgeCollector& out, const EnumLimits& limits,
                                  bool is_hregion) {
  const int n = s.size();
  if (n > 64 || n > limits.hregion_max_points)
    throw BudgetExceededError("halfspace-product enumeration: too many points");
  if (is_hregion && static_cast<int>(hs.size()) > limits.hregion_max_halfspaces)
    throw std::invalid_argument("h-region family: more than " +
                                std::to_string(limits.hregion_max_halfspaces) + " halfspaces");
  for (const auto& h : hs)
    if (h.dim() != s.dim())
      throw std::invalid_argument("halfspace dimension mismatch");

  // Per halfspace: distinct sorted projection values, prefix masks, and the
  // offset realizing each prefix (midpoint of the gap above it).
  struct Level {
    std::vector<uint64_t> prefix_mask; // prefix_mask[k]: the k smallest value groups
    std::vector<Rat> offset;           // offset[k] realizes prefix k (k>=1)
  };
  std::vector<Level> levels;
  long long combos = 1;
  for (const auto& h : hs) {
    std::vector<Rat> proj;
    proj.reserve(n);
    for (int i = 0; i < n; ++i) proj.push_back(h.dot(s[i]));
    std::vector<Rat> vals = axis_values_sorted(proj);
    Level lv;
    lv.prefix_mask.assign(vals.size() + 1, 0);
    lv.offset.assign(vals.size() + 1, Rat(0));
    for (size_t k = 1; k <= vals.size(); ++k) {
      uint64_t m = 0;
      for (int i = 0; i < n; ++i)
        if (proj[i] <= vals[k - 1]) m |= uint64_t(1) << i;
      lv.prefix_mask[k] = m;
      lv.offset[k] = k == vals.size() ? Rat(vals.back() + 1) : Rat((vals[k - 1] + vals[k]) / 2);
    }
    combos *= static_cast<long long>(vals.size()) + 1;
    if (combos > limits.max_region_candidates)
      throw BudgetExceededError("halfspace-product enumeration too large");
    levels.push_back(std::move(lv));
  }

  const uint64_t full = n == 64 ? ~uint64_t(0) : (uint64_t(1) << n) - 1;
  std::vector<std::optional<Rat>> offsets(hs.size());
  auto recurse = [&](auto&& self, size_t level, uint64_t mask) -> void {
    if (mask == 0) return; // only nonempty hyperedges
    if (level == levels.size()) {
      std::vector<int> verts;
      for (int i = 0; i < n; ++i)
        if (mask & (uint64_t(1) << i)) verts.push_back(i);
      out.add(std::move(verts), HalfspaceProductRegion{hs, offsets});
      return;
    }
    const Level& lv = levels[level];
    offsets[level] = std::nullopt; // constraint absent
    self(self, level + 1, mask);
    for (size_t k = 1; k < lv.prefix_mask.size(); ++k) {
      offsets[level] = lv.offset[k];
      self(self, level + 1, mask & lv.prefix_mask[k]);
    }
    offsets[level] = std::nullopt;
  };
  recurse(recurse, 0, full);
}

} // namespace

Rat HalfspaceSpec::dot(const Point& p) const {
  if (p.dim() != dim()) throw std::invalid_argument("halfspace/point dimension mismatch");
  Rat acc = 0;
  for (int i = 0; i < dim(); ++i) acc += normal[i] * p[i];
  return acc;
}

FamilyKind FamilyKind::h_region(std::vector<HalfspaceSpec> hs) {
  if (hs.empty()) throw std::invalid_argument("h-region family needs at least one halfspace");
  for (const auto& h : hs) {
    bool nonzero = false;
    for (const Rat& c : h.normal) nonzero |= c != 0;
    if (!nonzero) throw std::invalid_argument("h-region family: zero normal");
  }
  return {FamilyType::HRegion, std::move(hs)};
}

const char* FamilyKind::name() const {
  switch (type) {
    case FamilyType::Halfplane: return "halfplane";
    case FamilyType::BottomlessRect: return "bottomless";
    case FamilyType::AxisRect: return "axisrect";
    case FamilyType::Disk: return "disk";
    case FamilyType::HRegion: return "hregion";
    case FamilyType::BoxD: return "boxd";
  }
  return "?";
}

GeneralPositionReport check_general_position(const PointSet& s, const FamilyKind& family) {
  GeneralPositionReport report;
  const int n = s.size();
  auto shared_coords = [&](std::initializer_list<int> axes) {
    for (int axis : axes)
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (compare_coord(s, axis, i, j) == 0)
            report.violations.push_back("shared " + std::string(1, "xyzw"[axis % 4]) +
                                        "-coordinate: points " + idx2(i, j));
  };
  switch (family.type) {
    case FamilyType::AxisRect:
    case FamilyType::BottomlessRect:
      shared_coords({0, 1});
      break;
    case FamilyType::BoxD: {
      for (int axis = 0; axis < s.dim(); ++axis) shared_coords({axis});
      break;
    }
    case FamilyType::Halfplane:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          for (int k = j + 1; k < n; ++k)
            if (orientation(s, i, j, k) == 0)
              report.violations.push_back("collinear triple: points " + idx2(i, j) + "," +
                                          std::to_string(k));
      break;
    case FamilyType::Disk: {
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          for (int k = j + 1; k < n; ++k) {
            auto c = circumcircle(s[i], s[j], s[k]);
            if (!c) continue;
            for (int l = k + 1; l < n; ++l)
              if (c->side(s[l]) == 0)
                report.violations.push_back("cocircular quadruple: points " + idx2(i, j) + "," +
                                            idx2(k, l));
          }
      for (int r = 0; r < n; ++r)
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j) {
            if (i == r || j == r) continue;
            Rat di = (s[i][0] - s[r][0]) * (s[i][0] - s[r][0]) +
                     (s[i][1] - s[r][1]) * (s[i][1] - s[r][1]);
            Rat dj = (s[j][0] - s[r][0]) * (s[j][0] - s[r][0]) +
                     (s[j][1] - s[r][1]) * (s[j][1] - s[r][1]);
            if (di == dj)
              report.violations.push_back("points " + idx2(i, j) + " equidistant from point " +
                                          std::to_string(r));
          }
      break;
    }
    case FamilyType::HRegion: {
      for (size_t h = 0; h < family.halfspaces.size(); ++h)
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j)
            if (family.halfspaces[h].dot(s[i]) == family.halfspaces[h].dot(s[j]))
              report.violations.push_back("points " + idx2(i, j) +
                                          " share boundary of halfspace " + std::to_string(h));
      break;
    }
  }
  return report;
}

std::vector<int> points_in_region(const PointSet& s, const Region& region) {
  const int n = s.size();
  std::vector<int> out;
  if (const auto* hp = std::get_if<HalfplaneRegion>(&region)) {
    for (int k = 0; k < n; ++k) {
      if (k == hp->i) { if (hp->inc_i) out.push_back(k); continue; }
      if (k == hp->j) { if (hp->inc_j) out.push_back(k); continue; }
      if (orientation(s, hp->i, hp->j, k) > 0) out.push_back(k);
    }
  } else if (const auto* bl = std::get_if<BottomlessRegion>(&region)) {
    for (int k = 0; k < n; ++k)
      if (s[k][0] >= bl->xlo && s[k][0] <= bl->xhi && s[k][1] <= bl->ytop) out.push_back(k);
  } else if (const auto* rc = std::get_if<RectRegion>(&region)) {
    for (int k = 0; k < n; ++k)
      if (s[k][0] >= rc->xlo && s[k][0] <= rc->xhi && s[k][1] >= rc->ylo && s[k][1] <= rc->yhi)
        out.push_back(k);
  } else if (const auto* dk = std::get_if<DiskRegion>(&region)) {
    for (int k = 0; k < n; ++k) {
      int side = dk->circle.side(s[k]);
      if (side < 0 ||
          (side == 0 && std::find(dk->included_boundary.begin(), dk->included_boundary.end(),
                                  k) != dk->included_boundary.end()))
        out.push_back(k);
    }
  } else if (const auto* pr = std::get_if<HalfspaceProductRegion>(&region)) {
    for (int k = 0; k < n; ++k) {
      bool in = true;
      for (size_t h = 0; h < pr->normals.size() && in; ++h)
        if (pr->offsets[h] && pr->normals[h].dot(s[k]) > *pr->offsets[h]) in = false;
      if (in) out.push_back(k);
    }
  }
  return out;
}

std::vector<CanonicalHyperedge> canonical_hyperedges_with_witnesses(const PointSet& s,
                                                                    const FamilyKind& family,
                                                                    const EnumLimits& limits) {
  EdgeCollector out;
  if (s.empty()) return {};
  if (s.size() == 1 && family.type != FamilyType::Halfplane && family.type != FamilyType::Disk) {
    // A single point is cut out by a region of any family.
    std::vector<HalfspaceSpec> hs = family.type == FamilyType::HRegion
                                        ? family.halfspaces
                                        : box_normals(s.dim());
    std::vector<std::optional<Rat>> offsets;
    for (const auto& h : hs) offsets.emplace_back(h.dot(s[0]));
    out.add({0}, HalfspaceProductRegion{hs, offsets});
    return out.take();
  }
  switch (family.type) {
    case FamilyType::Halfplane: enumerate_halfplane(s, out); break;
    case FamilyType::BottomlessRect: enumerate_bottomless(s, out); break;
    case FamilyType::AxisRect: enumerate_axis_rect(s, out, limits); break;
    case FamilyType::Disk: enumerate_disk(s, out); break;
    case FamilyType::HRegion:
      enumerate_halfspace_products(s, family.halfspaces, out, limits, true);
      break;
    case FamilyType::BoxD:
      enumerate_halfspace_products(s, box_normals(s.dim()), out, limits, false);
      break;
  }
  return out.take();
}

Hypergraph canonical_hyperedges(const PointSet& s, const FamilyKind& family,
                                const EnumLimits& limits) {
  auto with = canonical_hyperedges_with_witnesses(s, family, limits);
  std::vector<std::vector<int>> edges;
  edges.reserve(with.size());
  for (auto& ch : with) edges.push_back(std::move(ch.vertices));
  return Hypergraph::from_edges(s.size(), std::move(edges));
}

Hypergraph axis_rect_hyperedges_by_quadruples(const PointSet& s) {
  require_dim2(s, "axis-rect quadruple oracle");
  const int n = s.size();
  std::vector<std::vector<int>> edges;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          Rat xlo = s[a][0], xhi = s[b][0], ylo = s[c][1], yhi = s[d][1];
          if (xlo > xhi || ylo > yhi) continue;
          std::vector<int> verts;
          for (int k = 0; k < n; ++k)
            if (s[k][0] >= xlo && s[k][0] <= xhi && s[k][1] >= ylo && s[k][1] <= yhi)
              verts.push_back(k);
          if (!verts.empty()) edges.push_back(std::move(verts));
        }
  return Hypergraph::from_edges(n, std::move(edges));
}

EdgeSet delaunay_edges(const PointSet& s, const FamilyKind& family, const EnumLimits& limits) {
  const int n = s.size();
  std::vector<std::pair<int, int>> pairs;
  switch (family.type) {
    case FamilyType::AxisRect:
    case FamilyType::BoxD: {
      if (family.type == FamilyType::AxisRect) require_dim2(s, "axis-rect family");
      const int d = s.dim();
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          bool empty = true;
          for (int k = 0; k < n && empty; ++k) {
            if (k == i || k == j) continue;
            bool inside = true;
            for (int axis = 0; axis < d && inside; ++axis) {
              int ci = compare_coord(s, axis, k, i), cj = compare_coord(s, axis, k, j);
              if (ci * cj > 0) inside = false; // k outside [min,max] on this axis
            }
            if (inside) empty = false;
          }
          if (empty) pairs.emplace_back(i, j);
        }
      break;
    }
    case FamilyType::BottomlessRect: {
      require_dim2(s, "bottomless family");
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          bool ok = true;
          for (int k = 0; k < n && ok; ++k) {
            if (k == i || k == j) continue;
            bool x_between = compare_coord(s, 0, k, i) * compare_coord(s, 0, k, j) <= 0;
            bool below = compare_coord(s, 1, k, i) <= 0 || compare_coord(s, 1, k, j) <= 0;
            if (x_between && below) ok = false;
          }
          if (ok) pairs.emplace_back(i, j);
        }
      break;
    }
    default: {
      Hypergraph h = canonical_hyperedges(s, family, limits);
      for (const auto& e : h.edges())
        if (e.size() == 2) pairs.emplace_back(e[0], e[1]);
      break;
    }
  }
  return EdgeSet::from_pairs(std::move(pairs));
}

ShrinkabilityResult is_shrinkable(const Hypergraph& h) {
  for (const auto& e : h.edges()) {
    if (e.size() < 3) continue;
    for (int p : e) {
      bool found = false;
      std::vector<int> sub(e.begin(), e.end());
      for (size_t drop = 0; drop < e.size() && !found; ++drop) {
        if (e[drop] == p) continue;
        sub.erase(sub.begin() + drop);
        found = h.contains(sub);
        sub.insert(sub.begin() + drop, e[drop]);
      }
      if (!found) return {false, std::make_pair(e, p)};
    }
  }
  return {true, std::nullopt};
}

PointSet h_region_reduction(const PointSet& s, const std::vector<HalfspaceSpec>& hs) {
  if (hs.empty()) throw std::invalid_argument("h_region_reduction: empty halfspace list");
  std::vector<Point> image;
  image.reserve(s.size());
  for (int i = 0; i < s.size(); ++i) {
    std::vector<Rat> coords;
    coords.reserve(hs.size());
    for (const auto& h : hs) coords.push_back(h.dot(s[i]));
    image.push_back(Point(std::move(coords)));
  }
  return PointSet(std::move(image));
}

FamilyKind downward_orthant_family(int dim) {
  std::vector<HalfspaceSpec> hs;
  for (int axis = 0; axis < dim; ++axis) {
    std::vector<Rat> normal(dim, Rat(0));
    normal[axis] = 1;
    hs.push_back(HalfspaceSpec{std::move(normal)});
  }
  return FamilyKind::h_region(std::move(hs));
}

} // namespace chroma
