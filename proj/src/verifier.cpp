#include "chroma/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <unordered_set>

namespace chroma {

namespace {

// --- shared scan machinery ----------------------------------------------------

struct ScanHit {
  std::vector<long long> region_id; // lexicographic position in the canonical scan order
  std::vector<int> hyperedge;
  std::string detail;
};

struct ScanResult {
  long long checked = 0;
  std::optional<ScanHit> hit;

  void offer(std::vector<long long> id, std::vector<int> verts, std::string detail) {
    if (!hit || id < hit->region_id) hit = ScanHit{std::move(id), std::move(verts), std::move(detail)};
  }
  void merge(const ScanResult& o) {
    checked += o.checked;
    if (o.hit && (!hit || o.hit->region_id < hit->region_id)) hit = o.hit;
  }
};

VerificationReport make_report(const ScanResult& scan, int threshold, ThresholdKind kind,
                               VerifyMode mode, int palette) {
  VerificationReport r;
  r.passed = !scan.hit.has_value();
  r.checked_regions = scan.checked;
  r.threshold = threshold;
  r.threshold_kind = kind;
  r.mode = mode;
  r.palette = palette;
  if (scan.hit) r.witness = VerificationReport::Witness{scan.hit->hyperedge, scan.hit->detail};
  return r;
}

std::vector<int> mask_to_verts(uint64_t mask) {
  std::vector<int> verts;
  while (mask) {
    verts.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return verts;
}

/// Dense pair->color lookup, -1 for pairs outside the coloring domain.
std::vector<int16_t> edge_color_matrix(int n, const EdgeColoring& coloring) {
  std::vector<int16_t> m(static_cast<size_t>(n) * n, -1);
  for (const auto& [e, c] : coloring.items()) {
    m[static_cast<size_t>(e.first) * n + e.second] = static_cast<int16_t>(c);
    m[static_cast<size_t>(e.second) * n + e.first] = static_cast<int16_t>(c);
  }
  return m;
}

std::string edge_violation_detail(int points, int edges_inside, uint64_t color_bits) {
  return std::to_string(points) + " points, " + std::to_string(edges_inside) +
         " Delaunay-edges inside, " + std::to_string(std::popcount(color_bits)) +
         " edge colors";
}

std::string tuple_violation_detail(int points, uint64_t color_bits, VerifyMode mode, int k) {
  return std::to_string(points) + " points, " + std::to_string(std::popcount(color_bits)) +
         (mode == VerifyMode::Polychromatic ? " of " + std::to_string(k) + " tuple colors"
                                            : " tuple colors");
}

/// O(1)-per-lookup rank helpers for pairs and triples.
struct TupleRanker {
  int n = 0;
  std::vector<uint64_t> s1; // s1[v] = sum_{u<v} (n-1-u)
  std::vector<uint64_t> a3; // a3[i] = sum_{v<i} C(n-1-v, 2)
  explicit TupleRanker(int n_) : n(n_), s1(n_ + 1, 0), a3(n_ + 1, 0) {
    for (int v = 0; v < n; ++v) s1[v + 1] = s1[v] + (n - 1 - v);
    for (int v = 0; v < n; ++v) a3[v + 1] = a3[v] + binomial(n - 1 - v, 2);
  }
  uint64_t rank2(int i, int j) const { return s1[i] + (j - i - 1); }
  uint64_t rank3(int i, int j, int k) const {
    return a3[i] + (s1[j] - s1[i + 1]) + (k - j - 1);
  }
};

// Incremental tuple-color tracking while points join a region.
struct TupleTracker {
  const TupleColoring* coloring;
  const TupleRanker* ranker;
  uint64_t color_bits = 0;
  std::vector<int> members; // in join order

  void reset() {
    color_bits = 0;
    members.clear();
  }
  void add(int p) {
    const auto& colors = coloring->colors();
    if (coloring->t() == 2) {
      for (int q : members) {
        auto [i, j] = std::minmax(p, q);
        color_bits |= uint64_t(1) << colors[ranker->rank2(i, j)];
      }
    } else { // t == 3
      for (size_t x = 0; x < members.size(); ++x)
        for (size_t y = x + 1; y < members.size(); ++y) {
          int a = members[x], b = members[y], c = p;
          if (a > b) std::swap(a, b);
          if (b > c) std::swap(b, c);
          if (a > b) std::swap(a, b);
          color_bits |= uint64_t(1) << colors[ranker->rank3(a, b, c)];
        }
    }
    members.push_back(p);
  }
};

uint64_t full_color_bits(VerifyMode mode, int k) {
  if (mode == VerifyMode::Polychromatic) return ((uint64_t(1) << k) - 1) << 1;
  return 0; // proper mode has no fixed target mask; popcount>=2 is checked instead
}

bool colors_complete(uint64_t bits, VerifyMode mode, uint64_t full) {
  if (mode == VerifyMode::Polychromatic) return (bits & full) == full;
  return std::popcount(bits) >= 2;
}

// --- generic reference over a materialized hypergraph --------------------------

ScanResult scan_hypergraph_edges(const Hypergraph& h, const EdgeColoring& coloring,
                                 int threshold, ThresholdKind kind) {
  ScanResult scan;
  long long idx = 0;
  for (const auto& e : h.edges()) {
    ++idx;
    int edges_inside = 0;
    uint64_t color_bits = 0;
    for (const auto& [pair, c] : coloring.items())
      if (std::binary_search(e.begin(), e.end(), pair.first) &&
          std::binary_search(e.begin(), e.end(), pair.second)) {
        ++edges_inside;
        color_bits |= uint64_t(1) << c;
      }
    bool qualifies = kind == ThresholdKind::Points ? static_cast<int>(e.size()) >= threshold
                                                   : edges_inside >= threshold;
    if (!qualifies) continue;
    ++scan.checked;
    if (std::popcount(color_bits) < 2 && !scan.hit)
      scan.offer({idx}, e, edge_violation_detail(static_cast<int>(e.size()), edges_inside,
                                                 color_bits));
  }
  return scan;
}

ScanResult scan_hypergraph_tuples(const Hypergraph& h, const TupleColoring& coloring, int m,
                                  VerifyMode mode) {
  ScanResult scan;
  const int t = coloring.t();
  const uint64_t full = full_color_bits(mode, coloring.k());
  long long idx = 0;
  for (const auto& e : h.edges()) {
    ++idx;
    if (static_cast<int>(e.size()) < m || static_cast<int>(e.size()) < t) continue;
    ++scan.checked;
    if (scan.hit) continue;
    uint64_t bits = 0;
    std::vector<int> pick(t);
    // odometer over t-subsets of e, early exit once complete
    std::vector<int> c(t);
    for (int i = 0; i < t; ++i) c[i] = i;
    bool complete = false;
    for (;;) {
      for (int i = 0; i < t; ++i) pick[i] = e[c[i]];
      bits |= uint64_t(1) << coloring.color_of(pick);
      if (colors_complete(bits, mode, full)) {
        complete = true;
        break;
      }
      int i = t - 1;
      const int sz = static_cast<int>(e.size());
      while (i >= 0 && c[i] == sz - t + i) --i;
      if (i < 0) break;
      ++c[i];
      for (int j = i + 1; j < t; ++j) c[j] = c[j - 1] + 1;
    }
    if (!complete)
      scan.offer({idx}, e,
                 tuple_violation_detail(static_cast<int>(e.size()), bits, mode, coloring.k()));
  }
  return scan;
}

// --- family scan kernels --------------------------------------------------------

bool has_axis_ties(const PointSet& s) {
  for (int axis = 0; axis < s.dim(); ++axis)
    for (int i = 0; i < s.size(); ++i)
      for (int j = i + 1; j < s.size(); ++j)
        if (compare_coord(s, axis, i, j) == 0) return true;
  return false;
}

std::vector<int> sorted_by_axis(const PointSet& s, int axis) {
  std::vector<int> ord(s.size());
  for (int i = 0; i < s.size(); ++i) ord[i] = i;
  std::sort(ord.begin(), ord.end(),
            [&](int a, int b) { return compare_coord(s, axis, a, b) < 0; });
  return ord;
}

/// Halfplane canonical regions: ordered boundary pairs x 4 inclusion variants.
ScanResult scan_halfplanes(const PointSet& s, const EdgeColoring& coloring, int threshold,
                           ThresholdKind kind, bool par) {
  const int n = s.size();
  const auto& items = coloring.items();
  ScanResult total;

#pragma omp parallel if (par)
  {
    ScanResult local;
#pragma omp for schedule(dynamic, 4) nowait
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        uint64_t left = 0;
        for (int k = 0; k < n; ++k) {
          if (k == i || k == j) continue;
          if (orientation(s, i, j, k) > 0) left |= uint64_t(1) << k;
        }
        for (int variant = 0; variant < 4; ++variant) {
          uint64_t mask = left;
          if (variant & 1) mask |= uint64_t(1) << i;
          if (variant & 2) mask |= uint64_t(1) << j;
          if (!mask) continue;
          int edges_inside = 0;
          uint64_t color_bits = 0;
          for (const auto& [pair, c] : items)
            if ((mask >> pair.first & 1) && (mask >> pair.second & 1)) {
              ++edges_inside;
              color_bits |= uint64_t(1) << c;
            }
          bool qualifies = kind == ThresholdKind::Points
                               ? std::popcount(mask) >= threshold
                               : edges_inside >= threshold;
          if (!qualifies) continue;
          ++local.checked;
          if (std::popcount(color_bits) < 2)
            local.offer({(static_cast<long long>(i) * n + j) * 4 + variant},
                        mask_to_verts(mask),
                        edge_violation_detail(std::popcount(mask), edges_inside, color_bits));
        }
      }
    }
#pragma omp critical
    total.merge(local);
  }
  return total;
}

/// Bottomless canonical regions: x-slab (a,b) x y-prefix.
ScanResult scan_bottomless(const PointSet& s, const EdgeColoring& coloring, int threshold,
                           ThresholdKind kind, bool par) {
  const int n = s.size();
  auto matrix = edge_color_matrix(n, coloring);
  std::vector<int> xo = sorted_by_axis(s, 0);
  std::vector<int> yrank(n);
  {
    std::vector<int> yo = sorted_by_axis(s, 1);
    for (int r = 0; r < n; ++r) yrank[yo[r]] = r;
  }
  ScanResult total;

#pragma omp parallel if (par)
  {
    ScanResult local;
    std::vector<int> slab;
#pragma omp for schedule(dynamic) nowait
    for (int a = 0; a < n; ++a) {
      for (int b = a; b < n; ++b) {
        slab.assign(xo.begin() + a, xo.begin() + b + 1);
        std::sort(slab.begin(), slab.end(), [&](int p, int q) { return yrank[p] < yrank[q]; });
        uint64_t mask = 0, color_bits = 0;
        int edges_inside = 0;
        const int sz = static_cast<int>(slab.size());
        for (int len = 1; len <= sz; ++len) {
          int p = slab[len - 1];
          for (int t = 0; t < len - 1; ++t) {
            int16_t c = matrix[static_cast<size_t>(p) * n + slab[t]];
            if (c >= 0) {
              ++edges_inside;
              color_bits |= uint64_t(1) << c;
            }
          }
          mask |= uint64_t(1) << p;
          bool qualifies =
              kind == ThresholdKind::Points ? len >= threshold : edges_inside >= threshold;
          if (qualifies) {
            ++local.checked;
            if (std::popcount(color_bits) < 2) {
              local.offer({a, b, len}, mask_to_verts(mask),
                          edge_violation_detail(len, edges_inside, color_bits));
              break; // longer prefixes in this slab would not be the first witness
            }
          }
          // Once two colors are present every longer prefix passes too.
          if (kind == ThresholdKind::Points && std::popcount(color_bits) >= 2) {
            local.checked += std::max(0, sz - std::max(len, threshold - 1));
            break;
          }
        }
      }
    }
#pragma omp critical
    total.merge(local);
  }
  return total;
}

/// Axis-rectangle canonical regions: x-slab (a,b) x y-run [lo,hi].
ScanResult scan_axis_rect(const PointSet& s, const EdgeColoring& coloring, int threshold,
                          ThresholdKind kind, bool par) {
  const int n = s.size();
  auto matrix = edge_color_matrix(n, coloring);
  std::vector<int> xo = sorted_by_axis(s, 0);
  std::vector<int> yrank(n);
  {
    std::vector<int> yo = sorted_by_axis(s, 1);
    for (int r = 0; r < n; ++r) yrank[yo[r]] = r;
  }
  ScanResult total;

#pragma omp parallel if (par)
  {
    ScanResult local;
    std::vector<int> slab;
#pragma omp for schedule(dynamic) nowait
    for (int a = 0; a < n; ++a) {
      for (int b = a; b < n; ++b) {
        slab.assign(xo.begin() + a, xo.begin() + b + 1);
        std::sort(slab.begin(), slab.end(), [&](int p, int q) { return yrank[p] < yrank[q]; });
        const int sz = static_cast<int>(slab.size());
        for (int lo = 0; lo < sz; ++lo) {
          uint64_t mask = 0, color_bits = 0;
          int edges_inside = 0;
          for (int hi = lo; hi < sz; ++hi) {
            int p = slab[hi];
            for (int t = lo; t < hi; ++t) {
              int16_t c = matrix[static_cast<size_t>(p) * n + slab[t]];
              if (c >= 0) {
                ++edges_inside;
                color_bits |= uint64_t(1) << c;
              }
            }
            mask |= uint64_t(1) << p;
            int len = hi - lo + 1;
            bool qualifies =
                kind == ThresholdKind::Points ? len >= threshold : edges_inside >= threshold;
            if (qualifies) {
              ++local.checked;
              if (std::popcount(color_bits) < 2) {
                local.offer({a, b, lo, hi}, mask_to_verts(mask),
                            edge_violation_detail(len, edges_inside, color_bits));
                break;
              }
            }
            if (kind == ThresholdKind::Points && std::popcount(color_bits) >= 2) {
              local.checked += std::max(0, sz - 1 - std::max(hi, lo + threshold - 2));
              break;
            }
          }
        }
      }
    }
#pragma omp critical
    total.merge(local);
  }
  return total;
}

/// Disk canonical regions: diametral-pair and three-point circles with
/// boundary inclusion variants.
ScanResult scan_disks(const PointSet& s, const EdgeColoring* edge_coloring,
                      const TupleColoring* tuple_coloring, int threshold, ThresholdKind kind,
                      VerifyMode mode, bool par) {
  const int n = s.size();
  std::optional<TupleRanker> ranker;
  if (tuple_coloring) ranker.emplace(n);

  // Cocircular quadruples would make boundary variants unrealizable; reject
  // them before entering the parallel region.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        auto c = circumcircle(s[i], s[j], s[k]);
        if (!c) continue;
        for (int l = k + 1; l < n; ++l)
          if (c->side(s[l]) == 0)
            throw GeneralPositionError("disk family: >=4 cocircular points");
      }

  // Candidate circles in canonical order: pairs (i<j) then triples (i<j<k).
  std::vector<std::array<int, 3>> circles;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) circles.push_back({i, j, -1});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) circles.push_back({i, j, k});

  const uint64_t full = tuple_coloring ? full_color_bits(mode, tuple_coloring->k()) : 0;
  ScanResult total;

#pragma omp parallel if (par)
  {
    ScanResult local;
#pragma omp for schedule(dynamic, 8) nowait
    for (size_t ci = 0; ci < circles.size(); ++ci) {
      auto [i, j, k] = circles[ci];
      std::optional<Circle> circle =
          k < 0 ? std::optional<Circle>(diametral_circle(s[i], s[j]))
                : circumcircle(s[i], s[j], s[k]);
      if (!circle) continue;
      uint64_t inside = 0;
      std::vector<int> boundary;
      for (int p = 0; p < n; ++p) {
        int side = circle->side(s[p]);
        if (side < 0) inside |= uint64_t(1) << p;
        else if (side == 0) boundary.push_back(p);
      }
      for (int vm = 0; vm < (1 << boundary.size()); ++vm) {
        uint64_t mask = inside;
        for (size_t t = 0; t < boundary.size(); ++t)
          if (vm & (1 << t)) mask |= uint64_t(1) << boundary[t];
        if (!mask) continue;
        int points = std::popcount(mask);

        if (edge_coloring) {
          int edges_inside = 0;
          uint64_t color_bits = 0;
          for (const auto& [pair, c] : edge_coloring->items())
            if ((mask >> pair.first & 1) && (mask >> pair.second & 1)) {
              ++edges_inside;
              color_bits |= uint64_t(1) << c;
            }
          bool qualifies =
              kind == ThresholdKind::Points ? points >= threshold : edges_inside >= threshold;
          if (!qualifies) continue;
          ++local.checked;
          if (std::popcount(color_bits) < 2)
            local.offer({static_cast<long long>(ci), vm}, mask_to_verts(mask),
                        edge_violation_detail(points, edges_inside, color_bits));
        } else {
          if (points < threshold || points < tuple_coloring->t()) continue;
          ++local.checked;
          std::vector<int> verts = mask_to_verts(mask);
          TupleTracker tracker{tuple_coloring, &*ranker, 0, {}};
          bool complete = false;
          for (int v : verts) {
            tracker.add(v);
            if (colors_complete(tracker.color_bits, mode, full)) {
              complete = true;
              break;
            }
          }
          if (!complete)
            local.offer({static_cast<long long>(ci), vm}, std::move(verts),
                        tuple_violation_detail(points, tracker.color_bits, mode,
                                               tuple_coloring->k()));
        }
      }
    }
#pragma omp critical
    total.merge(local);
  }
  return total;
}

/// Box canonical regions in any dimension: nested per-axis slabs, innermost
/// axis swept as runs with incremental tuple tracking.
ScanResult scan_boxes(const PointSet& s, const TupleColoring& coloring, int m, VerifyMode mode,
                      bool par) {
  const int n = s.size();
  const int d = s.dim();
  TupleRanker ranker(n);
  const uint64_t full = full_color_bits(mode, coloring.k());
  const int t = coloring.t();

  // Ranks per axis for cheap comparisons.
  std::vector<std::vector<int>> axis_rank(d, std::vector<int>(n));
  for (int axis = 0; axis < d; ++axis) {
    auto ord = sorted_by_axis(s, axis);
    for (int r = 0; r < n; ++r) axis_rank[axis][ord[r]] = r;
  }

  struct Frame {
    ScanResult* local;
    const PointSet* s;
  };

  // Innermost sweep over runs of `pts` sorted by the last axis. A run
  // qualifies once it holds >= max(m, t) points; colors only accumulate as a
  // run grows, so after the color set completes every longer run passes and
  // is counted arithmetically.
  const int qualify = std::max(m, t);
  auto sweep_runs = [&](std::vector<int> pts, std::vector<long long> id_prefix,
                        ScanResult& local) {
    std::sort(pts.begin(), pts.end(), [&](int a, int b) {
      return axis_rank[d - 1][a] < axis_rank[d - 1][b];
    });
    const int sz = static_cast<int>(pts.size());
    TupleTracker tracker{&coloring, &ranker, 0, {}};
    for (int lo = 0; lo + qualify <= sz; ++lo) {
      tracker.reset();
      for (int hi = lo; hi < sz; ++hi) {
        tracker.add(pts[hi]);
        int len = hi - lo + 1;
        bool complete = colors_complete(tracker.color_bits, mode, full);
        if (len >= qualify) {
          ++local.checked;
          if (!complete) {
            std::vector<long long> id = id_prefix;
            id.push_back(lo);
            id.push_back(hi);
            std::vector<int> verts(pts.begin() + lo, pts.begin() + hi + 1);
            std::sort(verts.begin(), verts.end());
            local.offer(std::move(id), std::move(verts),
                        tuple_violation_detail(len, tracker.color_bits, mode, coloring.k()));
            break;
          }
          local.checked += sz - 1 - hi; // longer runs all qualify and pass
          break;
        }
        if (complete) {
          local.checked += std::max(0, sz - lo - qualify + 1);
          break;
        }
      }
    }
  };

  auto scan_axis = [&](auto&& self, int axis, std::vector<int> pts,
                       std::vector<long long> id_prefix, ScanResult& local) -> void {
    if (axis == d - 1) {
      sweep_runs(std::move(pts), std::move(id_prefix), local);
      return;
    }
    std::sort(pts.begin(), pts.end(),
              [&](int a, int b) { return axis_rank[axis][a] < axis_rank[axis][b]; });
    const int sz = static_cast<int>(pts.size());
    for (int a = 0; a < sz; ++a)
      for (int b = a; b < sz; ++b) {
        if (b - a + 1 < std::max(m, t)) continue; // slab already too small
        std::vector<long long> id = id_prefix;
        id.push_back(a);
        id.push_back(b);
        self(self, axis + 1, std::vector<int>(pts.begin() + a, pts.begin() + b + 1),
             std::move(id), local);
      }
  };

  ScanResult total;
  if (d == 1) {
    ScanResult local;
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    sweep_runs(all, {}, local);
    total.merge(local);
    return total;
  }

  // Parallelize over the first-axis slab (a,b).
  std::vector<int> top = sorted_by_axis(s, 0);
  std::vector<std::pair<int, int>> top_slabs;
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b)
      if (b - a + 1 >= std::max(m, t)) top_slabs.emplace_back(a, b);

#pragma omp parallel if (par)
  {
    ScanResult local;
#pragma omp for schedule(dynamic) nowait
    for (size_t w = 0; w < top_slabs.size(); ++w) {
      auto [a, b] = top_slabs[w];
      scan_axis(scan_axis, 1, std::vector<int>(top.begin() + a, top.begin() + b + 1),
                {a, b}, local);
    }
#pragma omp critical
    total.merge(local);
  }
  return total;
}

/// H-region canonical regions: one offset choice per halfspace.
ScanResult scan_h_regions(const PointSet& s, const std::vector<HalfspaceSpec>& hs,
                          const TupleColoring& coloring, int m, VerifyMode mode, bool par) {
  const int n = s.size();
  TupleRanker ranker(n);
  const uint64_t full = full_color_bits(mode, coloring.k());
  const int t = coloring.t();

  struct Level {
    std::vector<uint64_t> prefix_mask; // k = 0..#values; k-th = smallest k value-groups
  };
  std::vector<Level> levels;
  for (const auto& h : hs) {
    std::vector<Rat> proj;
    for (int i = 0; i < n; ++i) proj.push_back(h.dot(s[i]));
    std::vector<Rat> vals = proj;
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    Level lv;
    lv.prefix_mask.assign(vals.size() + 1, 0);
    for (size_t k = 1; k <= vals.size(); ++k) {
      uint64_t mask = 0;
      for (int i = 0; i < n; ++i)
        if (proj[i] <= vals[k - 1]) mask |= uint64_t(1) << i;
      lv.prefix_mask[k] = mask;
    }
    levels.push_back(std::move(lv));
  }

  auto check_mask = [&](uint64_t mask, std::vector<long long> id, ScanResult& local) {
    int points = std::popcount(mask);
    if (points < m || points < t) return;
    ++local.checked;
    std::vector<int> verts = mask_to_verts(mask);
    TupleTracker tracker{&coloring, &ranker, 0, {}};
    for (int v : verts) {
      tracker.add(v);
      if (colors_complete(tracker.color_bits, mode, full)) return;
    }
    local.offer(std::move(id), std::move(verts),
                tuple_violation_detail(points, tracker.color_bits, mode, coloring.k()));
  };

  // Offsets per halfspace: k proper prefixes for k = 0..#values-1 plus the
  // absent constraint, i.e. n+1 choices under general position.
  const uint64_t all = n == 64 ? ~uint64_t(0) : (uint64_t(1) << n) - 1;
  auto offset_mask = [&](size_t level, size_t k, uint64_t mask) {
    const auto& pm = levels[level].prefix_mask;
    return k + 1 == pm.size() ? mask : mask & pm[k];
  };
  auto recurse = [&](auto&& self, size_t level, uint64_t mask, std::vector<long long>& id,
                     ScanResult& local) -> void {
    if (std::popcount(mask) < std::max(m, t)) return; // cannot qualify below threshold
    if (level == levels.size()) {
      check_mask(mask, id, local);
      return;
    }
    for (size_t k = 0; k < levels[level].prefix_mask.size(); ++k) {
      id.push_back(static_cast<long long>(k));
      self(self, level + 1, offset_mask(level, k, mask), id, local);
      id.pop_back();
    }
  };

  ScanResult total;
  const size_t top_choices = levels[0].prefix_mask.size();
#pragma omp parallel if (par)
  {
    ScanResult local;
#pragma omp for schedule(dynamic) nowait
    for (size_t k = 0; k < top_choices; ++k) {
      std::vector<long long> id{static_cast<long long>(k)};
      recurse(recurse, 1, offset_mask(0, k, all), id, local);
    }
#pragma omp critical
    total.merge(local);
  }
  return total;
}

} // namespace

// --- verify entry points ----------------------------------------------------------

VerificationReport verify_edge_coloring_ref(const PointSet& s, const FamilyKind& family,
                                            const EdgeColoring& coloring, int threshold,
                                            ThresholdKind kind) {
  if (!(coloring.domain() == delaunay_edges(s, family)))
    throw std::invalid_argument("verify_edge_coloring: coloring domain != Delaunay-edges");
  Hypergraph h = canonical_hyperedges(s, family);
  ScanResult scan = scan_hypergraph_edges(h, coloring, threshold, kind);
  return make_report(scan, threshold, kind, VerifyMode::Proper, 2);
}

VerificationReport verify_edge_coloring(const PointSet& s, const FamilyKind& family,
                                        const EdgeColoring& coloring, int threshold,
                                        ThresholdKind kind, ExecPolicy policy) {
  if (!(coloring.domain() == delaunay_edges(s, family)))
    throw std::invalid_argument("verify_edge_coloring: coloring domain != Delaunay-edges");
  if (s.size() > 64 || coloring.k() > 60)
    return verify_edge_coloring_ref(s, family, coloring, threshold, kind);
  const bool par = policy == ExecPolicy::Parallel;

  ScanResult scan;
  switch (family.type) {
    case FamilyType::Halfplane:
      scan = scan_halfplanes(s, coloring, threshold, kind, par);
      break;
    case FamilyType::BottomlessRect:
      if (has_axis_ties(s)) return verify_edge_coloring_ref(s, family, coloring, threshold, kind);
      scan = scan_bottomless(s, coloring, threshold, kind, par);
      break;
    case FamilyType::AxisRect:
      if (has_axis_ties(s)) return verify_edge_coloring_ref(s, family, coloring, threshold, kind);
      scan = scan_axis_rect(s, coloring, threshold, kind, par);
      break;
    case FamilyType::Disk:
      scan = scan_disks(s, &coloring, nullptr, threshold, kind, VerifyMode::Proper, par);
      break;
    default:
      return verify_edge_coloring_ref(s, family, coloring, threshold, kind);
  }
  return make_report(scan, threshold, kind, VerifyMode::Proper, 2);
}

VerificationReport verify_tuple_coloring_ref(const PointSet& s, const FamilyKind& family,
                                             const TupleColoring& coloring, int m,
                                             VerifyMode mode) {
  if (coloring.n() != s.size())
    throw std::invalid_argument("verify_tuple_coloring: coloring is not over this point set");
  Hypergraph h = canonical_hyperedges(s, family);
  ScanResult scan = scan_hypergraph_tuples(h, coloring, m, mode);
  return make_report(scan, m, ThresholdKind::Points, mode, coloring.k());
}

VerificationReport verify_tuple_coloring(const PointSet& s, const FamilyKind& family,
                                         const TupleColoring& coloring, int m, VerifyMode mode,
                                         ExecPolicy policy) {
  if (coloring.n() != s.size())
    throw std::invalid_argument("verify_tuple_coloring: coloring is not over this point set");
  if (s.size() > 64 || coloring.k() > 60 || coloring.t() < 2 || coloring.t() > 3)
    return verify_tuple_coloring_ref(s, family, coloring, m, mode);
  const bool par = policy == ExecPolicy::Parallel;

  ScanResult scan;
  switch (family.type) {
    case FamilyType::AxisRect:
    case FamilyType::BoxD:
      if (family.type == FamilyType::AxisRect && s.dim() != 2)
        throw std::invalid_argument("axis-rect family requires d=2");
      if (has_axis_ties(s)) return verify_tuple_coloring_ref(s, family, coloring, m, mode);
      scan = scan_boxes(s, coloring, m, mode, par);
      break;
    case FamilyType::HRegion:
      scan = scan_h_regions(s, family.halfspaces, coloring, m, mode, par);
      break;
    case FamilyType::Disk:
      scan = scan_disks(s, nullptr, &coloring, m, ThresholdKind::Points, mode, par);
      break;
    default:
      return verify_tuple_coloring_ref(s, family, coloring, m, mode);
  }
  return make_report(scan, m, ThresholdKind::Points, mode, coloring.k());
}

VerificationReport verify_tuple_coloring_on_hypergraph(const Hypergraph& h,
                                                       const TupleColoring& coloring, int m,
                                                       VerifyMode mode) {
  if (coloring.n() != h.n())
    throw std::invalid_argument("verify_tuple_coloring: coloring is not over this vertex set");
  ScanResult scan = scan_hypergraph_tuples(h, coloring, m, mode);
  return make_report(scan, m, ThresholdKind::Points, mode, coloring.k());
}

bool witness_violates_edge_guarantee(const std::vector<int>& hyperedge,
                                     const EdgeColoring& coloring, int threshold,
                                     ThresholdKind kind) {
  std::vector<int> e = hyperedge;
  std::sort(e.begin(), e.end());
  int edges_inside = 0;
  uint64_t color_bits = 0;
  for (const auto& [pair, c] : coloring.items())
    if (std::binary_search(e.begin(), e.end(), pair.first) &&
        std::binary_search(e.begin(), e.end(), pair.second)) {
      ++edges_inside;
      color_bits |= uint64_t(1) << c;
    }
  bool qualifies = kind == ThresholdKind::Points ? static_cast<int>(e.size()) >= threshold
                                                 : edges_inside >= threshold;
  return qualifies && std::popcount(color_bits) < 2;
}

bool witness_violates_tuple_guarantee(const std::vector<int>& hyperedge,
                                      const TupleColoring& coloring, int m, VerifyMode mode) {
  std::vector<int> e = hyperedge;
  std::sort(e.begin(), e.end());
  if (static_cast<int>(e.size()) < m || static_cast<int>(e.size()) < coloring.t()) return false;
  Hypergraph h = Hypergraph::from_edges(coloring.n(), {e});
  ScanResult scan = scan_hypergraph_tuples(h, coloring, m, mode);
  return scan.hit.has_value();
}

// --- impossibility -----------------------------------------------------------------

bool exhaustive_impossibility(const PointSet& s, const FamilyKind& family, int threshold,
                              int num_colors, ImpossibilityTarget target, ThresholdKind kind,
                              long long budget, ExecPolicy policy) {
  if (num_colors < 1) throw std::invalid_argument("exhaustive_impossibility: need >= 1 color");
  const int n = s.size();

  std::vector<std::pair<int, int>> domain;
  if (target == ImpossibilityTarget::DelaunayEdges) {
    domain = delaunay_edges(s, family).pairs();
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) domain.emplace_back(i, j);
  }
  const int d = static_cast<int>(domain.size());

  // Qualifying canonical regions with the domain items they contain.
  std::vector<std::vector<int>> regions;
  Hypergraph canonical = canonical_hyperedges(s, family);
  for (const auto& e : canonical.edges()) {
    std::vector<int> inside;
    for (int idx = 0; idx < d; ++idx)
      if (std::binary_search(e.begin(), e.end(), domain[idx].first) &&
          std::binary_search(e.begin(), e.end(), domain[idx].second))
        inside.push_back(idx);
    bool qualifies = kind == ThresholdKind::Points
                         ? static_cast<int>(e.size()) >= threshold
                         : static_cast<int>(inside.size()) >= threshold;
    if (!qualifies) continue;
    if (inside.size() < 2) return true; // cannot ever show two colors
    regions.push_back(std::move(inside));
  }
  if (regions.empty()) return false; // guarantee vacuous, the all-1 coloring works
  if (num_colors == 1) return true;  // some region qualifies but one color is available

  long long total = 1;
  for (int i = 0; i < d; ++i) {
    if (total > budget / num_colors)
      throw BudgetExceededError("exhaustive_impossibility: " + std::to_string(d) +
                                " items exceed the coloring budget");
    total *= num_colors;
  }

  std::atomic<bool> satisfiable{false};
  const bool par = policy == ExecPolicy::Parallel;
#pragma omp parallel for if (par) schedule(static)
  for (long long code = 0; code < total; ++code) {
    if (satisfiable.load(std::memory_order_relaxed)) continue;
    int colors[64];
    long long v = code;
    for (int i = 0; i < d; ++i) {
      colors[i] = static_cast<int>(v % num_colors);
      v /= num_colors;
    }
    bool ok = true;
    for (const auto& region : regions) {
      int first = colors[region[0]];
      bool two = false;
      for (size_t i = 1; i < region.size() && !two; ++i) two = colors[region[i]] != first;
      if (!two) { ok = false; break; }
    }
    if (ok) satisfiable.store(true, std::memory_order_relaxed);
  }
  return !satisfiable.load();
}

PointSet find_bottomless_counterexample(long long budget) {
  std::vector<int> ys{0, 1, 2, 3, 4};
  long long tried = 0;
  do {
    if (++tried > budget)
      throw BudgetExceededError("find_bottomless_counterexample: budget exhausted");
    std::vector<Point> pts;
    for (int i = 0; i < 5; ++i) pts.push_back(make_point({i, ys[i]}));
    PointSet candidate(std::move(pts));
    if (exhaustive_impossibility(candidate, FamilyKind::bottomless(), 3, 2,
                                 ImpossibilityTarget::DelaunayEdges, ThresholdKind::Points,
                                 1 << 24, ExecPolicy::Serial))
      return candidate;
  } while (std::next_permutation(ys.begin(), ys.end()));
  throw BudgetExceededError("find_bottomless_counterexample: search space exhausted");
}

PointSet bottomless_counterexample_fixture() {
  return PointSet({make_point({0, 0}), make_point({1, 1}), make_point({2, 4}),
                   make_point({3, 2}), make_point({4, 3})});
}

// --- relation hypergraph --------------------------------------------------------------

Hypergraph relation_hypergraph(const Hypergraph& h1, const Hypergraph& h2, Relation relation) {
  if (h1.n() != h2.n())
    throw std::invalid_argument("relation_hypergraph: vertex universes differ");
  auto intersects = [](const std::vector<int>& a, const std::vector<int>& b) {
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] == b[j]) return true;
      if (a[i] < b[j]) ++i;
      else ++j;
    }
    return false;
  };

  std::vector<std::vector<int>> out_edges;
  for (const auto& e2 : h2.edges()) {
    std::vector<int> members;
    for (size_t i = 0; i < h1.edges().size(); ++i) {
      const auto& e1 = h1.edges()[i];
      bool related = false;
      switch (relation) {
        case Relation::Containment:
          related = std::includes(e2.begin(), e2.end(), e1.begin(), e1.end());
          break;
        case Relation::ReverseContainment:
          related = std::includes(e1.begin(), e1.end(), e2.begin(), e2.end());
          break;
        case Relation::Intersection:
          related = intersects(e1, e2);
          break;
      }
      if (related) members.push_back(static_cast<int>(i));
    }
    if (!members.empty()) out_edges.push_back(std::move(members));
  }
  return Hypergraph::from_edges(static_cast<int>(h1.edges().size()), std::move(out_edges));
}

} // namespace chroma
