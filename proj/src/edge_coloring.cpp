#include "chroma/edge_coloring.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "chroma/planarity.hpp"

namespace chroma {

namespace {

int ceil_log2(int n) {
  int c = 0;
  while ((1 << c) < n) ++c;
  return c;
}

std::pair<int, int> norm(int i, int j) { return i < j ? std::make_pair(i, j) : std::make_pair(j, i); }

void require_distinct_coords(const PointSet& s, const char* who) {
  for (int axis = 0; axis < s.dim(); ++axis)
    for (int i = 0; i < s.size(); ++i)
      for (int j = i + 1; j < s.size(); ++j)
        if (compare_coord(s, axis, i, j) == 0)
          throw GeneralPositionError(std::string(who) + ": coordinate tie between points " +
                                     std::to_string(i) + "," + std::to_string(j));
}

} // namespace

EdgeColoring EdgeColoring::from_assignments(
    std::vector<std::pair<std::pair<int, int>, int>> items) {
  EdgeColoring c;
  for (auto& [e, col] : items) {
    if (e.first == e.second) throw std::invalid_argument("edge coloring: self-loop");
    if (e.first > e.second) std::swap(e.first, e.second);
    if (col < 1) throw std::invalid_argument("edge coloring: colors start at 1");
    c.k_ = std::max(c.k_, col);
  }
  std::sort(items.begin(), items.end());
  for (size_t i = 1; i < items.size(); ++i)
    if (items[i].first == items[i - 1].first)
      throw std::invalid_argument("edge coloring: duplicate pair");
  c.items_ = std::move(items);
  return c;
}

int EdgeColoring::color_of(int i, int j) const {
  auto key = norm(i, j);
  auto it = std::lower_bound(items_.begin(), items_.end(), key,
                             [](const auto& item, const auto& k) { return item.first < k; });
  if (it == items_.end() || it->first != key)
    throw std::invalid_argument("edge coloring: pair not in domain");
  return it->second;
}

bool EdgeColoring::has(int i, int j) const {
  auto key = norm(i, j);
  auto it = std::lower_bound(items_.begin(), items_.end(), key,
                             [](const auto& item, const auto& k) { return item.first < k; });
  return it != items_.end() && it->first == key;
}

EdgeSet EdgeColoring::domain() const {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(items_.size());
  for (const auto& [e, col] : items_) pairs.push_back(e);
  return EdgeSet::from_pairs(std::move(pairs));
}

// --- halfplanes --------------------------------------------------------------

std::vector<std::pair<int, int>> halfplane_edge_traversal(const PointSet& s) {
  const int n = s.size();
  if (n < 2) return {};
  if (n == 2) return {{0, 1}};

  EdgeSet edges = delaunay_edges(s, FamilyKind::halfplane());
  std::vector<int> hull = convex_hull(s);
  const int m = static_cast<int>(hull.size());

  std::vector<std::vector<int>> incident(n);
  for (auto [a, b] : edges.pairs()) {
    incident[a].push_back(b);
    incident[b].push_back(a);
  }

  std::vector<std::pair<int, int>> order;
  order.reserve(edges.size());
  std::vector<char> done(n * n, 0);
  auto visit = [&](int a, int b) {
    auto [i, j] = norm(a, b);
    if (done[i * n + j]) return;
    done[i * n + j] = 1;
    order.emplace_back(i, j);
  };

  // Clockwise hull walk: hull[0], hull[m-1], ..., hull[1]. At each vertex,
  // sweep its star counter-clockwise from the hull side toward the next walk
  // vertex; the star lies in a cone of angle < pi, so a single cross-product
  // comparator sorts it.
  for (int step = 0; step < m; ++step) {
    int pos = step == 0 ? 0 : m - step;
    int v = hull[pos];
    int nxt = hull[(pos + 1) % m];
    std::vector<int> star = incident[v];
    std::sort(star.begin(), star.end(), [&](int a, int b) {
      if (a == b) return false;
      if (a == nxt) return true;
      if (b == nxt) return false;
      return orientation(s, v, a, b) > 0;
    });
    for (int u : star) visit(v, u);
  }
  if (static_cast<int>(order.size()) != edges.size())
    throw InternalInconsistencyError("halfplane traversal missed Delaunay-edges");
  return order;
}

EdgeColoring color_halfplane_edges(const PointSet& s) {
  auto order = halfplane_edge_traversal(s);
  std::vector<std::pair<std::pair<int, int>, int>> items;
  items.reserve(order.size());
  for (size_t i = 0; i < order.size(); ++i)
    items.push_back({order[i], static_cast<int>(i % 2) + 1});
  return EdgeColoring::from_assignments(std::move(items));
}

// --- bottomless rectangles ---------------------------------------------------

EdgeColoring color_bottomless_edges(
    const PointSet& s, const std::function<void(const BottomlessSweepStep&)>& observer) {
  const int n = s.size();
  require_distinct_coords(s, "color_bottomless_edges");

  std::vector<int> by_y(n);
  for (int i = 0; i < n; ++i) by_y[i] = i;
  std::sort(by_y.begin(), by_y.end(), [&](int a, int b) { return compare_coord(s, 1, a, b) < 0; });

  std::map<std::pair<int, int>, int> color;
  std::vector<int> cur; // inserted points, sorted by x
  auto col = [&](int a, int b) { return color.at(norm(a, b)); };
  auto set_col = [&](int a, int b, int c) { color[norm(a, b)] = c; };

  for (int p : by_y) {
    auto it = std::lower_bound(cur.begin(), cur.end(), p,
                               [&](int a, int b) { return compare_coord(s, 0, a, b) < 0; });
    int pos = static_cast<int>(it - cur.begin());
    cur.insert(it, p);
    const int k = static_cast<int>(cur.size());
    const int i1 = pos + 1; // 1-based rank of p in the horizontal order

    if (k >= 2 && k <= 3) {
      // With at most two neighborly edges, differ from the unique colored
      // neighbor if there is one.
      std::vector<std::pair<int, int>> fresh;
      if (pos > 0) fresh.push_back({cur[pos - 1], cur[pos]});
      if (pos < k - 1) fresh.push_back({cur[pos], cur[pos + 1]});
      for (auto [a, b] : fresh) {
        int ia = static_cast<int>(std::find(cur.begin(), cur.end(), a) - cur.begin());
        int ib = static_cast<int>(std::find(cur.begin(), cur.end(), b) - cur.begin());
        int lo = std::min(ia, ib), hi = std::max(ia, ib);
        std::optional<int> adjacent;
        if (lo > 0 && color.count(norm(cur[lo - 1], cur[lo]))) adjacent = col(cur[lo - 1], cur[lo]);
        if (hi < k - 1 && color.count(norm(cur[hi], cur[hi + 1])))
          adjacent = col(cur[hi], cur[hi + 1]);
        set_col(a, b, adjacent ? 3 - *adjacent : 1);
      }
    } else if (k >= 4) {
      if (i1 == 1) {
        set_col(cur[0], cur[1], 3 - col(cur[1], cur[2]));
      } else if (i1 == k) {
        set_col(cur[k - 2], cur[k - 1], 3 - col(cur[k - 3], cur[k - 2]));
      } else if (i1 == 2) {
        int c = 3 - col(cur[2], cur[3]);
        set_col(cur[0], cur[1], c);
        set_col(cur[1], cur[2], c);
      } else if (i1 == k - 1) {
        int c = 3 - col(cur[k - 4], cur[k - 3]);
        set_col(cur[k - 3], cur[k - 2], c);
        set_col(cur[k - 2], cur[k - 1], c);
      } else {
        int left = col(cur[pos - 2], cur[pos - 1]);
        int right = col(cur[pos + 1], cur[pos + 2]);
        if (left == right) {
          set_col(cur[pos - 1], cur[pos], 3 - left);
          set_col(cur[pos], cur[pos + 1], 3 - left);
        } else {
          set_col(cur[pos - 1], cur[pos], right);
          set_col(cur[pos], cur[pos + 1], left);
        }
      }
    }

    if (observer) {
      BottomlessSweepStep step;
      step.inserted = p;
      step.left_to_right = cur;
      for (int t = 0; t + 1 < k; ++t) step.neighborly_colors.push_back(col(cur[t], cur[t + 1]));
      observer(step);
    }
  }

  // Neighborly edges stay Delaunay-edges; anything never swept falls back to
  // color 1 so the domain covers the whole Delaunay-graph.
  EdgeSet domain = delaunay_edges(s, FamilyKind::bottomless());
  std::vector<std::pair<std::pair<int, int>, int>> items;
  items.reserve(domain.size());
  for (auto e : domain.pairs()) {
    auto it = color.find(e);
    items.push_back({e, it == color.end() ? 1 : it->second});
  }
  return EdgeColoring::from_assignments(std::move(items));
}

// --- Hasse diagrams and rectangles -------------------------------------------

EdgeColoring hasse_edge_coloring(const Poset& p) {
  std::vector<int> ext = p.linear_extension();
  std::vector<int> pos(p.n());
  for (size_t i = 0; i < ext.size(); ++i) pos[ext[i]] = static_cast<int>(i);

  // Color of an arc = ceil(log2 len) of the extension segment at which its
  // endpoints first fall into different halves (first half = ceil(len/2)).
  auto arc_color = [&](int a, int b) {
    int lo = 0, hi = p.n();
    for (;;) {
      int len = hi - lo;
      int mid = lo + (len + 1) / 2;
      if (a < mid && b >= mid) return ceil_log2(len);
      if (b < mid) hi = mid;
      else lo = mid;
    }
  };

  std::vector<std::pair<std::pair<int, int>, int>> items;
  items.reserve(p.hasse().size());
  for (auto [x, y] : p.hasse()) items.push_back({norm(x, y), arc_color(pos[x], pos[y])});
  return EdgeColoring::from_assignments(std::move(items));
}

EdgeColoring color_rectangle_edges(const PointSet& s) {
  if (s.dim() != 2) throw std::invalid_argument("color_rectangle_edges: requires d=2");
  require_distinct_coords(s, "color_rectangle_edges");
  const int n = s.size();

  std::vector<std::pair<int, int>> dom, anti;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (compare_coord(s, 0, i, j) >= 0) continue;
      if (compare_coord(s, 1, i, j) < 0) dom.emplace_back(i, j);
      else anti.emplace_back(i, j);
    }
  Poset p1 = Poset::from_strict_pairs(n, dom);
  Poset p2 = Poset::from_strict_pairs(n, anti);
  EdgeColoring c1 = hasse_edge_coloring(p1);
  EdgeColoring c2 = hasse_edge_coloring(p2);

  const int offset = ceil_log2(std::max(n, 1)); // disjoint palettes
  std::vector<std::pair<std::pair<int, int>, int>> items;
  for (const auto& [e, c] : c1.items()) items.push_back({e, c});
  for (const auto& [e, c] : c2.items()) items.push_back({e, c + offset});
  EdgeColoring out = EdgeColoring::from_assignments(std::move(items));

  if (!(out.domain() == delaunay_edges(s, FamilyKind::axis_rect())))
    throw InternalInconsistencyError(
        "rectangle Delaunay-graph is not the union of the two Hasse diagrams");
  return out;
}

// --- disks -------------------------------------------------------------------

ConflictGraph build_conflict_graph_j(const PointSet& s) {
  Hypergraph h = canonical_hyperedges(s, FamilyKind::disk());
  ConflictGraph out;
  for (const auto& e : h.edges())
    if (e.size() == 2) out.delaunay_edges.emplace_back(e[0], e[1]);
  out.g.n = static_cast<int>(out.delaunay_edges.size());

  for (int a = 0; a < out.g.n; ++a)
    for (int b = a + 1; b < out.g.n; ++b) {
      auto [p, q] = out.delaunay_edges[a];
      auto [r, t] = out.delaunay_edges[b];
      std::vector<int> uni{p, q, r, t};
      std::sort(uni.begin(), uni.end());
      uni.erase(std::unique(uni.begin(), uni.end()), uni.end());
      if (uni.size() != 3) continue; // must share exactly one endpoint
      if (h.contains(uni)) out.g.edges.emplace_back(a, b);
    }
  return out;
}

std::optional<std::vector<int>> color_graph_exact(const SimpleGraph& g, int max_colors) {
  const int n = g.n;
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : g.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> colors(n, 0);

  // DSATUR order: most saturated first, then highest degree, then index.
  auto pick = [&]() {
    int best = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (colors[v]) continue;
      unsigned used = 0;
      for (int u : adj[v])
        if (colors[u]) used |= 1u << colors[u];
      int sat = std::popcount(used);
      int deg = static_cast<int>(adj[v].size());
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    return best;
  };

  auto solve = [&](auto&& self, int remaining) -> bool {
    if (remaining == 0) return true;
    int v = pick();
    unsigned used = 0;
    for (int u : adj[v])
      if (colors[u]) used |= 1u << colors[u];
    for (int c = 1; c <= max_colors; ++c) {
      if (used & (1u << c)) continue;
      colors[v] = c;
      if (self(self, remaining - 1)) return true;
      colors[v] = 0;
    }
    return false;
  };
  if (!solve(solve, n)) return std::nullopt;
  return colors;
}

EdgeColoring color_disk_edges(const PointSet& s) {
  if (s.size() == 0) return {};
  ConflictGraph j = build_conflict_graph_j(s);

  Hypergraph h = canonical_hyperedges(s, FamilyKind::disk());
  auto shrink = is_shrinkable(h);
  if (!shrink.shrinkable)
    throw InternalInconsistencyError("canonical disk hypergraph is not shrinkable");

  auto colors = color_graph_exact(j.g, 4);
  if (!colors) {
    bool planar = planarity_check(j.g);
    throw InternalInconsistencyError(
        std::string("disk conflict graph needs more than 4 colors; planarity_check=") +
        (planar ? "true" : "false"));
  }
  std::vector<std::pair<std::pair<int, int>, int>> items;
  for (int v = 0; v < j.g.n; ++v) items.push_back({j.delaunay_edges[v], (*colors)[v]});
  return EdgeColoring::from_assignments(std::move(items));
}

} // namespace chroma
