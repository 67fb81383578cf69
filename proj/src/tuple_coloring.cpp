#include "chroma/tuple_coloring.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace chroma {

namespace {

void require_distinct_axis_coords(const PointSet& s, const char* who) {
  for (int axis = 0; axis < s.dim(); ++axis)
    for (int i = 0; i < s.size(); ++i)
      for (int j = i + 1; j < s.size(); ++j)
        if (compare_coord(s, axis, i, j) == 0)
          throw GeneralPositionError(std::string(who) + ": coordinate tie between points " +
                                     std::to_string(i) + "," + std::to_string(j));
}

/// Calls fn on every sorted t-subset of [0,n), in lexicographic order.
template <typename Fn>
void for_each_combination(int n, int t, Fn&& fn) {
  if (t > n || t <= 0) return;
  std::vector<int> c(t);
  for (int i = 0; i < t; ++i) c[i] = i;
  for (;;) {
    fn(std::span<const int>(c));
    int i = t - 1;
    while (i >= 0 && c[i] == n - t + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < t; ++j) c[j] = c[j - 1] + 1;
  }
}

} // namespace

uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (n > 64) throw std::invalid_argument("binomial: n > 64 unsupported");
  k = std::min(k, n - k);
  if (k > 20) throw std::invalid_argument("binomial: intermediate would overflow");
  uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

uint64_t combination_rank(int n, std::span<const int> tuple) {
  const int t = static_cast<int>(tuple.size());
  uint64_t rank = 0;
  int prev = -1;
  for (int i = 0; i < t; ++i) {
    for (int v = prev + 1; v < tuple[i]; ++v) rank += binomial(n - 1 - v, t - 1 - i);
    prev = tuple[i];
  }
  return rank;
}

TupleColoring::TupleColoring(int n, int t, int k, std::vector<int32_t> colors_by_rank)
    : n_(n), t_(t), k_(k), colors_(std::move(colors_by_rank)) {
  if (t < 1) throw std::invalid_argument("tuple coloring: need t >= 1");
  // t > n is legal and gives the empty coloring (degenerate inputs).
  if (colors_.size() != binomial(n, t))
    throw std::invalid_argument("tuple coloring: not total on all t-subsets");
  for (int32_t c : colors_)
    if (c < 1 || c > k) throw std::invalid_argument("tuple coloring: color out of range");
}

int TupleColoring::color_of(std::span<const int> tuple) const {
  if (static_cast<int>(tuple.size()) != t_)
    throw std::invalid_argument("tuple coloring: wrong tuple size");
  return colors_[combination_rank(n_, tuple)];
}

// --- geometric pair colorings -------------------------------------------------

TupleColoring color_pairs_boxes(const PointSet& s, int k) {
  if (k < 1) throw std::invalid_argument("color_pairs_boxes: k >= 1 required");
  require_distinct_axis_coords(s, "color_pairs_boxes");
  const int n = s.size();
  const int d = s.dim();
  const int types = 1 << (d - 1);

  std::vector<int> ord(n); // positions in increasing first coordinate
  for (int i = 0; i < n; ++i) ord[i] = i;
  std::sort(ord.begin(), ord.end(), [&](int a, int b) { return compare_coord(s, 0, a, b) < 0; });

  // type_of[a][b] for positions a<b in first-coordinate order.
  std::vector<int8_t> type_of(static_cast<size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      int code = 0;
      for (int axis = 1; axis < d; ++axis)
        if (compare_coord(s, axis, ord[b], ord[a]) < 0) code |= 1 << (axis - 1);
      type_of[static_cast<size_t>(a) * n + b] = static_cast<int8_t>(code);
    }

  // Longest monotone (single-type) path lengths from each source position.
  // Each type's digraph is acyclic as the first coordinate strictly grows.
  std::vector<int> pair_color(static_cast<size_t>(n) * n, 0);
  std::vector<int> len(n);
  for (int src = 0; src < n; ++src)
    for (int type = 0; type < types; ++type) {
      std::fill(len.begin(), len.end(), 0);
      for (int b = src + 1; b < n; ++b) {
        int best = type_of[static_cast<size_t>(src) * n + b] == type ? 1 : 0;
        for (int r = src + 1; r < b; ++r)
          if (len[r] > 0 && type_of[static_cast<size_t>(r) * n + b] == type)
            best = std::max(best, len[r] + 1);
        len[b] = best;
      }
      for (int b = src + 1; b < n; ++b)
        if (type_of[static_cast<size_t>(src) * n + b] == type && len[b] > 0)
          pair_color[static_cast<size_t>(src) * n + b] = std::min(k, len[b]);
    }

  std::vector<int> pos(n);
  for (int a = 0; a < n; ++a) pos[ord[a]] = a;
  std::vector<int32_t> colors(binomial(n, 2));
  for_each_combination(n, 2, [&](std::span<const int> pair) {
    int a = pos[pair[0]], b = pos[pair[1]];
    if (a > b) std::swap(a, b);
    colors[combination_rank(n, pair)] = pair_color[static_cast<size_t>(a) * n + b];
  });
  return TupleColoring(n, 2, k, std::move(colors));
}

TupleColoring color_pairs_rectangles_optimal(const PointSet& s) {
  if (s.dim() != 2) throw std::invalid_argument("color_pairs_rectangles_optimal: requires d=2");
  require_distinct_axis_coords(s, "color_pairs_rectangles_optimal");
  const int n = s.size();
  std::vector<int32_t> colors(binomial(n, 2));
  for_each_combination(n, 2, [&](std::span<const int> pair) {
    int i = pair[0], j = pair[1];
    bool ne = compare_coord(s, 0, i, j) * compare_coord(s, 1, i, j) > 0; // NE/SW position
    int inside = 0;
    for (int w = 0; w < n; ++w) {
      bool xin = compare_coord(s, 0, w, i) * compare_coord(s, 0, w, j) <= 0;
      bool yin = compare_coord(s, 1, w, i) * compare_coord(s, 1, w, j) <= 0;
      if (xin && yin) ++inside;
    }
    bool red = ne ? inside == 2 : inside > 2;
    colors[combination_rank(n, pair)] = red ? 1 : 2;
  });
  return TupleColoring(n, 2, 2, std::move(colors));
}

// --- liftings -------------------------------------------------------------------

TupleColoring lift_tuples(const TupleColoring& base, const PointSet& s, const HalfspaceSpec& h,
                          int t_prime) {
  if (t_prime <= base.t())
    throw std::invalid_argument("lift_tuples: t' must exceed the base tuple size");
  if (base.n() != s.size()) throw std::invalid_argument("lift_tuples: coloring/point-set mismatch");
  const int n = s.size();

  // Depth order: decreasing distance from the boundary of the covering
  // translate equals increasing normal.p.
  std::vector<Rat> depth(n);
  for (int i = 0; i < n; ++i) depth[i] = h.dot(s[i]);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (depth[i] == depth[j])
        throw GeneralPositionError("lift_tuples: points " + std::to_string(i) + "," +
                                   std::to_string(j) + " equidistant from the boundary");
  std::vector<int> depth_rank(n);
  {
    std::vector<int> ord(n);
    for (int i = 0; i < n; ++i) ord[i] = i;
    std::sort(ord.begin(), ord.end(), [&](int a, int b) { return depth[a] < depth[b]; });
    for (int r = 0; r < n; ++r) depth_rank[ord[r]] = r;
  }

  const int t = base.t();
  std::vector<int32_t> colors(binomial(n, t_prime));
  std::vector<int> members, deepest;
  for_each_combination(n, t_prime, [&](std::span<const int> tuple) {
    members.assign(tuple.begin(), tuple.end());
    std::sort(members.begin(), members.end(),
              [&](int a, int b) { return depth_rank[a] < depth_rank[b]; });
    deepest.assign(members.begin(), members.begin() + t);
    std::sort(deepest.begin(), deepest.end());
    colors[combination_rank(n, tuple)] = base.color_of(deepest);
  });
  return TupleColoring(n, t_prime, base.k(), std::move(colors));
}

long long h_region_threshold(int t, int k, int h) {
  long long m = 1;
  for (int i = 0; i < (1 << (h - 1)); ++i) m *= k;
  return m + t - 1;
}

TupleColoring color_tuples_h_regions(const PointSet& s, const std::vector<HalfspaceSpec>& hs,
                                     int t, int k) {
  if (t < 2) throw std::invalid_argument("color_tuples_h_regions: t >= 2 required");
  if (hs.empty()) throw std::invalid_argument("color_tuples_h_regions: empty halfspace list");
  PointSet image = h_region_reduction(s, hs);
  TupleColoring base = color_pairs_boxes(image, k);
  if (t == 2) return base;
  std::vector<Rat> first_axis(hs.size(), Rat(0));
  first_axis[0] = 1;
  return lift_tuples(base, image, HalfspaceSpec{first_axis}, t);
}

TupleColoring lift_proper_two_coloring(const TupleColoring& base, int t_prime) {
  if (t_prime <= base.t())
    throw std::invalid_argument("lift_proper_two_coloring: t' must exceed the base tuple size");
  const int n = base.n();
  const int t = base.t();
  std::vector<int32_t> colors(binomial(n, t_prime));
  std::vector<int> sub;
  for_each_combination(n, t_prime, [&](std::span<const int> tuple) {
    std::optional<int> common;
    bool mono = true;
    std::vector<int> local(tuple.begin(), tuple.end());
    for_each_combination(t_prime, t, [&](std::span<const int> pick) {
      if (!mono) return;
      sub.clear();
      for (int idx : pick) sub.push_back(local[idx]);
      int c = base.color_of(sub);
      if (!common) common = c;
      else if (*common != c) mono = false;
    });
    colors[combination_rank(n, tuple)] = mono ? 1 : 2; // red iff all subtuples agree
  });
  return TupleColoring(n, t_prime, 2, std::move(colors));
}

std::optional<int> ramsey_min_size(int t, int k, int t_prime, long long budget) {
  if (t_prime <= t || t < 1 || k < 1) throw std::invalid_argument("ramsey_min_size: bad arguments");
  for (int n = t_prime; n <= 24; ++n) {
    const uint64_t d = binomial(n, t);
    {
      long long space = 1;
      bool over = false;
      for (uint64_t i = 0; i < d && !over; ++i) {
        space *= k;
        over = space > budget;
      }
      if (over) return std::nullopt;
    }

    // Precompute, per t'-subset, the ranks of its t-subtuples.
    std::vector<std::vector<uint64_t>> groups;
    std::vector<int> local;
    for_each_combination(n, t_prime, [&](std::span<const int> tp) {
      std::vector<uint64_t> ranks;
      std::vector<int> base(tp.begin(), tp.end());
      for_each_combination(t_prime, t, [&](std::span<const int> pick) {
        local.clear();
        for (int idx : pick) local.push_back(base[idx]);
        ranks.push_back(combination_rank(n, local));
      });
      groups.push_back(std::move(ranks));
    });

    uint64_t colorings = 1;
    for (uint64_t i = 0; i < d; ++i) colorings *= k;
    std::vector<int> assign(d, 0);
    bool all_have_mono = true;
    for (uint64_t code = 0; code < colorings; ++code) {
      uint64_t v = code;
      for (uint64_t i = 0; i < d; ++i) {
        assign[i] = static_cast<int>(v % k);
        v /= k;
      }
      bool has_mono = false;
      for (const auto& g : groups) {
        int c0 = assign[g[0]];
        bool mono = true;
        for (size_t i = 1; i < g.size() && mono; ++i) mono = assign[g[i]] == c0;
        if (mono) { has_mono = true; break; }
      }
      if (!has_mono) { all_have_mono = false; break; }
    }
    if (all_have_mono) return n;
  }
  return std::nullopt;
}

// --- vertex-coloring lift --------------------------------------------------------

long long derived_palette_size(int k, int t_prime) {
  long long total = static_cast<long long>(binomial(k, t_prime));
  for (int i = 0; i <= t_prime - 2; ++i) total += static_cast<long long>(binomial(k - 1, i));
  return total;
}

TupleColoring polychromatic_tuples_from_vertex_coloring(const std::vector<int>& vertex_colors,
                                                        int k, int t_prime) {
  if (t_prime < 2) throw std::invalid_argument("t' > 1 required");
  const int n = static_cast<int>(vertex_colors.size());
  for (int c : vertex_colors)
    if (c < 1 || c > k) throw std::invalid_argument("vertex color out of range");
  const long long k_prime = derived_palette_size(k, t_prime);

  // Palette layout: the t'-subsets of [k] in lex order, then the i-subsets of
  // [k-1] for i=0..t'-2, each block in lex order.
  std::vector<long long> repeat_block_offset(t_prime - 1, 0);
  {
    long long off = static_cast<long long>(binomial(k, t_prime));
    for (int i = 0; i <= t_prime - 2; ++i) {
      repeat_block_offset[i] = off;
      off += static_cast<long long>(binomial(k - 1, i));
    }
  }
  auto subset_rank = [](int universe, const std::vector<int>& subset_1based) {
    std::vector<int> zero;
    zero.reserve(subset_1based.size());
    for (int v : subset_1based) zero.push_back(v - 1);
    return combination_rank(universe, zero);
  };

  std::vector<int32_t> colors(binomial(n, t_prime));
  std::vector<int> count(k + 1);
  for_each_combination(n, t_prime, [&](std::span<const int> tuple) {
    std::fill(count.begin(), count.end(), 0);
    for (int v : tuple) ++count[vertex_colors[v]];
    int repeated = 0, repeated_color = 0, distinct_single = 0;
    for (int c = 1; c <= k; ++c) {
      if (count[c] >= 2) { ++repeated; repeated_color = c; }
      else if (count[c] == 1) ++distinct_single;
    }

    long long id;
    if (repeated == 0) {
      // All colors distinct: the t'-subset of [k] they form.
      std::vector<int> set;
      for (int c = 1; c <= k; ++c)
        if (count[c]) set.push_back(c);
      id = 1 + static_cast<long long>(subset_rank(k, set));
    } else if (repeated == 1) {
      // One repeat of color r: map the other colors through the rotation
      // bijection phi_r into [k-1].
      const int r = repeated_color;
      std::vector<int> image;
      for (int c = 1; c <= k; ++c)
        if (c != r && count[c] == 1) image.push_back(c > r ? c - r : c - r + k);
      std::sort(image.begin(), image.end());
      id = 1 + repeat_block_offset[static_cast<int>(image.size())] +
           static_cast<long long>(subset_rank(k - 1, image));
      (void)distinct_single;
    } else {
      id = 1; // arbitrary case, fixed to the first palette color
    }
    colors[combination_rank(n, tuple)] = static_cast<int32_t>(id);
  });
  return TupleColoring(n, t_prime, static_cast<int>(k_prime), std::move(colors));
}

// --- local triple-coloring rules ---------------------------------------------------

int MultisetColorRule::multiset_index(int a, int b, int c) {
  int x = a, y = b, z = c;
  if (x > y) std::swap(x, y);
  if (y > z) std::swap(y, z);
  if (x > y) std::swap(x, y);
  switch (x * 100 + y * 10 + z) {
    case 111: return 0;
    case 112: return 1;
    case 113: return 2;
    case 122: return 3;
    case 222: return 4;
    case 223: return 5;
    case 133: return 6;
    case 233: return 7;
    case 333: return 8;
    case 123: return 9;
  }
  throw std::invalid_argument("multiset_index: colors must be in {1,2,3}");
}

namespace {

struct Gadget {
  int n;
  std::vector<std::vector<int>> hyperedges;
  // One pair coloring per stated rotation; color of pair {i<j} at [i*n+j].
  std::vector<std::vector<int>> pair_colorings;
  int m;       // pair-coloring polychromatic threshold
  int m_prime; // triple-coloring threshold (full hyperedge only)
};

Gadget build_gadget_one() {
  Gadget g;
  g.n = 6;
  g.m = 4;
  g.m_prime = 6;
  std::vector<int> all{0, 1, 2, 3, 4, 5};
  g.hyperedges.push_back(all);
  g.hyperedges.push_back({0, 1, 2, 3}); // the size-4 edges holding one pair of each class
  std::vector<int> col(g.n * g.n, 3);
  col[0 * 6 + 1] = 1; // P1
  col[2 * 6 + 3] = 2; // P2
  g.pair_colorings.push_back(std::move(col));
  return g;
}

Gadget build_gadget_two() {
  Gadget g;
  const int half = 6;
  g.n = 2 * half;
  g.m = 4;
  g.m_prime = g.n;
  std::vector<int> all(g.n);
  for (int i = 0; i < g.n; ++i) all[i] = i;
  g.hyperedges.push_back(all);
  for (int i = 0; i < half; ++i) {
    std::vector<int> a_side; // A u {b_i}
    for (int a = 0; a < half; ++a) a_side.push_back(a);
    a_side.push_back(half + i);
    g.hyperedges.push_back(std::move(a_side));
    std::vector<int> b_side; // B u {a_i}
    for (int b = half; b < g.n; ++b) b_side.push_back(b);
    b_side.push_back(i);
    std::sort(b_side.begin(), b_side.end());
    g.hyperedges.push_back(std::move(b_side));
  }
  // class of pair: 1 = within a side, 2 = matched cross pair, 3 = other cross
  auto cls = [&](int i, int j) {
    bool ia = i < half, ja = j < half;
    if (ia == ja) return 1;
    return (j - i == half) ? 2 : 3;
  };
  for (auto rot : {std::array<int, 3>{1, 2, 3}, std::array<int, 3>{2, 1, 3},
                   std::array<int, 3>{3, 2, 1}}) {
    std::vector<int> col(g.n * g.n, 0);
    for (int i = 0; i < g.n; ++i)
      for (int j = i + 1; j < g.n; ++j) col[i * g.n + j] = rot[cls(i, j) - 1];
    g.pair_colorings.push_back(std::move(col));
  }
  return g;
}

} // namespace

long long verify_no_local_mapping(int max_gadget_size, ExecPolicy policy) {
  if (max_gadget_size < 12)
    throw std::invalid_argument("verify_no_local_mapping: gadgets need size >= 12");

  // For every gadget, coloring, and hyperedge at the triple threshold,
  // collect which pair-color multisets its triples realize. A candidate rule
  // survives iff each such multiset set maps onto all three colors.
  std::vector<uint16_t> required_masks;
  for (const Gadget& g : {build_gadget_one(), build_gadget_two()}) {
    for (const auto& coloring : g.pair_colorings) {
      // The stated pair colorings must themselves be polychromatic at m.
      for (const auto& e : g.hyperedges) {
        if (static_cast<int>(e.size()) < g.m) continue;
        int seen = 0;
        for (size_t x = 0; x < e.size(); ++x)
          for (size_t y = x + 1; y < e.size(); ++y) seen |= 1 << coloring[e[x] * g.n + e[y]];
        if (seen != 0b1110)
          throw InternalInconsistencyError("gadget pair coloring is not polychromatic");
      }
      for (const auto& e : g.hyperedges) {
        if (static_cast<int>(e.size()) < g.m_prime) continue;
        uint16_t mask = 0;
        for (size_t x = 0; x < e.size(); ++x)
          for (size_t y = x + 1; y < e.size(); ++y)
            for (size_t z = y + 1; z < e.size(); ++z) {
              int a = coloring[e[x] * g.n + e[y]];
              int b = coloring[e[x] * g.n + e[z]];
              int c = coloring[e[y] * g.n + e[z]];
              mask |= uint16_t(1) << MultisetColorRule::multiset_index(a, b, c);
            }
        required_masks.push_back(mask);
      }
    }
  }

  constexpr long long kCandidates = 59049; // 3^10
  long long valid = 0;
  const bool par = policy == ExecPolicy::Parallel;
#pragma omp parallel for if (par) reduction(+ : valid) schedule(static)
  for (long long cand = 0; cand < kCandidates; ++cand) {
    int rule[10];
    long long v = cand;
    for (int i = 0; i < 10; ++i) {
      rule[i] = static_cast<int>(v % 3) + 1;
      v /= 3;
    }
    bool ok = true;
    for (uint16_t mask : required_masks) {
      int colors = 0;
      for (int i = 0; i < 10; ++i)
        if (mask & (uint16_t(1) << i)) colors |= 1 << rule[i];
      if (colors != 0b1110) { ok = false; break; }
    }
    if (ok) ++valid;
  }
  return valid;
}

} // namespace chroma
