#include <doctest.h>

#include <set>

#include "chroma/generators.hpp"
#include "chroma/tuple_coloring.hpp"
#include "chroma/verifier.hpp"

using namespace chroma;

namespace {

int pair_color(const TupleColoring& c, int i, int j) {
  int t[2] = {std::min(i, j), std::max(i, j)};
  return c.color_of(t);
}

} // namespace

TEST_CASE("combination ranks are lexicographic") {
  int count = 0;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b)
      for (int c = b + 1; c < 5; ++c) {
        int tuple[3] = {a, b, c};
        CHECK(combination_rank(5, tuple) == static_cast<uint64_t>(count));
        ++count;
      }
  CHECK(count == 10);
}

TEST_CASE("box pair coloring on a line") {
  PointSet s({make_point({0}), make_point({1}), make_point({2}), make_point({3}),
              make_point({4})});
  TupleColoring c = color_pairs_boxes(s, 3);
  CHECK(pair_color(c, 0, 4) == 3); // path of length 4, capped at k
  CHECK(pair_color(c, 0, 1) == 1);
  CHECK(pair_color(c, 0, 2) == 2);
}

TEST_CASE("box pair coloring on a planar chain") {
  PointSet s({make_point({0, 0}), make_point({1, 1}), make_point({2, 2})});
  TupleColoring c = color_pairs_boxes(s, 2);
  CHECK(pair_color(c, 0, 1) == 1);
  CHECK(pair_color(c, 1, 2) == 1);
  CHECK(pair_color(c, 0, 2) == 2);
}

TEST_CASE("a single pair gets color 1") {
  PointSet s({make_point({3, 7}), make_point({5, 2})});
  TupleColoring c = color_pairs_boxes(s, 4);
  CHECK(pair_color(c, 0, 1) == 1);
}

TEST_CASE("degenerate inputs give empty colorings") {
  PointSet one({make_point({3, 7})});
  CHECK(color_pairs_boxes(one, 2).colors().empty());
  CHECK(color_pairs_rectangles_optimal(one).colors().empty());
}

TEST_CASE("box colors have the prefix property on canonical boxes") {
  for (uint64_t seed : {61, 62}) {
    int dim = 1 + static_cast<int>(seed % 3);
    PointSet s = random_point_set(9, dim, seed, {true, false, false});
    TupleColoring c = color_pairs_boxes(s, 3);
    Hypergraph canonical = canonical_hyperedges(s, FamilyKind::box_d());
    for (const auto& e : canonical.edges()) {
      uint64_t bits = 0;
      for (size_t x = 0; x < e.size(); ++x)
        for (size_t y = x + 1; y < e.size(); ++y)
          bits |= uint64_t(1) << pair_color(c, e[x], e[y]);
      bits >>= 1;
      CHECK((bits & (bits + 1)) == 0); // colors 1..i with no holes
    }
  }
}

TEST_CASE("optimal rectangle pair coloring") {
  SUBCASE("diagonal chain") {
    PointSet s({make_point({0, 0}), make_point({1, 1}), make_point({2, 2})});
    TupleColoring c = color_pairs_rectangles_optimal(s);
    CHECK(pair_color(c, 0, 1) == 1); // NE with empty box: red
    CHECK(pair_color(c, 1, 2) == 1);
    CHECK(pair_color(c, 0, 2) == 2); // NE with a third point inside: blue
  }
  SUBCASE("anti-diagonal pair is blue") {
    PointSet s({make_point({0, 1}), make_point({1, 0})});
    TupleColoring c = color_pairs_rectangles_optimal(s);
    CHECK(pair_color(c, 0, 1) == 2);
  }
  SUBCASE("random sets verify properly at m=3") {
    for (uint64_t seed : {71, 72}) {
      PointSet s = random_point_set(10, 2, seed, {true, false, false});
      TupleColoring c = color_pairs_rectangles_optimal(s);
      CHECK(verify_tuple_coloring(s, FamilyKind::axis_rect(), c, 3, VerifyMode::Proper).passed);
    }
  }
  SUBCASE("three points in a rectangle: one of the stated pairs differs") {
    PointSet s = random_point_set(9, 2, 73, {true, false, false});
    TupleColoring c = color_pairs_rectangles_optimal(s);
    Hypergraph canonical = canonical_hyperedges(s, FamilyKind::axis_rect());
    for (const auto& e : canonical.edges()) {
      if (e.size() < 3) continue;
      std::vector<int> byx(e.begin(), e.end());
      std::sort(byx.begin(), byx.end(),
                [&](int a, int b) { return compare_coord(s, 0, a, b) < 0; });
      int x = byx.front(), z = byx.back();
      bool ok = false;
      for (size_t i = 1; i + 1 < byx.size(); ++i) {
        int y = byx[i];
        ok |= pair_color(c, x, z) != pair_color(c, x, y);
        ok |= pair_color(c, x, y) != pair_color(c, y, z);
      }
      CHECK(ok);
    }
  }
}

TEST_CASE("tuple lifting by boundary depth") {
  SUBCASE("three-point chain, single triple") {
    PointSet s({make_point({0, 0}), make_point({1, 1}), make_point({2, 2})});
    TupleColoring base = color_pairs_boxes(s, 2);
    HalfspaceSpec h{{Rat(1), Rat(0)}};
    TupleColoring lifted = lift_tuples(base, s, h, 3);
    int triple[3] = {0, 1, 2};
    // deepest two points are p0,p1 (smallest x)
    CHECK(lifted.color_of(triple) == pair_color(base, 0, 1));
  }
  SUBCASE("t' must exceed t") {
    PointSet s({make_point({0, 0}), make_point({1, 1}), make_point({2, 2})});
    TupleColoring base = color_pairs_boxes(s, 2);
    HalfspaceSpec h{{Rat(1), Rat(0)}};
    CHECK_THROWS_AS(lift_tuples(base, s, h, 2), std::invalid_argument);
  }
  SUBCASE("equidistant points are rejected") {
    PointSet s({make_point({0, 0}), make_point({0, 1}), make_point({1, 0})});
    TupleColoring base(3, 2, 1, {1, 1, 1});
    HalfspaceSpec h{{Rat(1), Rat(0)}};
    CHECK_THROWS_AS(lift_tuples(base, s, h, 3), GeneralPositionError);
  }
}

TEST_CASE("h-region thresholds and composition") {
  CHECK(h_region_threshold(2, 2, 2) == 5);
  CHECK(h_region_threshold(2, 3, 1) == 4);
  CHECK(h_region_threshold(3, 2, 2) == 6);
  PointSet s = random_point_set(8, 2, 81, {true, false, false});
  std::vector<HalfspaceSpec> hs{HalfspaceSpec{{Rat(1), Rat(0)}}, HalfspaceSpec{{Rat(0), Rat(1)}}};
  CHECK_THROWS_AS(color_tuples_h_regions(s, hs, 1, 2), std::invalid_argument);
  TupleColoring c = color_tuples_h_regions(s, hs, 2, 2);
  CHECK(c.t() == 2);
  CHECK(c.n() == 8);
}

TEST_CASE("proper lift of tuple colorings") {
  SUBCASE("tuple Ramsey numbers by brute force") {
    CHECK(ramsey_min_size(1, 2, 2) == 3);
    CHECK(ramsey_min_size(2, 2, 3) == 6);
    CHECK(!ramsey_min_size(3, 3, 4, 1000).has_value()); // budget cut-off reports unknown
  }
  SUBCASE("red iff all subtuples agree") {
    // 4 vertices, pair coloring: everything 1 except {0,1} colored 2
    std::vector<int32_t> colors(6, 1);
    colors[0] = 2; // pair {0,1}
    TupleColoring base(4, 2, 2, colors);
    TupleColoring lifted = lift_proper_two_coloring(base, 3);
    int t1[3] = {1, 2, 3};
    int t2[3] = {0, 1, 2};
    CHECK(lifted.color_of(t1) == 1); // red: all pairs color 1
    CHECK(lifted.color_of(t2) == 2); // blue: mixed
  }
}

TEST_CASE("polychromatic tuple colorings from vertex colorings") {
  SUBCASE("palette size formulas") {
    CHECK(derived_palette_size(2, 2) == 2);
    CHECK(derived_palette_size(3, 2) == 4);
    CHECK(derived_palette_size(2, 3) == 2); // t' > k gives 2^(k-1)
    CHECK(derived_palette_size(3, 4) == 4);
  }
  SUBCASE("hyperedges with enough vertices show every derived color") {
    const int k = 3, t_prime = 2;
    std::vector<int> vc = random_vertex_coloring(12, k, 91);
    for (int c = 1; c <= k; ++c) vc[c - 1] = c; // make sure all colors appear
    TupleColoring c = polychromatic_tuples_from_vertex_coloring(vc, k, t_prime);
    CHECK(c.k() == derived_palette_size(k, t_prime));
    std::vector<int> everything(12);
    for (int i = 0; i < 12; ++i) everything[i] = i;
    Hypergraph h = Hypergraph::from_edges(12, {everything});
    CHECK(verify_tuple_coloring_on_hypergraph(h, c, k * (t_prime - 1) + 1,
                                              VerifyMode::Polychromatic)
              .passed);
  }
}

TEST_CASE("no local triple rule exists") {
  SUBCASE("multiset indexing covers the ten multisets") {
    std::set<int> seen;
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; b <= 3; ++b)
        for (int c = 1; c <= 3; ++c) seen.insert(MultisetColorRule::multiset_index(a, b, c));
    CHECK(seen.size() == 10);
    CHECK(MultisetColorRule::multiset_index(1, 2, 3) == 9);
    CHECK(MultisetColorRule::multiset_index(3, 1, 3) == 6);
  }
  SUBCASE("the first gadget forces {3,3,1},{3,3,2},{3,3,3} onto distinct colors") {
    // Independent reconstruction of the first gadget's full hyperedge: pair
    // classes P1={{0,1}} -> 1, P2={{2,3}} -> 2, everything else 3 on six
    // vertices. Its triples realize exactly the multisets 331, 332, 333.
    std::set<int> realized;
    auto color = [](int a, int b) {
      if ((a == 0 && b == 1) || (a == 1 && b == 0)) return 1;
      if ((a == 2 && b == 3) || (a == 3 && b == 2)) return 2;
      return 3;
    };
    for (int x = 0; x < 6; ++x)
      for (int y = x + 1; y < 6; ++y)
        for (int z = y + 1; z < 6; ++z)
          realized.insert(
              MultisetColorRule::multiset_index(color(x, y), color(x, z), color(y, z)));
    CHECK(realized == std::set<int>{6, 7, 8}); // 133, 233, 333
    // Any rule coloring two of them alike cannot give all three triple colors.
    MultisetColorRule rule;
    rule.color_of_multiset.fill(1);
    rule.color_of_multiset[6] = 2;
    rule.color_of_multiset[7] = 2;
    rule.color_of_multiset[8] = 3;
    std::set<int> triple_colors;
    for (int idx : realized) triple_colors.insert(rule.color_of_multiset[idx]);
    CHECK(triple_colors.size() < 3);
  }
  SUBCASE("exhaustive scan finds zero valid rules") {
    CHECK(verify_no_local_mapping(12, ExecPolicy::Serial) == 0);
    CHECK(verify_no_local_mapping(12, ExecPolicy::Parallel) == 0);
    CHECK_THROWS_AS(verify_no_local_mapping(4), std::invalid_argument);
  }
}
