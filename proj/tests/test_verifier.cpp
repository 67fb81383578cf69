#include <doctest.h>

#include "chroma/edge_coloring.hpp"
#include "chroma/generators.hpp"
#include "chroma/verifier.hpp"

using namespace chroma;

namespace {

PointSet perturbed_square() {
  return PointSet({make_point({0, 0}), make_point({10, 1}), make_point({11, 12}),
                   make_point({1, 11})});
}

EdgeColoring all_ones(const EdgeSet& edges) {
  std::vector<std::pair<std::pair<int, int>, int>> items;
  for (auto e : edges.pairs()) items.push_back({e, 1});
  return EdgeColoring::from_assignments(std::move(items));
}

} // namespace

TEST_CASE("verification passes and fails with recheckable witnesses") {
  PointSet s = perturbed_square();
  EdgeColoring good = color_halfplane_edges(s);
  auto pass = verify_edge_coloring(s, FamilyKind::halfplane(), good, 3, ThresholdKind::Edges);
  CHECK(pass.passed);
  CHECK(!pass.witness.has_value());
  CHECK(pass.checked_regions > 0);

  EdgeColoring bad = all_ones(delaunay_edges(s, FamilyKind::halfplane()));
  auto fail = verify_edge_coloring(s, FamilyKind::halfplane(), bad, 3, ThresholdKind::Edges);
  CHECK(!fail.passed);
  REQUIRE(fail.witness.has_value());
  CHECK(fail.witness->hyperedge == std::vector<int>{0, 1, 2, 3});
  CHECK(witness_violates_edge_guarantee(fail.witness->hyperedge, bad, 3, ThresholdKind::Edges));
  CHECK(!witness_violates_edge_guarantee(fail.witness->hyperedge, good, 3, ThresholdKind::Edges));
}

TEST_CASE("verification is monotone in the threshold") {
  PointSet s = random_point_set(12, 2, 101, {true, true, false});
  EdgeColoring c = color_halfplane_edges(s);
  bool passed_before = false;
  for (int threshold = 3; threshold <= 8; ++threshold) {
    bool now =
        verify_edge_coloring(s, FamilyKind::halfplane(), c, threshold, ThresholdKind::Edges)
            .passed;
    if (passed_before) CHECK(now);
    passed_before = now;
  }
}

TEST_CASE("vacuous thresholds pass") {
  PointSet s({make_point({0, 0}), make_point({3, 1})});
  EdgeColoring c = all_ones(delaunay_edges(s, FamilyKind::axis_rect()));
  auto report = verify_edge_coloring(s, FamilyKind::axis_rect(), c, 5, ThresholdKind::Points);
  CHECK(report.passed);
  CHECK(report.checked_regions == 0);
}

TEST_CASE("domain mismatches are rejected") {
  PointSet s = perturbed_square();
  EdgeColoring wrong = EdgeColoring::from_assignments({{{0, 1}, 1}});
  CHECK_THROWS_AS(
      verify_edge_coloring(s, FamilyKind::halfplane(), wrong, 3, ThresholdKind::Edges),
      std::invalid_argument);
}

TEST_CASE("scan kernels agree with the serial reference") {
  for (uint64_t seed : {111, 112, 113}) {
    PointSet s = random_point_set(9, 2, seed, {true, true, true});
    struct Case {
      FamilyKind family;
      EdgeColoring coloring;
      int threshold;
      ThresholdKind kind;
    };
    std::vector<Case> cases;
    cases.push_back({FamilyKind::halfplane(), color_halfplane_edges(s), 3, ThresholdKind::Edges});
    cases.push_back({FamilyKind::bottomless(), color_bottomless_edges(s), 4,
                     ThresholdKind::Points});
    cases.push_back({FamilyKind::axis_rect(), color_rectangle_edges(s), 3,
                     ThresholdKind::Points});
    cases.push_back({FamilyKind::disk(), color_disk_edges(s), 3, ThresholdKind::Points});
    // and a failing coloring per family
    for (auto family : {FamilyKind::halfplane(), FamilyKind::bottomless(),
                        FamilyKind::axis_rect(), FamilyKind::disk()})
      cases.push_back({family, all_ones(delaunay_edges(s, family)),
                       family.type == FamilyType::Halfplane ? 3 : 4,
                       family.type == FamilyType::Halfplane ? ThresholdKind::Edges
                                                            : ThresholdKind::Points});

    for (const auto& c : cases) {
      auto ref = verify_edge_coloring_ref(s, c.family, c.coloring, c.threshold, c.kind);
      auto serial =
          verify_edge_coloring(s, c.family, c.coloring, c.threshold, c.kind, ExecPolicy::Serial);
      auto parallel = verify_edge_coloring(s, c.family, c.coloring, c.threshold, c.kind,
                                           ExecPolicy::Parallel);
      CHECK(ref.passed == serial.passed);
      CHECK(serial.passed == parallel.passed);
      CHECK(serial.checked_regions == parallel.checked_regions);
      if (serial.witness) {
        REQUIRE(parallel.witness.has_value());
        CHECK(serial.witness->hyperedge == parallel.witness->hyperedge);
        CHECK(witness_violates_edge_guarantee(serial.witness->hyperedge, c.coloring, c.threshold,
                                              c.kind));
      }
    }
  }
}

TEST_CASE("tuple kernels agree with the serial reference") {
  for (uint64_t seed : {121, 122}) {
    PointSet s = random_point_set(10, 2, seed, {true, false, false});
    TupleColoring c = color_pairs_boxes(s, 2);
    auto ref =
        verify_tuple_coloring_ref(s, FamilyKind::axis_rect(), c, 5, VerifyMode::Polychromatic);
    auto serial = verify_tuple_coloring(s, FamilyKind::axis_rect(), c, 5,
                                        VerifyMode::Polychromatic, ExecPolicy::Serial);
    auto parallel = verify_tuple_coloring(s, FamilyKind::axis_rect(), c, 5,
                                          VerifyMode::Polychromatic, ExecPolicy::Parallel);
    CHECK(ref.passed == serial.passed);
    CHECK(serial.passed == parallel.passed);
    CHECK(serial.checked_regions == parallel.checked_regions);

    PointSet s3 = random_point_set(8, 3, seed, {true, false, false});
    TupleColoring c3 = color_pairs_boxes(s3, 2);
    auto ref3 = verify_tuple_coloring_ref(s3, FamilyKind::box_d(), c3, 5, VerifyMode::Proper);
    auto par3 = verify_tuple_coloring(s3, FamilyKind::box_d(), c3, 5, VerifyMode::Proper);
    CHECK(ref3.passed == par3.passed);
  }
}

TEST_CASE("kernels and reference agree on randomly corrupted colorings") {
  // Mutating single assignments explores both passing and failing inputs;
  // the two paths must agree on the verdict, and every reported witness must
  // recheck from scratch.
  for (uint64_t seed = 201; seed <= 212; ++seed) {
    Rng rng(seed);
    PointSet s = random_point_set(9 + static_cast<int>(seed % 4), 2, seed, {true, true, true});

    // edge colorings across the four planar families
    struct Case {
      FamilyKind family;
      EdgeColoring coloring;
      int threshold;
      ThresholdKind kind;
    };
    std::vector<Case> cases = {
        {FamilyKind::halfplane(), color_halfplane_edges(s), 3, ThresholdKind::Edges},
        {FamilyKind::bottomless(), color_bottomless_edges(s), 4, ThresholdKind::Points},
        {FamilyKind::axis_rect(), color_rectangle_edges(s), 3, ThresholdKind::Points},
        {FamilyKind::disk(), color_disk_edges(s), 3, ThresholdKind::Points},
    };
    for (auto& c : cases) {
      auto items = c.coloring.items();
      if (items.empty()) continue;
      auto& slot = items[rng.below(items.size())];
      slot.second = 1 + static_cast<int>(rng.below(std::max(c.coloring.k(), 2)));
      EdgeColoring corrupted = EdgeColoring::from_assignments(std::move(items));

      auto ref = verify_edge_coloring_ref(s, c.family, corrupted, c.threshold, c.kind);
      auto serial =
          verify_edge_coloring(s, c.family, corrupted, c.threshold, c.kind, ExecPolicy::Serial);
      auto parallel = verify_edge_coloring(s, c.family, corrupted, c.threshold, c.kind,
                                           ExecPolicy::Parallel);
      CHECK(ref.passed == serial.passed);
      CHECK(serial.passed == parallel.passed);
      CHECK(serial.checked_regions == parallel.checked_regions);
      if (!serial.passed) {
        REQUIRE(serial.witness.has_value());
        CHECK(witness_violates_edge_guarantee(serial.witness->hyperedge, corrupted, c.threshold,
                                              c.kind));
        CHECK(serial.witness->hyperedge == parallel.witness->hyperedge);
      }
    }

    // pair colorings with a corrupted assignment, box and H-region kernels
    std::vector<int32_t> colors = color_pairs_boxes(s, 2).colors();
    colors[rng.below(colors.size())] = 1 + static_cast<int>(rng.below(2));
    TupleColoring corrupted(s.size(), 2, 2, colors);
    auto ref = verify_tuple_coloring_ref(s, FamilyKind::axis_rect(), corrupted, 5,
                                         VerifyMode::Polychromatic);
    auto kernel = verify_tuple_coloring(s, FamilyKind::axis_rect(), corrupted, 5,
                                        VerifyMode::Polychromatic);
    CHECK(ref.passed == kernel.passed);
    if (!kernel.passed)
      CHECK(witness_violates_tuple_guarantee(kernel.witness->hyperedge, corrupted, 5,
                                             VerifyMode::Polychromatic));

    std::vector<HalfspaceSpec> hs{HalfspaceSpec{{Rat(2), Rat(1)}},
                                  HalfspaceSpec{{Rat(-1), Rat(3)}}};
    FamilyKind hregion = FamilyKind::h_region(hs);
    if (check_general_position(s, hregion).ok()) {
      auto href = verify_tuple_coloring_ref(s, hregion, corrupted, 5, VerifyMode::Polychromatic);
      auto hser =
          verify_tuple_coloring(s, hregion, corrupted, 5, VerifyMode::Polychromatic,
                                ExecPolicy::Serial);
      auto hpar = verify_tuple_coloring(s, hregion, corrupted, 5, VerifyMode::Polychromatic,
                                        ExecPolicy::Parallel);
      CHECK(href.passed == hser.passed);
      CHECK(hser.passed == hpar.passed);
      CHECK(hser.checked_regions == hpar.checked_regions);
    }

    // disk tuple kernel against the reference
    auto dref = verify_tuple_coloring_ref(s, FamilyKind::disk(), corrupted, 3,
                                          VerifyMode::Proper);
    auto dker = verify_tuple_coloring(s, FamilyKind::disk(), corrupted, 3, VerifyMode::Proper);
    CHECK(dref.passed == dker.passed);
  }
}

TEST_CASE("exhaustive impossibility") {
  SUBCASE("odd convex position cannot be covered at threshold 2") {
    // A halfplane containing three consecutive hull vertices isolates two
    // adjacent cycle edges, so for odd n >= 5 the cycle is not 2-colorable.
    CHECK(exhaustive_impossibility(convex_position_point_set(5), FamilyKind::halfplane(), 2, 2,
                                   ImpossibilityTarget::DelaunayEdges, ThresholdKind::Edges));
    CHECK(exhaustive_impossibility(convex_position_point_set(7), FamilyKind::halfplane(), 2, 2,
                                   ImpossibilityTarget::DelaunayEdges, ThresholdKind::Edges));
    // The triangle is the exception: the only halfplane with two or more
    // Delaunay-edges holds all three, so any non-constant coloring works.
    CHECK(!exhaustive_impossibility(convex_position_point_set(3), FamilyKind::halfplane(), 2, 2,
                                    ImpossibilityTarget::DelaunayEdges, ThresholdKind::Edges));
  }
  SUBCASE("the square admits an alternating coloring") {
    CHECK(!exhaustive_impossibility(perturbed_square(), FamilyKind::halfplane(), 2, 2,
                                    ImpossibilityTarget::DelaunayEdges, ThresholdKind::Edges));
  }
  SUBCASE("two points cannot show two pair colors") {
    PointSet s({make_point({0, 0}), make_point({1, 2})});
    CHECK(exhaustive_impossibility(s, FamilyKind::axis_rect(), 2, 2,
                                   ImpossibilityTarget::AllPairs, ThresholdKind::Points));
  }
  SUBCASE("matches direct enumeration on a tiny instance") {
    PointSet s = convex_position_point_set(4);
    EdgeSet edges = delaunay_edges(s, FamilyKind::halfplane());
    Hypergraph h = canonical_hyperedges(s, FamilyKind::halfplane());
    const int m = edges.size();
    bool any_valid = false;
    for (int code = 0; code < (1 << m); ++code) {
      std::vector<std::pair<std::pair<int, int>, int>> items;
      for (int i = 0; i < m; ++i) items.push_back({edges.pairs()[i], ((code >> i) & 1) + 1});
      EdgeColoring c = EdgeColoring::from_assignments(std::move(items));
      any_valid |=
          verify_edge_coloring(s, FamilyKind::halfplane(), c, 2, ThresholdKind::Edges).passed;
    }
    CHECK(exhaustive_impossibility(s, FamilyKind::halfplane(), 2, 2,
                                   ImpossibilityTarget::DelaunayEdges,
                                   ThresholdKind::Edges) == !any_valid);
  }
  SUBCASE("budget overruns are reported") {
    PointSet s = random_point_set(14, 2, 131, {true, true, false});
    CHECK_THROWS_AS(exhaustive_impossibility(s, FamilyKind::axis_rect(), 3, 3,
                                             ImpossibilityTarget::AllPairs,
                                             ThresholdKind::Points, 1000),
                    BudgetExceededError);
  }
}

TEST_CASE("bottomless counterexample search") {
  PointSet found = find_bottomless_counterexample();
  PointSet fixture = bottomless_counterexample_fixture();
  CHECK(found.points() == fixture.points());

  // The witness carries the expected Delaunay structure.
  EdgeSet edges = delaunay_edges(fixture, FamilyKind::bottomless());
  for (auto expected : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {1, 3}, {2, 3}, {3, 4}})
    CHECK(edges.contains(expected.first, expected.second));

  // No 4-point configuration is tight at threshold 3.
  std::vector<int> ys{0, 1, 2, 3};
  do {
    std::vector<Point> pts;
    for (int i = 0; i < 4; ++i) pts.push_back(make_point({i, ys[i]}));
    CHECK(!exhaustive_impossibility(PointSet(std::move(pts)), FamilyKind::bottomless(), 3, 2,
                                    ImpossibilityTarget::DelaunayEdges, ThresholdKind::Points));
  } while (std::next_permutation(ys.begin(), ys.end()));
}

TEST_CASE("relation hypergraph") {
  PointSet s = perturbed_square();
  Hypergraph g = canonical_hyperedges(s, FamilyKind::halfplane());

  SUBCASE("singleton first factor reproduces the point-coloring instance") {
    std::vector<std::vector<int>> singles;
    for (int i = 0; i < s.size(); ++i) singles.push_back({i});
    Hypergraph h1 = Hypergraph::from_edges(s.size(), singles);
    Hypergraph rel = relation_hypergraph(h1, g, Relation::Containment);
    CHECK(rel.n() == s.size());
    CHECK(rel.edges() == g.edges()); // singleton i sits at vertex index i
  }
  SUBCASE("size-2 hyperedges give the Delaunay-edge instance") {
    std::vector<std::vector<int>> twos;
    for (const auto& e : g.edges())
      if (e.size() == 2) twos.push_back(e);
    Hypergraph h1 = Hypergraph::from_edges(s.size(), twos);
    Hypergraph rel = relation_hypergraph(h1, g, Relation::Containment);
    CHECK(rel.n() == static_cast<int>(twos.size()));
    // the full plane contains every Delaunay-edge
    CHECK(rel.contains({0, 1, 2, 3}));
  }
  SUBCASE("intersection relation on a single pair") {
    Hypergraph h = Hypergraph::from_edges(3, {{1, 2}});
    Hypergraph rel = relation_hypergraph(h, h, Relation::Intersection);
    CHECK(rel.n() == 1);
    CHECK(rel.edges() == std::vector<std::vector<int>>{{0}});
  }
  SUBCASE("reverse containment") {
    Hypergraph h1 = Hypergraph::from_edges(3, {{0, 1, 2}, {0, 1}});
    Hypergraph h2 = Hypergraph::from_edges(3, {{0, 1}});
    Hypergraph rel = relation_hypergraph(h1, h2, Relation::ReverseContainment);
    CHECK(rel.edges() == std::vector<std::vector<int>>{{0, 1}});
  }
}

TEST_CASE("planarity") {
  SimpleGraph k4{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  CHECK(planarity_check(k4));
  SimpleGraph k5{5, {}};
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) k5.edges.emplace_back(i, j);
  CHECK(!planarity_check(k5));
}
