// chroma: colorings of Delaunay-edges and point tuples for geometric region
// families, with independent brute-force verification.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "chroma/generators.hpp"
#include "chroma/json_io.hpp"
#include "chroma/svg.hpp"
#include "chroma/verifier.hpp"

namespace {

using namespace chroma;

long long default_budget() {
  if (const char* env = std::getenv("CHROMA_BUDGET")) {
    try {
      return std::stoll(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("CHROMA_BUDGET is not an integer");
    }
  }
  return 1 << 24;
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << content;
}

FamilyKind resolve_family(const std::string& name, const std::string& halfspaces_path) {
  if (name == "hregion") {
    if (halfspaces_path.empty())
      throw std::invalid_argument("--family hregion needs --halfspaces <family.json>");
    return family_from_json(read_json_file(halfspaces_path));
  }
  Json j{{"kind", name}};
  return family_from_json(j);
}

int run_gen(const std::string& kind, const std::string& variant, int n, int dim, uint64_t seed,
            const std::string& family, const std::string& out) {
  PointSet s;
  if (kind == "random") {
    GenRequirements req;
    req.no_collinear = dim == 2;
    req.disk_gp = family == "disk";
    s = random_point_set(n, dim, seed, req);
  } else if (kind == "grid") {
    s = grid_point_set(n, dim);
  } else if (kind == "convex") {
    s = convex_position_point_set(n);
  } else if (kind == "counterexample") {
    if (variant == "bottomless") s = bottomless_counterexample_fixture();
    else if (variant == "halfplane-odd") {
      if (n % 2 == 0) throw std::invalid_argument("halfplane-odd needs an odd n");
      s = convex_position_point_set(n);
    } else {
      throw std::invalid_argument("counterexample variant must be halfplane-odd or bottomless");
    }
  } else {
    throw std::invalid_argument("gen kind must be random|grid|convex|counterexample");
  }
  emit(out, json_to_string(pointset_to_json(s)));
  return 0;
}

int run_color(const std::string& in, const std::string& family_name,
              const std::string& halfspaces_path, const std::string& alg, int k, int t,
              const std::string& out) {
  Json provenance{{"algorithm", alg}, {"family", family_name}};
  Json payload;

  if (alg == "prop1" || alg == "prop2") {
    TupleColoring base = tuple_coloring_from_json(read_json_file(in));
    if (alg == "prop1") {
      payload = tuple_coloring_to_json(lift_proper_two_coloring(base, t));
    } else {
      if (base.t() != 1)
        throw std::invalid_argument("prop2 expects a vertex coloring (t=1 tuples) as input");
      std::vector<int> vertex_colors(base.n());
      for (int v = 0; v < base.n(); ++v) {
        int idx[1] = {v};
        vertex_colors[v] = base.color_of(idx);
      }
      payload = tuple_coloring_to_json(
          polychromatic_tuples_from_vertex_coloring(vertex_colors, base.k(), t));
    }
    provenance["t"] = t;
  } else {
    PointSet s = pointset_from_json(read_json_file(in));
    if (alg == "thm2") {
      payload = edge_coloring_to_json(color_halfplane_edges(s));
    } else if (alg == "thm3") {
      payload = edge_coloring_to_json(color_bottomless_edges(s));
    } else if (alg == "cor-rect") {
      bool ties = !check_general_position(s, FamilyKind::axis_rect()).ok();
      payload = edge_coloring_to_json(color_rectangle_edges(ties ? shear_general_position(s) : s));
      provenance["sheared"] = ties;
    } else if (alg == "thm1") {
      payload = edge_coloring_to_json(color_disk_edges(s));
    } else if (alg == "thm8") {
      payload = tuple_coloring_to_json(color_pairs_rectangles_optimal(s));
    } else if (alg == "thm9" || alg == "thm6") {
      int tuple_size = alg == "thm9" ? 2 : t;
      provenance["k"] = k;
      provenance["t"] = tuple_size;
      if (family_name == "hregion") {
        FamilyKind family = resolve_family(family_name, halfspaces_path);
        payload =
            tuple_coloring_to_json(color_tuples_h_regions(s, family.halfspaces, tuple_size, k));
      } else if (alg == "thm9") {
        payload = tuple_coloring_to_json(color_pairs_boxes(s, k));
      } else {
        TupleColoring base = color_pairs_boxes(s, k);
        std::vector<Rat> first_axis(s.dim(), Rat(0));
        first_axis[0] = 1;
        payload =
            tuple_coloring_to_json(lift_tuples(base, s, HalfspaceSpec{first_axis}, tuple_size));
      }
    } else {
      throw std::invalid_argument(
          "unknown --alg (thm1|thm2|thm3|cor-rect|thm8|thm9|thm6|prop1|prop2)");
    }
  }
  payload["provenance"] = std::move(provenance);
  emit(out, json_to_string(payload));
  return 0;
}

int run_verify(const std::string& in, const std::string& coloring_path,
               const std::string& family_name, const std::string& halfspaces_path, int threshold,
               const std::string& kind_name, const std::string& mode_name,
               const std::string& out) {
  PointSet s = pointset_from_json(read_json_file(in));
  FamilyKind family = resolve_family(family_name, halfspaces_path);
  ThresholdKind kind = kind_name == "edges" ? ThresholdKind::Edges : ThresholdKind::Points;
  Json coloring_json = read_json_file(coloring_path);

  VerificationReport report;
  if (coloring_json.contains("edges")) {
    report = verify_edge_coloring(s, family, edge_coloring_from_json(coloring_json), threshold,
                                  kind);
  } else {
    VerifyMode mode =
        mode_name == "polychromatic" ? VerifyMode::Polychromatic : VerifyMode::Proper;
    if (kind == ThresholdKind::Edges)
      throw std::invalid_argument("tuple colorings are verified with --threshold-kind points");
    report = verify_tuple_coloring(s, family, tuple_coloring_from_json(coloring_json), threshold,
                                   mode);
  }
  std::string text = json_to_string(report_to_json(report));
  if (!out.empty()) emit(out, text);
  else std::cout << text;
  return report.passed ? 0 : 1;
}

int run_svg(const std::string& in, const std::string& coloring_path, const std::string& out) {
  PointSet s = pointset_from_json(read_json_file(in));
  Json coloring_json = read_json_file(coloring_path);
  std::vector<std::pair<std::pair<int, int>, int>> segments;
  if (coloring_json.contains("edges")) {
    EdgeColoring c = edge_coloring_from_json(coloring_json);
    for (const auto& [e, col] : c.items()) segments.push_back({e, col});
  } else {
    TupleColoring c = tuple_coloring_from_json(coloring_json);
    if (c.t() != 2) throw std::invalid_argument("svg supports edge colorings and t=2 tuples");
    for (int i = 0; i < c.n(); ++i)
      for (int j = i + 1; j < c.n(); ++j) {
        int idx[2] = {i, j};
        segments.push_back({{i, j}, c.color_of(idx)});
      }
  }
  emit(out, render_svg(s, segments));
  return 0;
}

int run_tighten(const std::string& what, int n, long long budget) {
  if (what == "halfplane-odd") {
    if (n % 2 == 0) throw std::invalid_argument("halfplane-odd needs an odd n");
    PointSet s = convex_position_point_set(n);
    bool impossible =
        exhaustive_impossibility(s, FamilyKind::halfplane(), 2, 2,
                                 ImpossibilityTarget::DelaunayEdges, ThresholdKind::Edges, budget);
    std::cout << "halfplane-odd n=" << n << ": impossible at threshold 2 (edges): "
              << (impossible ? "true" : "false") << "\n";
    return 0;
  }
  if (what == "bottomless") {
    PointSet witness = find_bottomless_counterexample(budget);
    std::cout << "witness: " << json_to_string(pointset_to_json(witness));
    bool impossible =
        exhaustive_impossibility(witness, FamilyKind::bottomless(), 3, 2,
                                 ImpossibilityTarget::DelaunayEdges, ThresholdKind::Points,
                                 budget);
    std::cout << "impossible at threshold 3 (points): " << (impossible ? "true" : "false")
              << "\n";
    return 0;
  }
  if (what == "nocol") {
    long long valid = verify_no_local_mapping();
    std::cout << valid << " / 59049 mappings valid\n";
    return 0;
  }
  throw std::invalid_argument("tighten target must be halfplane-odd|bottomless|nocol");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"colorings of Delaunay-edges and point tuples, with brute-force verification"};
  app.require_subcommand(1);

  std::string kind, variant, in, coloring, family = "halfplane", halfspaces, out, what;
  std::string threshold_kind = "points", mode = "proper", alg;
  int n = 10, dim = 2, k = 2, t = 2, threshold = 3;
  uint64_t seed = 1;
  long long budget = -1;

  auto* gen = app.add_subcommand("gen", "generate a point-set file");
  gen->add_option("kind", kind, "random|grid|convex|counterexample")->required();
  gen->add_option("variant", variant, "counterexample variant: halfplane-odd|bottomless");
  gen->add_option("--n", n, "number of points");
  gen->add_option("--dim", dim, "dimension");
  gen->add_option("--seed", seed, "RNG seed");
  gen->add_option("--family", family, "condition general position on this family");
  gen->add_option("--out", out, "output file (stdout if absent)");

  auto* color = app.add_subcommand("color", "run a coloring algorithm");
  color->add_option("--in", in, "input point-set file (coloring file for prop1/prop2)")
      ->required();
  color->add_option("--family", family, "halfplane|bottomless|axisrect|disk|hregion|boxd");
  color->add_option("--halfspaces", halfspaces, "family spec JSON for hregion");
  color->add_option("--alg", alg, "thm1|thm2|thm3|cor-rect|thm8|thm9|thm6|prop1|prop2")
      ->required();
  color->add_option("--k", k, "palette size");
  color->add_option("--t", t, "tuple size");
  color->add_option("--out", out, "output file (stdout if absent)");

  auto* verify = app.add_subcommand("verify", "check a coloring against the canonical oracle");
  verify->add_option("--in", in, "point-set file")->required();
  verify->add_option("--coloring", coloring, "coloring file")->required();
  verify->add_option("--family", family, "region family")->required();
  verify->add_option("--halfspaces", halfspaces, "family spec JSON for hregion");
  verify->add_option("--threshold", threshold, "region size threshold")->required();
  verify->add_option("--threshold-kind", threshold_kind, "points|edges");
  verify->add_option("--mode", mode, "proper|polychromatic");
  verify->add_option("--out", out, "write the report JSON here");

  auto* svg = app.add_subcommand("svg", "render points and colored edges");
  svg->add_option("--in", in, "point-set file")->required();
  svg->add_option("--coloring", coloring, "coloring file")->required();
  svg->add_option("--out", out, "output SVG file (stdout if absent)");

  auto* tighten = app.add_subcommand("tighten", "tightness checks and counterexample searches");
  tighten->add_option("what", what, "halfplane-odd|bottomless|nocol")->required();
  tighten->add_option("--n", n, "point count for halfplane-odd");
  tighten->add_option("--budget", budget, "search budget");

  CLI11_PARSE(app, argc, argv);

  try {
    if (budget < 0) budget = default_budget();
    if (gen->parsed()) return run_gen(kind, variant, n, dim, seed, family, out);
    if (color->parsed()) return run_color(in, family, halfspaces, alg, k, t, out);
    if (verify->parsed())
      return run_verify(in, coloring, family, halfspaces, threshold, threshold_kind, mode, out);
    if (svg->parsed()) return run_svg(in, coloring, out);
    if (tighten->parsed()) return run_tighten(what, n, budget);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 2;
}
