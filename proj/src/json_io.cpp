#include "chroma/json_io.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace chroma {

namespace {

Json rational_to_json(const Rat& q) {
  if (auto v = rational_to_int64(q); v && std::abs(*v) < (1LL << 53)) return Json(*v);
  return Json(format_rational(q));
}

Rat rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("coordinate must be an integer or a decimal string");
}

} // namespace

Json pointset_to_json(const PointSet& s) {
  Json points = Json::array();
  for (int i = 0; i < s.size(); ++i) {
    Json coords = Json::array();
    for (const Rat& c : s[i].coords) coords.push_back(rational_to_json(c));
    points.push_back(std::move(coords));
  }
  return Json{{"dim", s.dim()}, {"points", std::move(points)}};
}

PointSet pointset_from_json(const Json& j) {
  const int dim = j.at("dim").get<int>();
  std::vector<Point> pts;
  for (const Json& row : j.at("points")) {
    if (static_cast<int>(row.size()) != dim)
      throw std::invalid_argument("point arity does not match dim");
    std::vector<Rat> coords;
    for (const Json& c : row) coords.push_back(rational_from_json(c));
    pts.push_back(Point(std::move(coords)));
  }
  return PointSet(std::move(pts));
}

Json hypergraph_to_json(const Hypergraph& h) {
  return Json{{"n", h.n()}, {"edges", h.edges()}};
}

Hypergraph hypergraph_from_json(const Json& j) {
  return Hypergraph::from_edges(j.at("n").get<int>(),
                                j.at("edges").get<std::vector<std::vector<int>>>());
}

Json family_to_json(const FamilyKind& f) {
  Json out{{"kind", f.name()}};
  if (f.type == FamilyType::HRegion) {
    Json hs = Json::array();
    for (const auto& h : f.halfspaces) {
      Json normal = Json::array();
      for (const Rat& c : h.normal) normal.push_back(rational_to_json(c));
      hs.push_back(std::move(normal));
    }
    out["halfspaces"] = std::move(hs);
  }
  return out;
}

FamilyKind family_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "halfplane") return FamilyKind::halfplane();
  if (kind == "bottomless") return FamilyKind::bottomless();
  if (kind == "axisrect") return FamilyKind::axis_rect();
  if (kind == "disk") return FamilyKind::disk();
  if (kind == "boxd") return FamilyKind::box_d();
  if (kind == "hregion") {
    std::vector<HalfspaceSpec> hs;
    for (const Json& row : j.at("halfspaces")) {
      std::vector<Rat> normal;
      for (const Json& c : row) normal.push_back(rational_from_json(c));
      hs.push_back(HalfspaceSpec{std::move(normal)});
    }
    return FamilyKind::h_region(std::move(hs));
  }
  throw std::invalid_argument("unknown family kind: " + kind);
}

Json edge_coloring_to_json(const EdgeColoring& c) {
  Json edges = Json::array();
  for (const auto& [e, col] : c.items()) edges.push_back(Json::array({e.first, e.second, col}));
  return Json{{"k", c.k()}, {"edges", std::move(edges)}};
}

EdgeColoring edge_coloring_from_json(const Json& j) {
  std::vector<std::pair<std::pair<int, int>, int>> items;
  for (const Json& row : j.at("edges")) {
    if (row.size() != 3) throw std::invalid_argument("edge coloring rows are [i,j,color]");
    items.push_back({{row[0].get<int>(), row[1].get<int>()}, row[2].get<int>()});
  }
  EdgeColoring c = EdgeColoring::from_assignments(std::move(items));
  const int declared = j.at("k").get<int>();
  if (declared < c.k()) throw std::invalid_argument("edge coloring: color exceeds declared k");
  return c;
}

Json tuple_coloring_to_json(const TupleColoring& c) {
  Json tuples = Json::array();
  if (c.colors().empty()) return Json{{"t", c.t()}, {"k", c.k()}, {"tuples", std::move(tuples)}};
  std::vector<int> tuple(c.t());
  for (int i = 0; i < c.t(); ++i) tuple[i] = i;
  const int n = c.n(), t = c.t();
  for (size_t rank = 0;; ++rank) {
    Json row = Json::array();
    for (int v : tuple) row.push_back(v);
    row.push_back(c.colors()[rank]);
    tuples.push_back(std::move(row));
    int i = t - 1;
    while (i >= 0 && tuple[i] == n - t + i) --i;
    if (i < 0) break;
    ++tuple[i];
    for (int j = i + 1; j < t; ++j) tuple[j] = tuple[j - 1] + 1;
  }
  return Json{{"t", c.t()}, {"k", c.k()}, {"tuples", std::move(tuples)}};
}

TupleColoring tuple_coloring_from_json(const Json& j) {
  const int t = j.at("t").get<int>();
  const int k = j.at("k").get<int>();
  const Json& tuples = j.at("tuples");
  // Recover n from C(n,t) == |tuples|. An empty file is the degenerate
  // coloring of a set too small to hold any t-subset.
  const uint64_t count = tuples.size();
  if (count == 0) return TupleColoring(0, t, k, {});
  int n = -1;
  for (int cand = t; cand <= 64; ++cand)
    if (binomial(cand, t) == count) { n = cand; break; }
  if (n < 0) throw std::invalid_argument("tuple coloring: row count is not C(n,t) for any n<=64");

  std::vector<int32_t> colors(count, 0);
  std::vector<char> seen(count, 0);
  std::vector<int> tuple(t);
  for (const Json& row : tuples) {
    if (static_cast<int>(row.size()) != t + 1)
      throw std::invalid_argument("tuple coloring rows are [i1,...,it,color]");
    for (int i = 0; i < t; ++i) tuple[i] = row[i].get<int>();
    if (!std::is_sorted(tuple.begin(), tuple.end()) ||
        std::adjacent_find(tuple.begin(), tuple.end()) != tuple.end() || tuple.front() < 0 ||
        tuple.back() >= n)
      throw std::invalid_argument("tuple coloring: tuples must be sorted index sets");
    uint64_t rank = combination_rank(n, tuple);
    if (seen[rank]) throw std::invalid_argument("tuple coloring: duplicate tuple");
    seen[rank] = 1;
    colors[rank] = row[t].get<int32_t>();
  }
  return TupleColoring(n, t, k, std::move(colors));
}

Json report_to_json(const VerificationReport& r) {
  Json out{{"passed", r.passed},
           {"checkedRegions", r.checked_regions},
           {"threshold", r.threshold},
           {"thresholdKind", r.threshold_kind == ThresholdKind::Points ? "points" : "edges"},
           {"mode", r.mode == VerifyMode::Polychromatic ? "polychromatic" : "proper"}};
  if (r.mode == VerifyMode::Polychromatic) out["k"] = r.palette;
  if (r.witness)
    out["witness"] = Json{{"hyperedge", r.witness->hyperedge}, {"detail", r.witness->detail}};
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << json_to_string(j);
}

std::string json_to_string(const Json& j) { return j.dump(2) + "\n"; }

} // namespace chroma
