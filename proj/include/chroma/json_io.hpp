#pragma once

#include <string>

#include <json.hpp>

#include "chroma/edge_coloring.hpp"
#include "chroma/families.hpp"
#include "chroma/geometry.hpp"
#include "chroma/hypergraph.hpp"
#include "chroma/tuple_coloring.hpp"
#include "chroma/verifier.hpp"

namespace chroma {

using Json = nlohmann::json;

// Point set: {"dim": d, "points": [[c1,...,cd], ...]}; coordinates are JSON
// integers or exact decimal strings ("p/q" accepted for other rationals).
Json pointset_to_json(const PointSet& s);
PointSet pointset_from_json(const Json& j);

// Hypergraph: {"n": int, "edges": [[i,...], ...]} lexicographically sorted.
Json hypergraph_to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const Json& j);

// Family descriptor: {"kind": "...", "halfspaces": [[a1,...,ad], ...]}.
Json family_to_json(const FamilyKind& f);
FamilyKind family_from_json(const Json& j);

// Edge coloring: {"k": int, "edges": [[i,j,color], ...]} sorted by (i,j).
Json edge_coloring_to_json(const EdgeColoring& c);
EdgeColoring edge_coloring_from_json(const Json& j);

// Tuple coloring: {"t": int, "k": int, "tuples": [[i1,...,it,color], ...]}
// lexicographically sorted; n is recovered from the tuple count.
Json tuple_coloring_to_json(const TupleColoring& c);
TupleColoring tuple_coloring_from_json(const Json& j);

Json report_to_json(const VerificationReport& r);

// File helpers; writers emit canonical two-space-indented JSON plus newline.
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);
std::string json_to_string(const Json& j);

} // namespace chroma
