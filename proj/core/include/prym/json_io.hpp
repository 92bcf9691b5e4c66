#pragma once

#include <string>

#include <json.hpp>

#include "prym/cover.hpp"

namespace prym {

// Graph documents: {"vertices":[0,1,...],"edges":[{"id":0,"src":..,"dst":..,
// "len":"p/q"},...]}. Lengths are exact-fraction strings; an omitted "len"
// means 1. Vertex ids must be exactly 0..n-1 and edge ids 0..m-1.
Graph graph_from_json(const nlohmann::json& j);
nlohmann::ordered_json graph_to_json(const Graph& g);

// Cover documents reference a separately supplied graph:
// {"tree":[edge ids],"flips":[edge ids]} with optional "e0" (defaults to the
// smallest flip id) and "sigma" ({"edge id": 1 or -1} for flips other than
// e0, defaults to +1).
struct CoverSpec {
    std::set<int> tree;
    std::set<int> flips;
    int e0 = -1;
    std::map<int, int> sigma;
};

CoverSpec cover_spec_from_json(const nlohmann::json& j);
nlohmann::ordered_json cover_spec_to_json(const CoverSpec& spec);
nlohmann::ordered_json cover_spec_to_json(const FreeDoubleCover& cov);

FreeDoubleCover cover_from_json(const Graph& base, const nlohmann::json& j);

// File helpers; throw std::runtime_error with the file name on I/O or parse
// failure.
nlohmann::json load_json_file(const std::string& path);
Graph load_graph_file(const std::string& path);
FreeDoubleCover load_cover_file(const Graph& base, const std::string& path);

// Canonical serialization used by the round-trip guarantee: 2-space indent,
// keys in the documented order.
std::string to_canonical_string(const nlohmann::ordered_json& j);

}  // namespace prym
