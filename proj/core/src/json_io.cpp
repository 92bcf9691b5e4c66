#include "prym/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace prym {

using nlohmann::json;
using nlohmann::ordered_json;

static void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

Graph graph_from_json(const json& j) {
    require(j.is_object(), "graph document must be a JSON object");
    require(j.contains("vertices") && j["vertices"].is_array(),
            "graph document needs a \"vertices\" array");
    require(j.contains("edges") && j["edges"].is_array(),
            "graph document needs an \"edges\" array");
    for (const auto& [key, _] : j.items())
        require(key == "vertices" || key == "edges", "unknown graph key \"" + key + "\"");

    std::set<int> verts;
    for (const auto& v : j["vertices"]) {
        require(v.is_number_integer(), "vertex ids must be integers");
        require(verts.insert(v.get<int>()).second, "duplicate vertex id");
    }
    int n = static_cast<int>(verts.size());
    for (int v = 0; v < n; ++v)
        require(verts.count(v), "vertex ids must be exactly 0..n-1");

    Graph g;
    g.num_vertices = n;
    std::vector<bool> seen;
    for (const auto& je : j["edges"]) {
        require(je.is_object(), "each edge must be a JSON object");
        for (const auto& [key, _] : je.items())
            require(key == "id" || key == "src" || key == "dst" || key == "len",
                    "unknown edge key \"" + key + "\"");
        require(je.contains("id") && je["id"].is_number_integer(), "edge needs integer \"id\"");
        require(je.contains("src") && je["src"].is_number_integer(), "edge needs integer \"src\"");
        require(je.contains("dst") && je["dst"].is_number_integer(), "edge needs integer \"dst\"");
        int id = je["id"].get<int>();
        require(id >= 0, "edge ids must be nonnegative");
        if (id >= static_cast<int>(seen.size())) seen.resize(id + 1, false);
        require(!seen[id], "duplicate edge id");
        seen[id] = true;
        int src = je["src"].get<int>(), dst = je["dst"].get<int>();
        require(src >= 0 && src < n && dst >= 0 && dst < n, "edge endpoint out of range");
        if (id >= static_cast<int>(g.edges.size())) {
            g.edges.resize(id + 1);
            g.lengths.resize(id + 1, Rat(1));
        }
        g.edges[id] = Edge{id, src, dst};
        if (je.contains("len")) {
            require(je["len"].is_string(), "edge \"len\" must be a fraction string");
            Rat l = rat_from_string(je["len"].get<std::string>());
            require(l > 0, "edge lengths must be positive");
            g.lengths[id] = l;
        }
    }
    for (size_t i = 0; i < seen.size(); ++i)
        require(seen[i], "edge ids must be exactly 0..m-1");
    g.validate();
    return g;
}

ordered_json graph_to_json(const Graph& g) {
    ordered_json j;
    j["vertices"] = json::array();
    for (int v = 0; v < g.num_vertices; ++v) j["vertices"].push_back(v);
    j["edges"] = json::array();
    for (const Edge& e : g.edges) {
        ordered_json je;
        je["id"] = e.id;
        je["src"] = e.src;
        je["dst"] = e.dst;
        if (g.lengths[e.id] != 1) je["len"] = rat_to_string(g.lengths[e.id]);
        j["edges"].push_back(std::move(je));
    }
    return j;
}

static std::set<int> int_set(const json& arr, const std::string& what) {
    require(arr.is_array(), "\"" + what + "\" must be an array of edge ids");
    std::set<int> out;
    for (const auto& v : arr) {
        require(v.is_number_integer(), "\"" + what + "\" entries must be integers");
        require(out.insert(v.get<int>()).second, "duplicate id in \"" + what + "\"");
    }
    return out;
}

CoverSpec cover_spec_from_json(const json& j) {
    require(j.is_object(), "cover document must be a JSON object");
    for (const auto& [key, _] : j.items())
        require(key == "tree" || key == "flips" || key == "e0" || key == "sigma",
                "unknown cover key \"" + key + "\"");
    require(j.contains("tree"), "cover document needs a \"tree\" array");
    require(j.contains("flips"), "cover document needs a \"flips\" array");
    CoverSpec spec;
    spec.tree = int_set(j["tree"], "tree");
    spec.flips = int_set(j["flips"], "flips");
    if (j.contains("e0")) {
        require(j["e0"].is_number_integer(), "\"e0\" must be an edge id");
        spec.e0 = j["e0"].get<int>();
    }
    if (j.contains("sigma")) {
        require(j["sigma"].is_object(), "\"sigma\" must map edge ids to +1/-1");
        for (const auto& [key, v] : j["sigma"].items()) {
            require(v.is_number_integer() && (v.get<int>() == 1 || v.get<int>() == -1),
                    "\"sigma\" values must be 1 or -1");
            spec.sigma[std::stoi(key)] = v.get<int>();
        }
    }
    return spec;
}

ordered_json cover_spec_to_json(const CoverSpec& spec) {
    ordered_json j;
    j["tree"] = spec.tree;
    j["flips"] = spec.flips;
    if (spec.e0 >= 0) j["e0"] = spec.e0;
    if (!spec.sigma.empty()) {
        ordered_json s = ordered_json::object();
        for (const auto& [e, v] : spec.sigma) s[std::to_string(e)] = v;
        j["sigma"] = std::move(s);
    }
    return j;
}

ordered_json cover_spec_to_json(const FreeDoubleCover& cov) {
    CoverSpec spec{cov.tree, cov.flips, cov.e0, cov.sigma};
    return cover_spec_to_json(spec);
}

FreeDoubleCover cover_from_json(const Graph& base, const json& j) {
    CoverSpec spec = cover_spec_from_json(j);
    return build_cover(base, spec.tree, spec.flips, spec.e0, spec.sigma);
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
    return j;
}

Graph load_graph_file(const std::string& path) { return graph_from_json(load_json_file(path)); }

FreeDoubleCover load_cover_file(const Graph& base, const std::string& path) {
    return cover_from_json(base, load_json_file(path));
}

std::string to_canonical_string(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace prym
