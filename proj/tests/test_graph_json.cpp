#include <doctest.h>

#include "prym/fixtures.hpp"
#include "prym/json_io.hpp"

using namespace prym;

TEST_CASE("genus of the standard fixtures") {
    CHECK(genus(dumbbell_graph()) == 2);
    CHECK(genus(loop_biangle_loop_graph()) == 3);
    CHECK(genus(banana_chain_graph()) == 2);
    Graph point = make_graph(1, {});
    CHECK(genus(point) == 0);
}

TEST_CASE("genus rejects disconnected graphs naming the components") {
    Graph g = make_graph(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_WITH_AS(genus(g), doctest::Contains("{0,1} | {2,3}"), std::invalid_argument);
}

TEST_CASE("connected components respect edge removal but keep vertices") {
    Graph g = banana_chain_graph();
    auto comps = connected_components(g, {3});
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<int>{0, 1});
    CHECK(comps[1] == std::vector<int>{2, 3});
    CHECK(connected_components(g).size() == 1);
    CHECK(connected_components(dumbbell_graph(), {2}).size() == 2);
    CHECK(connected_components(dumbbell_graph(), {0}).size() == 1);
}

TEST_CASE("spanning tree enumeration") {
    CHECK(spanning_trees(dumbbell_graph()) == std::vector<std::set<int>>{{2}});
    Graph triangle = make_graph(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(spanning_trees(triangle).size() == 3);
    Graph path = make_graph(3, {{0, 1}, {1, 2}});
    CHECK(spanning_trees(path) == std::vector<std::set<int>>{{0, 1}});
    // lexicographic order
    auto trees = spanning_trees(banana_chain_graph());
    CHECK(trees.size() == 4);
    CHECK(std::is_sorted(trees.begin(), trees.end()));
}

TEST_CASE("fundamental cycles close up") {
    Graph g = dumbbell_graph();
    Chain c = fundamental_cycle(g, {2}, 0);
    CHECK(c == Chain{{0, 1}});
    Graph big = loop_biangle_loop_graph();
    std::set<int> tree{1, 3, 4};
    for (int e : {0, 2, 5}) {
        Chain cyc = fundamental_cycle(big, tree, e);
        CHECK(chain_coeff(cyc, e) == 1);
        CHECK(chain_boundary(big, cyc).empty());
    }
    CHECK_THROWS_AS(fundamental_cycle(big, tree, 1), std::invalid_argument);
}

TEST_CASE("pairings") {
    Rng rng(7);
    Graph g = random_connected_graph(rng, 5, 3);
    for (int trial = 0; trial < 10; ++trial) {
        Chain c, d;
        for (int e = 0; e < g.num_edges(); ++e) {
            c[e] = rand_below(rng, 7) - 3;
            d[e] = rand_below(rng, 7) - 3;
        }
        CHECK(chain_pairing(c, d) == chain_pairing(d, c));
        CHECK(length_pairing(c, d, g) == length_pairing(d, c, g));
    }
    CHECK(chain_pairing(Chain{{3, 1}}, Chain{{3, 1}}) == 1);
    Graph w = make_graph(2, {{0, 1}}, {Rat(7, 3)});
    CHECK(length_pairing(Chain{{0, 2}}, Chain{{0, 1}}, w) == Rat(14, 3));
}

TEST_CASE("edge subdivision bookkeeping") {
    Graph g = dumbbell_graph(Rat(2), Rat(3), Rat(5));
    SubdividedGraph s = subdivide_edge(g, 2, Rat(1, 2));
    CHECK(s.graph.num_vertices == 3);
    CHECK(s.graph.num_edges() == 4);
    CHECK(s.graph.lengths[2] == Rat(1, 2));
    CHECK(s.graph.lengths[s.new_edge] == Rat(9, 2));
    CHECK(s.graph.edges[2].src == 0);
    CHECK(s.graph.edges[2].dst == s.new_vertex);
    CHECK(s.graph.edges[s.new_edge].src == s.new_vertex);
    CHECK(s.graph.edges[s.new_edge].dst == 1);
    CHECK(s.provenance.at(2).orig_edge == 2);
    CHECK(s.provenance.at(2).offset == 0);
    CHECK(s.provenance.at(s.new_edge).offset == Rat(1, 2));
    CHECK(genus(s.graph) == genus(g));
}

TEST_CASE("graph json round trip is canonical") {
    Graph g = loop_biangle_loop_graph(loop_biangle_loop_demo_lengths());
    std::string once = to_canonical_string(graph_to_json(g));
    Graph parsed = graph_from_json(nlohmann::json::parse(once));
    CHECK(to_canonical_string(graph_to_json(parsed)) == once);
    // key order in input does not matter
    auto shuffled = nlohmann::json::parse(
        R"({"edges":[{"len":"2","dst":1,"id":0,"src":0}],"vertices":[0,1]})");
    Graph h = graph_from_json(shuffled);
    CHECK(h.lengths[0] == 2);
}

TEST_CASE("graph json rejects malformed documents") {
    auto parse = [](const char* s) { return graph_from_json(nlohmann::json::parse(s)); };
    CHECK_THROWS_AS(parse(R"({"vertices":[0,2],"edges":[]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse(R"({"vertices":[0,1]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse(R"({"vertices":[0,1],"edges":[{"id":1,"src":0,"dst":1}]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse(R"({"vertices":[0,1],"edges":[{"id":0,"src":0,"dst":5}]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse(R"({"vertices":[0,1],"edges":[{"id":0,"src":0,"dst":1,"len":"0"}]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse(R"({"vertices":[0,1],"edges":[{"id":0,"src":0,"dst":1,"len":"x"}]})"),
                    std::invalid_argument);
}

TEST_CASE("cover json supports the optional presentation fields") {
    Graph g = loop_biangle_loop_graph();
    auto j = nlohmann::json::parse(
        R"({"tree":[1,3,4],"flips":[0,2,5],"e0":2,"sigma":{"0":1,"5":-1}})");
    FreeDoubleCover cov = cover_from_json(g, j);
    CHECK(cov.e0 == 2);
    CHECK(cov.sigma.at(5) == -1);
    std::string out = to_canonical_string(cover_spec_to_json(cov));
    FreeDoubleCover again = cover_from_json(g, nlohmann::json::parse(out));
    REQUIRE(again.total.edges.size() == cov.total.edges.size());
    for (size_t i = 0; i < cov.total.edges.size(); ++i) {
        CHECK(again.total.edges[i].src == cov.total.edges[i].src);
        CHECK(again.total.edges[i].dst == cov.total.edges[i].dst);
    }

    auto defaults = nlohmann::json::parse(R"({"tree":[1,3,4],"flips":[0,2,5]})");
    FreeDoubleCover d = cover_from_json(g, defaults);
    CHECK(d.e0 == 0);
    CHECK(d.sigma.at(2) == 1);
}

TEST_CASE("rational string parsing") {
    CHECK(rat_from_string("3/6") == Rat(1, 2));
    CHECK(rat_from_string("-4") == -4);
    CHECK(rat_to_string(Rat(22, 4)) == "11/2");
    CHECK(rat_to_string(Rat(-3)) == "-3");
    CHECK_THROWS_AS(rat_from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string("1.5"), std::invalid_argument);
    CHECK(rat_floor(Rat(-7, 2)) == -4);
    CHECK(rat_ceil(Rat(-7, 2)) == -3);
}
