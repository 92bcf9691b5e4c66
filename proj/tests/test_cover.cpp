#include <doctest.h>

#include "prym/fixtures.hpp"

using namespace prym;

TEST_CASE("cover construction invariants") {
    Rng rng(11);
    for (int i = 0; i < 25; ++i) {
        FreeDoubleCover cov = random_cover(rng, 6, 4);
        CHECK(genus(cov.total) == 2 * genus(cov.base) - 1);
        CHECK(is_spanning_tree(cov.total, cov.total_tree()));
        // involution is a fixed-point-free automorphism
        for (const Edge& e : cov.total.edges) {
            int ie = cov.inv_edge(e.id);
            CHECK(ie != e.id);
            CHECK(cov.total.edges[ie].src == cov.inv_vertex(e.src));
            CHECK(cov.total.edges[ie].dst == cov.inv_vertex(e.dst));
            CHECK(cov.total.lengths[ie] == cov.total.lengths[e.id]);
        }
        // non-flip edges stay within a sheet, flips cross
        for (const Edge& e : cov.base.edges) {
            const Edge& lift = cov.total.edges[cov.lift(e.id, +1)];
            bool crosses = cov.vert_sign(lift.src) != cov.vert_sign(lift.dst);
            CHECK(crosses == (cov.flips.count(e.id) > 0));
        }
    }
}

TEST_CASE("cover construction rejects bad presentations") {
    Graph g = dumbbell_graph();
    CHECK_THROWS_WITH_AS(build_cover(g, {2}, {}), doctest::Contains("disconnected"),
                         std::invalid_argument);
    CHECK_THROWS_AS(build_cover(g, {0}, {1}), std::invalid_argument);   // not a tree
    CHECK_THROWS_AS(build_cover(g, {2}, {2}), std::invalid_argument);   // overlap
}

TEST_CASE("the distinguished flip edge crosses sheets as specified") {
    FreeDoubleCover cov = loop_biangle_loop_cover();
    const Edge& l0 = cov.total.edges[cov.lift(cov.e0, +1)];
    CHECK(cov.vert_sign(l0.src) == +1);
    CHECK(cov.vert_sign(l0.dst) == -1);
    // sigma(5) = -1 puts the source of lift+(5) on the minus sheet
    const Edge& l5 = cov.total.edges[cov.lift(5, +1)];
    CHECK(cov.vert_sign(l5.src) == -1);
}

TEST_CASE("preimage connectivity: both methods agree on random subgraphs") {
    Rng rng(23);
    for (int i = 0; i < 40; ++i) {
        FreeDoubleCover cov = random_cover(rng, 6, 4);
        // random connected subgraph: grow from a random vertex
        for (int trial = 0; trial < 5; ++trial) {
            std::set<int> edges;
            for (const Edge& e : cov.base.edges)
                if (rng() % 2) edges.insert(e.id);
            // keep only one component of the chosen edge set
            std::set<int> removed;
            for (const Edge& e : cov.base.edges)
                if (!edges.count(e.id)) removed.insert(e.id);
            auto comps = connected_components(cov.base, removed);
            for (const auto& comp : comps) {
                Subgraph sub;
                sub.vertices.insert(comp.begin(), comp.end());
                for (int e : edges) {
                    const Edge& ed = cov.base.edges[e];
                    if (sub.vertices.count(ed.src) && sub.vertices.count(ed.dst))
                        sub.edges.insert(e);
                }
                // preimage_connected itself asserts lift-DFS == parity method
                CHECK_NOTHROW(preimage_connected(cov, sub));
            }
        }
    }
}

TEST_CASE("preimage of a tree subgraph is disconnected") {
    Rng rng(31);
    for (int i = 0; i < 10; ++i) {
        FreeDoubleCover cov = random_cover(rng, 6, 3);
        Subgraph sub;
        std::set<int> comp_removed;
        for (const Edge& e : cov.base.edges)
            if (!cov.tree.count(e.id)) comp_removed.insert(e.id);
        for (int v = 0; v < cov.n(); ++v) sub.vertices.insert(v);
        sub.edges = cov.tree;
        CHECK_FALSE(preimage_connected(cov, sub));
    }
}

TEST_CASE("preimage of the full base is connected") {
    Rng rng(37);
    for (int i = 0; i < 10; ++i) {
        FreeDoubleCover cov = random_cover(rng, 6, 3);
        CHECK(preimage_connected(cov, full_subgraph(cov.base)));
    }
}

TEST_CASE("unflipped loops stay loops, flipped loops become parallel cross edges") {
    FreeDoubleCover c2 = dumbbell_cover_two();
    // loop 0 flipped: lifts join sheet + and - at vertex 0
    CHECK_FALSE(c2.total.is_loop(c2.lift(0, +1)));
    // loop 1 unflipped: lifts remain loops
    CHECK(c2.total.is_loop(c2.lift(1, +1)));
    CHECK(c2.total.is_loop(c2.lift(1, -1)));
}

TEST_CASE("chain transport identities") {
    Rng rng(41);
    for (int i = 0; i < 15; ++i) {
        FreeDoubleCover cov = random_cover(rng, 6, 4);
        Chain base_chain, total_chain;
        for (int e = 0; e < cov.m(); ++e)
            if (int c = rand_below(rng, 9) - 4; c != 0) base_chain[e] = c;
        for (int e = 0; e < cov.total.num_edges(); ++e)
            if (int c = rand_below(rng, 9) - 4; c != 0) total_chain[e] = c;
        // pushforward of pullback doubles
        Chain up = pullback_chain(cov, base_chain);
        Chain down = pushforward_chain(cov, up);
        CHECK(down == chain_scaled(base_chain, 2));
        // involution is an involution and commutes with pushforward
        Chain inv = involute_chain(cov, total_chain);
        CHECK(involute_chain(cov, inv) == total_chain);
        CHECK(pushforward_chain(cov, inv) == pushforward_chain(cov, total_chain));
        // pullbacks are involution-invariant
        CHECK(involute_chain(cov, up) == up);
    }
}

TEST_CASE("cover subdivision matches graph subdivision") {
    Rng rng(43);
    for (int i = 0; i < 15; ++i) {
        FreeDoubleCover cov = random_cover(rng, 6, 4);
        int e = rand_below(rng, cov.m());
        Rat cut = Rat(cov.base.lengths[e] * Rat(1, 3));
        RefinedCover r = subdivide_cover(cov, e, cut);
        CHECK(genus(r.cover.base) == genus(cov.base));
        CHECK(genus(r.cover.total) == genus(cov.total));
        CHECK(r.cover.m() == cov.m() + 1);
        CHECK(r.trace.at(e).orig == e);
        CHECK(r.trace.at(cov.m()).orig == e);
        CHECK(r.trace.at(cov.m()).offset == cut);
        // total edge lengths preserved
        Rat before = 0, after = 0;
        for (const Rat& l : cov.base.lengths) before += l;
        for (const Rat& l : r.cover.base.lengths) after += l;
        CHECK(before == after);
    }
}

TEST_CASE("loopless model removes all loops and keeps the metric") {
    Rng rng(47);
    for (int i = 0; i < 15; ++i) {
        FreeDoubleCover cov = random_cover(rng, 5, 4);
        RefinedCover r = loopless_model(cov);
        for (const Edge& e : r.cover.base.edges) CHECK_FALSE(r.cover.base.is_loop(e.id));
        for (const Edge& e : r.cover.total.edges) CHECK_FALSE(r.cover.total.is_loop(e.id));
        CHECK(genus(r.cover.base) == genus(cov.base));
        Rat before = 0, after = 0;
        for (const Rat& l : cov.base.lengths) before += l;
        for (const Rat& l : r.cover.base.lengths) after += l;
        CHECK(before == after);
        for (const auto& [e, tr] : r.trace) CHECK(tr.orig < cov.m());
    }
}
