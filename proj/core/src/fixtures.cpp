#include "prym/fixtures.hpp"

#include <stdexcept>

namespace prym {

Graph banana_chain_graph() {
    return make_graph(4, {{0, 1}, {2, 3}, {0, 1}, {1, 2}, {2, 3}});
}

FreeDoubleCover banana_chain_cover() {
    return build_cover(banana_chain_graph(), {2, 3, 4}, {0, 1});
}

Graph dumbbell_graph(const Rat& x1, const Rat& x2, const Rat& x3) {
    return make_graph(2, {{0, 0}, {1, 1}, {0, 1}}, {x1, x2, x3});
}

FreeDoubleCover dumbbell_cover_one(const Rat& x1, const Rat& x2, const Rat& x3) {
    return build_cover(dumbbell_graph(x1, x2, x3), {2}, {0, 1});
}

FreeDoubleCover dumbbell_cover_two(const Rat& x1, const Rat& x2, const Rat& x3) {
    return build_cover(dumbbell_graph(x1, x2, x3), {2}, {0});
}

Graph loop_biangle_loop_graph(const std::vector<Rat>& lengths) {
    return make_graph(4, {{0, 0}, {1, 0}, {2, 1}, {1, 2}, {2, 3}, {3, 3}}, lengths);
}

FreeDoubleCover loop_biangle_loop_cover(const std::vector<Rat>& lengths) {
    return build_cover(loop_biangle_loop_graph(lengths), {1, 3, 4}, {0, 2, 5}, 2,
                       {{0, 1}, {5, -1}});
}

std::vector<Rat> loop_biangle_loop_demo_lengths() {
    return {Rat(12, 5), Rat(4, 5), Rat(1), Rat(7, 5), Rat(11, 10), Rat(7, 5)};
}

FreeDoubleCover mixed_degree_cover() {
    Graph g = make_graph(3, {{0, 1}, {2, 1}, {1, 1}, {0, 2}, {0, 2}},
                         {Rat(1), Rat(1), Rat(4), Rat(1), Rat(1)});
    return build_cover(g, {0, 1}, {2, 3}, 2, {{3, 1}});
}

int rand_below(Rng& rng, int n) { return static_cast<int>(rng() % static_cast<Rng::result_type>(n)); }

Rat random_positive_rat(Rng& rng, int max_num, int max_den) {
    Rat r(1 + rand_below(rng, max_num), 1 + rand_below(rng, max_den));
    r.canonicalize();
    return r;
}

Graph random_connected_graph(Rng& rng, int num_vertices, int extra) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < num_vertices; ++v) edges.emplace_back(rand_below(rng, v), v);
    for (int i = 0; i < extra; ++i)
        edges.emplace_back(rand_below(rng, num_vertices), rand_below(rng, num_vertices));
    return make_graph(num_vertices, edges);
}

FreeDoubleCover random_cover(Rng& rng, const Graph& base) {
    std::vector<std::set<int>> trees = spanning_trees(base);
    if (trees.empty()) throw std::invalid_argument("base graph is disconnected");
    const std::set<int>& tree = trees[rand_below(rng, static_cast<int>(trees.size()))];
    std::vector<int> comp;
    for (const Edge& e : base.edges)
        if (!tree.count(e.id)) comp.push_back(e.id);
    if (comp.empty()) throw std::invalid_argument("base graph is a tree; no free double cover");
    std::set<int> flips;
    while (flips.empty())
        for (int e : comp)
            if (rng() % 2) flips.insert(e);
    std::map<int, int> sigma;
    for (int e : flips) sigma[e] = rng() % 2 ? 1 : -1;
    int e0 = *flips.begin();
    sigma.erase(e0);
    return build_cover(base, tree, flips, e0, sigma);
}

FreeDoubleCover random_cover(Rng& rng, int max_vertices, int max_genus) {
    int n = 2 + rand_below(rng, max_vertices - 1);
    int g = 1 + rand_below(rng, max_genus);
    Graph base = random_connected_graph(rng, n, g);
    return random_cover(rng, base);
}

}  // namespace prym
