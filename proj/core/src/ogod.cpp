#include "prym/ogod.hpp"

#include <numeric>
#include <stdexcept>

namespace prym {

std::vector<OgodRecord> enumerate_ogods(const FreeDoubleCover& cov) {
    const Graph& base = cov.base;
    int g = genus(base);
    int m = base.num_edges();
    int k = g - 1;
    std::vector<OgodRecord> out;
    if (k < 0 || k > m) return out;

    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    auto consider = [&](const std::set<int>& f) {
        auto comps = connected_components(base, f);
        OgodRecord rec;
        rec.edges = f;
        rec.weight = 1;
        for (const auto& cv : comps) {
            OgodComponent c;
            c.vertices = cv;
            c.genus = subgraph_genus(base, cv, f);
            if (c.genus != 1) return;
            Subgraph sub;
            sub.vertices.insert(cv.begin(), cv.end());
            for (const Edge& e : base.edges)
                if (!f.count(e.id) && sub.vertices.count(e.src) && sub.vertices.count(e.dst))
                    sub.edges.insert(e.id);
            c.preimage_connected = preimage_connected_parity(cov, sub);
            if (!c.preimage_connected) return;
            rec.components.push_back(std::move(c));
        }
        rec.rank = static_cast<int>(rec.components.size());
        for (int e : f) rec.weight *= base.lengths[e];
        out.push_back(std::move(rec));
    };

    if (k == 0) {
        consider({});
        return out;
    }
    while (true) {
        consider(std::set<int>(idx.begin(), idx.end()));
        int i = k - 1;
        while (i >= 0 && idx[i] == m - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

Rat vol2_jacobian(const Graph& g) {
    Rat total = 0;
    for (const std::set<int>& tree : spanning_trees(g)) {
        Rat w = 1;
        for (const Edge& e : g.edges)
            if (!tree.count(e.id)) w *= g.lengths[e.id];
        total += w;
    }
    return total;
}

Rat vol2_prym(const FreeDoubleCover& cov) {
    Rat total = 0;
    for (const OgodRecord& rec : enumerate_ogods(cov)) {
        Rat term = rec.weight;
        for (int i = 1; i < rec.rank; ++i) term *= 4;
        total += term;
    }
    return total;
}

}  // namespace prym
