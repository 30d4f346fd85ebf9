#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace cbg {

// Searches for an injective, edge-preserving map pattern -> host (subgraph
// embedding, not necessarily induced). Backtracking over pattern vertices in
// descending-degree order with adjacency and degree pruning. Guarded on the
// host size; the search itself is exponential in the worst case.
inline std::optional<VertexMap> find_subgraph_embedding(const SimpleGraph& pattern,
                                                        const SimpleGraph& host,
                                                        int max_host_vertices = 10) {
    if (host.vertex_count() > max_host_vertices)
        throw GuardError("embedding search guard: host has " +
                         std::to_string(host.vertex_count()) + " vertices, limit " +
                         std::to_string(max_host_vertices));
    int pn = pattern.vertex_count(), hn = host.vertex_count();
    if (pn > hn || pattern.edge_count() > host.edge_count()) return std::nullopt;

    std::vector<int> pdeg(pn + 1), hdeg(hn + 1);
    for (int v = 1; v <= pn; ++v) pdeg[v] = pattern.degree(v);
    for (int v = 1; v <= hn; ++v) hdeg[v] = host.degree(v);

    std::vector<int> order(pn);
    std::iota(order.begin(), order.end(), 1);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return pdeg[a] != pdeg[b] ? pdeg[a] > pdeg[b] : a < b;
    });

    // earlier pattern neighbors of each ordered vertex
    std::vector<std::vector<int>> prior(pn);
    for (int k = 0; k < pn; ++k)
        for (int r = 0; r < k; ++r)
            if (pattern.has_edge(order[r], order[k])) prior[k].push_back(r);

    std::vector<int> image(pn + 1, 0);  // pattern vertex -> host vertex
    std::vector<char> used(hn + 1, 0);

    const std::function<bool(int)> rec = [&](int k) -> bool {
        if (k == pn) return true;
        int pv = order[k];
        for (int hv = 1; hv <= hn; ++hv) {
            if (used[hv] || hdeg[hv] < pdeg[pv]) continue;
            bool ok = true;
            for (int r : prior[k])
                if (!host.has_edge(image[order[r]], hv)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            image[pv] = hv;
            used[hv] = 1;
            if (rec(k + 1)) return true;
            used[hv] = 0;
            image[pv] = 0;
        }
        return false;
    };

    if (!rec(0)) return std::nullopt;
    VertexMap m;
    m.image.assign(image.begin() + 1, image.end());
    return m;
}

}  // namespace cbg
