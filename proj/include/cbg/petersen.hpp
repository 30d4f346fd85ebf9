#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "graph.hpp"
#include "isomorphism.hpp"
#include "minor_ops.hpp"

namespace cbg {

// The Petersen graph as the Kneser graph on 2-subsets of {1..5}: vertices are
// the ten pairs, adjacent iff disjoint.
inline SimpleGraph petersen_graph() {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 1; a <= 5; ++a)
        for (int b = a + 1; b <= 5; ++b) pairs.push_back({a, b});
    SimpleGraph g(10);
    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = i + 1; j < pairs.size(); ++j) {
            auto [a, b] = pairs[i];
            auto [c, d] = pairs[j];
            if (a != c && a != d && b != c && b != d)
                g.add_edge(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
        }
    return g;
}

namespace detail {

// Delta-Y: replace the edges of a triangle by a new degree-3 vertex.
inline SimpleGraph delta_y(const SimpleGraph& g, int a, int b, int c) {
    SimpleGraph out(g.vertex_count() + 1);
    int y = g.vertex_count() + 1;
    for (const auto& e : g.edges()) {
        bool in_tri = (e == std::pair{std::min(a, b), std::max(a, b)}) ||
                      (e == std::pair{std::min(a, c), std::max(a, c)}) ||
                      (e == std::pair{std::min(b, c), std::max(b, c)});
        if (!in_tri) out.add_edge(e.first, e.second);
    }
    out.add_edge(a, y);
    out.add_edge(b, y);
    out.add_edge(c, y);
    return out;
}

// Y-Delta: replace a degree-3 vertex by the triangle on its neighbors.
// Only applied when none of the triangle edges already exists, which keeps
// the transform inside simple graphs of unchanged edge count.
inline SimpleGraph y_delta(const SimpleGraph& g, int v, int a, int b, int c) {
    SimpleGraph out = g;
    out.add_edge(a, b);
    out.add_edge(a, c);
    out.add_edge(b, c);
    return apply_minor_op(out, MinorOp::delete_vertex(v));
}

}  // namespace detail

// The closure of K_6 under Delta-Y and Y-Delta transforms, deduplicated up to
// isomorphism; the family of forbidden minors for linkless embeddability.
// Computed once per process.
inline const std::vector<SimpleGraph>& petersen_family() {
    static const std::vector<SimpleGraph> family = [] {
        std::vector<SimpleGraph> out;
        std::map<std::vector<char>, bool> seen;
        std::vector<SimpleGraph> queue{complete_graph(6)};
        seen[canonical_form(queue[0])] = true;
        while (!queue.empty()) {
            SimpleGraph g = queue.back();
            queue.pop_back();
            out.push_back(g);
            int n = g.vertex_count();
            std::vector<SimpleGraph> next;
            // all triangles -> Delta-Y
            for (int a = 1; a <= n; ++a)
                for (int b = a + 1; b <= n; ++b)
                    for (int c = b + 1; c <= n; ++c)
                        if (g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c))
                            next.push_back(detail::delta_y(g, a, b, c));
            // all degree-3 vertices with independent neighborhoods -> Y-Delta
            for (int v = 1; v <= n; ++v) {
                auto nb = g.neighbors(v);
                if (nb.size() != 3) continue;
                if (g.has_edge(nb[0], nb[1]) || g.has_edge(nb[0], nb[2]) ||
                    g.has_edge(nb[1], nb[2]))
                    continue;
                next.push_back(detail::y_delta(g, v, nb[0], nb[1], nb[2]));
            }
            for (auto& h : next) {
                auto key = canonical_form(h);
                if (!seen.count(key)) {
                    seen[key] = true;
                    queue.push_back(h);
                }
            }
        }
        std::sort(out.begin(), out.end(), [](const SimpleGraph& x, const SimpleGraph& y) {
            return x.vertex_count() < y.vertex_count();
        });
        return out;
    }();
    return family;
}

}  // namespace cbg
