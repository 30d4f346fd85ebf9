#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace cbg {

// One elementary minor operation: delete a vertex, delete an edge, or
// contract an edge.
struct MinorOp {
    enum class Kind { DeleteVertex, DeleteEdge, ContractEdge };

    Kind kind;
    int u = 0;  // vertex for DeleteVertex; else smaller edge endpoint after normalize
    int v = 0;  // unused for DeleteVertex

    static MinorOp delete_vertex(int v) { return {Kind::DeleteVertex, v, 0}; }
    static MinorOp delete_edge(int i, int j) { return {Kind::DeleteEdge, i, j}; }
    static MinorOp contract_edge(int i, int j) { return {Kind::ContractEdge, i, j}; }

    std::string describe() const {
        switch (kind) {
            case Kind::DeleteVertex: return "delete-vertex " + std::to_string(u);
            case Kind::DeleteEdge:
                return "delete-edge {" + std::to_string(u) + "," + std::to_string(v) + "}";
            default:
                return "contract-edge {" + std::to_string(u) + "," + std::to_string(v) + "}";
        }
    }
};

// Applies one elementary minor operation. Vertex labels are renumbered
// order-preservingly onto 1..n'; a contracted pair keeps the smaller label.
inline SimpleGraph apply_minor_op(const SimpleGraph& g, const MinorOp& op) {
    int n = g.vertex_count();
    switch (op.kind) {
        case MinorOp::Kind::DeleteVertex: {
            int v = op.u;
            if (!g.has_vertex(v))
                throw std::invalid_argument("delete of absent vertex " + std::to_string(v));
            SimpleGraph out(n - 1);
            for (const auto& e : g.edges()) {
                if (e.first == v || e.second == v) continue;
                out.add_edge(e.first - (e.first > v), e.second - (e.second > v));
            }
            return out;
        }
        case MinorOp::Kind::DeleteEdge: {
            if (!g.has_edge(op.u, op.v))
                throw std::invalid_argument("delete of absent edge {" + std::to_string(op.u) +
                                            "," + std::to_string(op.v) + "}");
            SimpleGraph out = g;
            out.remove_edge(op.u, op.v);
            return out;
        }
        default: {
            if (!g.has_edge(op.u, op.v))
                throw std::invalid_argument("contract of absent edge {" + std::to_string(op.u) +
                                            "," + std::to_string(op.v) + "}");
            int keep = std::min(op.u, op.v), drop = std::max(op.u, op.v);
            SimpleGraph out(n - 1);
            auto relabel = [&](int w) {
                if (w == drop) w = keep;
                return w - (w > drop);
            };
            for (const auto& e : g.edges()) {
                int a = relabel(e.first), b = relabel(e.second);
                if (a == b) continue;  // the contracted edge itself
                if (!out.has_edge(a, b)) out.add_edge(a, b);  // parallel edges collapse
            }
            return out;
        }
    }
}

namespace detail {

// Branch-set search state for minor embedding: each pattern vertex is mapped
// to a nonempty connected set of host vertices, sets disjoint, and every
// pattern edge must be realized by a host edge between the two sets.
struct MinorSearch {
    int hn = 0, pn = 0;
    std::vector<std::uint32_t> hadj;           // host adjacency masks
    std::vector<int> order;                    // pattern vertices, component-wise BFS
    std::vector<std::vector<int>> required;    // indices into order[] of earlier neighbors
    std::vector<std::uint32_t> sets;           // branch set per order position

    std::uint32_t neighborhood(std::uint32_t s) const {
        std::uint32_t nb = 0;
        while (s) {
            int v = __builtin_ctz(s);
            s &= s - 1;
            nb |= hadj[v];
        }
        return nb;
    }

    std::uint32_t reach_from(std::uint32_t seed, std::uint32_t allowed) const {
        std::uint32_t r = seed;
        while (true) {
            std::uint32_t grown = r | (neighborhood(r) & allowed);
            if (grown == r) return r;
            r = grown;
        }
    }

    bool place(int k, std::uint32_t used) {
        if (k == pn) return true;
        std::uint32_t free = ~used & (hn == 32 ? ~0u : (1u << hn) - 1);
        int slack = __builtin_popcount(free) - (pn - k);
        if (slack < 0) return false;
        std::uint32_t tried = 0;
        for (int v = 0; v < hn; ++v) {
            std::uint32_t bit = 1u << v;
            if (!(free & bit)) continue;
            if (grow(k, used, bit, tried, 1 + slack)) return true;
            tried |= bit;
        }
        return false;
    }

    // Grow the branch set `s` for order position k; `banned` marks host
    // vertices excluded in this subtree (canonical enumeration), `cap` the
    // maximum size this set may reach.
    bool grow(int k, std::uint32_t used, std::uint32_t s, std::uint32_t banned, int cap) {
        std::uint32_t full = (hn == 32 ? ~0u : (1u << hn) - 1);
        std::uint32_t free_beyond = full & ~used & ~banned & ~s;

        bool all_met = true;
        for (int r : required[k]) {
            if (neighborhood(sets[r]) & s) continue;
            all_met = false;
            // unmet requirement must stay reachable through growable vertices
            std::uint32_t reach = reach_from(s, free_beyond) & ~s;
            if (!(neighborhood(sets[r]) & reach)) return false;
            break;
        }
        if (all_met) {
            sets[k] = s;
            if (place(k + 1, used | s)) return true;
        }
        if (__builtin_popcount(s) >= cap) return false;
        std::uint32_t ext = neighborhood(s) & free_beyond;
        std::uint32_t tried = 0;
        while (ext) {
            std::uint32_t bit = ext & (~ext + 1);
            ext &= ext - 1;
            if (grow(k, used, s | bit, banned | tried, cap)) return true;
            tried |= bit;
        }
        return false;
    }
};

}  // namespace detail

// Whether `pattern` is a minor of `host`, by branch-and-bound over branch
// sets. Guarded: hosts above `max_host_vertices` are rejected outright.
inline bool has_minor(const SimpleGraph& host, const SimpleGraph& pattern,
                      int max_host_vertices = 12) {
    if (host.vertex_count() > max_host_vertices)
        throw GuardError("minor search guard: host has " + std::to_string(host.vertex_count()) +
                         " vertices, limit " + std::to_string(max_host_vertices));
    int hn = host.vertex_count(), pn = pattern.vertex_count();
    if (pn == 0) return true;
    if (pn > hn || pattern.edge_count() > host.edge_count()) return false;

    detail::MinorSearch ms;
    ms.hn = hn;
    ms.pn = pn;
    ms.hadj = host.adjacency_masks();

    // component-wise BFS order, each component started at a max-degree vertex
    std::vector<int> degree(pn + 1, 0);
    for (int v = 1; v <= pn; ++v) degree[v] = pattern.degree(v);
    std::vector<char> placed(pn + 1, 0);
    for (const auto& comp : connected_components(pattern)) {
        int start = comp[0];
        for (int v : comp)
            if (degree[v] > degree[start]) start = v;
        std::vector<int> queue{start};
        placed[start] = 1;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            ms.order.push_back(v);
            auto nb = pattern.neighbors(v);
            std::sort(nb.begin(), nb.end(),
                      [&](int a, int b) { return degree[a] != degree[b] ? degree[a] > degree[b]
                                                                        : a < b; });
            for (int w : nb)
                if (!placed[w]) {
                    placed[w] = 1;
                    queue.push_back(w);
                }
        }
    }
    ms.required.resize(pn);
    ms.sets.assign(pn, 0);
    for (int k = 0; k < pn; ++k)
        for (int r = 0; r < k; ++r)
            if (pattern.has_edge(ms.order[r], ms.order[k])) ms.required[k].push_back(r);

    return ms.place(0, 0);
}

}  // namespace cbg
