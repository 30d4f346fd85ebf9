#pragma once

#include <stdexcept>
#include <vector>

#include "graph.hpp"
#include "minor_ops.hpp"
#include "petersen.hpp"
#include "planarity.hpp"

namespace cbg {

// mu <= 0: no edges at all.
inline bool is_empty_graph(const SimpleGraph& g) { return g.edge_count() == 0; }

// mu <= 1: disjoint union of paths, i.e. max degree <= 2 and no cycle.
inline bool is_linear_forest(const SimpleGraph& g) {
    int n = g.vertex_count();
    for (int v = 1; v <= n; ++v)
        if (g.degree(v) > 2) return false;
    // acyclic <=> every component has |E| = |V| - 1; with max degree <= 2 it
    // suffices that the total edge count matches n - #components.
    auto comps = connected_components(g);
    return g.edge_count() == static_cast<std::size_t>(n) - comps.size();
}

// mu <= 2: outerplanar, characterized by having neither a K_4 nor a K_{2,3}
// minor.
inline bool is_outerplanar(const SimpleGraph& g, int max_vertices = 12) {
    return !has_minor(g, complete_graph(4), max_vertices) &&
           !has_minor(g, complete_bipartite(2, 3), max_vertices);
}

// mu <= 3: planar.  Delegates to the left-right criterion, which runs in
// linear time and has no size guard.
inline bool is_planar_graph(const SimpleGraph& g) { return is_planar(g); }

// mu <= 4: linklessly embeddable, characterized by avoiding all seven graphs
// of the Petersen family as minors.  Minor testing is exponential, hence the
// vertex guard.
inline bool is_linkless(const SimpleGraph& g, int max_vertices = 12) {
    for (const auto& f : petersen_family())
        if (has_minor(g, f, max_vertices)) return false;
    return true;
}

// Decides whether the Colin de Verdiere number of g is at most k, for
// k in {0,1,2,3,4}.  Larger k has no known minor characterization of
// comparable form and is rejected.
inline bool mu_at_most(const SimpleGraph& g, int k, int max_vertices = 12) {
    switch (k) {
        case 0: return is_empty_graph(g);
        case 1: return is_linear_forest(g);
        case 2: return is_outerplanar(g, max_vertices);
        case 3: return is_planar_graph(g);
        case 4: return is_linkless(g, max_vertices);
        default:
            throw std::invalid_argument(
                "mu_at_most: k must lie in {0,1,2,3,4}, got " + std::to_string(k));
    }
}

// Report on a complement-graph test: the verdict together with whether the
// input graph has a pair of twin vertices (identical neighborhoods), which is
// the standard obstruction to the complement bound being tight.
struct ComplementReport {
    bool verdict = false;
    bool has_twin_vertices = false;
};

inline ComplementReport complement_is_planar(const SimpleGraph& g) {
    return ComplementReport{is_planar_graph(complement(g)), has_twins(g)};
}

inline ComplementReport complement_is_outerplanar(const SimpleGraph& g, int max_vertices = 12) {
    return ComplementReport{is_outerplanar(complement(g), max_vertices), has_twins(g)};
}

}  // namespace cbg
