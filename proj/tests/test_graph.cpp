#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "cbg/graph.hpp"
#include "cbg/isomorphism.hpp"
#include "cbg/minor_ops.hpp"
#include "cbg/petersen.hpp"
#include "cbg/subgraph.hpp"

using namespace cbg;

namespace {

// Deterministic random graph: each pair becomes an edge with probability
// percent/100.
SimpleGraph random_graph(int n, int percent, std::mt19937_64& rng) {
    SimpleGraph g(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (static_cast<int>(rng() % 100) < percent) g.add_edge(i, j);
    return g;
}

// Relabel g by the permutation pi (pi[v-1] = new label of v).
SimpleGraph relabel(const SimpleGraph& g, const std::vector<int>& pi) {
    SimpleGraph out(g.vertex_count());
    for (const auto& [u, v] : g.edges()) out.add_edge(pi[u - 1], pi[v - 1]);
    return out;
}

// Brute-force subgraph containment: try every injective assignment of
// pattern vertices to host vertices.  Only for small hosts.
bool embedding_exists_brute(const SimpleGraph& pattern, const SimpleGraph& host) {
    int pn = pattern.vertex_count();
    int hn = host.vertex_count();
    if (pn > hn) return false;
    std::vector<int> perm(hn);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        bool ok = true;
        for (const auto& [u, v] : pattern.edges())
            if (!host.has_edge(perm[u - 1], perm[v - 1])) {
                ok = false;
                break;
            }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Brute-force minor test by memoized recursion over single elementary
// operations: H has P as a minor iff H is isomorphic to P or some single
// vertex deletion / edge deletion / edge contraction of H does.
using MinorKey = std::pair<std::vector<char>, std::vector<char>>;

bool minor_exists_brute(const SimpleGraph& host, const SimpleGraph& pattern,
                        std::map<MinorKey, bool>& memo) {
    if (pattern.vertex_count() > host.vertex_count()) return false;
    if (pattern.edge_count() > host.edge_count()) return false;
    MinorKey key{canonical_form(host), canonical_form(pattern)};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    bool found = are_isomorphic(host, pattern);
    if (!found) {
        for (int v = 1; v <= host.vertex_count() && !found; ++v)
            found = minor_exists_brute(apply_minor_op(host, MinorOp::delete_vertex(v)),
                                       pattern, memo);
        auto edges = host.edges();
        for (const auto& [u, v] : edges) {
            if (found) break;
            found = minor_exists_brute(apply_minor_op(host, MinorOp::delete_edge(u, v)),
                                       pattern, memo) ||
                    minor_exists_brute(apply_minor_op(host, MinorOp::contract_edge(u, v)),
                                       pattern, memo);
        }
    }
    memo[key] = found;
    return found;
}

}  // namespace

TEST_CASE("simple graph stores normalized edges and validates input") {
    SimpleGraph g(4);
    g.add_edge(3, 1);
    g.add_edge(2, 4);
    CHECK(g.has_edge(1, 3));
    CHECK(g.has_edge(3, 1));
    CHECK_FALSE(g.has_edge(1, 2));
    CHECK(g.edge_count() == 2);
    CHECK(g.edges() == std::vector<SimpleGraph::Edge>{{1, 3}, {2, 4}});
    CHECK(g.degree(1) == 1);
    CHECK(g.degree(4) == 1);
    CHECK(g.neighbors(3) == std::vector<int>{1});

    CHECK_THROWS_AS(g.add_edge(1, 3), std::invalid_argument);   // duplicate
    CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);   // loop
    CHECK_THROWS_AS(g.add_edge(0, 1), std::invalid_argument);   // out of range
    CHECK_THROWS_AS(g.add_edge(1, 5), std::invalid_argument);   // out of range
    CHECK_THROWS_AS(g.remove_edge(1, 2), std::invalid_argument);  // absent

    g.remove_edge(3, 1);
    CHECK_FALSE(g.has_edge(1, 3));
    CHECK(g.edge_count() == 1);

    SimpleGraph h(4, {{2, 4}});
    CHECK(g == h);
    CHECK(g != SimpleGraph(4));
    CHECK_THROWS_AS(SimpleGraph(-1), std::invalid_argument);

    auto masks = h.adjacency_masks();
    REQUIRE(masks.size() == 4);
    CHECK(masks[1] == (1u << 3));  // vertex 2 ~ vertex 4
    CHECK(masks[3] == (1u << 1));
    CHECK(masks[0] == 0);
}

TEST_CASE("standard graph factories") {
    auto k4 = complete_graph(4);
    CHECK(k4.edge_count() == 6);
    auto c5 = cycle_graph(5);
    CHECK(c5.edge_count() == 5);
    for (int v = 1; v <= 5; ++v) CHECK(c5.degree(v) == 2);
    auto p4 = path_graph(4);
    CHECK(p4.edge_count() == 3);
    CHECK(p4.degree(1) == 1);
    CHECK(p4.degree(2) == 2);
    auto k23 = complete_bipartite(2, 3);
    CHECK(k23.vertex_count() == 5);
    CHECK(k23.edge_count() == 6);
    CHECK(k23.degree(1) == 3);
    CHECK(k23.degree(3) == 2);
}

TEST_CASE("complement, twins, connectivity") {
    auto p3 = path_graph(3);
    auto cp3 = complement(p3);
    CHECK(cp3.edge_count() == 1);
    CHECK(cp3.has_edge(1, 3));
    CHECK(complement(complete_graph(5)).edge_count() == 0);

    // In K_{2,3}, the two left vertices are twins, and so are the three right
    // vertices; in P4 nothing is.
    CHECK(has_twins(complete_bipartite(2, 3)));
    CHECK_FALSE(has_twins(path_graph(4)));

    SimpleGraph two_parts(5, {{1, 2}, {4, 5}});
    auto comps = connected_components(two_parts);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == std::vector<int>{1, 2});
    CHECK(comps[1] == std::vector<int>{3});
    CHECK(comps[2] == std::vector<int>{4, 5});
    CHECK_FALSE(is_connected(two_parts));
    CHECK(is_connected(cycle_graph(4)));
    CHECK(is_connected(SimpleGraph(1)));
    CHECK(is_connected(SimpleGraph(0)));
}

TEST_CASE("vertex maps validate and detect embeddings") {
    auto p3 = path_graph(3);
    auto c4 = cycle_graph(4);
    VertexMap good{{1, 2, 3}};
    CHECK(good.is_injective());
    CHECK(good.is_embedding(p3, c4));
    VertexMap wraps{{1, 2, 4}};  // 1-2 ok, 2-4 not an edge of C4's path image? 2~? no: C4 edges 12,23,34,14
    CHECK_FALSE(wraps.is_embedding(p3, c4));
    VertexMap repeated{{1, 2, 1}};
    CHECK_FALSE(repeated.is_injective());
    CHECK_FALSE(repeated.is_embedding(p3, c4));
    CHECK_THROWS_AS(good(0), std::out_of_range);
    CHECK_THROWS_AS(good(4), std::out_of_range);
}

TEST_CASE("elementary minor operations renumber correctly") {
    // Path 1-2-3-4; delete vertex 2: remaining {1,3,4} relabel to {1,2,3}
    // keeping order, so the edge 3-4 becomes 2-3 and vertex 1 is isolated.
    auto p4 = path_graph(4);
    auto del = apply_minor_op(p4, MinorOp::delete_vertex(2));
    CHECK(del.vertex_count() == 3);
    CHECK(del.edges() == std::vector<SimpleGraph::Edge>{{2, 3}});

    auto del_edge = apply_minor_op(p4, MinorOp::delete_edge(2, 3));
    CHECK(del_edge.vertex_count() == 4);
    CHECK(del_edge.edges() == std::vector<SimpleGraph::Edge>{{1, 2}, {3, 4}});
    CHECK_THROWS_AS(apply_minor_op(p4, MinorOp::delete_edge(1, 3)), std::invalid_argument);

    // Contracting an edge keeps the smaller endpoint's label, then the gap
    // closes: contracting 2-3 in the path turns it into a path on 3 vertices.
    auto con = apply_minor_op(p4, MinorOp::contract_edge(2, 3));
    CHECK(con.vertex_count() == 3);
    CHECK(con.edges() == std::vector<SimpleGraph::Edge>{{1, 2}, {2, 3}});
    CHECK_THROWS_AS(apply_minor_op(p4, MinorOp::contract_edge(1, 4)), std::invalid_argument);

    // Parallel edges arising from a contraction collapse: a triangle
    // contracts to a single edge.
    auto tri = complete_graph(3);
    auto k2 = apply_minor_op(tri, MinorOp::contract_edge(1, 2));
    CHECK(k2.vertex_count() == 2);
    CHECK(k2.edges() == std::vector<SimpleGraph::Edge>{{1, 2}});

    // Contracting one rim edge of C4 yields a triangle.
    auto c4 = cycle_graph(4);
    auto c3 = apply_minor_op(c4, MinorOp::contract_edge(1, 2));
    CHECK(are_isomorphic(c3, complete_graph(3)));
}

TEST_CASE("subgraph embedding search agrees with brute force") {
    std::mt19937_64 rng(20260819);
    int positives = 0, negatives = 0;
    for (int trial = 0; trial < 300; ++trial) {
        int hn = 2 + static_cast<int>(rng() % 5);  // 2..6
        int pn = 1 + static_cast<int>(rng() % hn);
        auto host = random_graph(hn, 25 + static_cast<int>(rng() % 55), rng);
        auto pattern = random_graph(pn, 20 + static_cast<int>(rng() % 60), rng);
        bool expected = embedding_exists_brute(pattern, host);
        auto found = find_subgraph_embedding(pattern, host);
        CAPTURE(trial, hn, pn);
        REQUIRE(found.has_value() == expected);
        if (found) {
            ++positives;
            CHECK(found->is_embedding(pattern, host));
        } else {
            ++negatives;
        }
    }
    // The sweep must exercise both outcomes to mean anything.
    CHECK(positives > 20);
    CHECK(negatives > 20);
}

TEST_CASE("subgraph embedding fixtures") {
    // No triangle inside a 4-cycle, although one arises as a minor.
    CHECK_FALSE(find_subgraph_embedding(complete_graph(3), cycle_graph(4)).has_value());
    // A path of any length up to n embeds in C_n.
    CHECK(find_subgraph_embedding(path_graph(4), cycle_graph(4)).has_value());
    // Isolated pattern vertices only need spare host vertices.
    SimpleGraph lone(3, {{1, 2}});
    CHECK(find_subgraph_embedding(lone, path_graph(3)).has_value());
    CHECK_FALSE(find_subgraph_embedding(lone, SimpleGraph(2, {{1, 2}})).has_value());
    // Guard trips on oversized hosts.
    CHECK_THROWS_AS(find_subgraph_embedding(path_graph(2), complete_graph(11), 10), GuardError);
}

TEST_CASE("minor search agrees with exhaustive recursion") {
    std::mt19937_64 rng(4242);
    std::map<MinorKey, bool> memo;
    int positives = 0, negatives = 0;
    for (int trial = 0; trial < 120; ++trial) {
        int hn = 3 + static_cast<int>(rng() % 4);  // 3..6
        int pn = 2 + static_cast<int>(rng() % (hn - 1));
        auto host = random_graph(hn, 30 + static_cast<int>(rng() % 50), rng);
        auto pattern = random_graph(pn, 30 + static_cast<int>(rng() % 50), rng);
        bool expected = minor_exists_brute(host, pattern, memo);
        CAPTURE(trial, hn, pn);
        REQUIRE(has_minor(host, pattern) == expected);
        (expected ? positives : negatives)++;
    }
    CHECK(positives > 10);
    CHECK(negatives > 10);
}

TEST_CASE("minor fixtures") {
    // C4 has a triangle minor (contract one edge) but no triangle subgraph.
    CHECK(has_minor(cycle_graph(4), complete_graph(3)));
    // Contracting the five spokes of the Petersen graph yields K5.
    auto pet = petersen_graph();
    CHECK(has_minor(pet, complete_graph(5)));
    // ... but no K6 minor: all 15 edges would have to join distinct branch
    // sets, forcing a K6 subgraph of a cubic graph.
    CHECK_FALSE(has_minor(pet, complete_graph(6)));
    CHECK(has_minor(pet, complete_bipartite(3, 3)));
    // Every graph is a minor of itself; the empty pattern is a minor of
    // anything.
    CHECK(has_minor(complete_graph(4), complete_graph(4)));
    CHECK(has_minor(SimpleGraph(2), SimpleGraph(0)));
    // More vertices than the host cannot fit.
    CHECK_FALSE(has_minor(complete_graph(3), SimpleGraph(4)));
    // Guard trips beyond the vertex bound.
    CHECK_THROWS_AS(has_minor(complete_graph(13), complete_graph(3)), GuardError);

    // A constructive cross-check of the K5 claim: contract an explicit
    // perfect matching and confirm the quotient is K5.  In the 2-subset
    // labelling (pairs of {1..5} listed as 12,13,14,15,23,24,25,34,35,45
    // with ids 1..10), the five disjoint-pair edges below cover all ten
    // vertices.
    std::vector<std::pair<int, int>> matching{
        {1, 8},   // {1,2} - {3,4}
        {2, 7},   // {1,3} - {2,5}
        {3, 9},   // {1,4} - {3,5}
        {4, 6},   // {1,5} - {2,4}
        {5, 10},  // {2,3} - {4,5}
    };
    for (auto [u, v] : matching) REQUIRE(pet.has_edge(u, v));
    // Contract the pair with the highest removed label first; renumbering
    // only shifts labels above the removed one, so later pairs stay valid.
    std::sort(matching.begin(), matching.end(),
              [](auto a, auto b) { return a.second > b.second; });
    SimpleGraph quotient = pet;
    for (auto [u, v] : matching)
        quotient = apply_minor_op(quotient, MinorOp::contract_edge(u, v));
    REQUIRE(quotient.vertex_count() == 5);
    REQUIRE(quotient.edge_count() == 10);
    CHECK(are_isomorphic(quotient, complete_graph(5)));
}

TEST_CASE("minor operation descriptions") {
    CHECK(MinorOp::delete_vertex(3).describe() == "delete-vertex 3");
    CHECK(MinorOp::delete_edge(1, 4).describe() == "delete-edge {1,4}");
    CHECK(MinorOp::contract_edge(2, 5).describe() == "contract-edge {2,5}");
}

TEST_CASE("canonical forms are relabelling invariants") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + static_cast<int>(rng() % 7);
        auto g = random_graph(n, 20 + static_cast<int>(rng() % 60), rng);
        std::vector<int> pi(n);
        std::iota(pi.begin(), pi.end(), 1);
        std::shuffle(pi.begin(), pi.end(), rng);
        auto h = relabel(g, pi);
        CAPTURE(trial, n);
        REQUIRE(canonical_form(g) == canonical_form(h));
        REQUIRE(are_isomorphic(g, h));
    }
}

TEST_CASE("isomorphism distinguishes look-alikes") {
    // Same degree sequence, different structure.
    SimpleGraph two_triangles(6, {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}});
    CHECK_FALSE(are_isomorphic(cycle_graph(6), two_triangles));

    // Prism vs K_{3,3}: both cubic on 6 vertices, only one has triangles.
    SimpleGraph prism(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}, {1, 4}, {2, 5}, {3, 6}});
    CHECK_FALSE(are_isomorphic(prism, complete_bipartite(3, 3)));

    CHECK(are_isomorphic(SimpleGraph(0), SimpleGraph(0)));
    CHECK_FALSE(are_isomorphic(SimpleGraph(2), SimpleGraph(3)));
    CHECK_FALSE(are_isomorphic(path_graph(3), complete_graph(3)));
    CHECK_THROWS_AS(canonical_form(complete_graph(11)), GuardError);
}

TEST_CASE("petersen graph construction") {
    auto pet = petersen_graph();
    CHECK(pet.vertex_count() == 10);
    CHECK(pet.edge_count() == 15);
    for (int v = 1; v <= 10; ++v) CHECK(pet.degree(v) == 3);
    // Girth 5: no triangles and no 4-cycles, checked by brute force.
    CHECK_FALSE(find_subgraph_embedding(complete_graph(3), pet).has_value());
    CHECK_FALSE(find_subgraph_embedding(cycle_graph(4), pet).has_value());
    CHECK(find_subgraph_embedding(cycle_graph(5), pet).has_value());
}
