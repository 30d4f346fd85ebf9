#include <random>
#include <stdexcept>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "cbg/graph.hpp"
#include "cbg/isomorphism.hpp"
#include "cbg/minor_ops.hpp"
#include "cbg/petersen.hpp"
#include "cbg/planarity.hpp"
#include "cbg/properties.hpp"

using namespace cbg;

namespace {

SimpleGraph random_graph(int n, int percent, std::mt19937_64& rng) {
    SimpleGraph g(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (static_cast<int>(rng() % 100) < percent) g.add_edge(i, j);
    return g;
}

// Planarity by forbidden minors; the slow reference route.
bool planar_by_minors(const SimpleGraph& g) {
    return !has_minor(g, complete_graph(5)) && !has_minor(g, complete_bipartite(3, 3));
}

// Add one vertex adjacent to everything.
SimpleGraph with_apex(const SimpleGraph& g) {
    int n = g.vertex_count();
    SimpleGraph out(n + 1);
    for (const auto& [u, v] : g.edges()) out.add_edge(u, v);
    for (int v = 1; v <= n; ++v) out.add_edge(v, n + 1);
    return out;
}

SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b) {
    SimpleGraph out(a.vertex_count() + b.vertex_count());
    for (const auto& [u, v] : a.edges()) out.add_edge(u, v);
    for (const auto& [u, v] : b.edges())
        out.add_edge(u + a.vertex_count(), v + a.vertex_count());
    return out;
}

}  // namespace

TEST_CASE("planarity fixtures") {
    CHECK(is_planar(SimpleGraph(0)));
    CHECK(is_planar(SimpleGraph(1)));
    CHECK(is_planar(SimpleGraph(5)));
    CHECK(is_planar(path_graph(6)));
    CHECK(is_planar(cycle_graph(8)));
    CHECK(is_planar(complete_graph(4)));
    CHECK(is_planar(complete_bipartite(2, 3)));
    CHECK_FALSE(is_planar(complete_graph(5)));
    CHECK_FALSE(is_planar(complete_bipartite(3, 3)));
    CHECK_FALSE(is_planar(complete_graph(6)));
    CHECK_FALSE(is_planar(petersen_graph()));
    // Disconnected inputs: planarity is componentwise.
    CHECK_FALSE(is_planar(disjoint_union(complete_graph(5), SimpleGraph(1))));
    CHECK(is_planar(disjoint_union(complete_graph(4), cycle_graph(5))));
}

TEST_CASE("planarity agrees with the forbidden-minor criterion") {
    std::mt19937_64 rng(91125);
    int planar_seen = 0, nonplanar_seen = 0;
    for (int trial = 0; trial < 250; ++trial) {
        int n = 3 + static_cast<int>(rng() % 6);  // 3..8
        auto g = random_graph(n, 25 + static_cast<int>(rng() % 60), rng);
        bool fast = is_planar(g);
        bool slow = planar_by_minors(g);
        CAPTURE(trial, n, g.edge_count());
        REQUIRE(fast == slow);
        (fast ? planar_seen : nonplanar_seen)++;
    }
    CHECK(planar_seen > 30);
    CHECK(nonplanar_seen > 30);
}

TEST_CASE("exhaustive planarity on all graphs with at most five vertices") {
    for (int n = 0; n <= 5; ++n) {
        int pairs = n * (n - 1) / 2;
        for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
            SimpleGraph g(n);
            int bit = 0;
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j, ++bit)
                    if (mask & (1u << bit)) g.add_edge(i, j);
            // On at most 5 vertices the only nonplanar graph is K5 itself.
            bool expected = !(n == 5 && g.edge_count() == 10);
            CAPTURE(n, mask);
            REQUIRE(is_planar(g) == expected);
        }
    }
}

TEST_CASE("linear forest recognition") {
    CHECK(is_linear_forest(SimpleGraph(0)));
    CHECK(is_linear_forest(SimpleGraph(3)));
    CHECK(is_linear_forest(path_graph(5)));
    CHECK(is_linear_forest(disjoint_union(path_graph(3), path_graph(2))));
    CHECK_FALSE(is_linear_forest(cycle_graph(3)));
    CHECK_FALSE(is_linear_forest(cycle_graph(5)));
    SimpleGraph star(4, {{1, 2}, {1, 3}, {1, 4}});
    CHECK_FALSE(is_linear_forest(star));  // degree 3 at the center
    // A cycle plus an isolated vertex is still not a linear forest.
    CHECK_FALSE(is_linear_forest(disjoint_union(cycle_graph(4), SimpleGraph(2))));
}

TEST_CASE("outerplanarity fixtures and apex cross-check") {
    CHECK(is_outerplanar(cycle_graph(5)));
    CHECK(is_outerplanar(path_graph(6)));
    CHECK_FALSE(is_outerplanar(complete_graph(4)));
    CHECK_FALSE(is_outerplanar(complete_bipartite(2, 3)));
    // A graph is outerplanar exactly when adding a universal vertex keeps it
    // planar; this pits the minor route against the combinatorial one.
    std::mt19937_64 rng(5150);
    int yes = 0, no = 0;
    for (int trial = 0; trial < 150; ++trial) {
        int n = 2 + static_cast<int>(rng() % 6);  // 2..7
        auto g = random_graph(n, 20 + static_cast<int>(rng() % 50), rng);
        bool by_minors = is_outerplanar(g);
        bool by_apex = is_planar(with_apex(g));
        CAPTURE(trial, n, g.edge_count());
        REQUIRE(by_minors == by_apex);
        (by_minors ? yes : no)++;
    }
    CHECK(yes > 20);
    CHECK(no > 20);
}

TEST_CASE("petersen family members") {
    const auto& fam = petersen_family();
    REQUIRE(fam.size() == 7);
    std::vector<int> sizes;
    for (const auto& g : fam) {
        CHECK(g.edge_count() == 15);
        sizes.push_back(g.vertex_count());
    }
    CHECK(sizes == std::vector<int>{6, 7, 7, 8, 8, 9, 10});
    bool has_k6 = false, has_petersen = false;
    for (const auto& g : fam) {
        if (are_isomorphic(g, complete_graph(6))) has_k6 = true;
        if (are_isomorphic(g, petersen_graph())) has_petersen = true;
    }
    CHECK(has_k6);
    CHECK(has_petersen);
    for (std::size_t i = 0; i < fam.size(); ++i)
        for (std::size_t j = i + 1; j < fam.size(); ++j)
            CHECK_FALSE(are_isomorphic(fam[i], fam[j]));
    // Each member contains itself as a forbidden minor, so none is linkless;
    // and since planar graphs are linkless, none is planar either.
    for (const auto& g : fam) {
        CHECK_FALSE(is_planar(g));
        CHECK_FALSE(is_linkless(g));
    }
}

TEST_CASE("linkless embeddability fixtures") {
    CHECK(is_linkless(complete_graph(5)));
    CHECK_FALSE(is_linkless(complete_graph(6)));
    CHECK_FALSE(is_linkless(petersen_graph()));
    // Removing any edge from K6 drops below the 15-edge floor of the
    // forbidden family, so the result is linkless.
    auto k6_minus = apply_minor_op(complete_graph(6), MinorOp::delete_edge(1, 2));
    CHECK(is_linkless(k6_minus));
    CHECK(is_linkless(cycle_graph(7)));
    CHECK_THROWS_AS(is_linkless(complete_graph(13)), GuardError);
}

TEST_CASE("property ladder dispatch and bounds") {
    auto k4 = complete_graph(4);
    CHECK(mu_at_most(k4, 3));
    CHECK_FALSE(mu_at_most(k4, 2));

    auto k5 = complete_graph(5);
    CHECK_FALSE(mu_at_most(k5, 3));
    CHECK(mu_at_most(k5, 4));

    CHECK_FALSE(mu_at_most(complete_graph(6), 4));

    SimpleGraph empty5(5);
    for (int k = 0; k <= 4; ++k) CHECK(mu_at_most(empty5, k));

    CHECK(mu_at_most(path_graph(4), 1));
    CHECK_FALSE(mu_at_most(cycle_graph(5), 1));
    CHECK(mu_at_most(cycle_graph(5), 2));
    CHECK_FALSE(mu_at_most(complete_bipartite(3, 3), 3));

    SimpleGraph one_edge(2, {{1, 2}});
    CHECK_FALSE(mu_at_most(one_edge, 0));
    CHECK(mu_at_most(one_edge, 1));

    CHECK_THROWS_AS(mu_at_most(k4, 5), std::invalid_argument);
    CHECK_THROWS_AS(mu_at_most(k4, -1), std::invalid_argument);
}

TEST_CASE("property ladder is monotone in k") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 80; ++trial) {
        int n = 1 + static_cast<int>(rng() % 7);
        auto g = random_graph(n, 15 + static_cast<int>(rng() % 60), rng);
        CAPTURE(trial, n);
        for (int k = 0; k < 4; ++k)
            if (mu_at_most(g, k)) REQUIRE(mu_at_most(g, k + 1));
    }
}

TEST_CASE("complement property reports") {
    auto r1 = complement_is_planar(complete_graph(5));
    CHECK(r1.verdict);  // complement of K5 is empty
    CHECK_FALSE(r1.has_twin_vertices);

    auto r2 = complement_is_outerplanar(complete_graph(5));
    CHECK(r2.verdict);
    CHECK_FALSE(r2.has_twin_vertices);

    // C5 is self-complementary; no twins in a 5-cycle.
    auto r3 = complement_is_planar(cycle_graph(5));
    CHECK(r3.verdict);
    CHECK_FALSE(r3.has_twin_vertices);
    CHECK(complement_is_outerplanar(cycle_graph(5)).verdict);

    // Opposite vertices of C4 are twins, and its complement (two disjoint
    // edges) is planar.
    auto r4 = complement_is_planar(cycle_graph(4));
    CHECK(r4.verdict);
    CHECK(r4.has_twin_vertices);

    // The complement of C8 has 20 edges on 8 vertices, beyond the planar
    // budget of 18.
    auto r5 = complement_is_planar(cycle_graph(8));
    CHECK_FALSE(r5.verdict);
    CHECK_FALSE(r5.has_twin_vertices);
}
