#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "builders.hpp"
#include "error.hpp"
#include "orientation.hpp"
#include "patterns.hpp"
#include "seeds.hpp"

using namespace atg;

namespace {

std::vector<int> hx_bound(const Graph& g, int x) {
    std::vector<int> f(g.n());
    for (int v = 0; v < g.n(); ++v) f[v] = g.degree(v) - (v == x ? 1 : 0);
    return f;
}

}  // namespace

TEST_CASE("theta orientation has exactly three Eulerian subgraphs") {
    for (auto [a, b, c] : {std::tuple{1, 2, 2}, std::tuple{2, 2, 2},
                           std::tuple{1, 2, 3}, std::tuple{2, 3, 4}}) {
        Graph g = make_theta_graph(a, b, c);
        auto w = detect_theta(g);
        REQUIRE(w);
        for (int pole : {w->poles[0], w->poles[1]}) {
            Orientation d = build_theta_orientation(g, *w, pole);
            auto cnt = eulerian_counts(d);
            CHECK(cnt.total() == 3);
            CHECK(cnt.diff() != 0);
            CHECK(d.in_degree(pole) == 2);
            CHECK(meets_outdegree_bounds(d, hx_bound(g, pole)));
            for (int v = 0; v < g.n(); ++v) CHECK(d.in_degree(v) >= 1);
        }
    }
    Graph g = make_theta_graph(1, 2, 2);
    auto w = detect_theta(g);
    CHECK_THROWS_AS(build_theta_orientation(g, *w, 2), Error);
}

TEST_CASE("mixed-parity T orientation splits 3/1") {
    for (auto [a, b, c] : {std::tuple{1, 2, 1}, std::tuple{2, 3, 2},
                           std::tuple{1, 2, 3}, std::tuple{1, 4, 4}}) {
        Graph g = make_t_graph(a, b, c);
        auto w = detect_t_graph(g, 0);
        REQUIRE(w);
        Orientation d = build_t_orientation(g, *w);
        auto cnt = eulerian_counts(d);
        CHECK(cnt.total() == 4);
        CHECK(std::abs(cnt.diff()) == 2);
        CHECK(meets_outdegree_bounds(d, hx_bound(g, 0)));
    }
    // Equal parities are rejected.
    Graph k4 = make_t_graph(1, 1, 1);
    auto w = detect_t_graph(k4, 0);
    CHECK_THROWS_AS(build_t_orientation(k4, *w), Error);
}

TEST_CASE("closed-twin orientation gives EE = EO + 1 exactly") {
    // K5 minus the x-z2 edge, the base instance.
    Graph k5e = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4},
                                      {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
    // x = 4: adjacent to 0,1,2 but not 3; closed twins z1 = 0, z2 = 3 in G-x.
    Orientation d = build_euler_lemma_orientation(k5e, 4, 0, 3);
    auto cnt = eulerian_counts(d);
    CHECK(cnt.even == cnt.odd + 1);
    CHECK(d.out_degree(4) <= 1);

    // Smallest instance: twins in a triangle, x pendant to z1 only.
    Graph small = Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
    Orientation ds = build_euler_lemma_orientation(small, 3, 0, 1);
    auto cs = eulerian_counts(ds);
    CHECK(cs.even == cs.odd + 1);

    // Hypothesis violations name the failed condition.
    CHECK_THROWS_WITH_AS(build_euler_lemma_orientation(small, 3, 1, 0),
                         doctest::Contains("adjacent to z1"), Error);
    // Path endpoints are not closed twins.
    Graph pathx = Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 3}});
    CHECK_THROWS_WITH_AS(build_euler_lemma_orientation(pathx, 3, 0, 2),
                         doctest::Contains("N_H[z1]"), Error);
    Graph disc = Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {3, 4}});
    CHECK_THROWS_WITH_AS(build_euler_lemma_orientation(disc, 3, 0, 1),
                         doctest::Contains("connected"), Error);
}

TEST_CASE("T-plus orientation keeps EE + EO odd") {
    for (auto [a, b, c] : {std::tuple{1, 1, 1}, std::tuple{3, 1, 1},
                           std::tuple{2, 1, 1}, std::tuple{2, 2, 2}}) {
        Graph g = make_t_plus_graph(a, b, c);
        int u = g.n() - 1;
        std::vector<int> tverts;
        for (int v = 0; v < g.n(); ++v)
            if (v != u) tverts.push_back(v);
        Graph tpart = g.induced(tverts);
        auto w = detect_t_graph(tpart, 0);
        REQUIRE(w);
        Orientation d = build_t_plus_orientation(g, *w, u);
        auto cnt = eulerian_counts(d);
        CHECK(cnt.total() % 2 == 1);
        CHECK(cnt.diff() != 0);
        CHECK(meets_outdegree_bounds(d, hx_bound(g, 0)));
    }
    // The base case is K5 - e with EE = EO + 1.
    Graph base = make_t_plus_graph(1, 1, 1);
    auto w = detect_t_graph(base.induced({0, 1, 2, 3}), 0);
    auto cnt = eulerian_counts(build_t_plus_orientation(base, *w, 4));
    CHECK(cnt.even == cnt.odd + 1);

    Graph bad = make_t_plus_graph(1, 1, 1).added_edge(0, 4);
    auto wb = detect_t_graph(bad.induced({0, 1, 2, 3}), 0);
    CHECK_THROWS_AS(build_t_plus_orientation(bad, *wb, 4), Error);
}

TEST_CASE("added-path orientation reaches |EE - EO| = 1") {
    // T(3,1,1), P the last two edges of the long path, P' of length 2.
    Graph g = make_t_graph(3, 1, 1);
    auto w = detect_t_graph(g, 0);
    REQUIRE(w);
    const auto& host = w->paths[2];
    Orientation d =
        build_added_path_orientation(g, *w, {host[1], host[3]}, 2);
    auto cnt = eulerian_counts(d);
    CHECK(std::abs(cnt.diff()) == 1);
    CHECK(meets_outdegree_bounds(d, hx_bound(d.graph, 0)));

    // T(2,2,2), P one full apex path, P' of length 3.
    Graph g2 = make_t_graph(2, 2, 2);
    auto w2 = detect_t_graph(g2, 0);
    const auto& host2 = w2->paths[0];
    Orientation d2 =
        build_added_path_orientation(g2, *w2, {host2.front(), host2.back()}, 3);
    auto cnt2 = eulerian_counts(d2);
    CHECK(std::abs(cnt2.diff()) == 1);
    CHECK(meets_outdegree_bounds(d2, hx_bound(d2.graph, 0)));

    // Length-1 paths are rejected, as are mixed-parity bases.
    CHECK_THROWS_AS(build_added_path_orientation(g, *w, {host[1], host[3]}, 1),
                    Error);
    Graph mixed = make_t_graph(1, 1, 2);
    auto wm = detect_t_graph(mixed, 0);
    const auto& hostm = wm->paths[2];
    CHECK_THROWS_AS(
        build_added_path_orientation(mixed, *wm, {hostm[0], hostm[2]}, 2),
        Error);
}

TEST_CASE("builder outputs re-verify from scratch") {
    Graph g = make_t_graph(1, 2, 1);
    auto w = detect_t_graph(g, 0);
    Orientation d = build_t_orientation(g, *w);
    CHECK(eulerian_counts_subsets(d) == eulerian_counts_dp(d));
}
