#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "canonical.hpp"
#include "error.hpp"
#include "orientation.hpp"
#include "seeds.hpp"

using namespace atg;

namespace {

Orientation consistent_cycle(int n) {
    Graph g = make_cycle(n);
    std::vector<std::pair<int, int>> arcs;
    for (int v = 0; v < n; ++v) arcs.emplace_back(v, (v + 1) % n);
    return orient_from_arcs(g, arcs);
}

}  // namespace

TEST_CASE("orientation basics") {
    Graph g = make_path(3);
    Orientation d(g, {0, 1});
    CHECK(d.arc(0) == std::make_pair(0, 1));
    CHECK(d.arc(1) == std::make_pair(2, 1));
    CHECK(d.out_degree(0) == 1);
    CHECK(d.out_degree(1) == 0);
    CHECK(d.in_degree(1) == 2);
    CHECK(d.direction_bits() == "01");
    CHECK(orientation_from_bits(g, "01").direction == d.direction);
    CHECK_THROWS_AS(orientation_from_bits(g, "0"), Error);
    CHECK_THROWS_AS(orientation_from_bits(g, "0x"), Error);
}

TEST_CASE("eulerian counts on the primitive examples") {
    // Any acyclic orientation has only the empty Eulerian subgraph.
    Graph p4 = make_path(4);
    Orientation acyc(p4, {0, 0, 0});
    CHECK(eulerian_counts(acyc) == EulerCounts{1, 0});

    // A consistently oriented C4 adds one even subgraph.
    CHECK(eulerian_counts(consistent_cycle(4)) == EulerCounts{2, 0});

    // A consistently oriented triangle balances: EE = EO.
    CHECK(eulerian_counts(consistent_cycle(3)) == EulerCounts{1, 1});
}

TEST_CASE("subset and dp paths agree") {
    std::mt19937 rng(321);
    for (int n = 4; n <= 7; ++n) {
        const auto& classes = enumerate_graphs(n, EnumerateFilter::Connected);
        for (int trial = 0; trial < 40; ++trial) {
            const Graph& g = classes[rng() % classes.size()];
            std::vector<std::uint8_t> dir(g.m());
            for (auto& b : dir) b = rng() & 1;
            Orientation d(g, dir);
            CHECK(eulerian_counts_subsets(d) == eulerian_counts_dp(d));
        }
    }
}

TEST_CASE("reversal preserves the counts, exhaustively to n = 5") {
    for (int n = 2; n <= 5; ++n) {
        for (const Graph& g : enumerate_graphs(n, EnumerateFilter::All)) {
            for (int mask = 0; mask < (1 << g.m()); ++mask) {
                std::vector<std::uint8_t> dir(g.m());
                for (int e = 0; e < g.m(); ++e) dir[e] = (mask >> e) & 1;
                Orientation d(g, dir);
                EulerCounts c = eulerian_counts(d);
                CHECK(c.even >= 1);
                CHECK(eulerian_counts(d.reversed()) == c);
            }
        }
    }
}

TEST_CASE("counting guard refuses oversized inputs") {
    Graph big(9);
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < 9; ++u)
        for (int v = u + 1; v < 9; ++v) es.emplace_back(u, v);
    // K9 has 36 edges, beyond the m <= 30 counting guard.
    Graph k9 = Graph::from_edges(9, es);
    Orientation d(k9, std::vector<std::uint8_t>(k9.m(), 0));
    CHECK_THROWS_AS(eulerian_counts(d), Error);
}

TEST_CASE("orient_from_arcs validates coverage") {
    Graph g = make_cycle(3);
    CHECK_THROWS_AS(orient_from_arcs(g, {{0, 1}, {1, 2}}), Error);
    CHECK_THROWS_AS(orient_from_arcs(g, {{0, 1}, {1, 0}, {2, 0}}), Error);
    auto d = orient_from_arcs(g, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(d.out_degree(2) == 1);
}
