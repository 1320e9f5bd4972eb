#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "atsolver.hpp"
#include "canonical.hpp"
#include "coloring.hpp"
#include "error.hpp"
#include "oracles.hpp"
#include "seeds.hpp"

using namespace atg;

TEST_CASE("proper coloring search") {
    // The K4 seed under the Proposition-1 lists is uncolorable.
    auto left = seed_left();
    auto mem = membership_d(left);
    auto lists = bad_lists_for_d(left, mem);
    CHECK(!exists_proper_coloring(left.graph, lists));

    // Everyone gets every color: trivially colorable.
    ListAssignment full(4, {1, 2, 3, 4});
    auto coloring = exists_proper_coloring(make_complete(4), full);
    REQUIRE(coloring);
    for (auto [u, v] : make_complete(4).edges())
        CHECK((*coloring)[u] != (*coloring)[v]);

    // C4 with list sizes alternating 1, 2, 1, 2.
    ListAssignment alt{{1}, {1, 2}, {2}, {1, 2}};
    CHECK(!exists_proper_coloring(make_cycle(4), alt));
    ListAssignment alt_ok{{1}, {1, 2}, {1}, {1, 2}};
    CHECK(exists_proper_coloring(make_cycle(4), alt_ok));
}

TEST_CASE("coloring search agrees with brute force on random lists") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 3 + static_cast<int>(rng() % 3);
        const auto& classes = enumerate_graphs(n, EnumerateFilter::Connected);
        const Graph& g = classes[rng() % classes.size()];
        ListAssignment lists(g.n());
        for (auto& l : lists) {
            int size = 1 + static_cast<int>(rng() % 3);
            while (static_cast<int>(l.size()) < size) {
                int c = 1 + static_cast<int>(rng() % 5);
                if (std::find(l.begin(), l.end(), c) == l.end()) l.push_back(c);
            }
            std::sort(l.begin(), l.end());
        }
        CHECK(exists_proper_coloring(g, lists).has_value() ==
              testing::brute_list_colorable(g, lists));
    }
}

TEST_CASE("choosability on the pinned examples") {
    // K4 with uniform 3-lists fails: the all-equal assignment is found.
    auto bad = is_f_choosable(make_complete(4), {3, 3, 3, 3});
    REQUIRE(bad);
    CHECK(!exists_proper_coloring(make_complete(4), *bad));

    // P3 with degree lists is a Gallai tree: disjoint block palettes refute.
    Graph p3 = make_path(3);
    auto badp = is_f_choosable(p3, {1, 2, 1});
    REQUIRE(badp);
    CHECK(!exists_proper_coloring(p3, *badp));

    // G1 under h_{x,y} is choosable.
    auto g1 = separation_g1();
    CHECK(!is_f_choosable(g1.graph, pair_bound(g1)));
}

TEST_CASE("paintability on the pinned examples") {
    CHECK(is_f_paintable(Graph(0), {}));
    CHECK(is_f_paintable(Graph(2), {1, 1}));
    CHECK(!is_f_paintable(Graph(1), {0}));

    auto g1 = separation_g1();
    CHECK(!is_f_paintable(g1.graph, pair_bound(g1)));

    auto g2 = separation_g2();
    CHECK(is_f_paintable(g2.graph, pair_bound(g2)));

    // C4 is degree-paintable.
    CHECK(is_f_paintable(make_cycle(4), {2, 2, 2, 2}));
    // Odd cycles are not.
    CHECK(!is_f_paintable(make_cycle(5), {2, 2, 2, 2, 2}));
}

TEST_CASE("paintability agrees with the unoptimized recursion, n <= 4") {
    std::mt19937 rng(11);
    for (int n = 1; n <= 4; ++n) {
        for (const Graph& g : enumerate_graphs(n, EnumerateFilter::All)) {
            for (int trial = 0; trial < 6; ++trial) {
                std::vector<int> f(g.n());
                for (int v = 0; v < g.n(); ++v)
                    f[v] = static_cast<int>(rng() % (g.degree(v) + 2));
                CHECK(is_f_paintable(g, f) == testing::brute_paintable(g, f));
            }
        }
    }
}

TEST_CASE("bad lists for the seed family") {
    for (auto p : {seed_left(), seed_center()}) {
        auto mem = membership_d(p);
        auto lists = bad_lists_for_d(p, mem);
        CHECK(!exists_proper_coloring(p.graph, lists));
        for (int v = 0; v < p.graph.n(); ++v)
            CHECK(static_cast<int>(lists[v].size()) ==
                  p.graph.degree(v) - p.labels[v]);
    }
    auto right = seed_right();
    auto lists = bad_lists_for_d(right, membership_d(right));
    for (int v = 0; v < 7; ++v) CHECK(lists[v] == std::vector<int>{1, 2, 3});
    CHECK(!exists_proper_coloring(right.graph, lists));

    DMembership none;
    CHECK_THROWS_AS(bad_lists_for_d(seed_left(), none), Error);
}

TEST_CASE("bad lists for Gallai trees") {
    // Single triangle block.
    auto tri = bad_lists_gallai(make_complete(3));
    for (const auto& l : tri) CHECK(l.size() == 2);
    CHECK(!exists_proper_coloring(make_complete(3), tri));

    // Bowtie: the cut vertex unions two disjoint pairs.
    Graph bowtie =
        Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
    auto bl = bad_lists_gallai(bowtie);
    CHECK(bl[2].size() == 4);
    CHECK(!exists_proper_coloring(bowtie, bl));

    // P3: singleton end lists, union of both at the center.
    auto pl = bad_lists_gallai(make_path(3));
    CHECK(pl[0].size() == 1);
    CHECK(pl[1].size() == 2);
    CHECK(!exists_proper_coloring(make_path(3), pl));

    CHECK_THROWS_AS(bad_lists_gallai(make_cycle(4)), Error);
}

TEST_CASE("equivalence report on pinned pairs") {
    auto c5 = equivalence_check_hx(make_hx(make_cycle(5), 0));
    CHECK(!c5.at);
    CHECK(!c5.choosable);
    CHECK(!c5.paintable);
    CHECK(c5.agree());

    Graph k4e = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    auto th = equivalence_check_hx(make_hx(k4e, 0));
    CHECK(th.at);
    CHECK(th.choosable);
    CHECK(th.paintable);
    CHECK(th.agree());
}

TEST_CASE("AT implies paintable implies choosable, n <= 4, labels <= 2") {
    for (int n = 2; n <= 4; ++n) {
        for (const Graph& g : enumerate_graphs(n, EnumerateFilter::Connected)) {
            std::vector<std::vector<int>> labelings;
            labelings.push_back(std::vector<int>(n, 0));
            for (int x = 0; x < n; ++x) {
                std::vector<int> h(n, 0);
                h[x] = 1;
                labelings.push_back(h);
                h[x] = 2;
                labelings.push_back(h);
                for (int y = x + 1; y < n; ++y) {
                    std::vector<int> h2(n, 0);
                    h2[x] = h2[y] = 1;
                    labelings.push_back(h2);
                }
            }
            for (const auto& h : labelings) {
                LabeledPair p(g, h);
                auto f = pair_bound(p);
                bool at = is_pair_at(p).has_value();
                bool paintable = is_f_paintable(g, f);
                bool choosable = !is_f_choosable(g, f).has_value();
                CHECK((!at || paintable));
                CHECK((!paintable || choosable));
            }
        }
    }
}

TEST_CASE("paintability is antitone under adding edges") {
    std::mt19937 rng(31);
    for (const Graph& g : enumerate_graphs(4, EnumerateFilter::Connected)) {
        for (int u = 0; u < g.n(); ++u)
            for (int v = u + 1; v < g.n(); ++v) {
                if (g.has_edge(u, v)) continue;
                Graph bigger = g.added_edge(u, v);
                for (int trial = 0; trial < 4; ++trial) {
                    std::vector<int> f(g.n());
                    for (int w = 0; w < g.n(); ++w)
                        f[w] = static_cast<int>(rng() % (g.degree(w) + 2));
                    if (is_f_paintable(bigger, f)) CHECK(is_f_paintable(g, f));
                }
            }
    }
}

TEST_CASE("choosability guards") {
    CHECK_THROWS_AS(is_f_choosable(make_complete(8), std::vector<int>(8, 3)),
                    Error);
    std::vector<int> huge(6, 6);
    CHECK_THROWS_AS(is_f_choosable(make_complete(6), huge), Error);
}
