#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "blocks.hpp"
#include "canonical.hpp"
#include "error.hpp"
#include "patterns.hpp"
#include "seeds.hpp"

using namespace atg;

TEST_CASE("theta detection") {
    // K4 minus one edge is the theta with path lengths (1,2,2).
    Graph k4e = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    auto w = detect_theta(k4e);
    REQUIRE(w);
    CHECK(w->poles[0] == 0);
    CHECK(w->poles[1] == 1);
    CHECK(w->path_lengths() == std::vector<int>{1, 2, 2});

    CHECK(!detect_theta(make_complete(4)));
    CHECK(!detect_theta(make_cycle(6)));
    // Two triangles joined by a path: two branch vertices, but not a theta.
    Graph dumbbell = Graph::from_edges(
        7, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {4, 6}, {5, 6}});
    CHECK(!detect_theta(dumbbell));

    for (auto [a, b, c] :
         {std::tuple{1, 2, 2}, std::tuple{2, 2, 2}, std::tuple{2, 3, 4}}) {
        auto t = detect_theta(make_theta_graph(a, b, c));
        REQUIRE(t);
        CHECK(t->path_lengths() == std::vector<int>{a, b, c});
    }
}

TEST_CASE("t-graph detection") {
    auto w = detect_t_graph(make_complete(4), 0);
    REQUIRE(w);
    CHECK(w->path_lengths() == std::vector<int>{1, 1, 1});

    auto center = seed_center();
    auto wc = detect_t_graph(center.graph, center.hx_vertex());
    REQUIRE(wc);
    CHECK(wc->path_lengths() == std::vector<int>{2, 2, 2});

    CHECK(!detect_t_graph(make_theta_graph(1, 2, 2), 0));
    // A triangle vertex of the subdivided seed is not a valid apex: its
    // walk ends at the true apex, which is not joined to the triangle.
    CHECK(!detect_t_graph(make_t_graph(2, 2, 2), 1));
    // Nor is a degree-2 path vertex.
    CHECK(!detect_t_graph(make_t_graph(2, 1, 1), 4));
}

TEST_CASE("stretch subdivides twice and relabels") {
    // Stretching any edge of an all-zero triangle gives an all-zero C5.
    LabeledPair tri = make_zero_labels(make_complete(3));
    LabeledPair c5 = stretch(tri, 0);
    CHECK(c5.graph.n() == 5);
    CHECK(c5.graph.m() == 5);
    CHECK(canonical_form(c5.graph) == canonical_form(make_cycle(5)));
    CHECK(c5.labels == std::vector<int>(5, 0));

    // Stretching a bold (apex) edge of the K4 seed yields T(3,1,1).
    auto left = seed_left();
    int bold = left.graph.edge_index(0, 1);
    LabeledPair t = stretch(left, bold);
    CHECK(t.graph.n() == left.graph.n() + 2);
    CHECK(t.graph.m() == left.graph.m() + 2);
    auto w = detect_t_graph(t.graph, 0);
    REQUIRE(w);
    CHECK(w->path_lengths() == std::vector<int>{1, 1, 3});

    CHECK_THROWS_AS(stretch(left, 99), Error);
}

TEST_CASE("stretching an apex path preserves length parity") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        LabeledPair p = seed_left();
        for (int step = 0; step < 3; ++step) {
            auto w = detect_t_graph(p.graph, p.hx_vertex());
            REQUIRE(w);
            std::vector<int> before = w->path_lengths();
            int which = static_cast<int>(rng() % 3);
            const auto& path = w->paths[which];
            int e = p.graph.edge_index(path[0], path[1]);
            p = stretch(p, e);
            auto w2 = detect_t_graph(p.graph, p.hx_vertex());
            REQUIRE(w2);
            std::vector<int> expect = before;
            expect[which] += 2;
            std::sort(expect.begin(), expect.end());
            CHECK(w2->path_lengths() == expect);
            for (int l : w2->path_lengths()) CHECK(l % 2 == 1);
        }
    }
}

TEST_CASE("unstretch candidates") {
    LabeledPair c5 = make_zero_labels(make_cycle(5));
    CHECK(unstretch_candidates(c5).size() == 5);

    CHECK(unstretch_candidates(make_zero_labels(make_complete(4))).empty());

    // The subdivided seed has no adjacent pair of degree-2 vertices, so it
    // is already unstretched.
    auto center = seed_center();
    CHECK(unstretch_candidates(center).empty());
    CHECK(graph_is_unstretched(center.graph));

    // Nonzero labels block candidates.
    LabeledPair marked = make_hx(make_cycle(5), 0);
    CHECK(unstretch_candidates(marked).size() == 3);
}

TEST_CASE("stretch then unstretch is the identity up to isomorphism") {
    for (int n = 3; n <= 6; ++n) {
        for (const Graph& g : enumerate_graphs(n, EnumerateFilter::All)) {
            if (g.m() == 0) continue;
            LabeledPair p = make_hx(g, 0);
            for (int e = 0; e < g.m(); ++e) {
                LabeledPair s = stretch(p, e);
                auto cands = unstretch_candidates(s);
                bool found = false;
                for (const auto& c : cands) {
                    if (c.v1 != g.n() || c.v2 != g.n() + 1) continue;
                    LabeledPair back = apply_unstretch(s, c);
                    if (canonical_form_pair(back) == canonical_form_pair(p))
                        found = true;
                }
                CHECK(found);
            }
        }
    }
}

TEST_CASE("gallai verdict is isomorphism invariant") {
    std::mt19937 rng(99);
    for (const Graph& g : enumerate_graphs(5, EnumerateFilter::Connected)) {
        bool base = is_gallai_tree(g);
        std::vector<int> perm(g.n());
        for (int i = 0; i < g.n(); ++i) perm[i] = i;
        for (int trial = 0; trial < 5; ++trial) {
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(is_gallai_tree(g.permuted(perm)) == base);
        }
    }
}
