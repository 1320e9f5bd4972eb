#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "canonical.hpp"
#include "error.hpp"
#include "graph6.hpp"
#include "oracles.hpp"
#include "seeds.hpp"

using namespace atg;

TEST_CASE("canonical form identifies isomorphic graphs") {
    // C4 written two ways.
    Graph c4 = make_cycle(4);
    Graph matching_complement =
        Graph::from_edges(4, {{0, 2}, {2, 1}, {1, 3}, {3, 0}});
    CHECK(canonical_form(c4) == canonical_form(matching_complement));
    CHECK(canonical_form(make_complete(4)) != canonical_form(c4));
}

TEST_CASE("canonical form agrees with brute-force isomorphism on n <= 4") {
    std::vector<Graph> graphs;
    for (int n = 1; n <= 4; ++n)
        for (const Graph& g : testing::brute_enumerate(n)) graphs.push_back(g);
    for (size_t i = 0; i < graphs.size(); ++i)
        for (size_t j = i; j < graphs.size(); ++j) {
            bool iso = testing::brute_isomorphic(graphs[i], graphs[j]);
            bool canon_eq =
                canonical_form(graphs[i]) == canonical_form(graphs[j]);
            CHECK(iso == canon_eq);
        }
}

TEST_CASE("all 11 classes on 4 vertices give distinct strings") {
    std::set<std::string> seen;
    for (const Graph& g : enumerate_graphs(4, EnumerateFilter::All))
        seen.insert(canonical_form(g));
    CHECK(seen.size() == 11);
}

TEST_CASE("canonical form is invariant under relabeling") {
    Graph g = moser_spindle();
    std::string base = canonical_form(g);
    std::vector<int> perm{3, 5, 0, 6, 1, 2, 4};
    CHECK(canonical_form(g.permuted(perm)) == base);
}

TEST_CASE("colored canonical form separates markings by orbit") {
    Graph star = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    auto sig_center = canonical_form_pair(make_hx(star, 0));
    auto sig_leaf1 = canonical_form_pair(make_hx(star, 1));
    auto sig_leaf2 = canonical_form_pair(make_hx(star, 3));
    CHECK(sig_center != sig_leaf1);
    CHECK(sig_leaf1 == sig_leaf2);
}

TEST_CASE("find_isomorphism returns a valid map") {
    Graph g = moser_spindle();
    std::vector<int> perm{2, 4, 6, 0, 5, 1, 3};
    Graph h = g.permuted(perm);
    std::vector<int> c1(7, 0), c2(7, 0);
    auto iso = find_isomorphism(g, c1, h, c2);
    REQUIRE(!iso.empty());
    for (auto [u, v] : g.edges()) CHECK(h.has_edge(iso[u], iso[v]));
}

TEST_CASE("enumerate_graphs matches known and brute-force counts") {
    CHECK(enumerate_graphs(3, EnumerateFilter::All).size() == 4);
    CHECK(enumerate_graphs(4, EnumerateFilter::Connected).size() == 6);
    CHECK(enumerate_graphs(4, EnumerateFilter::All).size() == 11);

    for (int n = 1; n <= 5; ++n) {
        auto brute = testing::brute_enumerate(n);
        size_t connected = 0, two_conn = 0;
        for (const Graph& g : brute) {
            if (g.connected()) ++connected;
            if (g.two_connected()) ++two_conn;
        }
        CHECK(enumerate_graphs(n, EnumerateFilter::All).size() == brute.size());
        CHECK(enumerate_graphs(n, EnumerateFilter::Connected).size() == connected);
        CHECK(enumerate_graphs(n, EnumerateFilter::TwoConnected).size() ==
              two_conn);
    }
    // Known values for the levels the brute oracle cannot reach.
    CHECK(enumerate_graphs(6, EnumerateFilter::All).size() == 156);
    CHECK(enumerate_graphs(6, EnumerateFilter::Connected).size() == 112);
    CHECK(enumerate_graphs(7, EnumerateFilter::Connected).size() == 853);
}

TEST_CASE("enumeration order is deterministic and canonical") {
    const auto& a = enumerate_graphs(5, EnumerateFilter::Connected);
    for (size_t i = 0; i + 1 < a.size(); ++i) {
        auto ka = std::make_pair(a[i].m(), canonical_form(a[i]));
        auto kb = std::make_pair(a[i + 1].m(), canonical_form(a[i + 1]));
        CHECK(ka < kb);
        CHECK(emit_graph6(a[i]) == canonical_form(a[i]));
    }
}

TEST_CASE("guards reject oversized inputs") {
    CHECK_THROWS_AS(canonical_form(Graph(11)), Error);
    CHECK_THROWS_AS(enumerate_graphs(9, EnumerateFilter::All), Error);
}
