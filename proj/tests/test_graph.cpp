#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "canonical.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "seeds.hpp"

using namespace atg;

TEST_CASE("graph construction normalizes and validates") {
    Graph g = Graph::from_edges(4, {{3, 0}, {1, 0}, {2, 1}});
    CHECK(g.n() == 4);
    CHECK(g.m() == 3);
    CHECK(g.edges()[0] == std::make_pair(0, 1));
    CHECK(g.edges()[1] == std::make_pair(0, 3));
    CHECK(g.edges()[2] == std::make_pair(1, 2));
    CHECK(g.has_edge(0, 3));
    CHECK(g.has_edge(3, 0));
    CHECK(!g.has_edge(2, 3));
    CHECK(g.edge_index(1, 2) == 2);
    CHECK(g.edge_index(2, 3) == -1);

    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), Error);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), Error);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 5}}), Error);
}

TEST_CASE("connectivity and components") {
    CHECK(make_path(1).connected());
    CHECK(make_path(4).connected());
    CHECK(!Graph(3).connected());
    CHECK(Graph(3).component_count() == 3);
    CHECK(make_cycle(5).two_connected());
    CHECK(!make_path(4).two_connected());
    CHECK(!Graph::from_edges(2, {{0, 1}}).two_connected());  // K2: n < 3
}

TEST_CASE("induced subgraphs and removals") {
    Graph g = make_complete(5);
    std::vector<int> old_of_new;
    Graph h = g.induced({4, 1, 2}, &old_of_new);
    CHECK(h.n() == 3);
    CHECK(h.m() == 3);
    CHECK(old_of_new == std::vector<int>{1, 2, 4});
    CHECK(g.removed_vertex(0).n() == 4);
    CHECK(g.removed_vertex(0).m() == 6);
    CHECK(g.removed_edge(0).m() == 9);
}

TEST_CASE("graph6 parses the standard examples") {
    Graph k4 = parse_graph6("C~");
    CHECK(k4.n() == 4);
    CHECK(k4.m() == 6);

    Graph empty5 = parse_graph6("D??");
    CHECK(empty5.n() == 5);
    CHECK(empty5.m() == 0);

    // Optional header, n = 0 and n = 1.
    CHECK(parse_graph6(">>graph6<<C~").m() == 6);
    CHECK(parse_graph6("?").n() == 0);
    CHECK(parse_graph6("@").n() == 1);
}

TEST_CASE("graph6 errors name the byte offset") {
    CHECK_THROWS_WITH_AS(parse_graph6(""), doctest::Contains("empty"), Error);
    // Byte 33 ('!') is below 63.
    CHECK_THROWS_WITH_AS(parse_graph6("C!"), doctest::Contains("offset 1"),
                         Error);
    CHECK_THROWS_WITH_AS(parse_graph6("C~AA"), doctest::Contains("trailing"),
                         Error);
    CHECK_THROWS_WITH_AS(parse_graph6("D?"), doctest::Contains("truncated"),
                         Error);
    CHECK_THROWS_WITH_AS(parse_graph6("~?"), doctest::Contains("truncated"),
                         Error);
}

TEST_CASE("graph6 round-trips every graph with n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        for (const Graph& g : enumerate_graphs(n, EnumerateFilter::All)) {
            std::string s = emit_graph6(g);
            Graph back = parse_graph6(s);
            CHECK(back == g);
            CHECK(emit_graph6(back) == s);
        }
    }
}

TEST_CASE("graph6 three-byte length header round-trips") {
    Graph g(100);  // > 62 vertices forces the long header
    std::string s = emit_graph6(g);
    CHECK(s.substr(0, 1) == "~");
    CHECK(parse_graph6(s).n() == 100);
}

TEST_CASE("labeled pairs validate shape") {
    Graph g = make_cycle(4);
    auto p = make_hx(g, 2);
    CHECK(p.is_hx());
    CHECK(p.hx_vertex() == 2);
    CHECK(!p.is_hxy());
    auto q = make_hxy(g, 0, 3);
    CHECK(q.is_hxy());
    CHECK_THROWS_AS(make_hxy(g, 1, 1), Error);
    CHECK_THROWS_AS(make_hx(g, 9), Error);
    CHECK_THROWS_AS(LabeledPair(g, {0, 0, 0}), Error);
}
