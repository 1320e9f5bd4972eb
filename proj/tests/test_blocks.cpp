#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blocks.hpp"
#include "canonical.hpp"
#include "error.hpp"
#include "seeds.hpp"

using namespace atg;

namespace {

Graph bowtie() {
    return Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
}

}  // namespace

TEST_CASE("blocks of simple shapes") {
    auto p3 = blocks(make_path(3));
    CHECK(p3.blocks.size() == 2);
    CHECK(p3.cut_vertices == std::vector<int>{1});

    auto k4 = blocks(make_complete(4));
    CHECK(k4.blocks.size() == 1);
    CHECK(k4.cut_vertices.empty());

    auto bt = blocks(bowtie());
    CHECK(bt.blocks.size() == 2);
    CHECK(bt.cut_vertices == std::vector<int>{2});
    CHECK(bt.blocks[0] == std::vector<int>{0, 1, 2});
    CHECK(bt.blocks[1] == std::vector<int>{2, 3, 4});
    CHECK(bt.block_cut_tree[0] == std::vector<int>{2});
}

TEST_CASE("blocks handle disconnected graphs and isolated vertices") {
    Graph g = Graph::from_edges(5, {{0, 1}, {2, 3}});
    auto dec = blocks(g);
    CHECK(dec.blocks.size() == 3);  // two K2 blocks plus the isolated vertex
    CHECK(dec.cut_vertices.empty());
}

TEST_CASE("block invariants hold exhaustively for n <= 6") {
    for (int n = 2; n <= 6; ++n) {
        for (const Graph& g : enumerate_graphs(n, EnumerateFilter::All)) {
            auto dec = blocks(g);
            int edge_total = 0;
            for (const auto& blk : dec.blocks) {
                int inner = 0;
                for (size_t i = 0; i < blk.size(); ++i)
                    for (size_t j = i + 1; j < blk.size(); ++j)
                        if (g.has_edge(blk[i], blk[j])) ++inner;
                edge_total += inner;
            }
            CHECK(edge_total == g.m());

            int base = g.component_count();
            for (int v = 0; v < n; ++v) {
                // Removing an isolated vertex drops its own component.
                if (g.degree(v) == 0) continue;
                int after = g.removed_vertex(v).component_count();
                if (dec.is_cut_vertex(v))
                    CHECK(after > base);
                else
                    CHECK(after <= base);
            }

            // A vertex is a cut vertex iff it lies in >= 2 blocks.
            for (int v = 0; v < n; ++v)
                CHECK(dec.is_cut_vertex(v) == (dec.blocks_of(v).size() >= 2));
        }
    }
}

TEST_CASE("gallai tree recognition") {
    CHECK(is_gallai_tree(make_complete(4)));
    CHECK(!is_gallai_tree(make_cycle(4)));
    CHECK(is_gallai_tree(make_cycle(7)));
    CHECK(is_gallai_tree(make_path(5)));
    CHECK(is_gallai_tree(Graph(1)));

    // Triangle sharing a vertex with a C5.
    Graph g = Graph::from_edges(
        7, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 2}});
    CHECK(is_gallai_tree(g));

    CHECK_THROWS_AS(is_gallai_tree(Graph(3)), Error);
}

TEST_CASE("lobes of a vertex") {
    auto lv = lobes_of_vertex(bowtie(), 2);
    REQUIRE(lv.size() == 2);
    CHECK(lv[0] == std::vector<int>{0, 1, 2});
    CHECK(lv[1] == std::vector<int>{2, 3, 4});

    auto single = lobes_of_vertex(make_cycle(5), 3);
    REQUIRE(single.size() == 1);
    CHECK(single[0].size() == 5);
}

TEST_CASE("lobes of a block") {
    // Triangle with a pendant edge at vertex 0.
    Graph g = Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
    auto lb = lobes_of_block(g, {0, 1, 2});
    REQUIRE(lb.size() == 1);
    CHECK(lb[0] == std::vector<int>{0, 3});

    CHECK_THROWS_AS(lobes_of_block(g, {1, 2, 3}), Error);
}
