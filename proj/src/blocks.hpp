#ifndef ATG_BLOCKS_HPP
#define ATG_BLOCKS_HPP

#include <vector>

#include "graph.hpp"

namespace atg {

// Block-cut structure of a graph.  Blocks are maximal 2-connected subgraphs,
// bridge edges, or isolated vertices; every edge lies in exactly one block.
struct BlockDecomposition {
    std::vector<std::vector<int>> blocks;   // vertex sets, each sorted
    std::vector<int> cut_vertices;          // sorted
    // block_cut_tree[b] = cut vertices lying in block b (sorted).
    std::vector<std::vector<int>> block_cut_tree;

    bool is_cut_vertex(int v) const;
    // Indices of blocks containing v.
    std::vector<int> blocks_of(int v) const;
};

BlockDecomposition blocks(const Graph& g);

// True iff every block of the connected graph g is a complete graph or an
// odd cycle.  Errors on disconnected input.
bool is_gallai_tree(const Graph& g);

// Block classification helpers (block given as a vertex set of g).
bool block_is_complete(const Graph& g, const std::vector<int>& block);
bool block_is_odd_cycle(const Graph& g, const std::vector<int>& block);

// x-lobes: maximal subgraphs A with A-x connected; one per component of G-x,
// each including x.  Returned as vertex sets sorted by smallest member.
std::vector<std::vector<int>> lobes_of_vertex(const Graph& g, int x);

// B-lobes: for a block B (vertex set), one per component of G-B, each
// including its unique attachment vertex in B.  Errors if B is not a block.
std::vector<std::vector<int>> lobes_of_block(const Graph& g,
                                             const std::vector<int>& block);

}  // namespace atg

#endif
