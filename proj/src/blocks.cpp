#include "blocks.hpp"

#include <algorithm>
#include <set>

#include "error.hpp"

namespace atg {

namespace {

// Iterative lowpoint DFS collecting biconnected components off an edge stack.
struct BlockFinder {
    const Graph& g;
    std::vector<int> num, low, parent;
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<std::vector<int>> blocks;
    std::vector<bool> is_cut;
    int counter = 0;

    explicit BlockFinder(const Graph& gr)
        : g(gr), num(gr.n(), -1), low(gr.n(), 0), parent(gr.n(), -1),
          is_cut(gr.n(), false) {}

    // Pops the component delimited by tree edge (u,v): everything pushed
    // after it, plus the edge itself.
    void pop_block(int u, int v) {
        std::set<int> verts;
        while (!edge_stack.empty()) {
            auto [a, b] = edge_stack.back();
            edge_stack.pop_back();
            verts.insert(a);
            verts.insert(b);
            if (a == u && b == v) break;
        }
        blocks.emplace_back(verts.begin(), verts.end());
    }

    void run_from(int root) {
        struct Frame {
            int v;
            size_t next_child = 0;
        };
        std::vector<Frame> stack;
        num[root] = low[root] = counter++;
        stack.push_back({root});
        int root_children = 0;
        while (!stack.empty()) {
            Frame& f = stack.back();
            int v = f.v;
            if (f.next_child < g.neighbors(v).size()) {
                int w = g.neighbors(v)[f.next_child++];
                if (num[w] < 0) {
                    parent[w] = v;
                    edge_stack.emplace_back(v, w);
                    num[w] = low[w] = counter++;
                    stack.push_back({w});
                    if (v == root) ++root_children;
                } else if (w != parent[v] && num[w] < num[v]) {
                    edge_stack.emplace_back(v, w);
                    low[v] = std::min(low[v], num[w]);
                }
            } else {
                stack.pop_back();
                if (!stack.empty()) {
                    int p = stack.back().v;
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] >= num[p]) {
                        pop_block(p, v);
                        if (p != root) is_cut[p] = true;
                    }
                }
            }
        }
        if (root_children >= 2) is_cut[root] = true;
    }
};

}  // namespace

BlockDecomposition blocks(const Graph& g) {
    BlockFinder bf(g);
    for (int v = 0; v < g.n(); ++v)
        if (bf.num[v] < 0) {
            bf.run_from(v);
            if (g.degree(v) == 0) bf.blocks.push_back({v});  // isolated vertex
        }

    std::sort(bf.blocks.begin(), bf.blocks.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  return a.front() != b.front() ? a.front() < b.front() : a < b;
              });

    BlockDecomposition dec;
    dec.blocks = std::move(bf.blocks);
    for (int v = 0; v < g.n(); ++v)
        if (bf.is_cut[v]) dec.cut_vertices.push_back(v);
    dec.block_cut_tree.resize(dec.blocks.size());
    for (size_t b = 0; b < dec.blocks.size(); ++b)
        for (int v : dec.blocks[b])
            if (bf.is_cut[v]) dec.block_cut_tree[b].push_back(v);
    return dec;
}

bool BlockDecomposition::is_cut_vertex(int v) const {
    return std::binary_search(cut_vertices.begin(), cut_vertices.end(), v);
}

std::vector<int> BlockDecomposition::blocks_of(int v) const {
    std::vector<int> out;
    for (size_t b = 0; b < blocks.size(); ++b)
        if (std::binary_search(blocks[b].begin(), blocks[b].end(), v))
            out.push_back(static_cast<int>(b));
    return out;
}

bool block_is_complete(const Graph& g, const std::vector<int>& block) {
    for (size_t i = 0; i < block.size(); ++i)
        for (size_t j = i + 1; j < block.size(); ++j)
            if (!g.has_edge(block[i], block[j])) return false;
    return true;
}

bool block_is_odd_cycle(const Graph& g, const std::vector<int>& block) {
    if (block.size() < 3 || block.size() % 2 == 0) return false;
    for (int v : block) {
        int deg_in_block = 0;
        for (int w : g.neighbors(v))
            if (std::binary_search(block.begin(), block.end(), w)) ++deg_in_block;
        if (deg_in_block != 2) return false;
    }
    // All internal degrees 2 and the block is 2-connected, so it is a cycle.
    return true;
}

bool is_gallai_tree(const Graph& g) {
    if (!g.connected()) throw_invalid("is_gallai_tree requires a connected graph");
    auto dec = blocks(g);
    for (const auto& b : dec.blocks)
        if (!block_is_complete(g, b) && !block_is_odd_cycle(g, b)) return false;
    return true;
}

std::vector<std::vector<int>> lobes_of_vertex(const Graph& g, int x) {
    if (x < 0 || x >= g.n()) throw_invalid("lobe anchor out of range");
    if (!g.connected()) throw_invalid("lobes require a connected graph");
    std::vector<int> old_of_new;
    Graph rest = g.removed_vertex(x, &old_of_new);
    auto comp = rest.components();
    int k = rest.component_count();
    std::vector<std::vector<int>> out(k);
    for (int v = 0; v < rest.n(); ++v) out[comp[v]].push_back(old_of_new[v]);
    for (auto& lobe : out) {
        lobe.push_back(x);
        std::sort(lobe.begin(), lobe.end());
    }
    std::sort(out.begin(), out.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  return a.front() < b.front();
              });
    return out;
}

std::vector<std::vector<int>> lobes_of_block(const Graph& g,
                                             const std::vector<int>& block) {
    auto dec = blocks(g);
    std::vector<int> sorted_block = block;
    std::sort(sorted_block.begin(), sorted_block.end());
    bool found = false;
    for (const auto& b : dec.blocks)
        if (b == sorted_block) found = true;
    if (!found) throw_invalid("anchor is not a block of the graph");
    if (!g.connected()) throw_invalid("lobes require a connected graph");

    std::vector<int> keep;
    for (int v = 0; v < g.n(); ++v)
        if (!std::binary_search(sorted_block.begin(), sorted_block.end(), v))
            keep.push_back(v);
    std::vector<int> old_of_new;
    Graph rest = g.induced(keep, &old_of_new);
    auto comp = rest.components();
    int k = rest.component_count();
    std::vector<std::vector<int>> out(k);
    std::vector<int> attach(k, -1);
    for (int v = 0; v < rest.n(); ++v) out[comp[v]].push_back(old_of_new[v]);
    for (int c = 0; c < k; ++c) {
        for (int v : out[c])
            for (int w : g.neighbors(v))
                if (std::binary_search(sorted_block.begin(), sorted_block.end(),
                                       w)) {
                    if (attach[c] >= 0 && attach[c] != w)
                        throw_invalid(
                            "component attaches to the block at two vertices; "
                            "anchor is not a block");
                    attach[c] = w;
                }
        out[c].push_back(attach[c]);
        std::sort(out[c].begin(), out[c].end());
    }
    std::sort(out.begin(), out.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  return a.front() < b.front();
              });
    return out;
}

}  // namespace atg
