#ifndef ATG_ORIENTATION_HPP
#define ATG_ORIENTATION_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace atg {

// Direction assignment per edge index: 0 orients from the smaller endpoint
// to the larger, 1 the reverse.
struct Orientation {
    Graph graph;
    std::vector<std::uint8_t> direction;

    Orientation() = default;
    Orientation(Graph g, std::vector<std::uint8_t> dir);

    // (tail, head) of edge e under the current direction.
    std::pair<int, int> arc(int e) const {
        auto [u, v] = graph.edges()[e];
        return direction[e] ? std::make_pair(v, u) : std::make_pair(u, v);
    }
    int out_degree(int v) const;
    int in_degree(int v) const { return graph.degree(v) - out_degree(v); }
    std::vector<int> out_degrees() const;
    Orientation reversed() const;
    std::string direction_bits() const;
};

Orientation orientation_from_bits(const Graph& g, const std::string& bits);

// Builds an orientation from an explicit arc list covering every edge once.
Orientation orient_from_arcs(const Graph& g,
                             const std::vector<std::pair<int, int>>& arcs);

// Counts of spanning Eulerian sub-digraphs by parity of their edge count.
// The empty subgraph counts as even, so even >= 1.  Counts fit in 64 bits
// under the m <= 30 guard (counts are at most 2^m).
struct EulerCounts {
    std::int64_t even = 0;
    std::int64_t odd = 0;
    std::int64_t diff() const { return even - odd; }
    std::int64_t total() const { return even + odd; }
    bool operator==(const EulerCounts&) const = default;
};

// Plain 2^m subset enumeration; the trusted simple path.
EulerCounts eulerian_counts_subsets(const Orientation& d);

// Dynamic programming over edges keyed by partial in-minus-out balances.
EulerCounts eulerian_counts_dp(const Orientation& d);

// Dispatches: subset enumeration below 16 edges, DP up to the counting
// guard, error beyond.
EulerCounts eulerian_counts(const Orientation& d);

// d+(v) <= f(v) - 1 for every vertex.
bool meets_outdegree_bounds(const Orientation& d, const std::vector<int>& f);

}  // namespace atg

#endif
