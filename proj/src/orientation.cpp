#include "orientation.hpp"

#include <algorithm>
#include <string>

#include "config.hpp"
#include "error.hpp"
#include "euler_dp.hpp"

namespace atg {

Orientation::Orientation(Graph g, std::vector<std::uint8_t> dir)
    : graph(std::move(g)), direction(std::move(dir)) {
    if (static_cast<int>(direction.size()) != graph.m())
        throw_invalid("orientation direction vector length must equal edge count");
    for (auto b : direction)
        if (b > 1) throw_invalid("orientation bits must be 0 or 1");
}

int Orientation::out_degree(int v) const {
    int d = 0;
    for (int e = 0; e < graph.m(); ++e)
        if (arc(e).first == v) ++d;
    return d;
}

std::vector<int> Orientation::out_degrees() const {
    std::vector<int> d(graph.n(), 0);
    for (int e = 0; e < graph.m(); ++e) ++d[arc(e).first];
    return d;
}

Orientation Orientation::reversed() const {
    auto dir = direction;
    for (auto& b : dir) b ^= 1;
    return Orientation(graph, std::move(dir));
}

std::string Orientation::direction_bits() const {
    std::string s;
    s.reserve(direction.size());
    for (auto b : direction) s.push_back(b ? '1' : '0');
    return s;
}

Orientation orientation_from_bits(const Graph& g, const std::string& bits) {
    if (static_cast<int>(bits.size()) != g.m())
        throw_parse("orientation bitstring length " + std::to_string(bits.size()) +
                    " does not match edge count " + std::to_string(g.m()));
    std::vector<std::uint8_t> dir;
    dir.reserve(bits.size());
    for (char c : bits) {
        if (c != '0' && c != '1')
            throw_parse("orientation bitstring must contain only 0s and 1s");
        dir.push_back(c == '1');
    }
    return Orientation(g, std::move(dir));
}

Orientation orient_from_arcs(const Graph& g,
                             const std::vector<std::pair<int, int>>& arcs) {
    if (static_cast<int>(arcs.size()) != g.m())
        throw_invalid("arc list must cover every edge exactly once");
    std::vector<std::uint8_t> dir(g.m(), 2);
    for (auto [tail, head] : arcs) {
        int e = g.edge_index(tail, head);
        if (e < 0)
            throw_invalid("arc (" + std::to_string(tail) + "," +
                          std::to_string(head) + ") is not an edge");
        if (dir[e] != 2) throw_invalid("edge oriented twice in arc list");
        dir[e] = tail > head;
    }
    return Orientation(g, std::move(dir));
}

EulerCounts eulerian_counts_subsets(const Orientation& d) {
    const Graph& g = d.graph;
    const int m = g.m();
    if (m > 25)
        throw_guard("subset enumeration limited to m <= 25 (got m = " +
                    std::to_string(m) + "); use the DP path");
    std::vector<std::pair<int, int>> arcs(m);
    for (int e = 0; e < m; ++e) arcs[e] = d.arc(e);
    EulerCounts out;
    std::vector<int> balance(g.n());
    for (std::uint32_t subset = 0; subset < (1u << m); ++subset) {
        std::fill(balance.begin(), balance.end(), 0);
        int size = 0;
        for (int e = 0; e < m; ++e)
            if ((subset >> e) & 1) {
                --balance[arcs[e].first];
                ++balance[arcs[e].second];
                ++size;
            }
        if (std::all_of(balance.begin(), balance.end(),
                        [](int b) { return b == 0; })) {
            if (size % 2 == 0)
                ++out.even;
            else
                ++out.odd;
        }
    }
    return out;
}

EulerCounts eulerian_counts_dp(const Orientation& d) {
    const Graph& g = d.graph;
    if (g.n() > 12)
        throw_guard("balance DP limited to n <= 12 (got n = " +
                    std::to_string(g.n()) + ")");
    internal::EulerDp dp(g.n());
    auto cm = internal::close_masks(g);
    for (int e = 0; e < g.m(); ++e) {
        auto [tail, head] = d.arc(e);
        dp.step(tail, head, cm.zero[e], cm.field[e]);
    }
    return dp.finish();
}

EulerCounts eulerian_counts(const Orientation& d) {
    const int m = d.graph.m();
    if (m > guards().max_count_edges)
        throw_guard("eulerian counting limited to m <= " +
                    std::to_string(guards().max_count_edges) + " (got m = " +
                    std::to_string(m) + "); no oracle available at this size");
    if (m < 16 || d.graph.n() > 12) return eulerian_counts_subsets(d);
    return eulerian_counts_dp(d);
}

bool meets_outdegree_bounds(const Orientation& d, const std::vector<int>& f) {
    auto out = d.out_degrees();
    for (int v = 0; v < d.graph.n(); ++v)
        if (out[v] > f[v] - 1) return false;
    return true;
}

}  // namespace atg
