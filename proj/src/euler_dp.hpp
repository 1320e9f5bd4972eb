#ifndef ATG_EULER_DP_HPP
#define ATG_EULER_DP_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "orientation.hpp"

namespace atg::internal {

// Incremental balance-vector DP for Eulerian subgraph counting, shared by
// the standalone counter and the orientation search (which advances it one
// arc at a time along its DFS).  Keys pack per-vertex in-minus-out balances,
// 5 bits each with offset 16; valid while max degree <= 15 (so n <= 12 is
// always safe).
struct EulerDp {
    int n = 0;
    std::vector<std::pair<std::uint64_t, std::array<std::int64_t, 2>>> states;

    static std::uint64_t zero_key(int n) {
        std::uint64_t k = 0;
        for (int v = 0; v < n; ++v) k |= (std::uint64_t{16} << (5 * v));
        return k;
    }

    explicit EulerDp(int nverts) : n(nverts) {
        states.push_back({zero_key(n), {1, 0}});
    }

    // Advances by one arc.  close_field/close_zero select vertices whose
    // incident edges are all processed after this arc; states in which such
    // a vertex is unbalanced are dropped.
    void step(int tail, int head, std::uint64_t close_zero,
              std::uint64_t close_field) {
        std::vector<std::pair<std::uint64_t, std::array<std::int64_t, 2>>> next;
        next.reserve(states.size() * 2);
        const std::uint64_t dec = std::uint64_t{1} << (5 * tail);
        const std::uint64_t inc = std::uint64_t{1} << (5 * head);
        for (const auto& [key, cnt] : states) {
            next.push_back({key, cnt});
            // Including the arc flips subset-size parity.
            next.push_back({key - dec + inc, {cnt[1], cnt[0]}});
        }
        std::sort(next.begin(), next.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        states.clear();
        for (const auto& [key, cnt] : next) {
            if ((key & close_field) != close_zero) continue;
            if (!states.empty() && states.back().first == key) {
                states.back().second[0] += cnt[0];
                states.back().second[1] += cnt[1];
            } else {
                states.push_back({key, cnt});
            }
        }
    }

    EulerCounts finish() const {
        EulerCounts out;
        const std::uint64_t zero = zero_key(n);
        for (const auto& [key, cnt] : states)
            if (key == zero) {
                out.even = cnt[0];
                out.odd = cnt[1];
            }
        return out;
    }
};

// Per edge index: the 5-bit fields of vertices whose last incident edge it
// is, and the corresponding all-balanced target bits.
struct CloseMasks {
    std::vector<std::uint64_t> field;
    std::vector<std::uint64_t> zero;
};

inline CloseMasks close_masks(const Graph& g) {
    CloseMasks cm;
    cm.field.assign(std::max(g.m(), 1), 0);
    cm.zero.assign(std::max(g.m(), 1), 0);
    std::vector<int> last(g.n(), -1);
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edges()[e];
        last[u] = e;
        last[v] = e;
    }
    for (int v = 0; v < g.n(); ++v)
        if (last[v] >= 0) {
            cm.field[last[v]] |= std::uint64_t{31} << (5 * v);
            cm.zero[last[v]] |= std::uint64_t{16} << (5 * v);
        }
    return cm;
}

}  // namespace atg::internal

#endif
