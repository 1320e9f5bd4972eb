#include "patterns.hpp"

#include <algorithm>

#include "error.hpp"

namespace atg {

namespace {

// Follows the degree-2 chain leaving `from` through `first`.  Returns the
// full vertex sequence ending at the first vertex of degree != 2 (or at a
// revisit, in which case ok=false).
std::vector<int> walk_chain(const Graph& g, int from, int first, bool* ok) {
    std::vector<int> path{from, first};
    int prev = from, cur = first;
    *ok = true;
    while (g.degree(cur) == 2 && cur != from) {
        int next = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1]
                                               : g.neighbors(cur)[0];
        // Revisiting an internal vertex means this is not a clean chain.
        if (std::find(path.begin(), path.end(), next) != path.end() &&
            next != from) {
            *ok = false;
            return path;
        }
        path.push_back(next);
        prev = cur;
        cur = next;
        if (cur == from) break;
    }
    return path;
}

}  // namespace

std::optional<ThetaWitness> detect_theta(const Graph& g) {
    if (!g.connected()) return std::nullopt;
    std::vector<int> branch;
    for (int v = 0; v < g.n(); ++v) {
        int d = g.degree(v);
        if (d == 3)
            branch.push_back(v);
        else if (d != 2)
            return std::nullopt;
    }
    if (branch.size() != 2) return std::nullopt;
    int a = branch[0], b = branch[1];

    ThetaWitness w;
    w.poles[0] = a;
    w.poles[1] = b;
    for (int first : g.neighbors(a)) {
        bool ok = true;
        auto path = walk_chain(g, a, first, &ok);
        if (!ok || path.back() != b) return std::nullopt;
        w.paths.push_back(std::move(path));
    }
    // Degrees force the three paths to cover every vertex and be disjoint,
    // but a shared internal vertex would have degree > 2; verify coverage.
    int covered = 2;
    for (const auto& p : w.paths) covered += static_cast<int>(p.size()) - 2;
    if (covered != g.n()) return std::nullopt;
    std::sort(w.paths.begin(), w.paths.end(),
              [](const std::vector<int>& p, const std::vector<int>& q) {
                  return p.size() != q.size() ? p.size() < q.size() : p < q;
              });
    return w;
}

std::optional<TGraphWitness> detect_t_graph(const Graph& g, int x) {
    if (x < 0 || x >= g.n()) throw_invalid("apex out of range");
    if (!g.connected() || g.degree(x) != 3) return std::nullopt;
    TGraphWitness w;
    w.apex = x;
    for (int first : g.neighbors(x)) {
        bool ok = true;
        auto path = walk_chain(g, x, first, &ok);
        if (!ok || path.back() == x) return std::nullopt;
        w.paths.push_back(std::move(path));
    }
    std::vector<int> z;
    for (const auto& p : w.paths) z.push_back(p.back());
    std::sort(z.begin(), z.end());
    if (z[0] == z[1] || z[1] == z[2]) return std::nullopt;
    for (int zi : z)
        if (g.degree(zi) != 3) return std::nullopt;
    if (!g.has_edge(z[0], z[1]) || !g.has_edge(z[0], z[2]) ||
        !g.has_edge(z[1], z[2]))
        return std::nullopt;
    int covered = 4;
    for (const auto& p : w.paths) covered += static_cast<int>(p.size()) - 2;
    if (covered != g.n()) return std::nullopt;
    std::sort(w.paths.begin(), w.paths.end(),
              [](const std::vector<int>& p, const std::vector<int>& q) {
                  return p.size() != q.size() ? p.size() < q.size() : p < q;
              });
    for (int i = 0; i < 3; ++i) w.triangle[i] = w.paths[i].back();
    return w;
}

LabeledPair stretch(const LabeledPair& p, int edge_idx) {
    const Graph& g = p.graph;
    if (edge_idx < 0 || edge_idx >= g.m())
        throw_invalid("stretch: edge index out of range: " +
                      std::to_string(edge_idx));
    auto [u1, u2] = g.edges()[edge_idx];
    int v1 = g.n(), v2 = g.n() + 1;
    std::vector<std::pair<int, int>> es;
    for (int e = 0; e < g.m(); ++e)
        if (e != edge_idx) es.push_back(g.edges()[e]);
    es.emplace_back(u1, v1);
    es.emplace_back(v1, v2);
    es.emplace_back(v2, u2);
    auto labels = p.labels;
    labels.push_back(0);
    labels.push_back(0);
    return LabeledPair(Graph::from_edges(g.n() + 2, es), std::move(labels));
}

std::vector<UnstretchCandidate> unstretch_candidates(const LabeledPair& p) {
    const Graph& g = p.graph;
    std::vector<UnstretchCandidate> out;
    for (auto [v1, v2] : g.edges()) {
        if (g.degree(v1) != 2 || g.degree(v2) != 2) continue;
        if (p.labels[v1] != 0 || p.labels[v2] != 0) continue;
        int u1 = g.neighbors(v1)[0] == v2 ? g.neighbors(v1)[1]
                                          : g.neighbors(v1)[0];
        int u2 = g.neighbors(v2)[0] == v1 ? g.neighbors(v2)[1]
                                          : g.neighbors(v2)[0];
        if (u1 == v2 || u2 == v1 || u1 == u2) continue;
        // Induced: u1u2, u1v2, u2v1 must all be absent.
        if (g.has_edge(u1, u2) || g.has_edge(u1, v2) || g.has_edge(u2, v1))
            continue;
        out.push_back({u1, v1, v2, u2});
    }
    return out;
}

bool graph_is_unstretched(const Graph& g) {
    return unstretch_candidates(make_zero_labels(g)).empty();
}

LabeledPair apply_unstretch(const LabeledPair& p, const UnstretchCandidate& c) {
    const Graph& g = p.graph;
    std::vector<int> keep;
    for (int v = 0; v < g.n(); ++v)
        if (v != c.v1 && v != c.v2) keep.push_back(v);
    std::vector<int> old_of_new;
    Graph h = g.induced(keep, &old_of_new);
    std::vector<int> new_of_old(g.n(), -1);
    for (int i = 0; i < h.n(); ++i) new_of_old[old_of_new[i]] = i;
    h = h.added_edge(new_of_old[c.u1], new_of_old[c.u2]);
    std::vector<int> labels(h.n());
    for (int i = 0; i < h.n(); ++i) labels[i] = p.labels[old_of_new[i]];
    return LabeledPair(std::move(h), std::move(labels));
}

}  // namespace atg
