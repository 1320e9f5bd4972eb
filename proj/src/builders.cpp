#include "builders.hpp"

#include <algorithm>
#include <string>

#include "error.hpp"

namespace atg {

std::vector<int> bfs_order(const Graph& g, const std::vector<int>& seeds,
                           const std::vector<int>& vertices) {
    std::vector<bool> allowed(g.n(), false);
    for (int v : vertices) allowed[v] = true;
    std::vector<bool> seen(g.n(), false);
    std::vector<int> order;
    std::vector<int> frontier;
    for (int s : seeds) {
        if (!allowed[s]) throw_invalid("bfs seed outside vertex set");
        if (!seen[s]) {
            seen[s] = true;
            order.push_back(s);
            frontier.push_back(s);
        }
    }
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int v : frontier)
            for (int w : g.neighbors(v))
                if (allowed[w] && !seen[w]) {
                    seen[w] = true;
                    next.push_back(w);
                }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        order.insert(order.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    if (order.size() != vertices.size())
        throw_invalid("bfs order did not reach every vertex (region disconnected)");
    return order;
}

Orientation build_euler_lemma_orientation(const Graph& g, int x, int z1,
                                          int z2) {
    if (x < 0 || x >= g.n() || z1 < 0 || z1 >= g.n() || z2 < 0 || z2 >= g.n())
        throw_invalid("vertex out of range");
    if (x == z1 || x == z2 || z1 == z2)
        throw_invalid("x, z1, z2 must be distinct");
    if (!g.has_edge(x, z1)) throw_invalid("hypothesis failed: x must be adjacent to z1");
    if (g.has_edge(x, z2))
        throw_invalid("hypothesis failed: x must not be adjacent to z2");

    std::vector<int> h_vertices;
    for (int v = 0; v < g.n(); ++v)
        if (v != x) h_vertices.push_back(v);
    Graph h = g.induced(h_vertices);
    if (!h.connected()) throw_invalid("hypothesis failed: G - x must be connected");

    // Closed neighborhoods in H must coincide.
    auto closed = [&](int v) {
        std::vector<int> nb;
        for (int w : g.neighbors(v))
            if (w != x) nb.push_back(w);
        nb.push_back(v);
        std::sort(nb.begin(), nb.end());
        return nb;
    };
    if (closed(z1) != closed(z2))
        throw_invalid("hypothesis failed: N_H[z1] must equal N_H[z2]");

    auto order = bfs_order(g, {z1, z2}, h_vertices);
    std::vector<int> rank(g.n(), -1);
    for (size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);

    std::vector<std::pair<int, int>> arcs;
    for (auto [u, v] : g.edges()) {
        if (u == x || v == x) {
            int other = u == x ? v : u;
            if (other == z1)
                arcs.emplace_back(x, z1);
            else
                arcs.emplace_back(other, x);
        } else {
            if (rank[u] < rank[v])
                arcs.emplace_back(u, v);
            else
                arcs.emplace_back(v, u);
        }
    }
    return orient_from_arcs(g, arcs);
}

namespace {

// Appends the arcs of `path` (a vertex sequence) oriented from path.front()
// to path.back() when forward, else reversed.
void orient_path(std::vector<std::pair<int, int>>& arcs,
                 const std::vector<int>& path, bool forward) {
    if (forward)
        for (size_t i = 0; i + 1 < path.size(); ++i)
            arcs.emplace_back(path[i], path[i + 1]);
    else
        for (size_t i = path.size(); i-- > 1;)
            arcs.emplace_back(path[i], path[i - 1]);
}

}  // namespace

Orientation build_theta_orientation(const Graph& g, const ThetaWitness& w,
                                    int x) {
    if (!w.is_pole(x)) throw_invalid("x must be a pole of the theta graph");
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < 3; ++i) {
        const auto& p = w.paths[i];
        bool starts_at_x = p.front() == x;
        // Paths 0 and 1 run into x, path 2 out of x.
        bool toward_x = i < 2;
        orient_path(arcs, p, starts_at_x ? !toward_x : toward_x);
    }
    return orient_from_arcs(g, arcs);
}

namespace {

// Relabels the witness paths so that chosen indices become (P1, P2, P3).
struct TRelabel {
    std::vector<int> p1, p2, p3;  // apex-to-z sequences
    int z1, z2, z3;
};

TRelabel relabel_t(const TGraphWitness& w, int i, int j) {
    TRelabel r;
    int k = 3 - i - j;
    r.p1 = w.paths[i];
    r.p2 = w.paths[j];
    r.p3 = w.paths[k];
    r.z1 = r.p1.back();
    r.z2 = r.p2.back();
    r.z3 = r.p3.back();
    return r;
}

}  // namespace

Orientation build_t_orientation(const Graph& g, const TGraphWitness& w) {
    auto len = w.path_lengths();
    int pi = -1, pj = -1;
    for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}})
        if (pi < 0 && (len[i] + len[j]) % 2 == 1) {
            pi = i;
            pj = j;
        }
    if (pi < 0)
        throw_invalid(
            "T-graph orientation requires two apex paths of opposite parity");
    auto r = relabel_t(w, pi, pj);

    std::vector<std::pair<int, int>> arcs;
    orient_path(arcs, r.p1, false);  // z1 -> ... -> x
    orient_path(arcs, r.p2, false);
    orient_path(arcs, r.p3, true);   // x -> ... -> z3
    arcs.emplace_back(r.z1, r.z2);
    arcs.emplace_back(r.z2, r.z3);
    arcs.emplace_back(r.z3, r.z1);
    return orient_from_arcs(g, arcs);
}

Orientation build_t_plus_orientation(const Graph& g, const TGraphWitness& w,
                                     int u) {
    if (u < 0 || u >= g.n()) throw_invalid("u out of range");
    std::vector<int> expect{w.triangle[0], w.triangle[1], w.triangle[2]};
    std::sort(expect.begin(), expect.end());
    std::vector<int> actual = g.neighbors(u);
    if (actual != expect)
        throw_invalid("u must be adjacent to exactly the triangle vertices");

    // Base contraction is K5 minus xu; the closed-twin orientation there
    // sends x -> z1, z2 -> x, z3 -> x, and orders H as z1, u, za, zb.
    auto r = relabel_t(w, 0, 1);
    std::vector<std::pair<int, int>> arcs;
    orient_path(arcs, r.p1, true);   // x -> ... -> z1
    orient_path(arcs, r.p2, false);  // z2 -> ... -> x
    orient_path(arcs, r.p3, false);
    int za = std::min(r.z2, r.z3), zb = std::max(r.z2, r.z3);
    arcs.emplace_back(r.z1, u);
    arcs.emplace_back(r.z1, za);
    arcs.emplace_back(r.z1, zb);
    arcs.emplace_back(u, za);
    arcs.emplace_back(u, zb);
    arcs.emplace_back(za, zb);
    return orient_from_arcs(g, arcs);
}

std::vector<std::pair<int, int>> added_path_arcs(const TGraphWitness& w,
                                                 const std::vector<int>& chain) {
    if (chain.size() < 3)
        throw_invalid("added path must have length at least 2");
    auto len = w.path_lengths();
    if ((len[0] % 2 != len[1] % 2) || (len[1] % 2 != len[2] % 2))
        throw_invalid(
            "added-path construction applies only when all apex path lengths "
            "share one parity");

    // Locate the apex path containing both chain ends.
    int host = -1, ia = -1, ib = -1;
    for (int i = 0; i < 3 && host < 0; ++i) {
        const auto& p = w.paths[i];
        int fa = -1, fb = -1;
        for (size_t k = 0; k < p.size(); ++k) {
            if (p[k] == chain.front()) fa = static_cast<int>(k);
            if (p[k] == chain.back()) fb = static_cast<int>(k);
        }
        if (fa >= 0 && fb >= 0) {
            host = i;
            ia = fa;
            ib = fb;
        }
    }
    if (host < 0 || ia == ib)
        throw_invalid("P endpoints must be distinct vertices on one apex path");

    // Host path becomes the out-path P3.  The triangle is oriented
    // z1 -> z2, z3 -> z2, z3 -> z1; the new path runs opposite P, so P'P is
    // the only directed cycle through it and contributes exactly one
    // Eulerian subgraph.
    int other1 = (host + 1) % 3, other2 = (host + 2) % 3;
    auto r = relabel_t(w, std::min(other1, other2), std::max(other1, other2));
    std::vector<std::pair<int, int>> arcs;
    orient_path(arcs, r.p1, false);  // z1 -> ... -> x
    orient_path(arcs, r.p2, false);
    orient_path(arcs, r.p3, true);   // x -> ... -> z3 (contains P as a -> b)
    arcs.emplace_back(r.z1, r.z2);
    arcs.emplace_back(r.z3, r.z2);
    arcs.emplace_back(r.z3, r.z1);
    // The chain runs from b (farther from the apex along P3) back to a.
    orient_path(arcs, chain, ib < ia);
    return arcs;
}

Orientation build_added_path_orientation(const Graph& g, const TGraphWitness& w,
                                         std::pair<int, int> p_endpoints,
                                         int p_prime_len) {
    if (p_prime_len < 2)
        throw_invalid("added path must have length at least 2");
    int a = p_endpoints.first, b = p_endpoints.second;
    if (a < 0 || a >= g.n() || b < 0 || b >= g.n() || a == b)
        throw_invalid("P endpoints must be two distinct vertices");

    // Enlarged graph: path of p_prime_len edges joining a and b through
    // fresh vertices.
    auto es = g.edges();
    std::vector<int> chain{a};
    int next = g.n();
    int prev = a;
    for (int i = 1; i < p_prime_len; ++i) {
        es.emplace_back(prev, next);
        chain.push_back(next);
        prev = next++;
    }
    es.emplace_back(prev, b);
    chain.push_back(b);
    Graph gp = Graph::from_edges(next, es);
    return orient_from_arcs(gp, added_path_arcs(w, chain));
}

}  // namespace atg
