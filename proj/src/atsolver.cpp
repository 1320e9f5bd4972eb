#include "atsolver.hpp"

#include <algorithm>
#include <string>

#include "config.hpp"
#include "error.hpp"
#include "euler_dp.hpp"
#include "patterns.hpp"

namespace atg {

std::vector<int> pair_bound(const LabeledPair& p) {
    std::vector<int> f(p.graph.n());
    for (int v = 0; v < p.graph.n(); ++v)
        f[v] = p.graph.degree(v) - p.labels[v];
    return f;
}

bool degree_sum_infeasible(const Graph& g, const std::vector<int>& f) {
    long need = 0;
    for (int v = 0; v < g.n(); ++v)
        need += std::max(0, g.degree(v) - f[v] + 1);
    return need > g.m();
}

namespace {

struct AtSearch {
    const Graph& g;
    const std::vector<int>& f;
    const internal::CloseMasks& cm;
    std::vector<int> out_deg;
    std::vector<std::uint8_t> dirs;
    std::optional<Orientation> witness;

    AtSearch(const Graph& gr, const std::vector<int>& fb,
             const internal::CloseMasks& masks)
        : g(gr), f(fb), cm(masks), out_deg(gr.n(), 0), dirs(gr.m(), 0) {}

    bool dfs(int e, const internal::EulerDp& dp) {
        if (e == g.m()) {
            EulerCounts c = dp.finish();
            if (c.even != c.odd) {
                witness = Orientation(g, dirs);
                return true;
            }
            return false;
        }
        auto [u, v] = g.edges()[e];
        for (int dir = 0; dir <= 1; ++dir) {
            int tail = dir ? v : u;
            int head = dir ? u : v;
            if (out_deg[tail] + 1 > f[tail] - 1) continue;
            dirs[e] = static_cast<std::uint8_t>(dir);
            ++out_deg[tail];
            internal::EulerDp child = dp;
            child.step(tail, head, cm.zero[e], cm.field[e]);
            bool found = dfs(e + 1, child);
            --out_deg[tail];
            if (found) return true;
        }
        return false;
    }
};

}  // namespace

std::optional<Orientation> is_f_at(const Graph& g, const std::vector<int>& f) {
    if (static_cast<int>(f.size()) != g.n())
        throw_invalid("bound vector length must equal vertex count");
    if (g.m() > guards().max_search_edges)
        throw_guard("orientation search limited to m <= " +
                    std::to_string(guards().max_search_edges) + " (got m = " +
                    std::to_string(g.m()) + "); try the coefficient oracle");
    for (int v = 0; v < g.n(); ++v)
        if (f[v] <= 0) return std::nullopt;
    if (degree_sum_infeasible(g, f)) return std::nullopt;
    if (g.n() > 12)
        throw_guard("orientation search limited to n <= 12 (got n = " +
                    std::to_string(g.n()) + ")");

    auto cm = internal::close_masks(g);
    AtSearch search(g, f, cm);
    internal::EulerDp dp(g.n());
    search.dfs(0, dp);
    return search.witness;
}

std::optional<Orientation> is_pair_at(const LabeledPair& p) {
    return is_f_at(p.graph, pair_bound(p));
}

bool coefficient_oracle(const Graph& g, const std::vector<int>& f) {
    if (static_cast<int>(f.size()) != g.n())
        throw_invalid("bound vector length must equal vertex count");
    if (g.m() > guards().max_coeff_edges)
        throw_guard("coefficient oracle limited to m <= " +
                    std::to_string(guards().max_coeff_edges) + " (got m = " +
                    std::to_string(g.m()) + ")");
    if (g.n() > guards().max_coeff_vertices)
        throw_guard("coefficient oracle limited to n <= " +
                    std::to_string(guards().max_coeff_vertices) + " (got n = " +
                    std::to_string(g.n()) + ")");
    for (int v = 0; v < g.n(); ++v)
        if (f[v] <= 0) return false;

    // Exponent vectors packed 4 bits per vertex; degrees stay below 16 at
    // this scale.  Monomials whose exponent anywhere exceeds f(v)-1 can
    // never come back below, so they are pruned as they arise.
    std::vector<std::pair<std::uint64_t, std::int64_t>> terms{{0, 1}};
    std::vector<std::pair<std::uint64_t, std::int64_t>> next;
    for (auto [u, v] : g.edges()) {
        next.clear();
        next.reserve(terms.size() * 2);
        const std::uint64_t bump_u = std::uint64_t{1} << (4 * u);
        const std::uint64_t bump_v = std::uint64_t{1} << (4 * v);
        const int cap_u = f[u] - 1, cap_v = f[v] - 1;
        for (auto [key, coef] : terms) {
            int eu = static_cast<int>((key >> (4 * u)) & 15);
            int ev = static_cast<int>((key >> (4 * v)) & 15);
            if (eu + 1 <= cap_u) next.push_back({key + bump_u, coef});
            if (ev + 1 <= cap_v) next.push_back({key + bump_v, -coef});
        }
        std::sort(next.begin(), next.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        terms.clear();
        for (auto [key, coef] : next) {
            if (!terms.empty() && terms.back().first == key)
                terms.back().second += coef;
            else
                terms.push_back({key, coef});
        }
        terms.erase(std::remove_if(terms.begin(), terms.end(),
                                   [](const auto& t) { return t.second == 0; }),
                    terms.end());
        if (terms.empty()) return false;
    }
    return !terms.empty();
}

StretchTransferReport stretch_transfer_check(const LabeledPair& p,
                                             int edge_idx) {
    StretchTransferReport rep;
    LabeledPair minus(p.graph.removed_edge(edge_idx), p.labels);
    LabeledPair stretched = stretch(p, edge_idx);

    rep.base_witness = is_pair_at(p);
    rep.minus_witness = is_pair_at(minus);
    rep.stretched_witness = is_pair_at(stretched);
    rep.base_at = rep.base_witness.has_value();
    rep.minus_at = rep.minus_witness.has_value();
    rep.stretched_at = rep.stretched_witness.has_value();
    rep.implication_forward_ok = !rep.base_at || rep.stretched_at;
    rep.implication_backward_ok = !rep.stretched_at || rep.base_at || rep.minus_at;
    return rep;
}

ComposedOrientation compose_cutvertex(const Orientation& d1,
                                      const Orientation& d2, int x1, int x2) {
    const Graph& g1 = d1.graph;
    const Graph& g2 = d2.graph;
    if (x1 < 0 || x1 >= g1.n() || x2 < 0 || x2 >= g2.n())
        throw_invalid("identification vertex out of range");

    ComposedOrientation out;
    out.map1.resize(g1.n());
    for (int v = 0; v < g1.n(); ++v) out.map1[v] = v;
    out.map2.resize(g2.n());
    for (int v = 0; v < g2.n(); ++v) {
        if (v == x2)
            out.map2[v] = x1;
        else
            out.map2[v] = g1.n() + v - (v > x2 ? 1 : 0);
    }

    std::vector<std::pair<int, int>> arcs;
    for (int e = 0; e < g1.m(); ++e) {
        auto [t, h] = d1.arc(e);
        arcs.emplace_back(out.map1[t], out.map1[h]);
    }
    for (int e = 0; e < g2.m(); ++e) {
        auto [t, h] = d2.arc(e);
        arcs.emplace_back(out.map2[t], out.map2[h]);
    }
    int n = g1.n() + g2.n() - 1;
    Graph glued;
    try {
        glued = Graph::from_edges(n, arcs);
    } catch (const Error&) {
        throw_invalid("identification produces a loop or parallel edge");
    }
    out.orientation = orient_from_arcs(glued, arcs);
    out.counts = eulerian_counts(out.orientation);

    EulerCounts c1 = eulerian_counts(d1);
    EulerCounts c2 = eulerian_counts(d2);
    if (out.counts.diff() != c1.diff() * c2.diff())
        throw_claim("cutvertex composition identity violated: " +
                    std::to_string(out.counts.diff()) + " != " +
                    std::to_string(c1.diff()) + " * " + std::to_string(c2.diff()));
    return out;
}

}  // namespace atg
