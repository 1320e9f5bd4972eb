#include "canonical.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <string>

#include "config.hpp"
#include "error.hpp"
#include "graph6.hpp"

namespace atg {

namespace {

// 1-WL refinement: iterate color <- (color, sorted neighbor colors) until
// stable.  Color ids are normalized by sorting signatures, so they are
// isomorphism-invariant.
std::vector<int> refine_colors(const Graph& g, std::vector<int> colors) {
    const int n = g.n();
    for (;;) {
        std::vector<std::pair<std::vector<int>, int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> s;
            s.push_back(colors[v]);
            std::vector<int> nb;
            for (int w : g.neighbors(v)) nb.push_back(colors[w]);
            std::sort(nb.begin(), nb.end());
            s.insert(s.end(), nb.begin(), nb.end());
            sig[v] = {std::move(s), v};
        }
        std::map<std::vector<int>, int> ids;
        for (const auto& [s, v] : sig) ids.emplace(s, 0);
        int next = 0;
        for (auto& [s, id] : ids) id = next++;
        std::vector<int> fresh(n);
        for (const auto& [s, v] : sig) fresh[v] = ids[s];
        if (fresh == colors) return colors;
        colors = std::move(fresh);
    }
}

struct CanonSearch {
    const Graph& g;
    int n;
    std::vector<std::vector<int>> cells;  // vertices per position range
    std::vector<int> cell_of_pos;         // which cell fills each position
    std::vector<int> perm_inv;            // position -> original vertex
    std::vector<bool> used;
    std::vector<unsigned char> bits, best_bits;
    std::vector<int> best_perm_inv;

    explicit CanonSearch(const Graph& gr, const std::vector<int>& refined)
        : g(gr), n(gr.n()), used(gr.n(), false) {
        int ncolors = refined.empty()
                          ? 0
                          : *std::max_element(refined.begin(), refined.end()) + 1;
        cells.resize(ncolors);
        for (int v = 0; v < n; ++v) cells[refined[v]].push_back(v);
        for (int c = 0; c < ncolors; ++c)
            for (size_t i = 0; i < cells[c].size(); ++i) cell_of_pos.push_back(c);
        perm_inv.assign(n, -1);
        bits.assign(static_cast<size_t>(n) * (n - 1) / 2, 0);
        best_bits.assign(bits.size(), 2);  // sentinel: larger than any bit
        best_perm_inv.assign(n, -1);
    }

    // Returns true when best was replaced inside this subtree.  After a
    // replacement the current path prefix equals the new best, so the
    // caller must drop its strictly-less state before trying siblings.
    bool dfs(int pos, size_t nbits, bool strictly_less) {
        if (pos == n) {
            if (strictly_less) {
                best_bits = bits;
                best_perm_inv = perm_inv;
                return true;
            }
            return false;
        }
        bool updated = false;
        for (int v : cells[cell_of_pos[pos]]) {
            if (used[v]) continue;
            size_t nb = nbits;
            bool child_less = strictly_less;
            bool worse = false;
            for (int q = 0; q < pos; ++q, ++nb) {
                unsigned char bit = g.has_edge(v, perm_inv[q]) ? 1 : 0;
                bits[nb] = bit;
                if (!child_less) {
                    if (bit > best_bits[nb]) {
                        worse = true;
                        break;
                    }
                    if (bit < best_bits[nb]) child_less = true;
                }
            }
            if (worse) continue;
            used[v] = true;
            perm_inv[pos] = v;
            if (dfs(pos + 1, nbits + pos, child_less)) {
                updated = true;
                strictly_less = false;
            }
            used[v] = false;
        }
        return updated;
    }
};

// Runs the canonical search; returns perm with perm[old] = new.
std::vector<int> canonical_search(const Graph& g, const std::vector<int>& colors) {
    if (g.n() > guards().max_canonical_vertices)
        throw_guard("canonical form limited to n <= " +
                    std::to_string(guards().max_canonical_vertices) + " (got n = " +
                    std::to_string(g.n()) + ")");
    if (g.n() == 0) return {};
    if (g.n() == 1) return {0};
    auto refined = refine_colors(g, colors);
    CanonSearch cs(g, refined);
    // The sentinel best (all 2s) makes the first complete candidate strictly
    // smaller at its first compared bit.
    cs.dfs(0, 0, false);
    std::vector<int> perm(g.n());
    for (int pos = 0; pos < g.n(); ++pos) perm[cs.best_perm_inv[pos]] = pos;
    return perm;
}

}  // namespace

std::vector<int> canonical_relabeling(const Graph& g,
                                      const std::vector<int>& colors) {
    std::vector<int> c = colors.empty() ? std::vector<int>(g.n(), 0) : colors;
    if (static_cast<int>(c.size()) != g.n())
        throw_invalid("color vector length mismatch");
    return canonical_search(g, c);
}

std::string canonical_form(const Graph& g) {
    auto perm = canonical_relabeling(g, {});
    return emit_graph6(g.permuted(perm));
}

std::string canonical_form_colored(const Graph& g,
                                   const std::vector<int>& colors) {
    auto perm = canonical_relabeling(g, colors);
    Graph cg = g.permuted(perm);
    std::string out = emit_graph6(cg);
    // Append the color vector in canonical order.
    std::vector<int> c(g.n());
    for (int v = 0; v < g.n(); ++v) c[perm[v]] = colors[v];
    out.push_back(':');
    for (int v = 0; v < g.n(); ++v) {
        if (v) out.push_back(',');
        out += std::to_string(c[v]);
    }
    return out;
}

std::string canonical_form_pair(const LabeledPair& p) {
    return canonical_form_colored(p.graph, p.labels);
}

std::vector<int> find_isomorphism(const Graph& g1, const std::vector<int>& c1,
                                  const Graph& g2, const std::vector<int>& c2) {
    if (g1.n() != g2.n() || g1.m() != g2.m()) return {};
    if (canonical_form_colored(g1, c1) != canonical_form_colored(g2, c2))
        return {};
    auto p1 = canonical_relabeling(g1, c1);
    auto p2 = canonical_relabeling(g2, c2);
    // g1 --p1--> canonical <--p2-- g2, so iso = p2^{-1} . p1.
    std::vector<int> inv2(g2.n());
    for (int v = 0; v < g2.n(); ++v) inv2[p2[v]] = v;
    std::vector<int> iso(g1.n());
    for (int v = 0; v < g1.n(); ++v) iso[v] = inv2[p1[v]];
    return iso;
}

namespace {

// Grows level n from level n-1 by attaching a new vertex to every subset of
// the old vertices, deduplicating by canonical form.
std::vector<Graph> augment_level(const std::vector<Graph>& prev, int n) {
    if (n == 1) return {Graph(1)};
    std::set<std::string> seen;
    std::vector<std::pair<std::pair<int, std::string>, Graph>> found;
    for (const Graph& base : prev) {
        for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
            auto es = base.edges();
            for (int v = 0; v < n - 1; ++v)
                if ((mask >> v) & 1) es.emplace_back(v, n - 1);
            Graph g = Graph::from_edges(n, es);
            std::string canon = canonical_form(g);
            if (seen.insert(canon).second)
                found.push_back({{g.m(), canon}, parse_graph6(canon)});
        }
    }
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Graph> out;
    out.reserve(found.size());
    for (auto& [key, g] : found) out.push_back(std::move(g));
    return out;
}

}  // namespace

const std::vector<Graph>& enumerate_graphs(int n, EnumerateFilter filter) {
    if (n > guards().max_enumerate_vertices)
        throw_guard("enumeration limited to n <= " +
                    std::to_string(guards().max_enumerate_vertices) + " (got n = " +
                    std::to_string(n) + ")");
    if (n < 0) throw_invalid("vertex count must be nonnegative");
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::vector<Graph>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(n, static_cast<int>(filter));
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    auto all_key = [](int k) {
        return std::make_pair(k, static_cast<int>(EnumerateFilter::All));
    };
    for (int k = 1; k <= n; ++k) {
        if (cache.count(all_key(k))) continue;
        const std::vector<Graph>& prev =
            k == 1 ? cache[all_key(0)] : cache[all_key(k - 1)];
        cache[all_key(k)] = augment_level(prev, k);
    }
    if (filter == EnumerateFilter::All) return cache[all_key(n)];

    std::vector<Graph> out;
    for (const Graph& g : cache[all_key(n)]) {
        bool keep = filter == EnumerateFilter::Connected ? g.connected()
                                                         : g.two_connected();
        if (keep) out.push_back(g);
    }
    return cache.emplace(key, std::move(out)).first->second;
}

}  // namespace atg
