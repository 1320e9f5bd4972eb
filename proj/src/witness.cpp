#include "witness.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "atsolver.hpp"
#include "blocks.hpp"
#include "builders.hpp"
#include "classify.hpp"
#include "error.hpp"
#include "patterns.hpp"

namespace atg {

using nlohmann::json;

namespace {

// Subsets of `pool` that contain `forced`, ordered by size then
// lexicographically by member list.
struct SubsetOrder {
    std::vector<std::vector<int>> subsets;

    SubsetOrder(const std::vector<int>& pool, const std::vector<int>& forced) {
        std::vector<int> rest;
        for (int v : pool)
            if (std::find(forced.begin(), forced.end(), v) == forced.end())
                rest.push_back(v);
        std::sort(rest.begin(), rest.end());
        int k = static_cast<int>(rest.size());
        for (int mask = 0; mask < (1 << k); ++mask) {
            std::vector<int> s = forced;
            for (int i = 0; i < k; ++i)
                if ((mask >> i) & 1) s.push_back(rest[i]);
            std::sort(s.begin(), s.end());
            subsets.push_back(std::move(s));
        }
        std::stable_sort(subsets.begin(), subsets.end(),
                         [](const auto& a, const auto& b) {
                             return a.size() != b.size() ? a.size() < b.size()
                                                         : a < b;
                         });
    }
};

std::vector<std::pair<int, int>> map_arcs(
    const std::vector<std::pair<int, int>>& arcs, const std::vector<int>& to_old) {
    std::vector<std::pair<int, int>> out;
    out.reserve(arcs.size());
    for (auto [t, h] : arcs) out.emplace_back(to_old[t], to_old[h]);
    return out;
}

// Maximal chains of degree-2 vertices between two branch vertices: vertex
// sequences [a, c1, ..., ck, b] with all ci of degree 2 and a, b of degree
// >= 3 (k >= 1).
std::vector<std::vector<int>> degree2_chains(const Graph& g) {
    std::vector<std::vector<int>> chains;
    for (int a = 0; a < g.n(); ++a) {
        if (g.degree(a) < 3) continue;
        for (int w : g.neighbors(a)) {
            if (g.degree(w) != 2) continue;
            std::vector<int> chain{a, w};
            int prev = a, cur = w;
            bool ok = true;
            while (g.degree(cur) == 2) {
                int next = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1]
                                                       : g.neighbors(cur)[0];
                if (next == a) {
                    ok = false;  // degree-2 cycle back to a
                    break;
                }
                chain.push_back(next);
                prev = cur;
                cur = next;
            }
            if (!ok || g.degree(chain.back()) < 3) continue;
            if (chain.front() > chain.back()) continue;  // keep one direction
            if (std::find(chains.begin(), chains.end(), chain) == chains.end())
                chains.push_back(chain);
        }
    }
    return chains;
}

// Local verification of a pattern candidate: bounds for (H, h_x) and a
// nonzero Eulerian difference.
bool arcs_certify(const Graph& h, int x_local,
                  const std::vector<std::pair<int, int>>& arcs) {
    if (static_cast<int>(arcs.size()) != h.m()) return false;
    Orientation d = orient_from_arcs(h, arcs);
    std::vector<int> f(h.n());
    for (int v = 0; v < h.n(); ++v)
        f[v] = h.degree(v) - (v == x_local ? 1 : 0);
    if (!meets_outdegree_bounds(d, f)) return false;
    return eulerian_counts(d).diff() != 0;
}

std::optional<PatternCert> try_pattern(const Graph& h, int x_local,
                                       const std::vector<int>& old_of_new) {
    // theta with x as a pole
    if (auto t = detect_theta(h)) {
        if (t->is_pole(x_local)) {
            auto arcs = build_theta_orientation(h, *t, x_local).direction;
            Orientation d = build_theta_orientation(h, *t, x_local);
            std::vector<std::pair<int, int>> a;
            for (int e = 0; e < h.m(); ++e) a.push_back(d.arc(e));
            if (arcs_certify(h, x_local, a))
                return PatternCert{"theta", old_of_new, map_arcs(a, old_of_new)};
        }
        return std::nullopt;  // a theta that fails cannot host other patterns
    }
    // T-graph with mixed parity
    if (auto t = detect_t_graph(h, x_local)) {
        auto len = t->path_lengths();
        bool mixed = !(len[0] % 2 == len[1] % 2 && len[1] % 2 == len[2] % 2);
        if (mixed) {
            Orientation d = build_t_orientation(h, *t);
            std::vector<std::pair<int, int>> a;
            for (int e = 0; e < h.m(); ++e) a.push_back(d.arc(e));
            if (arcs_certify(h, x_local, a))
                return PatternCert{"t_mixed", old_of_new, map_arcs(a, old_of_new)};
        }
        return std::nullopt;
    }
    // T-plus: remove one vertex adjacent to exactly the triangle
    for (int u = 0; u < h.n(); ++u) {
        if (u == x_local || h.degree(u) != 3) continue;
        std::vector<int> keep;
        for (int v = 0; v < h.n(); ++v)
            if (v != u) keep.push_back(v);
        std::vector<int> sub_old;
        Graph hu = h.induced(keep, &sub_old);
        int x_in_hu = static_cast<int>(
            std::lower_bound(keep.begin(), keep.end(), x_local) - keep.begin());
        if (auto t = detect_t_graph(hu, x_in_hu)) {
            std::vector<int> tri{t->triangle[0], t->triangle[1], t->triangle[2]};
            std::vector<int> tri_old;
            for (int z : tri) tri_old.push_back(sub_old[z]);
            std::sort(tri_old.begin(), tri_old.end());
            if (h.neighbors(u) == tri_old) {
                // Lift witness ids back into h.
                TGraphWitness w = *t;
                w.apex = sub_old[w.apex];
                for (int i = 0; i < 3; ++i) w.triangle[i] = sub_old[w.triangle[i]];
                for (auto& path : w.paths)
                    for (int& v : path) v = sub_old[v];
                Orientation d = build_t_plus_orientation(h, w, u);
                std::vector<std::pair<int, int>> a;
                for (int e = 0; e < h.m(); ++e) a.push_back(d.arc(e));
                if (arcs_certify(h, x_local, a))
                    return PatternCert{"t_plus", old_of_new,
                                       map_arcs(a, old_of_new)};
            }
        }
    }
    // Added path: remove the interior of one degree-2 chain
    for (const auto& chain : degree2_chains(h)) {
        std::vector<int> keep;
        std::vector<bool> drop(h.n(), false);
        for (size_t i = 1; i + 1 < chain.size(); ++i) drop[chain[i]] = true;
        if (drop[x_local]) continue;
        for (int v = 0; v < h.n(); ++v)
            if (!drop[v]) keep.push_back(v);
        std::vector<int> sub_old;
        Graph ht = h.induced(keep, &sub_old);
        int x_in_ht = static_cast<int>(
            std::lower_bound(keep.begin(), keep.end(), x_local) - keep.begin());
        auto t = detect_t_graph(ht, x_in_ht);
        if (!t) continue;
        auto len = t->path_lengths();
        if (!(len[0] % 2 == len[1] % 2 && len[1] % 2 == len[2] % 2)) continue;
        TGraphWitness w = *t;
        w.apex = sub_old[w.apex];
        for (int i = 0; i < 3; ++i) w.triangle[i] = sub_old[w.triangle[i]];
        for (auto& path : w.paths)
            for (int& v : path) v = sub_old[v];
        std::vector<std::pair<int, int>> a;
        try {
            a = added_path_arcs(w, chain);
        } catch (const Error&) {
            continue;
        }
        if (arcs_certify(h, x_local, a))
            return PatternCert{"added_path", old_of_new, map_arcs(a, old_of_new)};
    }
    // Closed twins in H - x (the Euler lemma pattern)
    if (h.degree(x_local) >= 3) {
        for (int z1 : h.neighbors(x_local)) {
            for (int z2 = 0; z2 < h.n(); ++z2) {
                if (z2 == x_local || z2 == z1 || h.has_edge(x_local, z2)) continue;
                std::vector<std::pair<int, int>> a;
                try {
                    Orientation d = build_euler_lemma_orientation(h, x_local, z1, z2);
                    for (int e = 0; e < h.m(); ++e) a.push_back(d.arc(e));
                } catch (const Error&) {
                    continue;
                }
                if (arcs_certify(h, x_local, a))
                    return PatternCert{"euler_lemma", old_of_new,
                                       map_arcs(a, old_of_new)};
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<PatternCert> search_pattern_in_block(const Graph& g,
                                                   const std::vector<int>& block,
                                                   int x) {
    SubsetOrder order(block, {x});
    for (const auto& s : order.subsets) {
        if (s.size() < 4) continue;
        std::vector<int> old_of_new;
        Graph h = g.induced(s, &old_of_new);
        if (!h.connected()) continue;
        int x_local = static_cast<int>(
            std::lower_bound(s.begin(), s.end(), x) - s.begin());
        if (h.degree(x_local) < 3) continue;
        if (auto cert = try_pattern(h, x_local, old_of_new)) return cert;
    }
    return std::nullopt;
}

std::optional<EvenCycleCert> find_even_cycle_cert(const Graph& g,
                                                  const std::vector<int>& region) {
    SubsetOrder order(region, {});
    for (const auto& s : order.subsets) {
        if (s.size() < 4) continue;
        std::vector<int> old_of_new;
        Graph h = g.induced(s, &old_of_new);
        if (!h.connected()) continue;
        int n = h.n(), m = h.m();
        std::vector<int> deg3;
        bool shape_ok = true;
        for (int v = 0; v < n; ++v) {
            if (h.degree(v) == 3)
                deg3.push_back(v);
            else if (h.degree(v) != 2)
                shape_ok = false;
        }
        if (!shape_ok) continue;

        std::vector<std::pair<int, int>> arcs;
        if (deg3.empty() && m == n && n % 2 == 0) {
            // Even cycle: orient consistently.
            int prev = 0, cur = h.neighbors(0)[0];
            arcs.emplace_back(prev, cur);
            while (cur != 0) {
                int next = h.neighbors(cur)[0] == prev ? h.neighbors(cur)[1]
                                                       : h.neighbors(cur)[0];
                arcs.emplace_back(cur, next);
                prev = cur;
                cur = next;
            }
        } else if (deg3.size() == 2 && m == n + 1 &&
                   h.has_edge(deg3[0], deg3[1])) {
            // Candidate chorded cycle: removing the chord must leave an even
            // cycle.
            Graph c = h.removed_edge(h.edge_index(deg3[0], deg3[1]));
            bool all2 = true;
            for (int v = 0; v < n; ++v)
                if (c.degree(v) != 2) all2 = false;
            if (!all2 || n % 2 != 0 || !c.connected()) continue;
            int prev = 0, cur = c.neighbors(0)[0];
            arcs.emplace_back(prev, cur);
            while (cur != 0) {
                int next = c.neighbors(cur)[0] == prev ? c.neighbors(cur)[1]
                                                       : c.neighbors(cur)[0];
                arcs.emplace_back(cur, next);
                prev = cur;
                cur = next;
            }
            arcs.emplace_back(deg3[0], deg3[1]);
        } else {
            continue;
        }
        Orientation d = orient_from_arcs(h, arcs);
        if (eulerian_counts(d).diff() == 0) continue;
        return EvenCycleCert{s, map_arcs(arcs, old_of_new)};
    }
    return std::nullopt;
}

std::vector<std::pair<int, int>> away_extension_arcs(
    const Graph& g, const std::vector<int>& region,
    const std::vector<int>& seed) {
    std::vector<int> dist(g.n(), -1);
    std::vector<bool> in_region(g.n(), false);
    for (int v : region) in_region[v] = true;
    std::vector<int> frontier;
    for (int v : seed) {
        dist[v] = 0;
        frontier.push_back(v);
    }
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int v : frontier)
            for (int w : g.neighbors(v))
                if (in_region[w] && dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    next.push_back(w);
                }
        frontier = std::move(next);
    }
    std::vector<std::pair<int, int>> arcs;
    for (auto [u, v] : g.edges()) {
        if (!in_region[u] || !in_region[v]) continue;
        if (dist[u] == 0 && dist[v] == 0) continue;  // inside the seed
        if (dist[u] < 0 || dist[v] < 0)
            throw_invalid("extension region not reachable from seed");
        if (dist[u] < dist[v])
            arcs.emplace_back(u, v);
        else if (dist[v] < dist[u])
            arcs.emplace_back(v, u);
        else
            arcs.emplace_back(std::min(u, v), std::max(u, v));
    }
    return arcs;
}

std::vector<std::pair<int, int>> acyclic_arcs(const Graph& g,
                                              const std::vector<int>& region,
                                              int root) {
    return away_extension_arcs(g, region, {root});
}

namespace {

// Arcs of a degree-AT style certificate of g[region] (bounds d+ <= d - 1
// at every region vertex), or nullopt when the region is a Gallai tree.
// The pattern is an even cycle with at most one chord inside some block.
std::optional<std::pair<std::vector<std::pair<int, int>>, json>> cap1_arcs(
    const Graph& g, const std::vector<int>& region) {
    auto part = induce_part(g, region);
    if (!part.graph.connected() || is_gallai_tree(part.graph))
        return std::nullopt;
    auto dec = blocks(part.graph);
    for (const auto& blk : dec.blocks) {
        if (block_is_complete(part.graph, blk) ||
            block_is_odd_cycle(part.graph, blk))
            continue;
        std::vector<int> blk_old;
        for (int v : blk) blk_old.push_back(part.old_of_new[v]);
        auto cyc = find_even_cycle_cert(g, blk_old);
        if (!cyc) continue;
        auto arcs = cyc->arcs;
        auto ext = away_extension_arcs(g, region, cyc->vertices);
        arcs.insert(arcs.end(), ext.begin(), ext.end());
        json deriv;
        deriv["kind"] = "even_cycle";
        deriv["subgraph"] = cyc->vertices;
        return std::make_pair(std::move(arcs), std::move(deriv));
    }
    return std::nullopt;
}

// Arcs witnessing (A, h_x) AT on the lobe A = g[region] (x in region):
// either a pattern in x's block extended over A, or a degree-AT pattern in
// A - x with every x-edge oriented into x.
std::optional<std::pair<std::vector<std::pair<int, int>>, json>> cap2_arcs(
    const Graph& g, const std::vector<int>& region, int x) {
    auto part = induce_part(g, region);
    int ax = part.mapped(x);
    const Graph& a = part.graph;

    if (a.degree(ax) >= 3) {
        auto dec = blocks(a);
        auto bs = dec.blocks_of(ax);
        if (bs.size() == 1) {
            const auto& blk = dec.blocks[bs.front()];
            if (blk.size() >= 3) {
                auto bpart = induce_part(a, blk);
                LabeledPair bp = make_hx(bpart.graph, bpart.mapped(ax));
                if (bpart.graph.degree(bpart.mapped(ax)) >= 3 &&
                    classify_two_connected(bp).at) {
                    std::vector<int> blk_old;
                    for (int v : blk) blk_old.push_back(part.old_of_new[v]);
                    auto pat = search_pattern_in_block(g, blk_old, x);
                    if (pat) {
                        auto arcs = pat->arcs;
                        auto ext = away_extension_arcs(g, region, pat->vertices);
                        arcs.insert(arcs.end(), ext.begin(), ext.end());
                        json deriv;
                        deriv["kind"] = pat->kind;
                        deriv["subgraph"] = pat->vertices;
                        return std::make_pair(std::move(arcs), std::move(deriv));
                    }
                }
            }
        }
    }

    // Degree-AT of A - x, all x-edges into x.
    if (a.degree(ax) >= 2) {
        std::vector<int> rest;
        for (int v : region)
            if (v != x) rest.push_back(v);
        auto sub = cap1_arcs(g, rest);
        if (sub) {
            auto arcs = sub->first;
            for (int w : g.neighbors(x))
                if (std::find(region.begin(), region.end(), w) != region.end())
                    arcs.emplace_back(w, x);
            json deriv;
            deriv["kind"] = "sink_transfer";
            deriv["inner"] = sub->second;
            return std::make_pair(std::move(arcs), std::move(deriv));
        }
    }
    return std::nullopt;
}

}  // namespace

AtCertificate find_at_witness_subgraph(const LabeledPair& p) {
    if (!p.is_hx())
        throw_invalid("witness search requires an h_x labeling");
    const Graph& g = p.graph;
    if (!g.connected()) throw_invalid("witness search requires a connected graph");
    auto verdict = classify_connected(p);
    if (!verdict.at)
        throw_invalid("witness search called on a pair that is not AT");
    int x = p.hx_vertex();

    auto lobe_sets = lobes_of_vertex(g, x);
    const int k = static_cast<int>(lobe_sets.size());

    // One lobe carries the AT-ness (deficiency 2), or two carry degree-AT
    // certificates (deficiency 1 each); every other lobe hangs acyclically
    // off x.
    std::vector<std::pair<std::vector<std::pair<int, int>>, json>> lobe_arcs(k);
    std::vector<int> plan(k, 0);  // 0 = acyclic, 1 = cap1, 2 = cap2
    bool planned = false;

    for (int i = 0; i < k && !planned; ++i) {
        auto c2 = cap2_arcs(g, lobe_sets[i], x);
        if (c2) {
            plan[i] = 2;
            lobe_arcs[i] = std::move(*c2);
            planned = true;
        }
    }
    if (!planned) {
        std::vector<int> cap1_lobes;
        for (int i = 0; i < k && cap1_lobes.size() < 2; ++i) {
            auto c1 = cap1_arcs(g, lobe_sets[i]);
            if (c1) {
                plan[i] = 1;
                lobe_arcs[i] = std::move(*c1);
                cap1_lobes.push_back(i);
            }
        }
        if (cap1_lobes.size() < 2)
            throw Error(ErrorKind::Internal,
                        "no constructive certificate found for an AT pair");
        planned = true;
    }

    std::vector<std::pair<int, int>> arcs;
    json deriv;
    deriv["x"] = x;
    deriv["lobes"] = json::array();
    for (int i = 0; i < k; ++i) {
        json entry;
        entry["vertices"] = lobe_sets[i];
        if (plan[i] == 0) {
            auto a = acyclic_arcs(g, lobe_sets[i], x);
            arcs.insert(arcs.end(), a.begin(), a.end());
            entry["kind"] = "acyclic";
        } else {
            arcs.insert(arcs.end(), lobe_arcs[i].first.begin(),
                        lobe_arcs[i].first.end());
            entry["role"] = plan[i] == 2 ? "at_lobe" : "degree_at_lobe";
            entry["derivation"] = lobe_arcs[i].second;
        }
        deriv["lobes"].push_back(entry);
    }

    AtCertificate cert;
    cert.orientation = orient_from_arcs(g, arcs);
    cert.counts = eulerian_counts(cert.orientation);
    cert.derivation = std::move(deriv);

    if (!meets_outdegree_bounds(cert.orientation, pair_bound(p)))
        throw Error(ErrorKind::Internal,
                    "constructed certificate violates out-degree bounds");
    if (cert.counts.diff() == 0)
        throw Error(ErrorKind::Internal,
                    "constructed certificate has EE = EO");
    return cert;
}

}  // namespace atg
