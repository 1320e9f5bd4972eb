#include "coloring.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <unordered_map>

#include "atsolver.hpp"
#include "blocks.hpp"
#include "config.hpp"
#include "error.hpp"

namespace atg {

namespace {

// Reverse peel order: color each vertex after at most `degeneracy` of its
// neighbors.
std::vector<int> coloring_order(const Graph& g) {
    int n = g.n();
    std::vector<bool> removed(n, false);
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::vector<int> peel;
    for (int round = 0; round < n; ++round) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[v] && (best < 0 || deg[v] < deg[best])) best = v;
        removed[best] = true;
        peel.push_back(best);
        for (int w : g.neighbors(best))
            if (!removed[w]) --deg[w];
    }
    std::reverse(peel.begin(), peel.end());
    return peel;
}

bool color_dfs(const Graph& g, const std::vector<int>& order, size_t k,
               const std::vector<std::uint64_t>& masks,
               std::vector<std::uint64_t>& used_by, std::vector<int>& chosen) {
    if (k == order.size()) return true;
    int v = order[k];
    std::uint64_t avail = masks[v] & ~used_by[v];
    while (avail) {
        int c = __builtin_ctzll(avail);
        avail &= avail - 1;
        chosen[v] = c;
        std::vector<std::pair<int, std::uint64_t>> touched;
        for (int w : g.neighbors(v))
            if (!(used_by[w] & (std::uint64_t{1} << c))) {
                touched.push_back({w, used_by[w]});
                used_by[w] |= std::uint64_t{1} << c;
            }
        if (color_dfs(g, order, k + 1, masks, used_by, chosen)) return true;
        for (auto& [w, old] : touched) used_by[w] = old;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> exists_proper_coloring(
    const Graph& g, const ListAssignment& lists) {
    if (g.n() > guards().max_coloring_vertices)
        throw_guard("list coloring limited to n <= " +
                    std::to_string(guards().max_coloring_vertices) + " (got n = " +
                    std::to_string(g.n()) + ")");
    if (static_cast<int>(lists.size()) != g.n())
        throw_invalid("list assignment length must equal vertex count");

    // Dense color ids.
    std::map<int, int> id;
    for (const auto& l : lists)
        for (int c : l) id.emplace(c, 0);
    if (id.size() > 63) throw_guard("list coloring limited to 63 distinct colors");
    int next = 0;
    for (auto& [c, i] : id) i = next++;

    std::vector<std::uint64_t> masks(g.n(), 0);
    for (int v = 0; v < g.n(); ++v) {
        if (lists[v].empty()) return std::nullopt;
        for (int c : lists[v]) masks[v] |= std::uint64_t{1} << id[c];
    }

    auto order = coloring_order(g);
    std::vector<std::uint64_t> used_by(g.n(), 0);
    std::vector<int> chosen(g.n(), -1);
    if (!color_dfs(g, order, 0, masks, used_by, chosen)) return std::nullopt;

    std::vector<int> dense_to_color(id.size());
    for (auto& [c, i] : id) dense_to_color[i] = c;
    std::vector<int> out(g.n());
    for (int v = 0; v < g.n(); ++v) out[v] = dense_to_color[chosen[v]];
    return out;
}

namespace {

// Canonical list-assignment enumeration: colors are introduced in
// first-use order, so each intersection pattern appears exactly once.
struct ChoosableSearch {
    const Graph& g;
    const std::vector<int>& f;
    int n;
    std::vector<std::uint64_t> lists;  // masks, bit c = color c+1
    std::vector<std::uint64_t> nbr_union;
    std::optional<ListAssignment> bad;

    ChoosableSearch(const Graph& gr, const std::vector<int>& fv)
        : g(gr), f(fv), n(gr.n()), lists(gr.n(), 0) {}

    bool colorable_prefix(int upto) {
        // Exhaustive check on the already-assigned prefix.
        std::vector<int> chosen(upto + 1, -1);
        return prefix_dfs(0, upto, chosen);
    }

    bool prefix_dfs(int v, int upto, std::vector<int>& chosen) {
        if (v > upto) return true;
        std::uint64_t avail = lists[v];
        for (int w : g.neighbors(v))
            if (w < v && chosen[w] >= 0) avail &= ~(std::uint64_t{1} << chosen[w]);
        while (avail) {
            int c = __builtin_ctzll(avail);
            avail &= avail - 1;
            chosen[v] = c;
            if (prefix_dfs(v + 1, upto, chosen)) return true;
        }
        chosen[v] = -1;
        return false;
    }

    ListAssignment materialize() const {
        ListAssignment out(n);
        for (int v = 0; v < n; ++v)
            for (int c = 0; c < 64; ++c)
                if (lists[v] & (std::uint64_t{1} << c)) out[v].push_back(c + 1);
        return out;
    }

    // t = number of colors used so far.
    bool search(int v, int t) {
        if (v == n) {
            if (!colorable_prefix(n - 1)) {
                bad = materialize();
                return true;
            }
            return false;
        }
        int fv = f[v];
        // Choose s reused colors and fv - s fresh ones, largest s first so
        // all-equal assignments come up first.
        for (int s = std::min(fv, t); s >= 0; --s) {
            int fresh = fv - s;
            std::uint64_t fresh_mask = ((std::uint64_t{1} << fresh) - 1) << t;
            // Subsets of `used` of size s, lexicographic.
            std::vector<int> idx(s);
            for (int i = 0; i < s; ++i) idx[i] = i;
            for (;;) {
                std::uint64_t mask = fresh_mask;
                for (int i : idx) mask |= std::uint64_t{1} << i;
                lists[v] = mask;
                if (search(v + 1, t + fresh)) return true;
                // next combination
                int i = s - 1;
                while (i >= 0 && idx[i] == t - s + i) --i;
                if (i < 0) break;
                ++idx[i];
                for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
            }
            if (s == 0) break;  // only one empty combination
        }
        lists[v] = 0;
        return false;
    }
};

}  // namespace

std::optional<ListAssignment> is_f_choosable(const Graph& g,
                                             const std::vector<int>& f) {
    if (static_cast<int>(f.size()) != g.n())
        throw_invalid("bound vector length must equal vertex count");
    if (g.n() > guards().max_choosable_vertices)
        throw_guard("choosability limited to n <= " +
                    std::to_string(guards().max_choosable_vertices) + " (got n = " +
                    std::to_string(g.n()) + ")");

    // A vertex demanding a nonpositive list size is uncolorable outright.
    for (int v = 0; v < g.n(); ++v)
        if (f[v] <= 0) {
            ListAssignment bad(g.n());
            int c = 1;
            for (int w = 0; w < g.n(); ++w)
                if (w != v)
                    for (int i = 0; i < f[w]; ++i) bad[w].push_back(c++);
            return bad;
        }

    long total = 0;
    for (int v = 0; v < g.n(); ++v) total += f[v];
    if (total > guards().max_choosable_palette)
        throw_guard("choosability palette limited to sum f <= " +
                    std::to_string(guards().max_choosable_palette) + " (got " +
                    std::to_string(total) + ")");

    ChoosableSearch search(g, f);
    search.search(0, 0);
    return search.bad;
}

namespace {

struct PaintSolver {
    const Graph& g;
    int n;
    std::vector<std::uint32_t> adj;  // adjacency masks
    std::unordered_map<std::uint64_t, bool> memo;
    std::vector<std::vector<std::uint32_t>> mis_cache;  // per S mask

    PaintSolver(const Graph& gr) : g(gr), n(gr.n()), adj(gr.n(), 0) {
        for (auto [u, v] : g.edges()) {
            adj[u] |= std::uint32_t{1} << v;
            adj[v] |= std::uint32_t{1} << u;
        }
        mis_cache.resize(std::size_t{1} << n);
    }

    // Maximal independent subsets of G[S].
    const std::vector<std::uint32_t>& maximal_independent(std::uint32_t s) {
        auto& out = mis_cache[s];
        if (!out.empty() || s == 0) return out;
        for (std::uint32_t sub = s;; sub = (sub - 1) & s) {
            bool indep = true;
            for (std::uint32_t t = sub; t && indep; t &= t - 1) {
                int v = __builtin_ctz(t);
                if (adj[v] & sub) indep = false;
            }
            if (indep) {
                // Maximal within G[S]: no vertex of S - sub independent of sub.
                std::uint32_t candidates = s & ~sub;
                bool maximal = true;
                for (std::uint32_t t = candidates; t && maximal; t &= t - 1) {
                    int v = __builtin_ctz(t);
                    if (!(adj[v] & sub)) maximal = false;
                }
                if (maximal) out.push_back(sub);
            }
            if (sub == 0) break;
        }
        return out;
    }

    std::uint64_t key(std::uint32_t mask, const std::vector<int>& f) const {
        std::uint64_t k = mask;
        for (std::uint32_t t = mask; t; t &= t - 1) {
            int v = __builtin_ctz(t);
            k = (k << 4) | static_cast<unsigned>(f[v] & 15);
        }
        return k;
    }

    bool paintable(std::uint32_t mask, std::vector<int>& f) {
        if (mask == 0) return true;
        for (std::uint32_t t = mask; t; t &= t - 1)
            if (f[__builtin_ctz(t)] <= 0) return false;

        // Component split.
        std::uint32_t comp = 0;
        {
            std::uint32_t start = mask & (~mask + 1);
            comp = start;
            for (;;) {
                std::uint32_t grown = comp;
                for (std::uint32_t t = comp; t; t &= t - 1)
                    grown |= adj[__builtin_ctz(t)] & mask;
                if (grown == comp) break;
                comp = grown;
            }
        }
        if (comp != mask)
            return paintable(comp, f) && paintable(mask & ~comp, f);

        std::uint64_t k = key(mask, f);
        auto it = memo.find(k);
        if (it != memo.end()) return it->second;

        bool ok = true;
        for (std::uint32_t s = mask; s && ok; s = (s - 1) & mask) {
            bool answered = false;
            for (std::uint32_t i : maximal_independent(s)) {
                // f' drops by one on S - I.
                std::vector<int> fs = f;
                for (std::uint32_t t = s & ~i; t; t &= t - 1)
                    --fs[__builtin_ctz(t)];
                if (paintable(mask & ~i, fs)) {
                    answered = true;
                    break;
                }
            }
            if (!answered) ok = false;
        }
        memo[k] = ok;
        return ok;
    }
};

}  // namespace

bool is_f_paintable(const Graph& g, const std::vector<int>& f) {
    if (static_cast<int>(f.size()) != g.n())
        throw_invalid("bound vector length must equal vertex count");
    if (g.n() > guards().max_paintable_vertices)
        throw_guard("paintability limited to n <= " +
                    std::to_string(guards().max_paintable_vertices) + " (got n = " +
                    std::to_string(g.n()) + ")");
    if (g.n() == 0) return true;
    for (int v = 0; v < g.n(); ++v)
        if (f[v] > 15) throw_guard("paintability limited to f(v) <= 15");
    PaintSolver solver(g);
    std::vector<int> fv = f;
    return solver.paintable((std::uint32_t{1} << g.n()) - 1, fv);
}

ListAssignment bad_lists_for_d(const LabeledPair& p, const DMembership& m) {
    if (!m.member())
        throw_invalid("bad lists require a member verdict");
    const Graph& g = p.graph;
    int x = p.hx_vertex();
    ListAssignment lists(g.n());

    if (m.verdict == DVerdict::MoserSpindle) {
        for (int v = 0; v < g.n(); ++v) lists[v] = {1, 2, 3};
    } else {
        if (!m.t_witness) throw_invalid("T-graph verdict lacks its witness");
        std::vector<bool> on_triangle(g.n(), false);
        for (int i = 0; i < 3; ++i) on_triangle[m.t_witness->triangle[i]] = true;
        for (int v = 0; v < g.n(); ++v)
            lists[v] = on_triangle[v] ? std::vector<int>{1, 2, 3}
                                      : std::vector<int>{1, 2};
    }

    for (int v = 0; v < g.n(); ++v) {
        int want = g.degree(v) - (v == x ? 1 : 0);
        if (static_cast<int>(lists[v].size()) != want)
            throw_claim("bad list size contract violated at vertex " +
                        std::to_string(v));
    }
    if (exists_proper_coloring(g, lists))
        throw_claim("seed-family bad lists unexpectedly colorable");
    return lists;
}

ListAssignment bad_lists_gallai(const Graph& g) {
    if (!is_gallai_tree(g))
        throw_invalid("bad lists require a connected Gallai tree");
    auto dec = blocks(g);
    ListAssignment lists(g.n());
    int next_color = 1;
    for (const auto& blk : dec.blocks) {
        // Blocks of a Gallai tree are regular; the palette size is the
        // within-block degree.
        int db = 0;
        if (blk.size() >= 2) {
            int v = blk.front();
            for (int w : g.neighbors(v))
                if (std::binary_search(blk.begin(), blk.end(), w)) ++db;
        }
        std::vector<int> palette;
        for (int i = 0; i < db; ++i) palette.push_back(next_color++);
        for (int v : blk)
            lists[v].insert(lists[v].end(), palette.begin(), palette.end());
    }
    for (auto& l : lists) std::sort(l.begin(), l.end());
    for (int v = 0; v < g.n(); ++v)
        if (static_cast<int>(lists[v].size()) != g.degree(v))
            throw_claim("gallai bad list size contract violated at vertex " +
                        std::to_string(v));
    if (g.n() > 0 && exists_proper_coloring(g, lists))
        throw_claim("gallai bad lists unexpectedly colorable");
    return lists;
}

EquivalenceReport equivalence_check_hx(const LabeledPair& p) {
    if (!p.is_hx()) throw_invalid("equivalence check requires an h_x labeling");
    EquivalenceReport rep;
    auto f = pair_bound(p);
    rep.at = is_pair_at(p).has_value();
    auto bad = is_f_choosable(p.graph, f);
    rep.choosable = !bad.has_value();
    rep.bad_lists = std::move(bad);
    rep.paintable = is_f_paintable(p.graph, f);
    return rep;
}

}  // namespace atg
