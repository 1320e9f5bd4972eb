#include "sweeps.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <map>
#include <mutex>
#include <random>
#include <thread>

#include "atsolver.hpp"
#include "builders.hpp"
#include "canonical.hpp"
#include "classify.hpp"
#include "coloring.hpp"
#include "config.hpp"
#include "error.hpp"
#include "graph6.hpp"
#include "patterns.hpp"
#include "seeds.hpp"

namespace atg {

using nlohmann::json;

namespace {

json guards_json() {
    const Guards& g = guards();
    json out;
    out["max_search_edges"] = g.max_search_edges;
    out["max_count_edges"] = g.max_count_edges;
    out["max_coeff_edges"] = g.max_coeff_edges;
    out["max_enumerate_vertices"] = g.max_enumerate_vertices;
    out["max_choosable_vertices"] = g.max_choosable_vertices;
    out["max_choosable_palette"] = g.max_choosable_palette;
    out["max_paintable_vertices"] = g.max_paintable_vertices;
    return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

// Per-graph unit of work.  Tasks run in index order per worker chunk; the
// merge is by index, so report content does not depend on the job count.
struct GraphTask {
    int n = 0;
    int index = 0;  // class index within its level
    Graph graph;
};

std::vector<GraphTask> collect_tasks(const SweepOptions& opt, int n_min,
                                     EnumerateFilter filter) {
    std::vector<GraphTask> tasks;
    if (!opt.explicit_graphs.empty()) {
        int i = 0;
        for (const Graph& g : opt.explicit_graphs)
            tasks.push_back({g.n(), i++, g});
        return tasks;
    }
    for (int n = n_min; n <= opt.n_max; ++n) {
        const auto& classes = enumerate_graphs(n, filter);
        for (size_t i = 0; i < classes.size(); ++i)
            tasks.push_back({n, static_cast<int>(i), classes[i]});
    }
    return tasks;
}

// Chunked checkpointing: per finished chunk of graph tasks the per-chunk
// result JSON is stored; a resumed run skips completed chunks.
struct Checkpoint {
    std::string path;
    json data;

    explicit Checkpoint(const std::string& p, const json& params) : path(p) {
        if (path.empty()) return;
        std::ifstream in(path);
        if (in) {
            try {
                in >> data;
            } catch (...) {
                data = json();
            }
        }
        if (!data.is_object() || data.value("parameters", json()) != params) {
            data = json::object();
            data["parameters"] = params;
            data["chunks"] = json::object();
        }
    }

    bool has(const std::string& key) const {
        return !path.empty() && data.contains("chunks") &&
               data["chunks"].contains(key);
    }
    json get(const std::string& key) const { return data["chunks"][key]; }
    void put(const std::string& key, const json& chunk) {
        if (path.empty()) return;
        data["chunks"][key] = chunk;
        std::ofstream out(path);
        out << data.dump() << "\n";
    }
};

constexpr int kChunkSize = 32;

// Runs `eval` over every task, chunk by chunk, optionally in parallel, and
// merges chunk JSONs in deterministic order.  eval returns a JSON object
// with "mismatches" (array) and "counts" (object of integer counters).
template <typename Eval>
json run_chunked(const std::vector<GraphTask>& tasks, const json& params,
                 const SweepOptions& opt, Eval eval) {
    Checkpoint ckpt(opt.checkpoint_path, params);
    struct Chunk {
        std::string key;
        size_t begin, end;
        json result;
        bool from_checkpoint = false;
    };
    std::vector<Chunk> chunks;
    for (size_t b = 0; b < tasks.size(); b += kChunkSize) {
        size_t e = std::min(tasks.size(), b + kChunkSize);
        std::string key = std::to_string(tasks[b].n) + ":" +
                          std::to_string(tasks[b].index) + "-" +
                          std::to_string(e - b);
        chunks.push_back({key, b, e, json(), false});
    }
    for (auto& c : chunks)
        if (ckpt.has(c.key)) {
            c.result = ckpt.get(c.key);
            c.from_checkpoint = true;
        }

    std::atomic<size_t> next{0};
    std::mutex ckpt_mu;
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= chunks.size()) return;
            auto& c = chunks[i];
            if (c.from_checkpoint) continue;
            json mismatches = json::array();
            std::map<std::string, long> counts;
            for (size_t t = c.begin; t < c.end; ++t)
                eval(tasks[t], mismatches, counts);
            c.result["mismatches"] = std::move(mismatches);
            c.result["counts"] = counts;
            std::lock_guard<std::mutex> lock(ckpt_mu);
            ckpt.put(c.key, c.result);
        }
    };
    int jobs = std::max(1, opt.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    json mismatches = json::array();
    std::map<std::string, long> counts;
    bool resumed = false;
    for (const auto& c : chunks) {
        for (const auto& m : c.result["mismatches"]) mismatches.push_back(m);
        for (auto it = c.result["counts"].begin(); it != c.result["counts"].end();
             ++it)
            counts[it.key()] += it.value().template get<long>();
        resumed = resumed || c.from_checkpoint;
    }
    json out;
    out["mismatches"] = std::move(mismatches);
    out["counts"] = counts;
    out["resumed_from_checkpoint"] = resumed;
    return out;
}

json base_params(const std::string& scope, const SweepOptions& opt) {
    json params;
    params["scope"] = scope;
    params["n_max"] = opt.n_max;
    params["guards"] = guards_json();
    return params;
}

SweepOutcome finish(const std::string& scope, const SweepOptions& opt,
                    json params, json merged,
                    std::chrono::steady_clock::time_point t0) {
    SweepOutcome out;
    out.report["parameters"] = std::move(params);
    out.report["counts"] = merged["counts"];
    out.report["mismatches"] = merged["mismatches"];
    out.report["resumed_from_checkpoint"] = merged["resumed_from_checkpoint"];
    out.report["wall_time_s"] = seconds_since(t0);
    out.ok = out.report["mismatches"].empty();
    (void)scope;
    (void)opt;
    return out;
}

// ---- scope: degree_at ----------------------------------------------------

SweepOutcome sweep_degree_at(const SweepOptions& opt) {
    auto t0 = std::chrono::steady_clock::now();
    json params = base_params("degree_at", opt);
    auto tasks = collect_tasks(opt, 1, EnumerateFilter::Connected);

    auto eval = [](const GraphTask& task, json& mismatches,
                   std::map<std::string, long>& counts) {
        const Graph& g = task.graph;
        auto cls = classify_degree_at(g);
        bool oracle = is_f_at(g, g.degrees()).has_value();
        ++counts["graphs"];
        ++counts["n" + std::to_string(task.n) + "_classes"];
        ++counts[cls.at ? "degree_at" : "not_degree_at"];
        ++counts["case_" + to_string(cls.tag)];
        if (cls.at != oracle) {
            json m;
            m["graph6"] = emit_graph6(g);
            m["classifier"] = cls.at;
            m["oracle"] = oracle;
            mismatches.push_back(m);
        }
    };
    auto merged = run_chunked(tasks, params, opt, eval);
    return finish("degree_at", opt, params, merged, t0);
}

// ---- scopes: main_lemma / thm_1connected / hx_equivalence ----------------

// The oracle verdict is computed once per orbit of (graph, x) under
// isomorphism (signature: colored canonical form); the classifier runs for
// every x, so labeling-dependent classifier bugs still surface.
struct OrbitOracle {
    std::map<std::string, bool> memo;
    template <typename Fn>
    bool get(const LabeledPair& p, Fn compute) {
        std::string sig = canonical_form_pair(p);
        auto it = memo.find(sig);
        if (it != memo.end()) return it->second;
        bool v = compute(p);
        memo.emplace(std::move(sig), v);
        return v;
    }
};

SweepOutcome sweep_main_lemma(const SweepOptions& opt) {
    auto t0 = std::chrono::steady_clock::now();
    json params = base_params("main_lemma", opt);
    auto tasks = collect_tasks(opt, 3, EnumerateFilter::TwoConnected);

    auto eval = [](const GraphTask& task, json& mismatches,
                   std::map<std::string, long>& counts) {
        const Graph& g = task.graph;
        OrbitOracle oracle;
        ++counts["graphs"];
        for (int x = 0; x < g.n(); ++x) {
            LabeledPair p = make_hx(g, x);
            auto cls = classify_two_connected(p);
            bool at = oracle.get(p, [](const LabeledPair& q) {
                return is_pair_at(q).has_value();
            });
            ++counts["pairs"];
            ++counts[at ? "at" : "not_at"];
            ++counts["case_" + to_string(cls.tag)];
            if (cls.at != at) {
                json m;
                m["graph6"] = emit_graph6(g);
                m["x"] = x;
                m["classifier"] = cls.at;
                m["oracle"] = at;
                m["case"] = to_string(cls.tag);
                mismatches.push_back(m);
            }
        }
    };
    auto merged = run_chunked(tasks, params, opt, eval);
    return finish("main_lemma", opt, params, merged, t0);
}

SweepOutcome sweep_thm_1connected(const SweepOptions& opt) {
    auto t0 = std::chrono::steady_clock::now();
    json params = base_params("thm_1connected", opt);
    auto tasks = collect_tasks(opt, 1, EnumerateFilter::Connected);

    auto eval = [](const GraphTask& task, json& mismatches,
                   std::map<std::string, long>& counts) {
        const Graph& g = task.graph;
        OrbitOracle oracle;
        ++counts["graphs"];
        for (int x = 0; x < g.n(); ++x) {
            LabeledPair p = make_hx(g, x);
            auto cls = classify_connected(p);
            bool at = oracle.get(p, [](const LabeledPair& q) {
                return is_pair_at(q).has_value();
            });
            ++counts["pairs"];
            ++counts[at ? "at" : "not_at"];
            ++counts["case_" + to_string(cls.tag)];
            if (cls.at != at) {
                json m;
                m["graph6"] = emit_graph6(g);
                m["x"] = x;
                m["classifier"] = cls.at;
                m["oracle"] = at;
                m["case"] = to_string(cls.tag);
                mismatches.push_back(m);
            }
        }
    };
    auto merged = run_chunked(tasks, params, opt, eval);
    return finish("thm_1connected", opt, params, merged, t0);
}

SweepOutcome sweep_hx_equivalence(const SweepOptions& opt) {
    auto t0 = std::chrono::steady_clock::now();
    json params = base_params("hx_equivalence", opt);
    // Choosability is evaluated through n = 5 (the exhaustive-list
    // enumeration is the binding cost); larger n compare AT against
    // paintability only.
    params["choosable_max_n"] = 5;
    auto tasks = collect_tasks(opt, 1, EnumerateFilter::Connected);

    auto eval = [](const GraphTask& task, json& mismatches,
                   std::map<std::string, long>& counts) {
        const Graph& g = task.graph;
        OrbitOracle at_oracle, paint_oracle, choose_oracle;
        ++counts["graphs"];
        for (int x = 0; x < g.n(); ++x) {
            LabeledPair p = make_hx(g, x);
            auto f = pair_bound(p);
            bool at = at_oracle.get(p, [](const LabeledPair& q) {
                return is_pair_at(q).has_value();
            });
            bool paintable = paint_oracle.get(p, [&](const LabeledPair& q) {
                return is_f_paintable(q.graph, pair_bound(q));
            });
            bool check_choosable = g.n() <= 5;
            bool choosable =
                check_choosable
                    ? choose_oracle.get(p,
                                        [&](const LabeledPair& q) {
                                            return !is_f_choosable(
                                                        q.graph, pair_bound(q))
                                                        .has_value();
                                        })
                    : at;
            (void)f;
            ++counts["pairs"];
            ++counts[at ? "at" : "not_at"];
            if (check_choosable) ++counts["choosable_checked"];
            bool agree = (at == paintable) && (!check_choosable || at == choosable);
            if (!agree) {
                json m;
                m["graph6"] = emit_graph6(g);
                m["x"] = x;
                m["at"] = at;
                m["paintable"] = paintable;
                if (check_choosable) m["choosable"] = choosable;
                mismatches.push_back(m);
            }
        }
    };
    auto merged = run_chunked(tasks, params, opt, eval);
    return finish("hx_equivalence", opt, params, merged, t0);
}

// ---- scope: lemma_suite ---------------------------------------------------

void suite_check(json& mismatches, std::map<std::string, long>& counts,
                 const std::string& what, bool ok, const json& detail) {
    ++counts["checks"];
    if (!ok) {
        json m;
        m["check"] = what;
        m["detail"] = detail;
        mismatches.push_back(m);
    }
}

SweepOutcome sweep_lemma_suite(const SweepOptions& opt) {
    auto t0 = std::chrono::steady_clock::now();
    json params = base_params("lemma_suite", opt);
    json mismatches = json::array();
    std::map<std::string, long> counts;

    // Lemma 7(i): exactly three spanning Eulerian subgraphs.
    {
        const int lens[][3] = {{1, 2, 2}, {1, 2, 3}, {1, 2, 4}, {1, 3, 3},
                               {2, 2, 2}, {2, 2, 3}, {2, 3, 3}, {3, 3, 3},
                               {2, 3, 4}, {1, 4, 4}, {2, 2, 5}, {3, 4, 5}};
        for (auto [a, b, c] : lens) {
            Graph g = make_theta_graph(a, b, c);
            auto w = detect_theta(g);
            bool ok = false;
            json detail = {{"lengths", {a, b, c}}};
            if (w) {
                for (int pole : {w->poles[0], w->poles[1]}) {
                    Orientation d = build_theta_orientation(g, *w, pole);
                    auto cnt = eulerian_counts(d);
                    std::vector<int> f(g.n());
                    for (int v = 0; v < g.n(); ++v)
                        f[v] = g.degree(v) - (v == pole ? 1 : 0);
                    ok = cnt.total() == 3 && cnt.diff() != 0 &&
                         meets_outdegree_bounds(d, f) && d.in_degree(pole) == 2;
                    detail["EE"] = cnt.even;
                    detail["EO"] = cnt.odd;
                    if (!ok) break;
                }
            }
            suite_check(mismatches, counts, "theta_total_3", ok, detail);
            ++counts["theta_instances"];
        }
    }

    // Lemma 7(ii): four subgraphs, 3 of one parity and 1 of the other.
    {
        const int lens[][3] = {{1, 1, 2}, {1, 2, 2}, {1, 2, 3}, {2, 2, 3},
                               {1, 1, 4}, {1, 4, 4}, {2, 3, 3}, {3, 3, 4},
                               {1, 2, 5}, {2, 4, 5}, {1, 3, 4}, {2, 2, 5}};
        for (auto [a, b, c] : lens) {
            Graph g = make_t_graph(a, b, c);
            auto w = detect_t_graph(g, 0);
            bool ok = false;
            json detail = {{"lengths", {a, b, c}}};
            if (w) {
                Orientation d = build_t_orientation(g, *w);
                auto cnt = eulerian_counts(d);
                std::vector<int> f(g.n());
                for (int v = 0; v < g.n(); ++v)
                    f[v] = g.degree(v) - (v == 0 ? 1 : 0);
                ok = cnt.total() == 4 && std::abs(cnt.diff()) == 2 &&
                     meets_outdegree_bounds(d, f);
                detail["EE"] = cnt.even;
                detail["EO"] = cnt.odd;
            }
            suite_check(mismatches, counts, "t_mixed_split_3_1", ok, detail);
            ++counts["t_mixed_instances"];
        }
    }

    // Lemma 4: EE = EO + 1 exactly.
    {
        struct Inst {
            Graph g;
            int x, z1, z2;
        };
        std::vector<Inst> insts;
        // K_t with an apex joined to a subset containing z1 but not z2.
        for (int t : {3, 4, 5}) {
            Graph kt = make_complete(t);
            for (int extra = 0; extra + 2 <= t; ++extra) {
                auto es = kt.edges();
                int x = t;
                es.emplace_back(0, x);
                for (int i = 0; i < extra; ++i) es.emplace_back(2 + i, x);
                insts.push_back({Graph::from_edges(t + 1, es), x, 0, 1});
            }
        }
        // Closed twins in K4 - e plus an apex.
        {
            Graph h = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
            auto es = h.edges();
            es.emplace_back(0, 4);
            insts.push_back({Graph::from_edges(5, es), 4, 0, 1});
            es.emplace_back(2, 4);
            insts.push_back({Graph::from_edges(5, es), 4, 0, 1});
        }
        for (const auto& inst : insts) {
            Orientation d =
                build_euler_lemma_orientation(inst.g, inst.x, inst.z1, inst.z2);
            auto cnt = eulerian_counts(d);
            json detail;
            detail["graph6"] = emit_graph6(inst.g);
            detail["EE"] = cnt.even;
            detail["EO"] = cnt.odd;
            bool ok = cnt.even == cnt.odd + 1 && d.out_degree(inst.x) <= 1;
            std::vector<int> f(inst.g.n());
            for (int v = 0; v < inst.g.n(); ++v)
                f[v] = v == inst.x ? 2 : inst.g.degree(v);
            ok = ok && meets_outdegree_bounds(d, f);
            suite_check(mismatches, counts, "euler_lemma_diff_1", ok, detail);
            ++counts["euler_lemma_instances"];
        }
    }

    // Lemma 8: |EE - EO| = 1.
    {
        const int lens[][3] = {{1, 1, 3}, {1, 3, 3}, {3, 3, 3}, {2, 2, 2},
                               {2, 2, 4}, {1, 1, 5}, {2, 4, 4}, {1, 3, 5},
                               {3, 3, 5}, {2, 2, 6}};
        for (auto [a, b, c] : lens) {
            Graph g = make_t_graph(a, b, c);
            auto w = detect_t_graph(g, 0);
            if (!w) continue;
            // Longest apex path hosts P.
            const auto& host = w->paths[2];
            for (int plen : {2, 3}) {
                for (auto [ia, ib] :
                     {std::pair{0, 1}, std::pair{0, (int)host.size() - 1},
                      std::pair{1, (int)host.size() - 1}}) {
                    if (ia == ib || ib >= (int)host.size()) continue;
                    Orientation d = build_added_path_orientation(
                        g, *w, {host[ia], host[ib]}, plen);
                    auto cnt = eulerian_counts(d);
                    std::vector<int> f(d.graph.n());
                    for (int v = 0; v < d.graph.n(); ++v)
                        f[v] = d.graph.degree(v) - (v == 0 ? 1 : 0);
                    bool ok = std::abs(cnt.diff()) == 1 &&
                              meets_outdegree_bounds(d, f);
                    json detail = {{"lengths", {a, b, c}},
                                   {"p", {host[ia], host[ib]}},
                                   {"p_prime_len", plen},
                                   {"EE", cnt.even},
                                   {"EO", cnt.odd}};
                    suite_check(mismatches, counts, "added_path_diff_1", ok,
                                detail);
                    ++counts["added_path_instances"];
                }
            }
        }
    }

    // Stretching Lemma, both implications, every labeled pair n <= 5 with
    // labels summing to <= 2, every edge.
    {
        int nmax = std::min(opt.n_max, 5);
        for (int n = 2; n <= nmax; ++n) {
            for (const Graph& g : enumerate_graphs(n, EnumerateFilter::All)) {
                if (g.m() == 0) continue;
                std::vector<std::vector<int>> labelings;
                labelings.push_back(std::vector<int>(n, 0));
                for (int x = 0; x < n; ++x) {
                    std::vector<int> h(n, 0);
                    h[x] = 1;
                    labelings.push_back(h);
                    h[x] = 2;
                    labelings.push_back(h);
                    for (int y = x + 1; y < n; ++y) {
                        std::vector<int> h2(n, 0);
                        h2[x] = 1;
                        h2[y] = 1;
                        labelings.push_back(h2);
                    }
                }
                for (const auto& h : labelings) {
                    LabeledPair p(g, h);
                    for (int e = 0; e < g.m(); ++e) {
                        auto rep = stretch_transfer_check(p, e);
                        ++counts["stretch_instances"];
                        if (!rep.ok()) {
                            json m;
                            m["check"] = "stretching_lemma";
                            m["graph6"] = emit_graph6(g);
                            m["labels"] = h;
                            m["edge"] = e;
                            m["base_at"] = rep.base_at;
                            m["minus_at"] = rep.minus_at;
                            m["stretched_at"] = rep.stretched_at;
                            mismatches.push_back(m);
                        }
                        ++counts["checks"];
                    }
                }
            }
        }
    }

    // Cutvertex composition on randomized glued instances with m <= 14.
    {
        std::mt19937 rng(20250809);
        int made = 0;
        while (made < 100) {
            auto pick = [&](int lo, int hi) {
                return lo + static_cast<int>(rng() % (hi - lo + 1));
            };
            int n1 = pick(2, 5), n2 = pick(2, 5);
            const auto& c1 = enumerate_graphs(n1, EnumerateFilter::Connected);
            const auto& c2 = enumerate_graphs(n2, EnumerateFilter::Connected);
            const Graph& g1 = c1[rng() % c1.size()];
            const Graph& g2 = c2[rng() % c2.size()];
            if (g1.m() + g2.m() > 14 || g1.m() == 0 || g2.m() == 0) continue;
            std::vector<std::uint8_t> d1(g1.m()), d2(g2.m());
            for (auto& b : d1) b = rng() & 1;
            for (auto& b : d2) b = rng() & 1;
            Orientation o1(g1, d1), o2(g2, d2);
            int x1 = pick(0, n1 - 1), x2 = pick(0, n2 - 1);
            ++made;
            ++counts["compose_instances"];
            ++counts["checks"];
            try {
                auto composed = compose_cutvertex(o1, o2, x1, x2);
                (void)composed;
            } catch (const Error& err) {
                json m;
                m["check"] = "cutvertex_composition";
                m["g1"] = emit_graph6(g1);
                m["g2"] = emit_graph6(g2);
                m["error"] = err.what();
                mismatches.push_back(m);
            }
        }
    }

    SweepOutcome out;
    out.report["parameters"] = params;
    out.report["counts"] = counts;
    out.report["mismatches"] = mismatches;
    out.report["wall_time_s"] = seconds_since(t0);
    out.ok = mismatches.empty();
    return out;
}

}  // namespace

SweepOutcome run_verify_sweep(const std::string& scope, const SweepOptions& opt) {
    if (scope == "degree_at") return sweep_degree_at(opt);
    if (scope == "main_lemma") return sweep_main_lemma(opt);
    if (scope == "thm_1connected") return sweep_thm_1connected(opt);
    if (scope == "hx_equivalence") return sweep_hx_equivalence(opt);
    if (scope == "lemma_suite") return sweep_lemma_suite(opt);
    throw_invalid("unknown verify scope: " + scope);
}

SweepOutcome run_search_two_marked(const std::string& mode,
                                   const SweepOptions& opt, bool two_connected,
                                   bool unstretched) {
    if (mode != "at" && mode != "choosable" && mode != "paintable")
        throw_invalid("unknown search mode: " + mode);
    if (opt.n_max > 7)
        throw_guard("two-marked search limited to n <= 7 (got n = " +
                    std::to_string(opt.n_max) + ")");
    auto t0 = std::chrono::steady_clock::now();
    json params = base_params("search_two_marked", opt);
    params["mode"] = mode;
    params["two_connected"] = two_connected;
    params["unstretched"] = unstretched;

    auto tasks = collect_tasks(
        opt, two_connected ? 3 : 2,
        two_connected ? EnumerateFilter::TwoConnected : EnumerateFilter::Connected);

    auto eval = [&](const GraphTask& task, json& exceptional,
                    std::map<std::string, long>& counts) {
        const Graph& g = task.graph;
        if (unstretched && !graph_is_unstretched(g)) return;
        ++counts["graphs_scanned"];
        std::map<std::string, std::vector<std::pair<int, int>>> orbits;
        for (int x = 0; x < g.n(); ++x)
            for (int y = x + 1; y < g.n(); ++y) {
                LabeledPair p = make_hxy(g, x, y);
                orbits[canonical_form_pair(p)].push_back({x, y});
            }
        bool graph_has_exceptional = false;
        for (const auto& [sig, pairs] : orbits) {
            auto [x, y] = pairs.front();
            LabeledPair p = make_hxy(g, x, y);
            auto f = pair_bound(p);
            bool holds;
            if (mode == "at")
                holds = is_pair_at(p).has_value();
            else if (mode == "paintable")
                holds = is_f_paintable(g, f);
            else
                holds = !is_f_choosable(g, f).has_value();
            ++counts["orbits_scanned"];
            if (!holds) {
                graph_has_exceptional = true;
                ++counts["exceptional_orbits"];
                counts["exceptional_pairs"] += static_cast<long>(pairs.size());
                json item;
                item["graph6"] = emit_graph6(g);
                item["n"] = g.n();
                item["pair"] = {x, y};
                item["orbit_pairs"] = pairs;
                exceptional.push_back(item);
            }
        }
        if (graph_has_exceptional) ++counts["exceptional_graphs"];
    };
    auto merged = run_chunked(tasks, params, opt, eval);

    SweepOutcome out;
    out.report["parameters"] = params;
    out.report["counts"] = merged["counts"];
    out.report["exceptional"] = merged["mismatches"];
    out.report["resumed_from_checkpoint"] = merged["resumed_from_checkpoint"];
    json aggr;
    aggr["graphs"] = merged["counts"].value("exceptional_graphs", 0);
    aggr["graph_pair_orbits"] = merged["counts"].value("exceptional_orbits", 0);
    aggr["raw_pairs"] = merged["counts"].value("exceptional_pairs", 0);
    out.report["aggregations"] = aggr;
    out.report["wall_time_s"] = seconds_since(t0);
    out.ok = true;
    return out;
}

}  // namespace atg
