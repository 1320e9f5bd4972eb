#include "../include/atgraph.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "atsolver.hpp"
#include "canonical.hpp"
#include "certificates.hpp"
#include "classify.hpp"
#include "coloring.hpp"
#include "error.hpp"
#include "graph6.hpp"
#include "sweeps.hpp"
#include "witness.hpp"

#if defined(__GNUC__)
#define ATG_EXPORT __attribute__((visibility("default")))
#else
#define ATG_EXPORT
#endif

using nlohmann::json;

struct atg_graph {
    atg::Graph g;
};

namespace {

thread_local std::string t_last_error;

atg_status status_of(const atg::Error& e) {
    switch (e.kind()) {
        case atg::ErrorKind::Parse: return ATG_ERR_PARSE;
        case atg::ErrorKind::Invalid: return ATG_ERR_INVALID;
        case atg::ErrorKind::Guard: return ATG_ERR_GUARD;
        case atg::ErrorKind::Claim: return ATG_ERR_CLAIM;
        case atg::ErrorKind::Internal: return ATG_ERR_INTERNAL;
    }
    return ATG_ERR_INTERNAL;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
atg_status guarded(Fn fn) {
    try {
        fn();
        return ATG_OK;
    } catch (const atg::Error& e) {
        t_last_error = e.what();
        return status_of(e);
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return ATG_ERR_INTERNAL;
    }
}

atg::LabeledPair pair_for(const atg::Graph& g, int x, int y) {
    if (x < 0 && y < 0) return atg::make_zero_labels(g);
    if (y < 0) return atg::make_hx(g, x);
    return atg::make_hxy(g, x, y);
}

}  // namespace

extern "C" {

ATG_EXPORT const char* atg_last_error(void) { return t_last_error.c_str(); }

ATG_EXPORT void atg_str_free(char* s) { std::free(s); }

ATG_EXPORT atg_status atg_graph_from_g6(const char* text, atg_graph** out) {
    if (!text || !out) {
        t_last_error = "null argument";
        return ATG_ERR_INVALID;
    }
    return guarded([&] {
        auto g = atg::parse_graph6(text);
        *out = new atg_graph{std::move(g)};
    });
}

ATG_EXPORT void atg_graph_free(atg_graph* g) { delete g; }

ATG_EXPORT int atg_graph_vertex_count(const atg_graph* g) {
    return g ? g->g.n() : -1;
}

ATG_EXPORT int atg_graph_edge_count(const atg_graph* g) {
    return g ? g->g.m() : -1;
}

ATG_EXPORT atg_status atg_graph_to_g6(const atg_graph* g, char** out) {
    if (!g || !out) {
        t_last_error = "null argument";
        return ATG_ERR_INVALID;
    }
    return guarded([&] { *out = dup_string(atg::emit_graph6(g->g)); });
}

ATG_EXPORT atg_status atg_graph_canonical_g6(const atg_graph* g, char** out) {
    if (!g || !out) {
        t_last_error = "null argument";
        return ATG_ERR_INVALID;
    }
    return guarded([&] { *out = dup_string(atg::canonical_form(g->g)); });
}

ATG_EXPORT atg_status atg_classify(const atg_graph* g, int x, int flags,
                                   char** json_out) {
    if (!g || !json_out) {
        t_last_error = "null argument";
        return ATG_ERR_INVALID;
    }
    return guarded([&] {
        atg::LabeledPair p = atg::make_hx(g->g, x);
        auto cls = atg::classify_connected(p);
        json out;
        out["graph6"] = atg::emit_graph6(g->g);
        out["x"] = x;
        out["at"] = cls.at;
        out["case"] = atg::to_string(cls.tag);
        out["witness"] = cls.witness;
        if (flags & ATG_CLASSIFY_ORACLE) {
            auto w = atg::is_pair_at(p);
            out["oracle"]["at"] = w.has_value();
            out["oracle"]["agrees"] = w.has_value() == cls.at;
        }
        if (flags & ATG_CLASSIFY_CERTIFY) {
            if (cls.at) {
                auto cert = atg::find_at_witness_subgraph(p);
                out["certificate"] = atg::orientation_certificate_json(
                    p, cert.orientation, cert.counts, &cert.derivation);
            } else {
                // Not-AT certificates: the uncolorable list assignment.
                if (cls.tag == atg::CaseTag::Conn1GallaiTree) {
                    auto lists = atg::bad_lists_gallai(g->g);
                    out["certificate"] =
                        atg::bad_lists_certificate_json(p, lists);
                } else if (g->g.two_connected()) {
                    auto mem = atg::membership_d(p);
                    if (mem.member()) {
                        auto lists = atg::bad_lists_for_d(p, mem);
                        out["certificate"] =
                            atg::bad_lists_certificate_json(p, lists);
                    }
                }
            }
        }
        *json_out = dup_string(out.dump());
    });
}

ATG_EXPORT atg_status atg_pair_at(const atg_graph* g, int x, int y,
                                  char** json_out) {
    if (!g || !json_out) {
        t_last_error = "null argument";
        return ATG_ERR_INVALID;
    }
    return guarded([&] {
        atg::LabeledPair p = pair_for(g->g, x, y);
        json out;
        out["graph6"] = atg::emit_graph6(g->g);
        out["labels"] = p.labels;
        out["degree_sum_infeasible"] =
            atg::degree_sum_infeasible(g->g, atg::pair_bound(p));
        auto w = atg::is_pair_at(p);
        out["at"] = w.has_value();
        if (w) {
            auto counts = atg::eulerian_counts(*w);
            out["certificate"] =
                atg::orientation_certificate_json(p, *w, counts);
        }
        *json_out = dup_string(out.dump());
    });
}

ATG_EXPORT atg_status atg_pair_choosable(const atg_graph* g, int x, int y,
                                         char** json_out) {
    if (!g || !json_out) {
        t_last_error = "null argument";
        return ATG_ERR_INVALID;
    }
    return guarded([&] {
        atg::LabeledPair p = pair_for(g->g, x, y);
        auto bad = atg::is_f_choosable(g->g, atg::pair_bound(p));
        json out;
        out["graph6"] = atg::emit_graph6(g->g);
        out["labels"] = p.labels;
        out["choosable"] = !bad.has_value();
        if (bad) out["bad_lists"] = atg::bad_lists_certificate_json(p, *bad);
        *json_out = dup_string(out.dump());
    });
}

ATG_EXPORT atg_status atg_pair_paintable(const atg_graph* g, int x, int y,
                                         char** json_out) {
    if (!g || !json_out) {
        t_last_error = "null argument";
        return ATG_ERR_INVALID;
    }
    return guarded([&] {
        atg::LabeledPair p = pair_for(g->g, x, y);
        json out;
        out["graph6"] = atg::emit_graph6(g->g);
        out["labels"] = p.labels;
        out["paintable"] = atg::is_f_paintable(g->g, atg::pair_bound(p));
        *json_out = dup_string(out.dump());
    });
}

ATG_EXPORT atg_status atg_verify_sweep(const char* scope, int n_max, int jobs,
                                       const char* checkpoint_path_or_null,
                                       char** json_out, int* ok_out) {
    if (!scope || !json_out || !ok_out) {
        t_last_error = "null argument";
        return ATG_ERR_INVALID;
    }
    return guarded([&] {
        atg::SweepOptions opt;
        opt.n_max = n_max;
        opt.jobs = jobs;
        if (checkpoint_path_or_null) opt.checkpoint_path = checkpoint_path_or_null;
        auto outcome = atg::run_verify_sweep(scope, opt);
        *json_out = dup_string(outcome.report.dump());
        *ok_out = outcome.ok ? 1 : 0;
    });
}

ATG_EXPORT atg_status atg_search_two_marked(const char* mode, int n_max,
                                            int two_connected, int unstretched,
                                            int jobs,
                                            const char* checkpoint_path_or_null,
                                            char** json_out) {
    if (!mode || !json_out) {
        t_last_error = "null argument";
        return ATG_ERR_INVALID;
    }
    return guarded([&] {
        atg::SweepOptions opt;
        opt.n_max = n_max;
        opt.jobs = jobs;
        if (checkpoint_path_or_null) opt.checkpoint_path = checkpoint_path_or_null;
        auto outcome =
            atg::run_search_two_marked(mode, opt, two_connected, unstretched);
        *json_out = dup_string(outcome.report.dump());
    });
}

ATG_EXPORT atg_status atg_verify_certificate(const char* cert_json,
                                             char** json_out, int* ok_out) {
    if (!cert_json || !json_out || !ok_out) {
        t_last_error = "null argument";
        return ATG_ERR_INVALID;
    }
    return guarded([&] {
        json cert = json::parse(cert_json, nullptr, false);
        if (cert.is_discarded()) atg::throw_parse("certificate is not valid JSON");
        auto res = atg::verify_certificate(cert);
        json out;
        out["ok"] = res.ok;
        out["diagnosis"] = res.diagnosis;
        out["details"] = res.details;
        *json_out = dup_string(out.dump());
        *ok_out = res.ok ? 1 : 0;
    });
}

ATG_EXPORT atg_status atg_verify_lists(const char* cert_json, char** json_out,
                                       int* ok_out) {
    if (!cert_json || !json_out || !ok_out) {
        t_last_error = "null argument";
        return ATG_ERR_INVALID;
    }
    return guarded([&] {
        json cert = json::parse(cert_json, nullptr, false);
        if (cert.is_discarded()) atg::throw_parse("certificate is not valid JSON");
        auto res = atg::verify_bad_lists(cert);
        json out;
        out["ok"] = res.ok;
        out["diagnosis"] = res.diagnosis;
        out["details"] = res.details;
        *json_out = dup_string(out.dump());
        *ok_out = res.ok ? 1 : 0;
    });
}

}  // extern "C"
