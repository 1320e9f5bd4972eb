// atgraph command line: classify marked graphs, run verification sweeps,
// search for exceptional two-marked pairs, and check certificate files.
// Exit codes: 0 ok, 1 mismatch/refuted, 2 usage, 3 guard refusal.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "atgraph.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

int exit_for(atg_status st) {
    switch (st) {
        case ATG_OK: return kExitOk;
        case ATG_ERR_GUARD: return kExitGuard;
        case ATG_ERR_CLAIM: return kExitRefuted;
        default: return kExitUsage;
    }
}

int report_error(const char* what, atg_status st) {
    std::fprintf(stderr, "atgraph: %s: %s\n", what, atg_last_error());
    return exit_for(st);
}

void emit(const std::string& json_text, const std::string& output_path) {
    if (output_path.empty()) {
        std::puts(json_text.c_str());
    } else {
        std::ofstream out(output_path);
        out << json_text << "\n";
    }
}

std::string take(char* s) {
    std::string out = s ? s : "";
    atg_str_free(s);
    return out;
}

struct GraphHandle {
    atg_graph* g = nullptr;
    ~GraphHandle() { atg_graph_free(g); }
};

int classify_one(const std::string& g6, int x, int y, bool certify, bool oracle,
                 std::string* out_json) {
    GraphHandle h;
    atg_status st = atg_graph_from_g6(g6.c_str(), &h.g);
    if (st != ATG_OK) return report_error("parse", st);
    char* json = nullptr;
    if (y >= 0) {
        st = atg_pair_at(h.g, x, y, &json);
    } else {
        int flags = (certify ? ATG_CLASSIFY_CERTIFY : 0) |
                    (oracle ? ATG_CLASSIFY_ORACLE : 0);
        st = atg_classify(h.g, x, flags, &json);
    }
    if (st != ATG_OK) return report_error("classify", st);
    *out_json = take(json);
    return kExitOk;
}

std::vector<std::string> read_graph6_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
            line.pop_back();
        if (!line.empty() && line[0] != '>') lines.push_back(line);
        else if (!line.empty() && line.rfind(">>graph6<<", 0) == 0)
            lines.push_back(line);
    }
    return lines;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Alon-Tarsi orientation toolkit for small graphs"};
    app.require_subcommand(1);

    // classify
    std::string cls_g6, cls_input, cls_output;
    int cls_x = 0, cls_y = -1;
    bool cls_certify = false, cls_oracle = false;
    auto* cls = app.add_subcommand(
        "classify", "Classify a marked graph: is (G,h_x) Alon-Tarsi?");
    cls->add_option("--g6", cls_g6, "graph6 text of the graph");
    cls->add_option("--input", cls_input, "file of graph6 lines");
    cls->add_option("--x", cls_x, "marked vertex")->required();
    cls->add_option("--y", cls_y,
                    "second marked vertex (oracle-only h_{x,y} verdict)");
    cls->add_flag("--certify", cls_certify,
                  "attach an orientation or bad-list certificate");
    cls->add_flag("--oracle", cls_oracle, "confirm the verdict by brute force");
    cls->add_option("--output", cls_output, "write JSON here instead of stdout");

    // verify
    std::string ver_scope, ver_output, ver_checkpoint;
    int ver_n = 5, ver_jobs = 1;
    auto* ver = app.add_subcommand("verify",
                                   "Exhaustive verification sweep of one scope");
    ver->add_option("--scope", ver_scope,
                    "degree_at | main_lemma | thm_1connected | hx_equivalence "
                    "| lemma_suite")
        ->required();
    ver->add_option("--n", ver_n, "max vertex count")->required();
    ver->add_option("--jobs", ver_jobs, "worker threads");
    ver->add_option("--checkpoint", ver_checkpoint, "checkpoint/resume file");
    ver->add_option("--output", ver_output, "write the report JSON here");

    // search
    std::string sea_mode = "at", sea_output, sea_checkpoint;
    int sea_n = 6, sea_jobs = 1;
    bool sea_two_connected = false, sea_unstretched = false;
    auto* sea = app.add_subcommand(
        "search", "Catalog two-marked pairs where a property fails");
    sea->add_option("--mode", sea_mode, "at | choosable | paintable");
    sea->add_option("--n", sea_n, "max vertex count")->required();
    sea->add_flag("--two-connected", sea_two_connected,
                  "restrict to 2-connected graphs");
    sea->add_flag("--unstretched", sea_unstretched,
                  "restrict to unstretched graphs");
    sea->add_option("--jobs", sea_jobs, "worker threads");
    sea->add_option("--checkpoint", sea_checkpoint, "checkpoint/resume file");
    sea->add_option("--output", sea_output, "write the catalog JSON here");

    // verify-certificate
    std::string cert_input, cert_output;
    auto* vc = app.add_subcommand("verify-certificate",
                                  "Re-check an orientation or bad-list "
                                  "certificate file from scratch");
    vc->add_option("--input", cert_input, "certificate JSON file")->required();
    vc->add_option("--output", cert_output, "write the diagnosis JSON here");

    // verify-lists
    std::string vl_input, vl_output;
    auto* vl = app.add_subcommand(
        "verify-lists", "Re-check an uncolorable list-assignment certificate");
    vl->add_option("--input", vl_input, "certificate JSON file")->required();
    vl->add_option("--output", vl_output, "write the diagnosis JSON here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*cls) {
            std::vector<std::string> inputs;
            if (!cls_g6.empty()) inputs.push_back(cls_g6);
            if (!cls_input.empty()) {
                auto lines = read_graph6_lines(cls_input);
                inputs.insert(inputs.end(), lines.begin(), lines.end());
            }
            if (inputs.empty()) {
                std::fprintf(stderr, "atgraph: classify needs --g6 or --input\n");
                return kExitUsage;
            }
            std::ostringstream all;
            for (const auto& g6 : inputs) {
                std::string one;
                int rc = classify_one(g6, cls_x, cls_y, cls_certify, cls_oracle,
                                      &one);
                if (rc != kExitOk) return rc;
                all << one << "\n";
            }
            std::string text = all.str();
            if (!text.empty() && text.back() == '\n') text.pop_back();
            emit(text, cls_output);
            return kExitOk;
        }

        if (*ver) {
            char* json = nullptr;
            int ok = 0;
            atg_status st = atg_verify_sweep(
                ver_scope.c_str(), ver_n, ver_jobs,
                ver_checkpoint.empty() ? nullptr : ver_checkpoint.c_str(), &json,
                &ok);
            if (st != ATG_OK) return report_error("verify", st);
            emit(take(json), ver_output);
            return ok ? kExitOk : kExitRefuted;
        }

        if (*sea) {
            char* json = nullptr;
            atg_status st = atg_search_two_marked(
                sea_mode.c_str(), sea_n, sea_two_connected ? 1 : 0,
                sea_unstretched ? 1 : 0, sea_jobs,
                sea_checkpoint.empty() ? nullptr : sea_checkpoint.c_str(), &json);
            if (st != ATG_OK) return report_error("search", st);
            emit(take(json), sea_output);
            return kExitOk;
        }

        if (*vc) {
            std::string cert = read_file(cert_input);
            char* json = nullptr;
            int ok = 0;
            atg_status st = atg_verify_certificate(cert.c_str(), &json, &ok);
            if (st != ATG_OK) return report_error("verify-certificate", st);
            emit(take(json), cert_output);
            return ok ? kExitOk : kExitRefuted;
        }

        if (*vl) {
            std::string cert = read_file(vl_input);
            char* json = nullptr;
            int ok = 0;
            atg_status st = atg_verify_lists(cert.c_str(), &json, &ok);
            if (st != ATG_OK) return report_error("verify-lists", st);
            emit(take(json), vl_output);
            return ok ? kExitOk : kExitRefuted;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "atgraph: %s\n", e.what());
        return kExitUsage;
    }
    return kExitUsage;
}
