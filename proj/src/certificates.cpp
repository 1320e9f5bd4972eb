#include "certificates.hpp"

#include <string>

#include "error.hpp"
#include "graph6.hpp"

namespace atg {

using nlohmann::json;

json orientation_certificate_json(const LabeledPair& p, const Orientation& d,
                                  const EulerCounts& counts,
                                  const json* derivation) {
    json out;
    out["type"] = "orientation";
    out["graph6"] = emit_graph6(p.graph);
    out["labels"] = p.labels;
    out["orientation"] = d.direction_bits();
    out["EE"] = counts.even;
    out["EO"] = counts.odd;
    if (derivation) out["derivation"] = *derivation;
    return out;
}

json bad_lists_certificate_json(const LabeledPair& p,
                                const ListAssignment& lists) {
    json out;
    out["type"] = "bad_lists";
    out["graph6"] = emit_graph6(p.graph);
    out["labels"] = p.labels;
    out["lists"] = lists;
    return out;
}

namespace {

LabeledPair pair_from_cert(const json& cert) {
    if (!cert.contains("graph6") || !cert["graph6"].is_string())
        throw_parse("certificate missing graph6 field");
    Graph g = parse_graph6(cert["graph6"].get<std::string>());
    std::vector<int> labels(g.n(), 0);
    if (cert.contains("labels")) {
        labels = cert["labels"].get<std::vector<int>>();
        if (static_cast<int>(labels.size()) != g.n())
            throw_parse("certificate labels length mismatch");
    }
    return LabeledPair(std::move(g), std::move(labels));
}

VerifyResult fail(std::string why) {
    VerifyResult r;
    r.ok = false;
    r.diagnosis = std::move(why);
    return r;
}

}  // namespace

VerifyResult verify_bad_lists(const json& cert) {
    LabeledPair p = pair_from_cert(cert);
    if (!cert.contains("lists")) throw_parse("bad-list certificate missing lists");
    ListAssignment lists = cert["lists"].get<ListAssignment>();
    if (static_cast<int>(lists.size()) != p.graph.n())
        throw_parse("bad-list certificate lists length mismatch");

    for (int v = 0; v < p.graph.n(); ++v) {
        int want = p.graph.degree(v) - p.labels[v];
        if (static_cast<int>(lists[v].size()) != want)
            return fail("list size at vertex " + std::to_string(v) + " is " +
                        std::to_string(lists[v].size()) + ", contract demands " +
                        std::to_string(want));
    }
    auto coloring = exists_proper_coloring(p.graph, lists);
    if (coloring) {
        VerifyResult r = fail("lists admit a proper coloring");
        r.details["coloring"] = *coloring;
        return r;
    }
    VerifyResult r;
    r.ok = true;
    r.diagnosis = "uncolorable; list sizes match d - h";
    return r;
}

VerifyResult verify_certificate(const json& cert) {
    std::string type = cert.value("type", "orientation");
    if (type == "bad_lists") return verify_bad_lists(cert);
    if (type != "orientation") throw_parse("unknown certificate type: " + type);

    LabeledPair p = pair_from_cert(cert);
    if (!cert.contains("orientation"))
        throw_parse("orientation certificate missing orientation bits");
    Orientation d =
        orientation_from_bits(p.graph, cert["orientation"].get<std::string>());

    EulerCounts counts = eulerian_counts(d);
    VerifyResult r;
    r.details["EE"] = counts.even;
    r.details["EO"] = counts.odd;
    if (cert.contains("EE") && cert["EE"].get<std::int64_t>() != counts.even)
        return fail("claimed EE = " + cert["EE"].dump() + " but recount gives " +
                    std::to_string(counts.even));
    if (cert.contains("EO") && cert["EO"].get<std::int64_t>() != counts.odd)
        return fail("claimed EO = " + cert["EO"].dump() + " but recount gives " +
                    std::to_string(counts.odd));
    if (counts.even == counts.odd)
        return fail("orientation is not Alon-Tarsi: EE = EO = " +
                    std::to_string(counts.even));
    std::vector<int> f(p.graph.n());
    for (int v = 0; v < p.graph.n(); ++v)
        f[v] = p.graph.degree(v) - p.labels[v];
    if (!meets_outdegree_bounds(d, f)) {
        auto out = d.out_degrees();
        for (int v = 0; v < p.graph.n(); ++v)
            if (out[v] > f[v] - 1)
                return fail("out-degree bound violated at vertex " +
                            std::to_string(v) + ": d+ = " + std::to_string(out[v]) +
                            " > " + std::to_string(f[v] - 1));
    }
    r.ok = true;
    r.diagnosis = "EE != EO and all out-degree bounds hold";
    r.details["EE"] = counts.even;
    r.details["EO"] = counts.odd;
    return r;
}

}  // namespace atg
