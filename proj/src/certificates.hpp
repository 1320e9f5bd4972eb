#ifndef ATG_CERTIFICATES_HPP
#define ATG_CERTIFICATES_HPP

#include <json.hpp>
#include <optional>

#include "coloring.hpp"
#include "graph.hpp"
#include "orientation.hpp"

namespace atg {

// {"type":"orientation","graph6":...,"labels":[...],"orientation":"01...",
//  "EE":...,"EO":...}  plus an optional derivation blob.
nlohmann::json orientation_certificate_json(
    const LabeledPair& p, const Orientation& d, const EulerCounts& counts,
    const nlohmann::json* derivation = nullptr);

// {"type":"bad_lists","graph6":...,"labels":[...],"lists":[[...],...]}
nlohmann::json bad_lists_certificate_json(const LabeledPair& p,
                                          const ListAssignment& lists);

// Recomputes everything a certificate claims from scratch.  ok = false with
// a diagnosis on any mismatch; never throws on claim failures (only on
// malformed input).
struct VerifyResult {
    bool ok = false;
    std::string diagnosis;
    nlohmann::json details;
};

VerifyResult verify_certificate(const nlohmann::json& cert);
VerifyResult verify_bad_lists(const nlohmann::json& cert);

}  // namespace atg

#endif
