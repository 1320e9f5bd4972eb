#ifndef ATG_SWEEPS_HPP
#define ATG_SWEEPS_HPP

#include <json.hpp>
#include <string>
#include <vector>

#include "graph.hpp"

namespace atg {

struct SweepOptions {
    int n_max = 5;
    int jobs = 1;
    std::string checkpoint_path;          // empty: no checkpointing
    std::vector<Graph> explicit_graphs;   // overrides enumeration when set
};

// A finished sweep: the JSON report (parameters echoed, counts, mismatch or
// catalog list, wall time) plus the pass/fail verdict for exit codes.
struct SweepOutcome {
    nlohmann::json report;
    bool ok = false;
};

// scope: degree_at | main_lemma | thm_1connected | hx_equivalence |
// lemma_suite.  ok iff the mismatch list is empty.
SweepOutcome run_verify_sweep(const std::string& scope, const SweepOptions& opt);

// mode: at | choosable | paintable.  Enumerates graphs under the given
// constraints and catalogs every marked pair {x,y} for which the chosen
// property fails, with counts under three aggregations.
SweepOutcome run_search_two_marked(const std::string& mode,
                                   const SweepOptions& opt, bool two_connected,
                                   bool unstretched);

}  // namespace atg

#endif
