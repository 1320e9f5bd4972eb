#ifndef ATG_WITNESS_HPP
#define ATG_WITNESS_HPP

#include <json.hpp>
#include <optional>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "orientation.hpp"

namespace atg {

// A constructive AT certificate: an orientation of the whole graph obtained
// by extending builder orientations of induced pattern subgraphs (and, at a
// cutvertex, composing per-lobe orientations).  All directed cycles live in
// the pattern subgraphs, so the recount stays honest.
struct AtCertificate {
    Orientation orientation;
    EulerCounts counts;
    nlohmann::json derivation;  // pattern kinds and subgraph vertex sets
};

// Constructive certificate for an AT pair (h_x labeling, connected graph);
// errors when the pair is not AT.  The search mirrors the two-connected
// classification proof: smallest induced pattern containing x first (theta,
// mixed-parity T, T-plus, added-path, closed-twin), falling back to
// degree-AT certificates in G - x and cutvertex composition.
AtCertificate find_at_witness_subgraph(const LabeledPair& p);

// Induced even cycle with at most one chord inside the given vertex set,
// consistently oriented (EE - EO is 2 without a chord, 2 +/- 1 with one).
struct EvenCycleCert {
    std::vector<int> vertices;
    std::vector<std::pair<int, int>> arcs;
};

std::optional<EvenCycleCert> find_even_cycle_cert(const Graph& g,
                                                  const std::vector<int>& region);

// Pattern certificate inside one 2-connected block containing x with
// d_B(x) >= 3 and (B, h_x) AT by the Main Lemma.
struct PatternCert {
    std::string kind;  // theta | t_mixed | t_plus | added_path | euler_lemma
    std::vector<int> vertices;
    std::vector<std::pair<int, int>> arcs;
};

std::optional<PatternCert> search_pattern_in_block(const Graph& g,
                                                   const std::vector<int>& block,
                                                   int x);

// Orients every edge of g[region] not inside the seed set away from the
// seed (breadth-first layers, same-layer edges from smaller to larger
// index).  Every region vertex outside the seed ends with an in-arc.
std::vector<std::pair<int, int>> away_extension_arcs(
    const Graph& g, const std::vector<int>& region, const std::vector<int>& seed);

// Acyclic orientation of g[region] rooted at `root`: arcs point away from
// the root, so every other vertex has an in-arc and EE - EO = 1.
std::vector<std::pair<int, int>> acyclic_arcs(const Graph& g,
                                              const std::vector<int>& region,
                                              int root);

}  // namespace atg

#endif
