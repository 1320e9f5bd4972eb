#ifndef ATG_PATTERNS_HPP
#define ATG_PATTERNS_HPP

#include <optional>
#include <vector>

#include "graph.hpp"

namespace atg {

// Two degree-3 poles joined by three internally disjoint paths whose union
// is the whole graph.  paths[i] runs pole-to-pole inclusive.
struct ThetaWitness {
    int poles[2];
    std::vector<std::vector<int>> paths;

    std::vector<int> path_lengths() const {
        return {static_cast<int>(paths[0].size()) - 1,
                static_cast<int>(paths[1].size()) - 1,
                static_cast<int>(paths[2].size()) - 1};
    }
    bool is_pole(int v) const { return v == poles[0] || v == poles[1]; }
};

// K4 with the three apex edges subdivided zero or more times.  paths[i]
// runs apex-to-triangle[i] inclusive; every internal vertex has degree 2.
struct TGraphWitness {
    int apex;
    int triangle[3];
    std::vector<std::vector<int>> paths;

    std::vector<int> path_lengths() const {
        return {static_cast<int>(paths[0].size()) - 1,
                static_cast<int>(paths[1].size()) - 1,
                static_cast<int>(paths[2].size()) - 1};
    }
};

// Witness iff g is exactly a theta-graph (not merely contains one).
std::optional<ThetaWitness> detect_theta(const Graph& g);

// Witness iff g is exactly a T-graph with apex x.
std::optional<TGraphWitness> detect_t_graph(const Graph& g, int x);

// Subdivides edge e twice; the two new vertices get label 0, appended at
// indices n and n+1.
LabeledPair stretch(const LabeledPair& p, int edge_idx);

// An induced path u1 v1 v2 u2 whose internal vertices have degree 2 and
// label 0; reversing it by Corollary-2 yields (G - v1 - v2) + u1u2.
struct UnstretchCandidate {
    int u1, v1, v2, u2;
};

// All candidates, canonically oriented (v1 < v2), sorted.  Empty iff the
// pair is unstretched.
std::vector<UnstretchCandidate> unstretch_candidates(const LabeledPair& p);

// Label-free variant used by the unstretched-graph filter.
bool graph_is_unstretched(const Graph& g);

// (G - v1 - v2) + u1u2 with labels restricted; vertices above v1/v2 shift down.
LabeledPair apply_unstretch(const LabeledPair& p, const UnstretchCandidate& c);

}  // namespace atg

#endif
