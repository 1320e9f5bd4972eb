#ifndef ATG_ATSOLVER_HPP
#define ATG_ATSOLVER_HPP

#include <optional>
#include <vector>

#include "graph.hpp"
#include "orientation.hpp"

namespace atg {

// f = d_G - h, the out-degree bound vector of a labeled pair.
std::vector<int> pair_bound(const LabeledPair& p);

// Every orientation needs in-degree >= d(v) - f(v) + 1 at each vertex; when
// those requirements already exceed m, no orientation can qualify.  This is
// the quick refutation used before any search.
bool degree_sum_infeasible(const Graph& g, const std::vector<int>& f);

// Exhaustive orientation search: a witness orientation with EE != EO and
// d+(v) <= f(v)-1 everywhere, or nullopt.  Edges are decided in index
// order, direction 0 first; partial orientations are abandoned as soon as
// an out-degree bound is violated, so the returned witness is the
// deterministic first one.
std::optional<Orientation> is_f_at(const Graph& g, const std::vector<int>& f);

// is_f_at with f = d_G - h.
std::optional<Orientation> is_pair_at(const LabeledPair& p);

// Independent cross-check: expands the graph polynomial (the product over
// edges u<v of (x_u - x_v)) in exact integer arithmetic keyed by exponent
// vectors, and reports whether any monomial with exponents e_v <= f(v)-1
// survives with a nonzero coefficient.
bool coefficient_oracle(const Graph& g, const std::vector<int>& f);

// Evaluation of both Stretching Lemma implications on a concrete pair and
// edge: (1) AT(G,h) implies AT(G',h'); (2) AT(G',h') implies AT(G,h) or
// AT(G-e,h).
struct StretchTransferReport {
    bool base_at = false;      // (G, h)
    bool minus_at = false;     // (G - e, h)
    bool stretched_at = false; // (G', h')
    std::optional<Orientation> base_witness, minus_witness, stretched_witness;
    bool implication_forward_ok = false;
    bool implication_backward_ok = false;
    bool ok() const { return implication_forward_ok && implication_backward_ok; }
};

StretchTransferReport stretch_transfer_check(const LabeledPair& p, int edge_idx);

// Glues two oriented graphs by identifying x1 in d1 with x2 in d2, returning
// the union orientation and its counts.  Asserts the product identity
// EE - EO = (EE1 - EO1) * (EE2 - EO2).
struct ComposedOrientation {
    Orientation orientation;
    EulerCounts counts;
    // Vertex maps into the glued graph.
    std::vector<int> map1, map2;
};

ComposedOrientation compose_cutvertex(const Orientation& d1,
                                      const Orientation& d2, int x1, int x2);

}  // namespace atg

#endif
