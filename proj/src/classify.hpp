#ifndef ATG_CLASSIFY_HPP
#define ATG_CLASSIFY_HPP

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "blocks.hpp"
#include "graph.hpp"
#include "patterns.hpp"

namespace atg {

// Membership in the family generated from the three seed pairs by
// stretching bold edges: T-graphs with apex x whose path lengths share one
// parity (odd parity reaches the K4 seed, even the subdivided one), plus
// the Moser spindle marked at its degree-4 vertex.
enum class DVerdict { NotMember, TGraphOdd, TGraphEven, MoserSpindle };

struct DMembership {
    DVerdict verdict = DVerdict::NotMember;
    std::optional<TGraphWitness> t_witness;
    // Vertex bijection onto the reference spindle (degree-4 vertex = 6).
    std::vector<int> spindle_map;

    bool member() const { return verdict != DVerdict::NotMember; }
};

std::string to_string(DVerdict v);

// Requires an h_x labeling on a 2-connected graph.
DMembership membership_d(const LabeledPair& p);

// Which clause decided a classification.
enum class CaseTag {
    DegreeAtGallaiTree,       // not degree-AT: every block complete/odd cycle
    DegreeAtBadBlock,         // degree-AT: some block is neither

    MainDeg2GallaiTree,       // not AT: d(x)=2 and G-x is a Gallai tree
    MainDeg2DegreeAt,         // AT: d(x)=2 and G-x is degree-AT
    MainComplete,             // not AT: complete
    MainInD,                  // not AT: member of the seed family
    MainAt,                   // AT: d(x)>=3, not complete, not a member

    Conn1GallaiTree,
    Conn2DegreeOne,
    Conn3Deg2GallaiComponent,
    Conn4BlockInD,
    Conn5Cutvertex,
    ConnAt,                   // AT: no clause fired
};

std::string to_string(CaseTag t);

struct Classification {
    bool at = false;
    CaseTag tag = CaseTag::ConnAt;
    nlohmann::json witness;
};

// Degree-AT decision: a connected graph is degree-AT iff it is not a
// Gallai tree.  The witness carries the offending block or the block list.
Classification classify_degree_at(const Graph& g);

// Main Lemma decision for 2-connected pairs (h_x labeling required):
// AT iff (1) d(x)=2 and G-x is not a Gallai tree, or (2) d(x)>=3, G is not
// complete and the pair is not a member of the seed family.
Classification classify_two_connected(const LabeledPair& p);

// Full connected classification; clauses evaluated in order, first firing
// clause reported.
Classification classify_connected(const LabeledPair& p);

// Induced subgraph on `vertices` with bookkeeping for one marked vertex.
struct InducedPart {
    Graph graph;
    std::vector<int> old_of_new;
    std::vector<int> new_of_old;
    int mapped(int old_vertex) const { return new_of_old[old_vertex]; }
};

InducedPart induce_part(const Graph& g, const std::vector<int>& vertices);

}  // namespace atg

#endif
