#ifndef ATG_COLORING_HPP
#define ATG_COLORING_HPP

#include <optional>
#include <vector>

#include "classify.hpp"
#include "graph.hpp"

namespace atg {

// Per-vertex lists of allowed colors (sorted, duplicate-free).
using ListAssignment = std::vector<std::vector<int>>;

// Proper coloring from the lists, or nullopt (search is exhaustive;
// degeneracy-order backtracking, lowest color first).
std::optional<std::vector<int>> exists_proper_coloring(const Graph& g,
                                                       const ListAssignment& lists);

// A list assignment with |L(v)| = f(v) admitting no proper coloring, or
// nullopt when every such assignment is colorable.  Enumerates assignments
// over the palette {1..sum f} up to color renaming: a bad assignment uses
// at most sum f distinct colors, and verdicts depend only on the
// intersection pattern of the lists.
std::optional<ListAssignment> is_f_choosable(const Graph& g,
                                             const std::vector<int>& f);

// Exact paint-game value via the recursive definition, memoized on
// (active vertex set, residual f).  The empty graph is paintable.
bool is_f_paintable(const Graph& g, const std::vector<int>& f);

// The explicit uncolorable assignments for the seed family: {1,2,3} on the
// triangle and {1,2} elsewhere for T-graph members, {1,2,3} everywhere for
// the spindle.  Asserts uncolorability and the size contract before
// returning.
ListAssignment bad_lists_for_d(const LabeledPair& p, const DMembership& m);

// Disjoint per-block palettes unioned at cut vertices; |L(v)| = d(v) and no
// proper coloring exists.  Requires a connected Gallai tree.
ListAssignment bad_lists_gallai(const Graph& g);

// AT / choosable / paintable verdicts for one h_x pair, with certificates
// for whichever side is constructive.
struct EquivalenceReport {
    bool at = false;
    bool choosable = false;
    bool paintable = false;
    std::optional<ListAssignment> bad_lists;  // present when not choosable
    bool agree() const { return at == choosable && choosable == paintable; }
};

EquivalenceReport equivalence_check_hx(const LabeledPair& p);

}  // namespace atg

#endif
