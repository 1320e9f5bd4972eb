#ifndef ATG_CANONICAL_HPP
#define ATG_CANONICAL_HPP

#include <string>
#include <vector>

#include "graph.hpp"

namespace atg {

// Canonical form of a small graph: the graph6 string of a canonically
// relabeled copy.  Equal strings iff isomorphic.  Degree refinement plus
// lexicographic minimization over permutations within refinement cells.
std::string canonical_form(const Graph& g);

// Color-respecting variant: permutations may only map vertices to vertices
// of equal color.  Used for labeled pairs (colors = labels) and marked-pair
// orbit signatures.
std::string canonical_form_colored(const Graph& g, const std::vector<int>& colors);

// Canonical signature of a labeled pair (graph together with its labels).
std::string canonical_form_pair(const LabeledPair& p);

// Permutation perm with perm[old] = new position in the canonical copy.
std::vector<int> canonical_relabeling(const Graph& g,
                                      const std::vector<int>& colors);

// Isomorphism g1 -> g2 respecting colors, or empty if none.
// Result maps vertices of g1 to vertices of g2.
std::vector<int> find_isomorphism(const Graph& g1, const std::vector<int>& c1,
                                  const Graph& g2, const std::vector<int>& c2);

enum class EnumerateFilter { All, Connected, TwoConnected };

// One representative per isomorphism class on n vertices, deterministic
// order (by edge count, then canonical form).  In-memory augmentation with
// canonical dedup; results cached per n.
const std::vector<Graph>& enumerate_graphs(int n, EnumerateFilter filter);

}  // namespace atg

#endif
