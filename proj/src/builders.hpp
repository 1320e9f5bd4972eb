#ifndef ATG_BUILDERS_HPP
#define ATG_BUILDERS_HPP

#include <utility>

#include "graph.hpp"
#include "orientation.hpp"
#include "patterns.hpp"

namespace atg {

// Closed-twin construction: with H = G - x connected, N_H[z1] = N_H[z2],
// x ~ z1 and x !~ z2, orders H from z1 (z2 second, then breadth-first with
// index tie-breaks), orients H edges forward, xz1 into z1 and every other
// x-edge into x.  The result has EE = EO + 1 exactly, d+(x) <= 1 and
// d+(v) <= d(v) - 1 elsewhere.
Orientation build_euler_lemma_orientation(const Graph& g, int x, int z1, int z2);

// Theta orientation: two paths into the pole x, one out.  Exactly three
// spanning Eulerian subgraphs, so EE != EO.
Orientation build_theta_orientation(const Graph& g, const ThetaWitness& w, int x);

// T-graph with two apex paths of opposite parity: those two paths into the
// apex, the third out, triangle oriented cyclically.  Four spanning
// Eulerian subgraphs splitting 3/1 by parity.
Orientation build_t_orientation(const Graph& g, const TGraphWitness& w);

// T-graph plus a vertex u adjacent to the triangle: lifts the closed-twin
// orientation of the contracted base along the subdivided apex paths.
// EE + EO stays odd, so EE != EO.
Orientation build_t_plus_orientation(const Graph& g, const TGraphWitness& w,
                                     int u);

// Adds a path of length p_prime_len joining the endpoints of a subpath P of
// one apex path (all P-internal degrees 2, one endpoint of degree 2),
// returning an orientation of the enlarged graph with |EE - EO| = 1.
// Requires all three apex path lengths of equal parity; the enlarged graph
// is built here, with the new vertices appended after g's.
Orientation build_added_path_orientation(const Graph& g, const TGraphWitness& w,
                                         std::pair<int, int> p_endpoints,
                                         int p_prime_len);

// Arc list of the added-path construction when the enlarged graph already
// exists: w describes the T-part, chain the extra path as a vertex sequence
// whose two ends lie on one apex path of w.  Covers every edge of the
// T-part plus the chain.
std::vector<std::pair<int, int>> added_path_arcs(const TGraphWitness& w,
                                                 const std::vector<int>& chain);

// Breadth-first order of `vertices` within g starting from `seeds` (kept in
// the given order), index tie-breaks within layers.  Every listed vertex
// after the seeds has an earlier neighbor.
std::vector<int> bfs_order(const Graph& g, const std::vector<int>& seeds,
                           const std::vector<int>& vertices);

}  // namespace atg

#endif
