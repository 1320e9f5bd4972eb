#ifndef ATG_SEEDS_HPP
#define ATG_SEEDS_HPP

#include "graph.hpp"
#include "patterns.hpp"

namespace atg {

Graph make_path(int n);
Graph make_cycle(int n);
Graph make_complete(int n);
Graph make_complete_bipartite(int a, int b);

// Theta graph with three pole-to-pole paths of the given lengths.
// Poles are vertices 0 and 1; at most one length may be 1.
Graph make_theta_graph(int l1, int l2, int l3);

// T-graph: K4 with the three edges at apex 0 subdivided to the given
// lengths; the triangle is z1,z2,z3 = vertices 1,2,3.
Graph make_t_graph(int l1, int l2, int l3);

// T-graph plus an extra vertex adjacent to the triangle (returned as the
// last vertex index).
Graph make_t_plus_graph(int l1, int l2, int l3);

// The 7-vertex, 11-edge Moser spindle; vertex 6 is the degree-4 vertex.
Graph moser_spindle();

// The three seed pairs: apex-marked K4, apex-marked T(2,2,2), and the
// spindle marked at its degree-4 vertex.
LabeledPair seed_left();
LabeledPair seed_center();
LabeledPair seed_right();

// The two five-vertex separating examples: two triangles sharing an edge
// plus a degree-2 top vertex (choosable, not paintable), and K_{2,3}
// (paintable, not AT).  Marked vertices are the degree-3 pair adjacent to
// the top vertex, resp. the two degree-3 vertices.
LabeledPair separation_g1();
LabeledPair separation_g2();

}  // namespace atg

#endif
