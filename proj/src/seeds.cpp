#include "seeds.hpp"

#include "error.hpp"

namespace atg {

Graph make_path(int n) {
    std::vector<std::pair<int, int>> es;
    for (int v = 0; v + 1 < n; ++v) es.emplace_back(v, v + 1);
    return Graph::from_edges(n, es);
}

Graph make_cycle(int n) {
    if (n < 3) throw_invalid("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> es;
    for (int v = 0; v < n; ++v) es.emplace_back(v, (v + 1) % n);
    return Graph::from_edges(n, es);
}

Graph make_complete(int n) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return Graph::from_edges(n, es);
}

Graph make_complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) es.emplace_back(u, a + v);
    return Graph::from_edges(a + b, es);
}

namespace {

// Appends a path of `len` edges from `from` to `to`, allocating internal
// vertices starting at *next.
void add_path(std::vector<std::pair<int, int>>& es, int from, int to, int len,
              int* next) {
    int prev = from;
    for (int i = 1; i < len; ++i) {
        es.emplace_back(prev, *next);
        prev = (*next)++;
    }
    es.emplace_back(prev, to);
}

}  // namespace

Graph make_theta_graph(int l1, int l2, int l3) {
    int ones = (l1 == 1) + (l2 == 1) + (l3 == 1);
    if (l1 < 1 || l2 < 1 || l3 < 1 || ones > 1)
        throw_invalid("theta paths must have length >= 1, at most one of length 1");
    std::vector<std::pair<int, int>> es;
    int next = 2;
    for (int l : {l1, l2, l3}) add_path(es, 0, 1, l, &next);
    return Graph::from_edges(next, es);
}

Graph make_t_graph(int l1, int l2, int l3) {
    if (l1 < 1 || l2 < 1 || l3 < 1)
        throw_invalid("T-graph paths must have length >= 1");
    std::vector<std::pair<int, int>> es{{1, 2}, {1, 3}, {2, 3}};
    int next = 4;
    int i = 1;
    for (int l : {l1, l2, l3}) add_path(es, 0, i++, l, &next);
    return Graph::from_edges(next, es);
}

Graph make_t_plus_graph(int l1, int l2, int l3) {
    Graph t = make_t_graph(l1, l2, l3);
    auto es = t.edges();
    int u = t.n();
    es.emplace_back(1, u);
    es.emplace_back(2, u);
    es.emplace_back(3, u);
    return Graph::from_edges(t.n() + 1, es);
}

Graph moser_spindle() {
    return Graph::from_edges(7, {{0, 1},
                                 {0, 2},
                                 {0, 3},
                                 {2, 3},
                                 {1, 4},
                                 {1, 5},
                                 {4, 5},
                                 {2, 6},
                                 {3, 6},
                                 {4, 6},
                                 {5, 6}});
}

LabeledPair seed_left() { return make_hx(make_complete(4), 0); }

LabeledPair seed_center() { return make_hx(make_t_graph(2, 2, 2), 0); }

LabeledPair seed_right() { return make_hx(moser_spindle(), 6); }

LabeledPair separation_g1() {
    // Triangles {1,3,4} and {2,3,4} sharing edge 34; vertex 0 on top.
    Graph g = Graph::from_edges(
        5, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    return make_hxy(g, 1, 2);
}

LabeledPair separation_g2() {
    // K_{2,3}: parts {0,1} (degree 3) and {2,3,4}.
    Graph g = make_complete_bipartite(2, 3);
    return make_hxy(g, 0, 1);
}

}  // namespace atg
