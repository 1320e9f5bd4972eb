#ifndef ATG_GRAPH_HPP
#define ATG_GRAPH_HPP

#include <utility>
#include <vector>

namespace atg {

// Simple undirected graph on vertices 0..n-1.  The edge list is kept sorted
// lexicographically by (min endpoint, max endpoint); the index of an edge in
// that list is its stable identity, used by orientations and certificates.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(n) {}

    // Builds from an arbitrary (u,v) list; rejects loops and parallel edges.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    std::vector<int> degrees() const;

    bool has_edge(int u, int v) const;
    // Index into edges() of {u,v}; -1 if absent.
    int edge_index(int u, int v) const;

    // Induced subgraph on `vertices` (need not be sorted; duplicates rejected).
    // Vertex i of the result corresponds to sorted(vertices)[i]; the sorted
    // list is returned through `old_of_new` when non-null.
    Graph induced(const std::vector<int>& vertices,
                  std::vector<int>* old_of_new = nullptr) const;

    Graph removed_vertex(int v, std::vector<int>* old_of_new = nullptr) const;
    Graph removed_edge(int edge_idx) const;
    Graph added_edge(int u, int v) const;
    // Relabels vertex v as perm[v].
    Graph permuted(const std::vector<int>& perm) const;

    bool connected() const;
    int component_count() const;
    // Component id per vertex, numbered in order of smallest member.
    std::vector<int> components() const;
    // True when n >= 3, connected, and no cutvertex.
    bool two_connected() const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

  private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

// A graph together with a vertex labeling h: V -> N.  The important
// specializations put label 1 on one vertex (h_x) or two (h_{x,y}).
struct LabeledPair {
    Graph graph;
    std::vector<int> labels;

    LabeledPair() = default;
    LabeledPair(Graph g, std::vector<int> l);

    // Index of the unique label-1 vertex; throws unless the labeling is h_x.
    int hx_vertex() const;
    bool is_hx() const;
    bool is_hxy() const;
};

LabeledPair make_hx(const Graph& g, int x);
LabeledPair make_hxy(const Graph& g, int x, int y);
LabeledPair make_zero_labels(const Graph& g);

}  // namespace atg

#endif
