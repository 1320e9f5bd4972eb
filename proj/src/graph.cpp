#include "graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "error.hpp"

namespace atg {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw_invalid("vertex count must be nonnegative");
    Graph g(n);
    std::vector<std::pair<int, int>> norm;
    norm.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw_invalid("edge endpoint out of range: (" + std::to_string(u) +
                          "," + std::to_string(v) + ")");
        if (u == v) throw_invalid("loop at vertex " + std::to_string(u));
        norm.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(norm.begin(), norm.end());
    if (std::adjacent_find(norm.begin(), norm.end()) != norm.end())
        throw_invalid("parallel edge in edge list");
    g.edges_ = std::move(norm);
    for (auto [u, v] : g.edges_) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    return g;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = degree(v);
    return d;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
    if (it == edges_.end() || *it != std::make_pair(u, v)) return -1;
    return static_cast<int>(it - edges_.begin());
}

Graph Graph::induced(const std::vector<int>& vertices,
                     std::vector<int>* old_of_new) const {
    std::vector<int> vs = vertices;
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
        throw_invalid("duplicate vertex in induced-subgraph set");
    std::vector<int> new_of_old(n_, -1);
    for (int i = 0; i < static_cast<int>(vs.size()); ++i) {
        if (vs[i] < 0 || vs[i] >= n_)
            throw_invalid("induced-subgraph vertex out of range");
        new_of_old[vs[i]] = i;
    }
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : edges_)
        if (new_of_old[u] >= 0 && new_of_old[v] >= 0)
            es.emplace_back(new_of_old[u], new_of_old[v]);
    if (old_of_new) *old_of_new = vs;
    return from_edges(static_cast<int>(vs.size()), es);
}

Graph Graph::removed_vertex(int v, std::vector<int>* old_of_new) const {
    if (v < 0 || v >= n_) throw_invalid("vertex out of range");
    std::vector<int> keep;
    keep.reserve(n_ - 1);
    for (int u = 0; u < n_; ++u)
        if (u != v) keep.push_back(u);
    return induced(keep, old_of_new);
}

Graph Graph::removed_edge(int edge_idx) const {
    if (edge_idx < 0 || edge_idx >= m())
        throw_invalid("edge index out of range: " + std::to_string(edge_idx));
    auto es = edges_;
    es.erase(es.begin() + edge_idx);
    return from_edges(n_, es);
}

Graph Graph::added_edge(int u, int v) const {
    auto es = edges_;
    es.emplace_back(u, v);
    return from_edges(n_, es);
}

Graph Graph::permuted(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_)
        throw_invalid("permutation size mismatch");
    std::vector<std::pair<int, int>> es;
    es.reserve(edges_.size());
    for (auto [u, v] : edges_) es.emplace_back(perm[u], perm[v]);
    return from_edges(n_, es);
}

std::vector<int> Graph::components() const {
    std::vector<int> comp(n_, -1);
    int next = 0;
    std::vector<int> stack;
    for (int s = 0; s < n_; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : adj_[u])
                if (comp[w] < 0) {
                    comp[w] = next;
                    stack.push_back(w);
                }
        }
        ++next;
    }
    return comp;
}

int Graph::component_count() const {
    auto comp = components();
    return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

bool Graph::connected() const { return n_ <= 1 || component_count() == 1; }

bool Graph::two_connected() const {
    if (n_ < 3 || !connected()) return false;
    for (int v = 0; v < n_; ++v)
        if (removed_vertex(v).component_count() > 1) return false;
    return true;
}

LabeledPair::LabeledPair(Graph g, std::vector<int> l)
    : graph(std::move(g)), labels(std::move(l)) {
    if (static_cast<int>(labels.size()) != graph.n())
        throw_invalid("label vector length must equal vertex count");
    for (int h : labels)
        if (h < 0) throw_invalid("labels must be nonnegative");
}

bool LabeledPair::is_hx() const {
    int ones = 0;
    for (int h : labels) {
        if (h == 1)
            ++ones;
        else if (h != 0)
            return false;
    }
    return ones == 1;
}

bool LabeledPair::is_hxy() const {
    int ones = 0;
    for (int h : labels) {
        if (h == 1)
            ++ones;
        else if (h != 0)
            return false;
    }
    return ones == 2;
}

int LabeledPair::hx_vertex() const {
    if (!is_hx()) throw_invalid("labeling is not of h_x form");
    for (int v = 0; v < graph.n(); ++v)
        if (labels[v] == 1) return v;
    throw_invalid("unreachable");
}

LabeledPair make_hx(const Graph& g, int x) {
    if (x < 0 || x >= g.n()) throw_invalid("marked vertex out of range");
    std::vector<int> l(g.n(), 0);
    l[x] = 1;
    return LabeledPair(g, std::move(l));
}

LabeledPair make_hxy(const Graph& g, int x, int y) {
    if (x < 0 || x >= g.n() || y < 0 || y >= g.n() || x == y)
        throw_invalid("marked pair must be two distinct vertices in range");
    std::vector<int> l(g.n(), 0);
    l[x] = 1;
    l[y] = 1;
    return LabeledPair(g, std::move(l));
}

LabeledPair make_zero_labels(const Graph& g) {
    return LabeledPair(g, std::vector<int>(g.n(), 0));
}

}  // namespace atg
