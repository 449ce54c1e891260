#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace tsg {

// Normalized undirected edge, first < second.
using Edge = std::pair<int, int>;

Edge make_edge(int u, int v);

// Finite simple undirected graph on vertices 0..n-1. Immutable after
// construction; every algorithm below is a pure function of its inputs.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    // Validates: endpoints in range, no loops, no parallel edges.
    Graph(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;

    // Sorted lexicographically, each edge normalized u < v.
    std::vector<Edge> edges() const;

    bool operator==(const Graph& other) const = default;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;  // each row sorted ascending
};

struct DegreeProfile {
    bool is_regular = false;
    std::optional<int> degree;  // present iff regular and n > 0
};

DegreeProfile degree_profile(const Graph& g);

// Length of a shortest cycle; nullopt when the graph is acyclic.
std::optional<int> girth(const Graph& g);

bool is_connected(const Graph& g);

// Vertex sets of connected components, each sorted, ordered by smallest member.
std::vector<std::vector<int>> components(const Graph& g);

// True iff no vertex cut of size < k exists (and |V| > k). k in 1..3;
// exhaustive removal of all subsets of size < k.
bool vertex_connectivity_at_least(const Graph& g, int k);

// One side of a minimal edge cut together with the crossing edges delta(S).
struct EdgeCut {
    std::vector<int> side_s;       // sorted; nonempty, proper subset of V
    std::vector<Edge> cut_edges;   // sorted; exactly delta(side_s)
};

// All minimal edge cuts of exactly size s (bridges for s = 1). s in 1..2;
// g must be connected. Exhaustive over edges / edge pairs.
std::vector<EdgeCut> edge_cuts_of_size(const Graph& g, int s);

enum class Side { X, Y };

struct Bipartition {
    std::vector<Side> side;  // total map vertex -> side
};

// Two-coloring by BFS; nullopt iff some odd cycle exists. Component roots
// (smallest index) land on side X.
std::optional<Bipartition> bipartition(const Graph& g);

// Same vertex set; uv is an edge iff 1 <= dist(u,v) <= 2 in g.
Graph square(const Graph& g);

// Tensor product with K2: vertex (u,i) is numbered u + (i-1)*n for i in {1,2};
// (u,i) ~ (v,j) iff uv in E(g) and i != j.
Graph bipartite_double_cover(const Graph& g);

// Vertex blocks concatenated in list order with offset renumbering.
Graph disjoint_union(const std::vector<Graph>& gs);

// Subgraph induced on `vertices` (strictly ascending), relabeled 0..k-1
// preserving order.
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

}  // namespace tsg
