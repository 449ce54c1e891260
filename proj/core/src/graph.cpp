#include "tsg/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

namespace tsg {

Edge make_edge(int u, int v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

Graph::Graph(int n) : n_(n), m_(0), adj_(n) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
    std::set<Edge> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("graph: vertex out of range in edge (" +
                                        std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v)
            throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
        Edge e = make_edge(u, v);
        if (!seen.insert(e).second)
            throw std::invalid_argument("graph: duplicate edge (" + std::to_string(e.first) +
                                        "," + std::to_string(e.second) + ")");
        adj_[e.first].push_back(e.second);
        adj_[e.second].push_back(e.first);
    }
    for (auto& row : adj_) std::sort(row.begin(), row.end());
    m_ = static_cast<int>(seen.size());
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    const auto& row = adj_[u];
    return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;  // already lexicographically sorted by construction
}

DegreeProfile degree_profile(const Graph& g) {
    DegreeProfile p;
    p.is_regular = true;
    if (g.vertex_count() == 0) return p;
    int r = g.degree(0);
    for (int v = 1; v < g.vertex_count(); ++v)
        if (g.degree(v) != r) {
            p.is_regular = false;
            return p;
        }
    p.degree = r;
    return p;
}

std::optional<int> girth(const Graph& g) {
    const int n = g.vertex_count();
    int best = -1;
    std::vector<int> dist(n), parent(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        dist[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            if (best != -1 && 2 * dist[u] >= best) break;
            for (int w : g.neighbors(u)) {
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push(w);
                } else if (w != parent[u] && parent[w] != u) {
                    // Non-tree edge: closes a cycle through the BFS tree.
                    int len = dist[u] + dist[w] + 1;
                    if (best == -1 || len < best) best = len;
                }
            }
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

namespace {

// Components with some vertices masked out; `alive[v]` false skips v.
std::vector<std::vector<int>> components_masked(const Graph& g, const std::vector<char>& alive) {
    const int n = g.vertex_count();
    std::vector<char> seen(n, 0);
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < n; ++s) {
        if (!alive[s] || seen[s]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        seen[s] = 1;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            comp.push_back(u);
            for (int w : g.neighbors(u))
                if (alive[w] && !seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

// Connectivity of g minus a set of deleted edges; assumes n > 0 overall.
bool connected_without_edges(const Graph& g, const std::vector<Edge>& removed) {
    const int n = g.vertex_count();
    if (n == 0) return true;
    auto is_removed = [&](int u, int v) {
        Edge e = make_edge(u, v);
        for (const auto& r : removed)
            if (r == e) return true;
        return false;
    };
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    seen[0] = 1;
    q.push(0);
    int count = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u)) {
            if (seen[w] || is_removed(u, w)) continue;
            seen[w] = 1;
            ++count;
            q.push(w);
        }
    }
    return count == n;
}

std::vector<int> component_of_without_edges(const Graph& g, int start,
                                            const std::vector<Edge>& removed) {
    auto is_removed = [&](int u, int v) {
        Edge e = make_edge(u, v);
        for (const auto& r : removed)
            if (r == e) return true;
        return false;
    };
    std::vector<char> seen(g.vertex_count(), 0);
    std::queue<int> q;
    seen[start] = 1;
    q.push(start);
    std::vector<int> comp;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        comp.push_back(u);
        for (int w : g.neighbors(u)) {
            if (seen[w] || is_removed(u, w)) continue;
            seen[w] = 1;
            q.push(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    return comp;
}

}  // namespace

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    std::vector<char> alive(g.vertex_count(), 1);
    return components_masked(g, alive).size() == 1;
}

std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<char> alive(g.vertex_count(), 1);
    return components_masked(g, alive);
}

bool vertex_connectivity_at_least(const Graph& g, int k) {
    if (k < 1 || k > 3) throw std::invalid_argument("vertex_connectivity_at_least: k must be in 1..3");
    const int n = g.vertex_count();
    if (n < k + 1) return false;
    std::vector<char> alive(n, 1);
    auto connected_now = [&]() {
        auto comps = components_masked(g, alive);
        return comps.size() == 1;
    };
    if (!connected_now()) return false;
    if (k >= 2) {
        for (int a = 0; a < n; ++a) {
            alive[a] = 0;
            if (!connected_now()) return false;
            alive[a] = 1;
        }
    }
    if (k >= 3) {
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                alive[a] = alive[b] = 0;
                if (!connected_now()) {
                    alive[a] = alive[b] = 1;
                    return false;
                }
                alive[a] = alive[b] = 1;
            }
    }
    return true;
}

std::vector<EdgeCut> edge_cuts_of_size(const Graph& g, int s) {
    if (s < 1 || s > 2) throw std::invalid_argument("edge_cuts_of_size: s must be 1 or 2");
    if (!is_connected(g)) throw std::invalid_argument("edge_cuts_of_size: graph must be connected");
    const auto es = g.edges();
    std::vector<EdgeCut> cuts;
    if (s == 1) {
        for (const auto& e : es) {
            if (!connected_without_edges(g, {e})) {
                EdgeCut c;
                c.cut_edges = {e};
                c.side_s = component_of_without_edges(g, e.first, {e});
                cuts.push_back(std::move(c));
            }
        }
        return cuts;
    }
    // s == 2: pairs whose removal disconnects while neither edge is a bridge.
    std::vector<char> bridge(es.size(), 0);
    for (size_t i = 0; i < es.size(); ++i)
        bridge[i] = !connected_without_edges(g, {es[i]});
    for (size_t i = 0; i < es.size(); ++i) {
        if (bridge[i]) continue;
        for (size_t j = i + 1; j < es.size(); ++j) {
            if (bridge[j]) continue;
            std::vector<Edge> pair = {es[i], es[j]};
            if (!connected_without_edges(g, pair)) {
                EdgeCut c;
                c.cut_edges = pair;
                c.side_s = component_of_without_edges(g, es[i].first, pair);
                cuts.push_back(std::move(c));
            }
        }
    }
    return cuts;
}

std::optional<Bipartition> bipartition(const Graph& g) {
    const int n = g.vertex_count();
    Bipartition b;
    b.side.assign(n, Side::X);
    std::vector<int> mark(n, -1);
    for (int s = 0; s < n; ++s) {
        if (mark[s] != -1) continue;
        mark[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : g.neighbors(u)) {
                if (mark[w] == -1) {
                    mark[w] = 1 - mark[u];
                    q.push(w);
                } else if (mark[w] == mark[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    for (int v = 0; v < n; ++v) b.side[v] = mark[v] == 0 ? Side::X : Side::Y;
    return b;
}

Graph square(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Edge> out;
    std::vector<char> near(n, 0);
    for (int u = 0; u < n; ++u) {
        std::vector<int> touched;
        for (int v : g.neighbors(u)) {
            if (v > u && !near[v]) {
                near[v] = 1;
                touched.push_back(v);
            }
            for (int w : g.neighbors(v))
                if (w > u && !near[w]) {
                    near[w] = 1;
                    touched.push_back(w);
                }
        }
        for (int v : touched) {
            out.emplace_back(u, v);
            near[v] = 0;
        }
    }
    return Graph(n, out);
}

Graph bipartite_double_cover(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Edge> out;
    for (auto [u, v] : g.edges()) {
        out.push_back(make_edge(u, v + n));
        out.push_back(make_edge(v, u + n));
    }
    return Graph(2 * n, out);
}

Graph disjoint_union(const std::vector<Graph>& gs) {
    int n = 0;
    std::vector<Edge> out;
    for (const auto& g : gs) {
        for (auto [u, v] : g.edges()) out.emplace_back(u + n, v + n);
        n += g.vertex_count();
    }
    return Graph(n, out);
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> remap(g.vertex_count(), -1);
    for (size_t i = 0; i < vertices.size(); ++i) {
        int v = vertices[i];
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("induced_subgraph: vertex out of range");
        if (i > 0 && vertices[i - 1] >= v)
            throw std::invalid_argument("induced_subgraph: vertices must be strictly ascending");
        remap[v] = static_cast<int>(i);
    }
    std::vector<Edge> out;
    for (auto [u, v] : g.edges())
        if (remap[u] != -1 && remap[v] != -1) out.push_back(make_edge(remap[u], remap[v]));
    return Graph(static_cast<int>(vertices.size()), out);
}

}  // namespace tsg
