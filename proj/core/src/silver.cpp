#include "tsg/silver.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace tsg {

VerifyResult verify_totally_silver(const Graph& g, const Coloring& c) {
    const int n = g.vertex_count();
    if (static_cast<int>(c.color.size()) != n)
        throw std::invalid_argument("verify: coloring size does not match vertex count");
    if (c.k < 0) throw std::invalid_argument("verify: negative color count");
    for (int v = 0; v < n; ++v)
        if (c.color[v] < 0 || c.color[v] >= c.k)
            throw std::invalid_argument("verify: color out of range at vertex " + std::to_string(v));

    std::vector<int> count(c.k, 0);
    for (int v = 0; v < n; ++v) {
        // N[v] must contain each color exactly once, so |N[v]| == k.
        if (g.degree(v) + 1 != c.k) return {false, v};
        bool ok = true;
        count[c.color[v]]++;
        for (int w : g.neighbors(v))
            if (++count[c.color[w]] > 1) ok = false;
        count[c.color[v]]--;
        for (int w : g.neighbors(v)) count[c.color[w]]--;
        if (!ok) return {false, v};
    }
    return {true, std::nullopt};
}

namespace {

class budget_exhausted {};  // internal unwind, caught in solve_totally_silver

// Component solver: fixed BFS order from the component's smallest vertex,
// N[v0] pre-colored 0..r, per-vertex masks of colors already present in each
// closed neighborhood.
class ComponentSolver {
public:
    ComponentSolver(const Graph& g, const std::vector<int>& comp, int k,
                    std::uint64_t& nodes, std::uint64_t budget)
        : g_(g), k_(k), nodes_(nodes), budget_(budget) {
        order_.reserve(comp.size());
        int v0 = comp[0];
        std::vector<char> seen(g.vertex_count(), 0);
        std::queue<int> q;
        seen[v0] = 1;
        q.push(v0);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            order_.push_back(u);
            for (int w : g.neighbors(u))
                if (!seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
        }
        mask_.assign(g.vertex_count(), 0u);
        color_.assign(g.vertex_count(), -1);
    }

    // Returns the coloring of the component's vertices (indexed by vertex id)
    // or nullopt when no totally silver coloring exists.
    std::optional<std::vector<int>> run() {
        if (!assign_seed()) return std::nullopt;
        if (!search(seed_len_)) return std::nullopt;
        return color_;
    }

private:
    const Graph& g_;
    int k_;
    std::vector<int> order_;
    std::vector<std::uint32_t> mask_;
    std::vector<int> color_;
    std::uint64_t& nodes_;
    std::uint64_t budget_;
    int seed_len_ = 0;

    void spend() {
        if (++nodes_ > budget_) throw budget_exhausted{};
    }

    bool feasible(int v, int c) const {
        std::uint32_t bit = 1u << c;
        if (mask_[v] & bit) return false;
        for (int w : g_.neighbors(v))
            if (mask_[w] & bit) return false;
        return true;
    }

    // Also fails when the assignment starves some uncolored vertex in the
    // affected closed neighborhoods.
    bool commit(int v, int c) {
        std::uint32_t bit = 1u << c;
        std::uint32_t full = (1u << k_) - 1;
        mask_[v] |= bit;
        color_[v] = c;
        bool dead = false;
        for (int w : g_.neighbors(v)) {
            mask_[w] |= bit;
            if (color_[w] == -1 && mask_[w] == full) dead = true;
        }
        if (dead) {
            undo(v, c);
            return false;
        }
        return true;
    }

    void undo(int v, int c) {
        std::uint32_t bit = ~(1u << c);
        mask_[v] &= bit;
        for (int w : g_.neighbors(v)) mask_[w] &= bit;
        color_[v] = -1;
    }

    // Pre-color N[v0]: v0 gets 0, its neighbors ascending get 1..r. Valid
    // symmetry breaking: any solution is rainbow on N[v0] and can be
    // relabeled to match.
    bool assign_seed() {
        int v0 = order_[0];
        std::vector<int> seed = {v0};
        for (int w : g_.neighbors(v0)) seed.push_back(w);
        std::sort(seed.begin() + 1, seed.end());
        for (size_t i = 0; i < seed.size(); ++i) {
            spend();
            int c = static_cast<int>(i);
            if (!feasible(seed[i], c) || !commit(seed[i], c)) {
                for (size_t j = 0; j < i; ++j) undo(seed[j], static_cast<int>(j));
                return false;
            }
        }
        seed_len_ = static_cast<int>(seed.size());
        return true;
    }

    bool search(int pos) {
        while (pos < static_cast<int>(order_.size()) && color_[order_[pos]] != -1) ++pos;
        if (pos == static_cast<int>(order_.size())) return true;
        int v = order_[pos];
        for (int c = 0; c < k_; ++c) {
            spend();
            if (!feasible(v, c)) continue;
            if (!commit(v, c)) continue;
            if (search(pos + 1)) return true;
            undo(v, c);
        }
        return false;
    }
};

}  // namespace

SolveResult solve_totally_silver(const Graph& g, std::uint64_t node_budget) {
    SolveResult res;
    const int n = g.vertex_count();
    if (n == 0) {
        res.status = SolveStatus::Silver;
        res.coloring = Coloring{0, {}};
        return res;
    }
    auto dp = degree_profile(g);
    if (!dp.is_regular) {
        res.status = SolveStatus::NotSilver;
        res.reason = NotSilverReason::NotRegular;
        return res;
    }
    const int k = *dp.degree + 1;
    if (k > 31) {
        // Mask width bound; desk-scale instances stay far below this.
        throw std::invalid_argument("solve_totally_silver: degree too large (r+1 > 31)");
    }
    Coloring out{k, std::vector<int>(n, -1)};
    std::uint64_t nodes = 0;
    try {
        // Each component must independently be totally silver.
        for (const auto& comp : components(g)) {
            ComponentSolver solver(g, comp, k, nodes, node_budget);
            auto sub = solver.run();
            if (!sub) {
                res.status = SolveStatus::NotSilver;
                res.reason = NotSilverReason::Exhausted;
                res.nodes = nodes;
                return res;
            }
            for (int v : comp) out.color[v] = (*sub)[v];
        }
    } catch (const budget_exhausted&) {
        res.status = SolveStatus::BudgetExceeded;
        res.nodes = nodes;
        return res;
    }
    res.status = SolveStatus::Silver;
    res.coloring = std::move(out);
    res.nodes = nodes;
    return res;
}

namespace {

// DSATUR-ordered exact backtracking; colors beyond the first unused one are
// never tried (classes are interchangeable).
class ProperColoring {
public:
    ProperColoring(const Graph& g, int k) : g_(g), k_(k) {
        color_.assign(g.vertex_count(), -1);
        neighbor_colors_.assign(g.vertex_count(), std::vector<int>(k, 0));
    }

    std::optional<std::vector<int>> run() {
        if (search(0, 0)) return color_;
        return std::nullopt;
    }

private:
    const Graph& g_;
    int k_;
    std::vector<int> color_;
    std::vector<std::vector<int>> neighbor_colors_;  // counts per color

    int saturation(int v) const {
        int s = 0;
        for (int c = 0; c < k_; ++c)
            if (neighbor_colors_[v][c] > 0) ++s;
        return s;
    }

    bool search(int colored, int max_used) {
        const int n = g_.vertex_count();
        if (colored == n) return true;
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color_[v] != -1) continue;
            int s = saturation(v);
            if (s > best_sat || (s == best_sat && g_.degree(v) > best_deg)) {
                best = v;
                best_sat = s;
                best_deg = g_.degree(v);
            }
        }
        int v = best;
        int limit = std::min(k_, max_used + 1);
        for (int c = 0; c < limit; ++c) {
            if (neighbor_colors_[v][c] > 0) continue;
            color_[v] = c;
            for (int w : g_.neighbors(v)) neighbor_colors_[w][c]++;
            if (search(colored + 1, std::max(max_used, c + 1))) return true;
            for (int w : g_.neighbors(v)) neighbor_colors_[w][c]--;
            color_[v] = -1;
        }
        return false;
    }
};

}  // namespace

std::optional<Coloring> proper_coloring(const Graph& g, int k) {
    if (k < 0) throw std::invalid_argument("proper_coloring: negative k");
    if (g.vertex_count() == 0) return Coloring{k, {}};
    if (k == 0) return std::nullopt;
    ProperColoring pc(g, k);
    auto got = pc.run();
    if (!got) return std::nullopt;
    return Coloring{k, std::move(*got)};
}

std::optional<int> chromatic_number_square(const Graph& g, int upper_limit) {
    const int n = g.vertex_count();
    if (n == 0) return 0;
    Graph sq = square(g);
    // Greedy clique in the square seeded by a largest closed neighborhood.
    int seed = 0;
    for (int v = 1; v < n; ++v)
        if (g.degree(v) > g.degree(seed)) seed = v;
    std::vector<int> clique = {seed};
    for (int v : g.neighbors(seed)) clique.push_back(v);
    for (int v = 0; v < n; ++v) {
        bool all = true;
        for (int u : clique)
            if (u == v || !sq.has_edge(u, v)) {
                all = false;
                break;
            }
        if (all) clique.push_back(v);
    }
    int lower = static_cast<int>(clique.size());
    for (int k = lower; k <= upper_limit; ++k)
        if (proper_coloring(sq, k)) return k;
    return std::nullopt;
}

Graph line_graph(const Graph& g) {
    auto es = g.edges();
    const int m = static_cast<int>(es.size());
    std::vector<Edge> out;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto [a, b] = es[i];
            auto [c, d] = es[j];
            if (a == c || a == d || b == c || b == d) out.emplace_back(i, j);
        }
    return Graph(m, out);
}

namespace {

bool has_bridge(const Graph& g) {
    for (const auto& e : g.edges()) {
        // e is a bridge iff its endpoints are separated once e is removed.
        std::vector<char> seen(g.vertex_count(), 0);
        std::queue<int> q;
        seen[e.first] = 1;
        q.push(e.first);
        bool reached = false;
        while (!q.empty() && !reached) {
            int u = q.front();
            q.pop();
            for (int w : g.neighbors(u)) {
                if (u == e.first && w == e.second) continue;
                if (u == e.second && w == e.first) continue;
                if (!seen[w]) {
                    seen[w] = 1;
                    if (w == e.second) {
                        reached = true;
                        break;
                    }
                    q.push(w);
                }
            }
        }
        if (!reached) return true;
    }
    return false;
}

SilverReport build_report(const Graph& g, const Coloring* c) {
    SilverReport rep;
    auto dp = degree_profile(g);
    rep.is_regular = dp.is_regular;
    if (!dp.is_regular || !dp.degree) return rep;
    const int r = *dp.degree;
    const int n = g.vertex_count();
    rep.r = r;
    rep.order_divisible = n % (r + 1) == 0;

    auto bip = bipartition(g);
    if (bip) rep.bipartite_order_divisible = n % (2 * r + 2) == 0;

    if (c) {
        auto classes = color_classes(*c);
        bool equal = true;
        for (const auto& cl : classes)
            if (cl.size() != classes[0].size()) equal = false;
        rep.classes_equal = equal;
        if (bip) {
            std::vector<std::array<int, 2>> table(c->k, {0, 0});
            for (int v = 0; v < n; ++v)
                table[c->color[v]][bip->side[v] == Side::X ? 0 : 1]++;
            bool constant = true;
            for (const auto& row : table)
                if (row[0] != table[0][0] || row[1] != table[0][0]) constant = false;
            rep.partite_class_constant = constant;
        }
    }

    if (r == 3) rep.bridgeless = !has_bridge(g);
    if (r % 2 == 1) {
        // Proper r-edge-colorability via vertex coloring of the line graph.
        rep.edge_colorable = proper_coloring(line_graph(g), r).has_value();
    }
    return rep;
}

}  // namespace

SilverReport check_necessary(const Graph& g) { return build_report(g, nullptr); }

SilverReport check_necessary(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.color.size()) != g.vertex_count())
        throw std::invalid_argument("check_necessary: coloring size mismatch");
    for (int col : c.color)
        if (col < 0 || col >= c.k)
            throw std::invalid_argument("check_necessary: color out of range");
    return build_report(g, &c);
}

int edge_chromatic_cubic(const Graph& g) {
    auto dp = degree_profile(g);
    if (!dp.is_regular || !dp.degree || *dp.degree != 3)
        throw std::invalid_argument("edge_chromatic_cubic: graph is not cubic");
    // Vizing: a cubic graph is 3- or 4-edge-chromatic.
    return proper_coloring(line_graph(g), 3) ? 3 : 4;
}

std::vector<std::array<int, 2>> partite_class_matrix(const Graph& g, const Coloring& c,
                                                     const Bipartition& b) {
    auto vr = verify_totally_silver(g, c);
    if (!vr.ok)
        throw std::invalid_argument("partite_class_matrix: coloring is not totally silver");
    if (static_cast<int>(b.side.size()) != g.vertex_count())
        throw std::invalid_argument("partite_class_matrix: bipartition size mismatch");
    for (auto [u, v] : g.edges())
        if (b.side[u] == b.side[v])
            throw std::invalid_argument("partite_class_matrix: bipartition has a same-side edge");
    std::vector<std::array<int, 2>> table(c.k, {0, 0});
    for (int v = 0; v < g.vertex_count(); ++v)
        table[c.color[v]][b.side[v] == Side::X ? 0 : 1]++;
    return table;
}

}  // namespace tsg
