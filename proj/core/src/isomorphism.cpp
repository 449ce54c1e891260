#include "tsg/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace tsg {

namespace {

// Iterated neighbor-color refinement run jointly over both graphs so the
// resulting color ids are comparable across them.
std::pair<std::vector<int>, std::vector<int>> joint_refinement(const Graph& g1, const Graph& g2) {
    const int n = g1.vertex_count();
    std::vector<int> c1(n, 0), c2(n, 0);
    int classes = 1;
    for (int round = 0; round < n; ++round) {
        using Sig = std::pair<int, std::vector<int>>;
        std::map<Sig, int> ids;
        auto signature = [](const Graph& g, const std::vector<int>& col, int v) {
            std::vector<int> neigh;
            neigh.reserve(g.degree(v));
            for (int w : g.neighbors(v)) neigh.push_back(col[w]);
            std::sort(neigh.begin(), neigh.end());
            return Sig{col[v], std::move(neigh)};
        };
        std::vector<int> n1(n), n2(n);
        for (int v = 0; v < n; ++v) {
            auto s = signature(g1, c1, v);
            auto it = ids.try_emplace(std::move(s), static_cast<int>(ids.size())).first;
            n1[v] = it->second;
        }
        for (int v = 0; v < n; ++v) {
            auto s = signature(g2, c2, v);
            auto it = ids.try_emplace(std::move(s), static_cast<int>(ids.size())).first;
            n2[v] = it->second;
        }
        int new_classes = static_cast<int>(ids.size());
        c1 = std::move(n1);
        c2 = std::move(n2);
        if (new_classes == classes) break;
        classes = new_classes;
    }
    return {c1, c2};
}

struct Matcher {
    const Graph& g1;
    const Graph& g2;
    const std::vector<int>& col1;
    const std::vector<int>& col2;
    std::vector<int> map12;   // g1 vertex -> g2 vertex or -1
    std::vector<char> used2;  // g2 vertex already matched

    bool extend() {
        const int n = g1.vertex_count();
        // Most constrained first: unmapped vertex with the most mapped
        // neighbors, then highest degree, then lowest index.
        int best = -1, best_mapped = -1, best_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (map12[v] != -1) continue;
            int mapped = 0;
            for (int w : g1.neighbors(v))
                if (map12[w] != -1) ++mapped;
            if (mapped > best_mapped ||
                (mapped == best_mapped && g1.degree(v) > best_deg)) {
                best = v;
                best_mapped = mapped;
                best_deg = g1.degree(v);
            }
        }
        if (best == -1) return true;  // everything mapped
        int v = best;
        for (int cand = 0; cand < n; ++cand) {
            if (used2[cand] || col2[cand] != col1[v]) continue;
            bool ok = true;
            for (int w : g1.neighbors(v)) {
                if (map12[w] == -1) continue;
                if (!g2.has_edge(cand, map12[w])) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                // Non-edges of v to mapped vertices must stay non-edges.
                for (int u = 0; u < n && ok; ++u) {
                    if (u == v || map12[u] == -1) continue;
                    if (!g1.has_edge(v, u) && g2.has_edge(cand, map12[u])) ok = false;
                }
            }
            if (!ok) continue;
            map12[v] = cand;
            used2[cand] = 1;
            if (extend()) return true;
            map12[v] = -1;
            used2[cand] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> is_isomorphic(const Graph& g1, const Graph& g2) {
    const int n = g1.vertex_count();
    if (n != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return std::nullopt;
    if (n == 0) return std::vector<int>{};

    auto [c1, c2] = joint_refinement(g1, g2);
    auto hist = [n](const std::vector<int>& c) {
        std::vector<int> h = c;
        std::sort(h.begin(), h.end());
        return h;
    };
    if (hist(c1) != hist(c2)) return std::nullopt;

    Matcher m{g1, g2, c1, c2, std::vector<int>(n, -1), std::vector<char>(n, 0)};
    if (!m.extend()) return std::nullopt;
    // Witness sanity: adjacency preserved both ways (degree equality makes
    // the one-direction check below two-way).
    for (auto [u, v] : g1.edges())
        if (!g2.has_edge(m.map12[u], m.map12[v])) return std::nullopt;
    return m.map12;
}

}  // namespace tsg
