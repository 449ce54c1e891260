#include "tsg/families.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "tsg/silver.hpp"

namespace tsg {

ColoredGraph gen_clique_union(int r, int copies) {
    if (r < 1 || copies < 1)
        throw std::invalid_argument("gen_clique_union: need r >= 1 and copies >= 1");
    const int block = r + 1;
    std::vector<Edge> edges;
    Coloring c{block, {}};
    for (int b = 0; b < copies; ++b) {
        int base = b * block;
        for (int i = 0; i < block; ++i) {
            c.color.push_back(i);
            for (int j = i + 1; j < block; ++j) edges.emplace_back(base + i, base + j);
        }
    }
    return {Graph(copies * block, edges), std::move(c)};
}

GeneratedGraph gen_B(int r) {
    if (r < 1) throw std::invalid_argument("gen_B: need r >= 1");
    const int n = 2 * r + 2;
    std::vector<Edge> edges;
    for (int i = 0; i <= r; ++i)
        for (int j = 0; j <= r; ++j)
            if (i != j) edges.push_back(make_edge(i, r + 1 + j));
    GeneratedGraph out{Graph(n, edges), Coloring{r + 1, std::vector<int>(n)}, Bipartition{}};
    for (int i = 0; i <= r; ++i) {
        out.coloring->color[i] = i;
        out.coloring->color[r + 1 + i] = i;
    }
    out.bipartition = Bipartition{std::vector<Side>(n, Side::X)};
    for (int j = 0; j <= r; ++j) out.bipartition->side[r + 1 + j] = Side::Y;
    return out;
}

Graph gen_petersen(int n, int d) {
    if (d < 1 || n < 2 * d + 1)
        throw std::invalid_argument("gen_petersen: need d >= 1 and n >= 2d+1");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        edges.push_back(make_edge(i, (i + 1) % n));          // outer cycle
        edges.push_back(make_edge(i, n + i));                // spoke
        edges.push_back(make_edge(n + i, n + (i + d) % n));  // inner chords
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(2 * n, edges);
}

GeneratedGraph gen_E(int n) {
    if (n < 3) throw std::invalid_argument("gen_E: need n >= 3");
    std::vector<Edge> edges;
    for (int c = 0; c < 3; ++c)  // cycles on u, v, w blocks
        for (int i = 0; i < n; ++i) edges.push_back(make_edge(c * n + i, c * n + (i + 1) % n));
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());  // n = 3 cycles double up
    for (int i = 0; i < n; ++i)
        for (int c = 0; c < 3; ++c) edges.push_back(make_edge(3 * n + i, c * n + i));
    GeneratedGraph out{Graph(4 * n, edges), std::nullopt, std::nullopt};
    if (n % 3 == 0) {
        Coloring col{4, std::vector<int>(4 * n)};
        for (int i = 0; i < n; ++i) {
            // Paper labels are 1-based: c(u_i) = i, c(v_i) = i+1,
            // c(w_i) = i+2 (mod 3), c(z_i) = 3.
            col.color[i] = (i + 1) % 3;
            col.color[n + i] = (i + 2) % 3;
            col.color[2 * n + i] = (i + 3) % 3;
            col.color[3 * n + i] = 3;
        }
        out.coloring = std::move(col);
    }
    return out;
}

GeneratedGraph gen_M(int n) {
    if (n < 3) throw std::invalid_argument("gen_M: need n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < 3 * n; ++i) edges.push_back(make_edge(i, (i + 1) % (3 * n)));
    for (int i = 0; i < n; ++i)
        for (int c = 0; c < 3; ++c) edges.push_back(make_edge(3 * n + i, c * n + i));
    GeneratedGraph out{Graph(4 * n, edges), std::nullopt, std::nullopt};
    if (n % 3 != 0) {
        Coloring col{4, std::vector<int>(4 * n)};
        for (int i = 0; i < 3 * n; ++i) col.color[i] = (i + 1) % 3;
        for (int i = 0; i < n; ++i) col.color[3 * n + i] = 3;
        out.coloring = std::move(col);
    }
    return out;
}

Graph gen_L(int half_n) {
    const int n = half_n;
    if (n < 4) throw std::invalid_argument("gen_L: need n >= 4 (graph on 2n vertices)");
    std::vector<Edge> edges;
    for (int i = 0; i < 2 * n; ++i) edges.push_back(make_edge(i, (i + 1) % (2 * n)));
    // Chords x_i x_{i+5} for odd 1-based i, i.e. even 0-based positions.
    for (int i = 0; i < 2 * n; i += 2) edges.push_back(make_edge(i, (i + 5) % (2 * n)));
    return Graph(2 * n, edges);
}

ColoredGraph gen_Lprime(int m) {
    if (m < 1) throw std::invalid_argument("gen_Lprime: need m >= 1");
    const int ring = 6 * m;
    std::vector<Edge> edges;
    for (int i = 0; i < ring; ++i) edges.push_back(make_edge(i, (i + 1) % ring));
    Coloring col{4, std::vector<int>(8 * m)};
    for (int i = 0; i < ring; ++i) col.color[i] = (i + 1) % 3;
    int next = ring;
    for (int i = 1; i <= ring; ++i) {  // 1-based positions with i = 1, 2 (mod 6)
        if (i % 6 != 1 && i % 6 != 2) continue;
        for (int off : {0, 4, 8}) edges.push_back(make_edge(next, (i - 1 + off) % ring));
        col.color[next] = 3;
        ++next;
    }
    return {Graph(8 * m, edges), std::move(col)};
}

Graph gen_moebius(int n) {
    if (n < 2) throw std::invalid_argument("gen_moebius: need n >= 2");
    std::vector<Edge> edges;
    for (int i = 0; i < 2 * n; ++i) edges.push_back(make_edge(i, (i + 1) % (2 * n)));
    for (int i = 0; i < n; ++i) edges.push_back(make_edge(i, n + i));
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());  // n = 2: chords meet cycle
    return Graph(2 * n, edges);
}

GeneratedGraph gen_D(int n) {
    if (n < 2) throw std::invalid_argument("gen_D: need n >= 2");
    const int cyc = 4 * n;  // subdivided main cycle length per copy
    std::vector<Edge> edges;
    for (int copy = 0; copy < 2; ++copy) {
        int base = copy * cyc;
        for (int p = 0; p < cyc; ++p) edges.push_back(make_edge(base + p, base + (p + 1) % cyc));
        // Original ladder chords join even positions 2j and 2j+2n.
        for (int j = 0; j < n; ++j) edges.push_back(make_edge(base + 2 * j, base + 2 * j + 2 * n));
    }
    // Subdivision vertices sit at odd positions; match them across copies.
    for (int p = 1; p < cyc; p += 2) edges.push_back(make_edge(p, cyc + p));
    GeneratedGraph out{Graph(2 * cyc, edges), std::nullopt, std::nullopt};
    if (n % 2 == 1) {
        // Paper: c(x_i) = i mod 4, c(y_i) = i+2 mod 4 with 1-based i.
        Coloring col{4, std::vector<int>(2 * cyc)};
        for (int p = 0; p < cyc; ++p) {
            col.color[p] = (p + 1) % 4;
            col.color[cyc + p] = (p + 3) % 4;
        }
        out.coloring = std::move(col);
    }
    return out;
}

ColoredGraph gen_cycle_star(int n, int a, int b) {
    if (n < 1) throw std::invalid_argument("gen_cycle_star: need n >= 1");
    if (!(0 < a && a < b && b < 3 * n))
        throw std::invalid_argument("gen_cycle_star: need 0 < a < b < 3n");
    std::set<int> residues = {0, a % 3, b % 3};
    if (residues != std::set<int>{0, 1, 2})
        throw std::invalid_argument(
            "gen_cycle_star: offsets must cover all residues mod 3 ({0, a, b} mod 3 = {0,1,2})");
    const int ring = 3 * n;
    // Direct partition check on the hub neighborhoods, not just the residue
    // argument: rejects bad inputs loudly.
    std::vector<char> used(ring, 0);
    for (int i = 0; i < n; ++i)
        for (int off : {0, a, b}) {
            int x = (3 * i + off) % ring;
            if (used[x])
                throw std::invalid_argument("gen_cycle_star: hub neighborhoods do not partition the cycle");
            used[x] = 1;
        }
    std::vector<Edge> edges;
    for (int i = 0; i < ring; ++i) edges.push_back(make_edge(i, (i + 1) % ring));
    Coloring col{4, std::vector<int>(4 * n)};
    for (int i = 0; i < ring; ++i) col.color[i] = i % 3;
    for (int i = 0; i < n; ++i) {
        for (int off : {0, a, b}) edges.push_back(make_edge(ring + i, (3 * i + off) % ring));
        col.color[ring + i] = 3;
    }
    return {Graph(4 * n, edges), std::move(col)};
}

ColoredGraph augment(const ColoredGraph& g, const std::vector<std::vector<int>>& matchings) {
    auto vr = verify_totally_silver(g.graph, g.coloring);
    if (!vr.ok) throw std::invalid_argument("augment: input does not verify totally silver");
    const int k = g.coloring.k;
    const int n = g.graph.vertex_count();
    auto classes = color_classes(g.coloring);
    if (n == 0 || classes[0].empty()) throw std::invalid_argument("augment: empty color class");
    const int class_size = static_cast<int>(classes[0].size());
    if (static_cast<int>(matchings.size()) != k)
        throw std::invalid_argument("augment: need exactly one matching per color class");
    for (int i = 0; i < k; ++i) {
        if (static_cast<int>(matchings[i].size()) != class_size)
            throw std::invalid_argument("augment: matching size mismatch for class " + std::to_string(i));
        std::vector<int> sorted = matchings[i];
        std::sort(sorted.begin(), sorted.end());
        if (sorted != classes[i])
            throw std::invalid_argument("augment: matching " + std::to_string(i) +
                                        " is not a bijection onto class C_" + std::to_string(i));
    }
    std::vector<Edge> edges = g.graph.edges();
    Coloring col{k + 1, g.coloring.color};
    for (int t = 0; t < class_size; ++t) {
        col.color.push_back(k);
        for (int i = 0; i < k; ++i) edges.push_back(make_edge(n + t, matchings[i][t]));
    }
    return {Graph(n + class_size, edges), std::move(col)};
}

std::vector<std::vector<int>> identity_matchings(const ColoredGraph& g) {
    return color_classes(g.coloring);  // classes come out sorted ascending
}

GeneratedGraph generate(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::CliqueUnion: {
            auto cg = gen_clique_union(spec.r, spec.copies);
            return {std::move(cg.graph), std::move(cg.coloring), std::nullopt};
        }
        case Family::B:
            return gen_B(spec.r);
        case Family::GeneralizedPetersen:
            return {gen_petersen(spec.n, spec.d), std::nullopt, std::nullopt};
        case Family::E:
            return gen_E(spec.n);
        case Family::M:
            return gen_M(spec.n);
        case Family::L:
            return {gen_L(spec.n), std::nullopt, std::nullopt};
        case Family::Lprime: {
            auto cg = gen_Lprime(spec.m);
            return {std::move(cg.graph), std::move(cg.coloring), std::nullopt};
        }
        case Family::Moebius:
            return {gen_moebius(spec.n), std::nullopt, std::nullopt};
        case Family::D:
            return gen_D(spec.n);
        case Family::CycleStar: {
            auto cg = gen_cycle_star(spec.n, spec.a, spec.b);
            return {std::move(cg.graph), std::move(cg.coloring), std::nullopt};
        }
    }
    throw std::invalid_argument("generate: unknown family");
}

std::string family_name(Family f) {
    switch (f) {
        case Family::CliqueUnion: return "cliqueunion";
        case Family::B: return "B";
        case Family::GeneralizedPetersen: return "petersen";
        case Family::E: return "E";
        case Family::M: return "M";
        case Family::L: return "L";
        case Family::Lprime: return "Lprime";
        case Family::Moebius: return "moebius";
        case Family::D: return "D";
        case Family::CycleStar: return "cyclestar";
    }
    return "?";
}

}  // namespace tsg
