#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tsg/coloring.hpp"
#include "tsg/graph.hpp"

namespace tsg {

struct ColoredGraph {
    Graph graph;
    Coloring coloring;
};

enum class Family {
    CliqueUnion,
    B,
    GeneralizedPetersen,
    E,
    M,
    L,
    Lprime,
    Moebius,
    D,
    CycleStar,
};

// Parameter record for one family instance. Only the fields a family uses are
// consulted: CliqueUnion(r, copies); B(r); GeneralizedPetersen(n, d); E(n);
// M(n); L(n) for the graph on 2n vertices; Lprime(m); Moebius(n) for the
// ladder on 2n vertices; D(n); CycleStar(n, a, b).
struct FamilySpec {
    Family family = Family::CliqueUnion;
    int r = 0;
    int copies = 0;
    int n = 0;
    int d = 0;
    int m = 0;
    int a = 0;
    int b = 0;
};

struct GeneratedGraph {
    Graph graph;
    std::optional<Coloring> coloring;        // the family's published coloring, when it applies
    std::optional<Bipartition> bipartition;  // published bipartition (B family)
};

// copies blocks of K_{r+1}; colors 0..r within each block.
ColoredGraph gen_clique_union(int r, int copies);

// B_r = K_{r+1,r+1} minus a perfect matching: x_i -> i, y_i -> r+1+i,
// edges x_i y_j for i != j, coloring c(x_i) = c(y_i) = i.
GeneratedGraph gen_B(int r);

// Generalized Petersen P(n,d): outer x_i -> i-1, inner y_i -> n+i-1 (paper
// labels are 1-based); edges x_i x_{i+1}, x_i y_i, y_i y_{i+d} mod n.
Graph gen_petersen(int n, int d);

// E_n: three n-cycles u, v, w plus hubs z_i joined to u_i, v_i, w_i.
// u_i -> i-1, v_i -> n+i-1, w_i -> 2n+i-1, z_i -> 3n+i-1.
// Canonical coloring attached iff 3 | n.
GeneratedGraph gen_E(int n);

// M_n: 3n-cycle u plus hubs z_i joined to u_i, u_{n+i}, u_{2n+i}.
// u_i -> i-1, z_i -> 3n+i-1. Canonical coloring attached iff 3 does not
// divide n.
GeneratedGraph gen_M(int n);

// L_{2n}: 2n-cycle x_1..x_{2n} plus chords x_i x_{i+5} for odd i.
Graph gen_L(int half_n);

// L'_m on 8m vertices: 6m-cycle y plus 2m star centers on y_i, y_{i+4},
// y_{i+8} for i = 1,2 mod 6; canonical 4-coloring attached.
ColoredGraph gen_Lprime(int m);

// Moebius ladder V_{2n}: 2n-cycle plus antipodal chords v_i v_{n+i}.
Graph gen_moebius(int n);

// D_n: two copies of V_{2n} with the main cycle subdivided, matched along
// corresponding subdivision vertices. Copy 1 cycle position p -> p, copy 2
// position p -> 4n+p; cross edges at odd 0-based positions (even paper
// labels). Canonical coloring attached iff n odd.
GeneratedGraph gen_D(int n);

// Cubic graph from a 3n-cycle plus hubs z_i joined to X_i = {x_{3i},
// x_{3i+a}, x_{3i+b}} (mod 3n); requires {0, a, b} to cover all residues
// mod 3 so the X_i partition the cycle. Totally silver by construction.
ColoredGraph gen_cycle_star(int n, int a, int b);

// Corollary-style augmentation: add a new color class matched onto every
// existing class. matchings[i] lists, for each new vertex t, its partner in
// class C_i; each matchings[i] must be a permutation of C_i. The input must
// verify totally silver.
ColoredGraph augment(const ColoredGraph& g, const std::vector<std::vector<int>>& matchings);

// Order-preserving default matchings: new vertex t pairs with the t-th
// smallest member of every class.
std::vector<std::vector<int>> identity_matchings(const ColoredGraph& g);

// Range-checks the spec and dispatches to the generator above.
GeneratedGraph generate(const FamilySpec& spec);

std::string family_name(Family f);

}  // namespace tsg
