#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "tsg/coloring.hpp"
#include "tsg/graph.hpp"

namespace tsg {

// A coloring is totally silver when every closed neighborhood N[v] carries
// each of the k colors exactly once; this forces the graph (k-1)-regular.

struct VerifyResult {
    bool ok = false;
    std::optional<int> violating_vertex;  // first vertex whose N[v] is not rainbow
};

// Throws std::invalid_argument when the coloring is malformed (wrong size or
// color out of 0..k-1).
VerifyResult verify_totally_silver(const Graph& g, const Coloring& c);

enum class SolveStatus { Silver, NotSilver, BudgetExceeded };
enum class NotSilverReason { NotRegular, Exhausted };

struct SolveResult {
    SolveStatus status = SolveStatus::NotSilver;
    std::optional<Coloring> coloring;        // present iff Silver
    std::optional<NotSilverReason> reason;   // present iff NotSilver
    std::uint64_t nodes = 0;                 // assignment attempts spent
};

inline constexpr std::uint64_t kDefaultSolveBudget = 100'000'000;

// Exact backtracking search for an (r+1)-coloring with every closed
// neighborhood rainbow. Deterministic: one closed neighborhood is pre-colored
// 0..r (any solution can be relabeled to agree), remaining vertices follow
// BFS order, colors are tried ascending. Disconnected inputs are solved per
// component. Non-regular graphs are immediately NotSilver.
SolveResult solve_totally_silver(const Graph& g, std::uint64_t node_budget = kDefaultSolveBudget);

// Exact proper k-colorability of g itself (not its square): DSATUR-ordered
// backtracking with first-use color symmetry breaking. Returns a witness.
std::optional<Coloring> proper_coloring(const Graph& g, int k);

// Least k <= upper_limit with square(g) properly k-colorable, counting up
// from a greedy clique lower bound; nullopt when the limit is exceeded.
std::optional<int> chromatic_number_square(const Graph& g, int upper_limit);

// Audit record for the necessary conditions a totally silver graph must
// satisfy. A field is nullopt exactly when its hypothesis fails (not regular,
// not bipartite, not cubic, r even) or when it needs the optional coloring.
struct SilverReport {
    bool is_regular = false;
    std::optional<int> r;
    std::optional<bool> order_divisible;            // (r+1) | n
    std::optional<bool> classes_equal;              // with coloring: |C_0| = ... = |C_r|
    std::optional<bool> bipartite_order_divisible;  // bipartite: (2r+2) | n
    std::optional<bool> partite_class_constant;     // bipartite + coloring: Lemma-style matrix constant
    std::optional<bool> bridgeless;                 // cubic: no bridge
    std::optional<bool> edge_colorable;             // r odd: proper r-edge-coloring exists
};

SilverReport check_necessary(const Graph& g);
SilverReport check_necessary(const Graph& g, const Coloring& c);

// Exact edge chromatic number of a cubic graph: 3 when a proper 3-edge
// coloring exists, else 4. Throws std::invalid_argument on non-cubic input.
int edge_chromatic_cubic(const Graph& g);

// Table of |C_j ∩ X|, |C_j ∩ Y| for a verified totally silver coloring of a
// bipartite graph; throws std::invalid_argument when preconditions fail.
std::vector<std::array<int, 2>> partite_class_matrix(const Graph& g, const Coloring& c,
                                                     const Bipartition& b);

// Line graph: one vertex per edge of g, adjacent when the edges share an
// endpoint. Vertex i corresponds to g.edges()[i].
Graph line_graph(const Graph& g);

}  // namespace tsg
