#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ordpar/core.hpp"
#include "ordpar/exactlp.hpp"

namespace ordpar::gtsp {

struct Edge {
    std::size_t u = 0;
    std::size_t v = 0;
};

/// Simple undirected graph; edges are identified by their position in the edge list.
class Graph {
public:
    /// Throws SelfLoop, DuplicateEdge or ParseError (endpoint out of range).
    Graph(std::size_t node_count, std::vector<Edge> edges);

    std::size_t node_count() const { return node_count_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    /// Edge indices incident to a node.
    const std::vector<std::size_t>& incident(std::size_t node) const { return incident_.at(node); }

    bool is_connected() const;
    /// Edge indices of delta(S), in increasing order.
    std::vector<std::size_t> cut_edges(const std::vector<bool>& in_s) const;

private:
    std::size_t node_count_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> incident_;
};

/**
 * Parses "n m" followed by m lines "u v" (0-based ids). Lines starting with
 * '#' and blank lines are skipped. The graph must be connected.
 */
Graph load_graph(std::string_view text);
Graph load_graph_file(const std::string& path);

Graph cycle_graph(std::size_t n);
Graph petersen_graph();

enum class CutKind { Connectivity, BlossomOriginal, BlossomStrengthened };
std::string to_string(CutKind kind);

/**
 * A cut delta(S) with flip set F. S never contains node 0; F lists edge
 * indices of delta(S). For connectivity cuts F is empty and beta is z(delta(S)).
 */
struct CutResult {
    std::vector<std::size_t> nodes;
    std::vector<std::size_t> flip_edges;
    Rat beta;
    CutKind kind = CutKind::Connectivity;
};

/**
 * Global minimum cut by Stoer-Wagner on edge weights z. Returns the cut when
 * its weight is below 2. Throws DisconnectedGraph if the graph is not connected.
 */
std::optional<CutResult> separate_connectivity(const Graph& graph, std::span<const Rat> z);

/// Per-edge z = x1 + x2 with 1 >= x1 >= x2 >= 0.
struct BinarizedSolution {
    std::vector<Rat> z;
    std::vector<Rat> x1;
    std::vector<Rat> x2;

    static BinarizedSolution from_parts(std::vector<Rat> x1, std::vector<Rat> x2);
};

struct CutWeights {
    std::vector<Rat> c;
    std::vector<Rat> c_prime;
};

/**
 * Weights for the doubled-edge blossom inequalities folded onto the original
 * graph: c = min(x1 + x2, 2 - x1 - x2), c' = min(1 - x1 + x2, 1 + x1 - x2).
 */
CutWeights blossom_weights_original(const BinarizedSolution& solution);

/// c = x1 - x2, c' = 1 - x1 + x2. Throws OrderingViolated if x1 < x2 somewhere.
CutWeights blossom_weights_strengthened(const BinarizedSolution& solution);

struct FlipChoice {
    /// Positions (into the weight lists) placed in F.
    std::vector<std::size_t> flip;
    Rat beta;
};

/**
 * Cheapest odd flip set for one fixed cut: take every position with c' < c,
 * and if that count is even toggle the position with the smallest |c - c'|
 * (lowest position on ties). Requires a nonempty cut.
 */
FlipChoice greedy_odd_flip(std::span<const Rat> c, std::span<const Rat> c_prime);

/// Largest graph accepted by min_odd_cut.
inline constexpr std::size_t kMaxOddCutNodes = 18;

/**
 * Minimizes beta(S, F) over every nontrivial S (the side without node 0,
 * visited in increasing bitmask order) and every odd F within delta(S).
 * The first minimizer found wins. Throws TooManyNodes beyond kMaxOddCutNodes.
 */
CutResult min_odd_cut(const Graph& graph, const CutWeights& weights, CutKind kind = CutKind::BlossomOriginal);

/// sum over delta(S) of gamma(z_e) with r = 2.
Rat cut_gamma_sum(const Graph& graph, const std::vector<bool>& in_s, std::span<const Rat> z);

/**
 * The LP row of a cut over columns (z, x1, x2) per edge, as a ">=" row.
 * Connectivity: z(delta(S)) >= 2. Strengthened: Inequality over x1 - x2 with
 * F flipped. Original: the doubled-edge inequality whose folded weights
 * produced the cut at `point`; its left-hand side at `point` equals beta.
 */
lp::Row cut_inequality(const Graph& graph, const CutResult& cut, const BinarizedSolution& point);

struct SolveConfig {
    bool connectivity = true;
    bool blossom_original = false;
    bool blossom_strengthened = false;
    std::size_t round_cap = 50;
    std::string instance_label;
};

/// sum gamma(z_e) over delta(S) for every nontrivial S, at one LP point; a value
/// of at least 1 on every cut means z has a binarization that satisfies every parity cut.
struct GammaScan {
    std::size_t cuts_examined = 0;
    Rat min_sum;
    std::size_t failures = 0;
};

struct RoundRecord {
    std::size_t round = 0;
    Rat bound;
    std::size_t connectivity_added = 0;
    std::size_t blossom_original_added = 0;
    std::size_t blossom_strengthened_added = 0;
    /// Present in rounds where blossom separation ran.
    std::optional<GammaScan> gamma_scan;
};

struct SolveReport {
    std::vector<RoundRecord> rounds;
    Rat final_bound;
    /// Bound of the first round in which no connectivity cut was violated.
    std::optional<Rat> connectivity_bound;
    BinarizedSolution final_solution;
    std::vector<CutResult> cuts;
    /// LP rows added for `cuts`, position by position, over columns (z, x1, x2) per edge.
    std::vector<lp::Row> cut_rows;
    bool round_cap_exceeded = false;
    /// Rounds whose added cuts left the bound unchanged.
    std::size_t stalled_rounds = 0;

    std::size_t count(CutKind kind) const;
    bool gamma_condition_held() const;
};

/**
 * Cutting-plane loop on min sum z_e subject to degree cuts z(delta(v)) >= 2,
 * z = x1 + x2 and 0 <= x2 <= x1 <= 1. Each round solves the LP exactly, then
 * separates connectivity cuts; only when none is violated it separates the
 * enabled blossom families. Stops when a round adds nothing or the round cap
 * is reached (reported, not thrown). Throws GraphTooSmall for fewer than 3
 * nodes and DisconnectedGraph for disconnected input.
 */
SolveReport cutting_plane_solve(const Graph& graph, const SolveConfig& config);

std::string format_report(const SolveReport& report, const Graph& graph, const SolveConfig& config);

}  // namespace ordpar::gtsp
