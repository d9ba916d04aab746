#ifndef GSPLINE_GRAPH_HPP
#define GSPLINE_GRAPH_HPP

#include "gspline/arith.hpp"

#include <optional>
#include <vector>

namespace gspline {

/// Undirected edge v_u v_v with u < v (vertices 1-indexed) and a canonical
/// label, i.e. a divisor of m.
struct Edge {
    int u, v;
    Int label;
};

/// r_n = n(n-1)/2, the edge count of K_n.
inline long triangular(int n) { return static_cast<long>(n) * (n - 1) / 2; }

/// Canonical 1-based index of edge e_{ij} (i < j) of a complete graph:
/// r_{j-1} + i, so e_1 = e_12, e_2 = e_13, e_3 = e_23, e_4 = e_14, ...
inline long complete_edge_index(int i, int j) { return triangular(j - 1) + i; }

/// Labels of K_n listed in the canonical edge order e_1 .. e_{r_n}.
struct CompleteGraphLabels {
    int n = 0;
    std::vector<Int> labels;
};

/// Simple connected graph over Z/mZ with canonicalized edge labels.
/// Immutable after construction.
class EdgeLabeledGraph {
public:
    /// Labels are canonicalized (gcd with m) at insertion. Throws on loops,
    /// duplicate edges, out-of-range vertices, and disconnected graphs.
    /// With require_proper (the default for the theorem constructions)
    /// labels must generate proper nonzero ideals: 1 < label < m. Without it
    /// the degenerate labels 1 and m are admitted for verification input.
    EdgeLabeledGraph(ModulusContext ctx, int n, std::vector<Edge> edges,
                     bool require_proper = true);

    const ModulusContext& ctx() const { return ctx_; }
    int vertex_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }

    std::optional<Int> label(int i, int j) const;
    /// Neighbors of v as (neighbor, edge position in edges()).
    const std::vector<std::pair<int, int>>& neighbors(int v) const { return adj_[v]; }

    bool is_complete() const;

private:
    ModulusContext ctx_;
    int n_;
    std::vector<Edge> edges_;                          // sorted by (v, u) = canonical order
    std::vector<std::vector<std::pair<int, int>>> adj_;  // 1-indexed
};

/// K_n from labels in the canonical edge order.
EdgeLabeledGraph complete_from_labels(const CompleteGraphLabels& spec, const ModulusContext& ctx);

/// K_{n+1} = K_n + S_n: star_labels[i-1] labels the new edge v_i v_{n+1}.
EdgeLabeledGraph add_star(const EdgeLabeledGraph& g, const std::vector<Int>& star_labels);

/// Restriction to a subset of edges; labels and vertex indices preserved.
/// `keep` holds positions into g.edges(). Throws if the result is disconnected.
EdgeLabeledGraph spanning_subgraph(const EdgeLabeledGraph& g, const std::vector<int>& keep);

}  // namespace gspline

#endif
