#include "gspline/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace gspline {

EdgeLabeledGraph::EdgeLabeledGraph(ModulusContext ctx, int n, std::vector<Edge> edges,
                                   bool require_proper)
    : ctx_(std::move(ctx)), n_(n), edges_(std::move(edges)) {
    if (n_ < 2) throw std::invalid_argument("graph needs at least 2 vertices");
    std::set<std::pair<int, int>> seen;
    for (Edge& e : edges_) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 1 || e.v > n_) throw std::invalid_argument("edge endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("loops are not allowed");
        if (!seen.emplace(e.u, e.v).second) throw std::invalid_argument("duplicate edge");
        e.label = ctx_.canonical_label(e.label);
        if (require_proper && (e.label == 1 || e.label == ctx_.modulus()))
            throw std::invalid_argument("edge label generates a trivial ideal");
    }
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& a, const Edge& b) { return std::tie(a.v, a.u) < std::tie(b.v, b.u); });

    adj_.assign(n_ + 1, {});
    for (int k = 0; k < static_cast<int>(edges_.size()); ++k) {
        adj_[edges_[k].u].emplace_back(edges_[k].v, k);
        adj_[edges_[k].v].emplace_back(edges_[k].u, k);
    }

    // connectivity
    std::vector<char> vis(n_ + 1, 0);
    std::vector<int> stack{1};
    vis[1] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [w, k] : adj_[v])
            if (!vis[w]) {
                vis[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    if (count != n_) throw std::invalid_argument("graph is not connected");
}

std::optional<Int> EdgeLabeledGraph::label(int i, int j) const {
    if (i > j) std::swap(i, j);
    for (auto [w, k] : adj_[i])
        if (w == j) return edges_[k].label;
    return std::nullopt;
}

bool EdgeLabeledGraph::is_complete() const {
    return static_cast<long>(edges_.size()) == triangular(n_);
}

EdgeLabeledGraph complete_from_labels(const CompleteGraphLabels& spec, const ModulusContext& ctx) {
    if (spec.n < 2) throw std::invalid_argument("complete graph needs n >= 2");
    if (static_cast<long>(spec.labels.size()) != triangular(spec.n))
        throw std::invalid_argument("expected " + std::to_string(triangular(spec.n)) +
                                    " labels, got " + std::to_string(spec.labels.size()));
    std::vector<Edge> edges;
    for (int j = 2; j <= spec.n; ++j)
        for (int i = 1; i < j; ++i)
            edges.push_back({i, j, spec.labels[complete_edge_index(i, j) - 1]});
    return EdgeLabeledGraph(ctx, spec.n, std::move(edges));
}

EdgeLabeledGraph add_star(const EdgeLabeledGraph& g, const std::vector<Int>& star_labels) {
    if (!g.is_complete()) throw std::invalid_argument("add_star requires a complete graph");
    const int n = g.vertex_count();
    if (static_cast<int>(star_labels.size()) != n)
        throw std::invalid_argument("add_star expects one label per existing vertex");
    std::vector<Edge> edges = g.edges();
    for (int i = 1; i <= n; ++i) edges.push_back({i, n + 1, star_labels[i - 1]});
    return EdgeLabeledGraph(g.ctx(), n + 1, std::move(edges));
}

EdgeLabeledGraph spanning_subgraph(const EdgeLabeledGraph& g, const std::vector<int>& keep) {
    std::vector<Edge> edges;
    for (int k : keep) {
        if (k < 0 || k >= static_cast<int>(g.edges().size()))
            throw std::invalid_argument("spanning_subgraph: edge position out of range");
        edges.push_back(g.edges()[k]);
    }
    // the EdgeLabeledGraph constructor rejects disconnected results
    return EdgeLabeledGraph(g.ctx(), g.vertex_count(), std::move(edges), false);
}

}  // namespace gspline
