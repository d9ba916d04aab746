#include "gspline/splines.hpp"

#include "gspline/lattice.hpp"

#include <stdexcept>

namespace gspline {

bool is_spline(const EdgeLabeledGraph& g, const std::vector<Int>& f) {
    if (static_cast<int>(f.size()) != g.vertex_count())
        throw std::invalid_argument("is_spline: vector length does not match vertex count");
    for (const Edge& e : g.edges()) {
        Int diff = g.ctx().reduce(f[e.u - 1] - f[e.v - 1]);
        if (diff % e.label != 0) return false;  // canonical labels divide m
    }
    return true;
}

int flow_up_index(const Spline& f) {
    for (std::size_t i = 0; i < f.values.size(); ++i)
        if (f.values[i] != 0) return static_cast<int>(i) + 1;
    return kTrivialZero;
}

std::pair<bool, Int> is_constant_flow_up(const Spline& f) {
    Int c = 0;
    for (const Int& x : f.values) {
        if (x == 0) continue;
        if (c == 0)
            c = x;
        else if (x != c)
            return {false, Int(0)};
    }
    return {true, c};
}

namespace {

void trail_dfs(const EdgeLabeledGraph& g, int v, int target, std::vector<char>& used,
               Trail& cur, std::vector<Trail>& out) {
    if (v == target) out.push_back(cur);
    for (auto [w, k] : g.neighbors(v)) {
        if (used[k]) continue;
        used[k] = 1;
        cur.vertices.push_back(w);
        cur.edges.push_back(k);
        trail_dfs(g, w, target, used, cur, out);
        cur.vertices.pop_back();
        cur.edges.pop_back();
        used[k] = 0;
    }
}

void trail_gcd_dfs(const EdgeLabeledGraph& g, int v, int target, std::vector<char>& used,
                   const Int& running, std::set<Int>& out) {
    if (v == target) out.insert(running);
    for (auto [w, k] : g.neighbors(v)) {
        if (used[k]) continue;
        used[k] = 1;
        trail_gcd_dfs(g, w, target, used, gcd(running, g.edges()[k].label), out);
        used[k] = 0;
    }
}

// simple paths: no vertex revisited
void path_gcd_dfs(const EdgeLabeledGraph& g, int v, int target, std::vector<char>& visited,
                  const Int& running, std::set<Int>& out) {
    if (v == target) {
        out.insert(running);
        return;
    }
    for (auto [w, k] : g.neighbors(v)) {
        if (visited[w]) continue;
        visited[w] = 1;
        path_gcd_dfs(g, w, target, visited, gcd(running, g.edges()[k].label), out);
        visited[w] = 0;
    }
}

}  // namespace

std::vector<Trail> trails_between(const EdgeLabeledGraph& g, int i, int k) {
    if (i == k) throw std::invalid_argument("trails_between: endpoints must differ");
    std::vector<Trail> out;
    std::vector<char> used(g.edges().size(), 0);
    Trail cur;
    cur.vertices.push_back(i);
    trail_dfs(g, i, k, used, cur, out);
    return out;
}

std::set<Int> trail_gcd_set(const EdgeLabeledGraph& g, int i, int k, bool use_trails) {
    if (i == k) throw std::invalid_argument("trail_gcd_set: endpoints must differ");
    std::set<Int> out;
    if (use_trails) {
        std::vector<char> used(g.edges().size(), 0);
        trail_gcd_dfs(g, i, k, used, Int(0), out);
        out.erase(Int(0));  // gcd(0) sentinel only appears if i == k, defensive
    } else {
        std::vector<char> visited(g.vertex_count() + 1, 0);
        visited[i] = 1;
        path_gcd_dfs(g, i, k, visited, Int(0), out);
    }
    return out;
}

LcmResult smallest_leading_entry(const EdgeLabeledGraph& g, int i, bool use_trails) {
    if (i < 2) throw std::invalid_argument("smallest_leading_entry requires i >= 2");
    std::set<Int> gcds;
    for (int k = 1; k < i; ++k) {
        std::set<Int> s = trail_gcd_set(g, i, k, use_trails);
        gcds.insert(s.begin(), s.end());
    }
    return lcm_reduced(gcds, g.ctx());
}

std::optional<Spline> construct_flow_up(const EdgeLabeledGraph& g, int i) {
    if (i < 2 || i > g.vertex_count())
        throw std::invalid_argument("construct_flow_up: index out of range");
    SplineLattice lat = build_spline_lattice(g);
    FlowUpBasisReport rep = flow_up_basis(lat);
    const Int& m = g.ctx().modulus();
    const Int& ideal = rep.leading_ideals[i - 1];

    LcmResult smallest = smallest_leading_entry(g, i);
    if (smallest.vanishes != (ideal == m) || (!smallest.vanishes && smallest.value != ideal))
        throw std::logic_error("construct_flow_up: lattice and trail-lcm leading entries disagree");
    if (ideal == m) return std::nullopt;

    // scale column i so its leading entry becomes gcd(d_i, m) mod m
    Int gg, x, y;
    mpz_gcdext(gg.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(),
               rep.basis.at(i - 1, i - 1).get_mpz_t(), m.get_mpz_t());
    std::vector<Int> scaled = rep.basis.column(i - 1);
    for (Int& e : scaled) e *= x;
    Spline out = reduce_spline(scaled, g.ctx());
    if (flow_up_index(out) != i || out.values[i - 1] != ideal)
        throw std::logic_error("construct_flow_up: leading entry mismatch");
    return out;
}

Spline reduce_spline(const std::vector<Int>& f, const ModulusContext& ctx) {
    Spline s;
    s.values.reserve(f.size());
    for (const Int& x : f) s.values.push_back(ctx.reduce(x));
    return s;
}

}  // namespace gspline
