#include "gspline/lattice.hpp"

#include <stdexcept>

namespace gspline {

SplineLattice build_spline_lattice(const EdgeLabeledGraph& g) {
    const int n = g.vertex_count();
    const auto& edges = g.edges();
    const std::size_t ne = edges.size();

    // Constraints [M | -D] (f; t) = 0: per edge e = uv, f_u - f_v = label_e * t_e.
    IntMatrix constraints(ne, n + ne);
    for (std::size_t k = 0; k < ne; ++k) {
        constraints.at(k, edges[k].u - 1) = 1;
        constraints.at(k, edges[k].v - 1) = -1;
        constraints.at(k, n + k) = -edges[k].label;
    }
    IntMatrix ker = kernel_basis(constraints);

    IntMatrix gens(n, 0);
    for (std::size_t c = 0; c < ker.cols(); ++c) {
        std::vector<Int> f(n);
        for (int r = 0; r < n; ++r) f[r] = ker.at(r, c);
        gens.append_column(f);
    }
    for (int i = 0; i < n; ++i) {
        std::vector<Int> e(n, Int(0));
        e[i] = g.ctx().modulus();
        gens.append_column(e);
    }

    // every generator must satisfy the edge divisibility constraints
    for (std::size_t c = 0; c < gens.cols(); ++c)
        for (const Edge& e : edges)
            if ((gens.at(e.u - 1, c) - gens.at(e.v - 1, c)) % e.label != 0)
                throw std::logic_error("spline lattice generator violates an edge constraint");

    return SplineLattice{std::make_shared<EdgeLabeledGraph>(g), std::move(gens)};
}

FlowUpBasisReport flow_up_basis(const SplineLattice& lat) {
    const std::size_t n = lat.generators.rows();
    FlowUpBasisReport rep;
    rep.basis = hermite_normal_form(lat.generators);
    if (rep.basis.cols() != n)
        throw std::logic_error("spline lattice is not full rank");  // cannot happen: m Z^n <= L
    const Int& m = lat.graph->ctx().modulus();
    for (std::size_t i = 0; i < n; ++i) {
        rep.diagonal.push_back(rep.basis.at(i, i));
        rep.leading_ideals.push_back(gcd(rep.basis.at(i, i), m));
    }
    return rep;
}

ModuleInvariants module_invariants(const SplineLattice& lat) {
    const Int& m = lat.graph->ctx().modulus();
    FlowUpBasisReport rep = flow_up_basis(lat);
    ModuleInvariants inv;
    inv.delta = invariant_factors(rep.basis);
    inv.rank = 0;
    for (const Int& d : inv.delta) {
        if (m % d != 0) throw std::logic_error("lattice invariant factor does not divide m");
        inv.factors.push_back(m / d);
        if (d != m) ++inv.rank;
    }
    return inv;
}

bool in_lattice(const FlowUpBasisReport& rep, const std::vector<Int>& v) {
    const std::size_t n = rep.basis.rows();
    if (v.size() != n) throw std::invalid_argument("in_lattice: dimension mismatch");
    std::vector<Int> rem = v;
    for (std::size_t i = 0; i < n; ++i) {
        if (rem[i] % rep.basis.at(i, i) != 0) return false;
        Int q = rem[i] / rep.basis.at(i, i);
        for (std::size_t r = i; r < n; ++r) rem[r] -= q * rep.basis.at(r, i);
    }
    return true;
}

bool spans(const SplineLattice& lat, const std::vector<Spline>& gens, const ModulusContext& ctx) {
    const int n = lat.graph->vertex_count();
    IntMatrix candidate(n, 0);
    for (const Spline& s : gens) {
        if (!is_spline(*lat.graph, s.values))
            throw std::invalid_argument("spans: input vector is not a spline");
        candidate.append_column(s.values);
    }
    for (int i = 0; i < n; ++i) {
        std::vector<Int> e(n, Int(0));
        e[i] = ctx.modulus();
        candidate.append_column(e);
    }
    return hermite_normal_form(candidate) == hermite_normal_form(lat.generators);
}

}  // namespace gspline
