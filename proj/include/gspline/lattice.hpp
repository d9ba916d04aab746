#ifndef GSPLINE_LATTICE_HPP
#define GSPLINE_LATTICE_HPP

#include "gspline/graph.hpp"
#include "gspline/matrix.hpp"
#include "gspline/splines.hpp"

#include <memory>
#include <vector>

namespace gspline {

/// Integer lattice L = { f in Z^n : label(e) | f_u - f_v for every edge }.
/// Contains m Z^n, hence full rank. Splines mod m are exactly L / m Z^n.
struct SplineLattice {
    std::shared_ptr<const EdgeLabeledGraph> graph;
    IntMatrix generators;  // columns generate L
};

/// Triangular (flow-up) basis of the spline lattice: column i has i-1 leading
/// zeros and positive diagonal d_i. leading_ideals[i-1] = gcd(d_i, m) is the
/// canonical leading-entry ideal at index i (m means no flow-up class exists).
struct FlowUpBasisReport {
    IntMatrix basis;
    std::vector<Int> diagonal;
    std::vector<Int> leading_ideals;
};

/// Invariant-factor decomposition of the module L / m Z^n.
struct ModuleInvariants {
    std::vector<Int> delta;    // SNF of the lattice basis, delta_i | m
    std::vector<Int> factors;  // module factors m / delta_i, decreasing divisibility
    int rank;                  // number of nontrivial factors = minimal generator count
};

/// Builds L from the integer kernel of the edge-constraint system, with the
/// columns m e_i adjoined. Every generator is verified against the edge
/// divisibility constraints.
SplineLattice build_spline_lattice(const EdgeLabeledGraph& g);

FlowUpBasisReport flow_up_basis(const SplineLattice& lat);

ModuleInvariants module_invariants(const SplineLattice& lat);

/// True iff v (an integer vector) lies in the lattice spanned by the report basis.
bool in_lattice(const FlowUpBasisReport& rep, const std::vector<Int>& v);

/// True iff the given splines, lifted to Z together with m e_i, span L,
/// i.e. they generate the whole spline module over Z/mZ.
bool spans(const SplineLattice& lat, const std::vector<Spline>& gens, const ModulusContext& ctx);

}  // namespace gspline

#endif
