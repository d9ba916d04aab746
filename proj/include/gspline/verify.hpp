#ifndef GSPLINE_VERIFY_HPP
#define GSPLINE_VERIFY_HPP

#include "gspline/lattice.hpp"
#include "gspline/splines.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gspline {

struct CheckResult {
    bool ok;
    std::string diagnostic;  // names the first failure; empty on success
};

/// Theorem-style flow-up generator test: the set must contain, for every
/// index i whose leading ideal is proper, exactly one spline with flow-up
/// index i whose leading entry generates that ideal, and nothing for indices
/// whose leading ideal collapses to zero.
CheckResult check_flow_up_generators(const EdgeLabeledGraph& g, const std::vector<Spline>& set);

/// Minimality criterion: trivial spline present, all other members constant
/// flow-up classes, constants chain-orderable under ideal divisibility.
CheckResult check_minimum_criterion(const ModulusContext& ctx, const std::vector<Spline>& set);

/// Raised when exhaustive enumeration would exceed its node budget.
class OracleInfeasible : public std::runtime_error {
public:
    explicit OracleInfeasible(const std::string& what) : std::runtime_error(what) {}
};

/// All splines of g over Z/mZ, in lexicographic order, by constraint-
/// propagating DFS over the vertices in index order.
std::vector<Spline> enumerate_splines(const EdgeLabeledGraph& g,
                                      std::uint64_t budget = 10'000'000);

/// Rank from the matrix of all enumerated splines (SNF with mI adjoined);
/// independent of the lattice-kernel path.
int oracle_rank(const EdgeLabeledGraph& g, std::uint64_t budget = 10'000'000);

/// Counts enumerated splines violating the trail-lcm divisibility bound on
/// entries of flow-up classes. Zero for a correct implementation.
long thm_min_violations(const EdgeLabeledGraph& g, const std::vector<Spline>& all);

}  // namespace gspline

#endif
