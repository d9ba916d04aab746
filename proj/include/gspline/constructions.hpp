#ifndef GSPLINE_CONSTRUCTIONS_HPP
#define GSPLINE_CONSTRUCTIONS_HPP

#include "gspline/graph.hpp"
#include "gspline/splines.hpp"

#include <string>
#include <vector>

namespace gspline {

enum class Certificate {
    CriterionMinimum,     // certified by the constant-chain criterion
    RankMatchedMinimum,   // cardinality equals the SNF rank
    GeneratingOnly,       // spans, but may be larger than the rank
};

std::string to_string(Certificate c);

struct GeneratingSet {
    std::vector<Spline> splines;       // ordered, trivial spline first when present
    std::vector<int> flow_up_indices;  // per spline
    std::vector<Int> constants;        // 0 when the member is not constant
    Certificate certificate = Certificate::GeneratingOnly;
    std::vector<Int> invariant_factors;  // module factors m/delta_i, 1-entries included
    int rank = 0;
};

/// Divisibility chain a_1..a_{r_n} of proper canonical labels.
struct ChainLabels {
    enum class Direction { Decreasing, Increasing };
    std::vector<Int> labels;
    Direction direction;

    /// Throws unless consecutive divisibility holds in `direction`, every
    /// label is proper (1 < a_i < m), and the chain top strictly divides m.
    void validate(const ModulusContext& ctx) const;
};

struct Construction {
    EdgeLabeledGraph graph;
    GeneratingSet set;
};

/// K_n with a decreasing chain a_{r_n} | ... | a_1 | m: the minimum flow-up
/// set is the trivial spline plus single-entry classes a_{r_{i-1}+1} e_i.
Construction son_decreasing(int n, const ChainLabels& chain, const ModulusContext& ctx);

/// K_n with an increasing chain a_1 | ... | a_{r_n} | m: the minimum flow-up
/// set is the trivial spline plus the constants a_{r_n-(n-i)} on v_i..v_n.
Construction son_increasing(int n, const ChainLabels& chain, const ModulusContext& ctx);

/// Minimum generating set for an arbitrary prime-power labeled K_n over
/// Z/p^t Z: F^(i) is p^{a_i} on the high-exponent component of v_i.
GeneratingSet prime_power_unordered(const EdgeLabeledGraph& g);

/// K_n (n >= 4) over p^alpha q^beta with rank 1: path edges labeled p^alpha,
/// all others q^beta (two edge-disjoint spanning trees force constancy).
EdgeLabeledGraph rank_one_pq(int n, const Int& p_alpha, const Int& q_beta,
                             const ModulusContext& ctx);

enum class StarMode { AllP, OneQ };

/// Adds S_n to a K_n over m = pq. AllP labels every new edge p (rank + 1);
/// OneQ labels edge v_1 v_{n+1} with q and the rest p (rank preserved).
/// The resulting rank is asserted via the SNF path.
EdgeLabeledGraph star_extension(const EdgeLabeledGraph& g, StarMode mode, const Int& p,
                                const Int& q);

/// K_n over m = pq with module rank exactly i (2 <= i <= n): K_2 labeled p,
/// then i-2 AllP extensions followed by n-i OneQ extensions.
EdgeLabeledGraph pq_rank(int n, int target_rank, const Int& p, const Int& q,
                         const ModulusContext& ctx);

}  // namespace gspline

#endif
