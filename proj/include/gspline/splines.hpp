#ifndef GSPLINE_SPLINES_HPP
#define GSPLINE_SPLINES_HPP

#include "gspline/graph.hpp"

#include <optional>
#include <set>
#include <vector>

namespace gspline {

/// Vertex labeling (f_{v_1}, ..., f_{v_n}) of residues in [0, m).
struct Spline {
    std::vector<Int> values;

    bool operator==(const Spline& other) const = default;
    auto operator<=>(const Spline& other) const = default;
};

/// Flow-up index sentinel for the all-zero spline.
inline constexpr int kTrivialZero = 0;

/// A walk that repeats no edge. Vertices may repeat.
struct Trail {
    std::vector<int> vertices;  // a_0, ..., a_k
    std::vector<int> edges;     // positions into g.edges(), one per step
};

/// True iff every edge difference lies in the edge's ideal:
/// label | least-nonnegative-residue of (f_u - f_v).
bool is_spline(const EdgeLabeledGraph& g, const std::vector<Int>& f);

/// 1 + number of leading zeros; kTrivialZero for the zero spline.
int flow_up_index(const Spline& f);

/// (true, c) iff all nonzero entries equal c.
std::pair<bool, Int> is_constant_flow_up(const Spline& f);

/// Every trail from v_i to v_k (finitely many; oracle use only).
std::vector<Trail> trails_between(const EdgeLabeledGraph& g, int i, int k);

/// { gcd of labels along t : t a trail (or simple path) v_i -> v_k }.
/// Simple paths give the same lcm and are the production path.
std::set<Int> trail_gcd_set(const EdgeLabeledGraph& g, int i, int k, bool use_trails = false);

/// Smallest possible nonzero leading entry of an i-th flow-up class:
/// lcm over k < i of all trail gcds from v_i. vanishes means the lcm is
/// 0 mod m and no i-th flow-up class exists.
LcmResult smallest_leading_entry(const EdgeLabeledGraph& g, int i, bool use_trails = false);

/// An i-th flow-up class with the smallest achievable leading entry,
/// extracted from the lattice flow-up basis; nullopt when none exists.
std::optional<Spline> construct_flow_up(const EdgeLabeledGraph& g, int i);

/// Entrywise least-nonnegative residue mod m.
Spline reduce_spline(const std::vector<Int>& f, const ModulusContext& ctx);

}  // namespace gspline

#endif
