#include "gspline/constructions.hpp"

#include "gspline/lattice.hpp"
#include "gspline/verify.hpp"

#include <algorithm>
#include <stdexcept>

namespace gspline {

std::string to_string(Certificate c) {
    switch (c) {
        case Certificate::CriterionMinimum: return "criterion-minimum";
        case Certificate::RankMatchedMinimum: return "rank-matched-minimum";
        case Certificate::GeneratingOnly: return "generating-only";
    }
    return "unknown";
}

void ChainLabels::validate(const ModulusContext& ctx) const {
    if (labels.empty()) throw std::invalid_argument("empty label chain");
    for (const Int& a : labels) {
        if (a <= 1 || a >= ctx.modulus() || ctx.modulus() % a != 0)
            throw std::invalid_argument("chain label " + a.get_str() +
                                        " is not a proper divisor of m");
    }
    for (std::size_t i = 0; i + 1 < labels.size(); ++i) {
        const Int& lo = direction == Direction::Decreasing ? labels[i + 1] : labels[i];
        const Int& hi = direction == Direction::Decreasing ? labels[i] : labels[i + 1];
        if (hi % lo != 0)
            throw std::invalid_argument("chain divisibility fails between positions " +
                                        std::to_string(i + 1) + " and " + std::to_string(i + 2));
    }
}

namespace {

// Fills certificate bookkeeping and the module invariants for a finished set.
void finalize_set(GeneratingSet& set, const EdgeLabeledGraph& g, Certificate cert) {
    for (const Spline& s : set.splines) {
        set.flow_up_indices.push_back(flow_up_index(s));
        auto [constant, c] = is_constant_flow_up(s);
        set.constants.push_back(constant ? c : Int(0));
    }
    ModuleInvariants inv = module_invariants(build_spline_lattice(g));
    set.invariant_factors = inv.factors;
    set.rank = inv.rank;
    set.certificate = cert;
    if (cert == Certificate::CriterionMinimum &&
        set.rank != static_cast<int>(set.splines.size()))
        throw std::logic_error("criterion-certified set size disagrees with the SNF rank");
}

}  // namespace

Construction son_decreasing(int n, const ChainLabels& chain, const ModulusContext& ctx) {
    if (n < 3) throw std::invalid_argument("son_decreasing requires n >= 3");
    if (chain.direction != ChainLabels::Direction::Decreasing)
        throw std::invalid_argument("son_decreasing needs a decreasing chain");
    chain.validate(ctx);
    if (static_cast<long>(chain.labels.size()) != triangular(n))
        throw std::invalid_argument("chain length must be r_n");

    EdgeLabeledGraph g = complete_from_labels({n, chain.labels}, ctx);
    GeneratingSet set;
    set.splines.push_back(Spline{std::vector<Int>(n, Int(1))});
    for (int i = 2; i <= n; ++i) {
        std::vector<Int> f(n, Int(0));
        f[i - 1] = chain.labels[triangular(i - 1)];  // a_{r_{i-1}+1}, the label of v_1 v_i
        set.splines.push_back(Spline{std::move(f)});
    }
    for (const Spline& s : set.splines)
        if (!is_spline(g, s.values)) throw std::logic_error("son_decreasing produced a non-spline");
    finalize_set(set, g, Certificate::CriterionMinimum);
    return {std::move(g), std::move(set)};
}

Construction son_increasing(int n, const ChainLabels& chain, const ModulusContext& ctx) {
    if (n < 3) throw std::invalid_argument("son_increasing requires n >= 3");
    if (chain.direction != ChainLabels::Direction::Increasing)
        throw std::invalid_argument("son_increasing needs an increasing chain");
    chain.validate(ctx);
    const long rn = triangular(n);
    if (static_cast<long>(chain.labels.size()) != rn)
        throw std::invalid_argument("chain length must be r_n");

    EdgeLabeledGraph g = complete_from_labels({n, chain.labels}, ctx);
    GeneratingSet set;
    set.splines.push_back(Spline{std::vector<Int>(n, Int(1))});
    for (int i = 2; i <= n; ++i) {
        const Int& c = chain.labels[rn - (n - i) - 1];  // a_{r_n - (n-i)}
        std::vector<Int> f(n, Int(0));
        for (int v = i; v <= n; ++v) f[v - 1] = c;
        set.splines.push_back(Spline{std::move(f)});
    }
    for (const Spline& s : set.splines)
        if (!is_spline(g, s.values)) throw std::logic_error("son_increasing produced a non-spline");
    finalize_set(set, g, Certificate::CriterionMinimum);
    return {std::move(g), std::move(set)};
}

GeneratingSet prime_power_unordered(const EdgeLabeledGraph& g) {
    const ModulusContext& ctx = g.ctx();
    if (!ctx.is_prime_power())
        throw std::invalid_argument("prime_power_unordered requires a prime-power modulus");
    const Int& p = ctx.factorization()[0].first;
    const int n = g.vertex_count();
    if (!g.is_complete()) throw std::invalid_argument("prime_power_unordered requires K_n");
    for (const Edge& e : g.edges()) {
        Int l = e.label;
        while (l % p == 0) l /= p;
        if (l != 1 || e.label == 1 || e.label == ctx.modulus())
            throw std::invalid_argument("edge label " + e.label.get_str() +
                                        " is not a proper power of " + p.get_str());
    }

    GeneratingSet set;
    set.splines.push_back(Spline{std::vector<Int>(n, Int(1))});
    for (int i = 2; i <= n; ++i) {
        LcmResult lead = smallest_leading_entry(g, i);
        if (lead.vanishes)
            throw std::logic_error("prime-power leading entry vanished");  // impossible: lcm of
                                                                           // p-powers below p^t
        // component of v_i keeping only edges with label divisible by p * lead
        Int threshold = lead.value * p;
        std::vector<char> in_comp(n + 1, 0);
        std::vector<int> stack{i};
        in_comp[i] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [w, k] : g.neighbors(v))
                if (!in_comp[w] && g.edges()[k].label % threshold == 0) {
                    in_comp[w] = 1;
                    stack.push_back(w);
                }
        }
        for (int j = 1; j < i; ++j)
            if (in_comp[j])
                throw std::logic_error("high-exponent component reaches an earlier vertex");
        std::vector<Int> f(n, Int(0));
        for (int v = 1; v <= n; ++v)
            if (in_comp[v]) f[v - 1] = lead.value;
        set.splines.push_back(Spline{std::move(f)});
    }
    for (const Spline& s : set.splines)
        if (!is_spline(g, s.values))
            throw std::logic_error("prime_power_unordered produced a non-spline");
    finalize_set(set, g, Certificate::CriterionMinimum);
    return set;
}

EdgeLabeledGraph rank_one_pq(int n, const Int& p_alpha, const Int& q_beta,
                             const ModulusContext& ctx) {
    if (n < 4)
        throw std::invalid_argument("rank_one_pq requires n >= 4 (no two disjoint spanning "
                                    "trees in K_3)");
    if (ctx.modulus() != p_alpha * q_beta || gcd(p_alpha, q_beta) != 1)
        throw std::invalid_argument("modulus must be p^alpha * q^beta with coprime parts");
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            edges.push_back({i, j, j == i + 1 ? p_alpha : q_beta});
    return EdgeLabeledGraph(ctx, n, std::move(edges));
}

EdgeLabeledGraph star_extension(const EdgeLabeledGraph& g, StarMode mode, const Int& p,
                                const Int& q) {
    const ModulusContext& ctx = g.ctx();
    if (ctx.modulus() != p * q || ctx.factorization().size() != 2 ||
        ctx.factorization()[0].second != 1 || ctx.factorization()[1].second != 1)
        throw std::invalid_argument("star_extension requires m = pq with distinct primes");
    int old_rank = module_invariants(build_spline_lattice(g)).rank;

    std::vector<Int> star(g.vertex_count(), p);
    if (mode == StarMode::OneQ) star[0] = q;  // deterministic choice: v_1 v_{n+1} carries q
    EdgeLabeledGraph out = add_star(g, star);

    int new_rank = module_invariants(build_spline_lattice(out)).rank;
    int expected = mode == StarMode::AllP ? old_rank + 1 : old_rank;
    if (new_rank != expected)
        throw std::logic_error("star_extension rank moved from " + std::to_string(old_rank) +
                               " to " + std::to_string(new_rank) + ", expected " +
                               std::to_string(expected));
    return out;
}

EdgeLabeledGraph pq_rank(int n, int target_rank, const Int& p, const Int& q,
                         const ModulusContext& ctx) {
    if (n < 2) throw std::invalid_argument("pq_rank requires n >= 2");
    if (target_rank < 2 || target_rank > n)
        throw std::invalid_argument("target rank must satisfy 2 <= i <= n");
    EdgeLabeledGraph g(ctx, 2, {{1, 2, p}});
    for (int step = 0; step < target_rank - 2; ++step)
        g = star_extension(g, StarMode::AllP, p, q);
    for (int step = 0; step < n - target_rank; ++step)
        g = star_extension(g, StarMode::OneQ, p, q);
    int rank = module_invariants(build_spline_lattice(g)).rank;
    if (rank != target_rank) throw std::logic_error("pq_rank missed the target rank");
    return g;
}

}  // namespace gspline
