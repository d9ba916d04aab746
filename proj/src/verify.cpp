#include "gspline/verify.hpp"

#include <algorithm>
#include <map>

namespace gspline {

CheckResult check_flow_up_generators(const EdgeLabeledGraph& g, const std::vector<Spline>& set) {
    const int n = g.vertex_count();
    const Int& m = g.ctx().modulus();
    FlowUpBasisReport rep = flow_up_basis(build_spline_lattice(g));

    std::map<int, const Spline*> by_index;
    for (const Spline& s : set) {
        if (!is_spline(g, s.values)) return {false, "set member is not a spline"};
        int idx = flow_up_index(s);
        if (idx == kTrivialZero) return {false, "set contains the zero spline"};
        if (!by_index.emplace(idx, &s).second)
            return {false, "duplicate flow-up index " + std::to_string(idx)};
    }
    for (int i = 1; i <= n; ++i) {
        const Int& ideal = rep.leading_ideals[i - 1];
        auto it = by_index.find(i);
        if (ideal == m) {
            if (it != by_index.end())
                return {false, "index " + std::to_string(i) +
                                   " admits no flow-up class but the set has one"};
            continue;
        }
        if (it == by_index.end())
            return {false, "missing flow-up class at index " + std::to_string(i)};
        Int lead = gcd(it->second->values[i - 1], m);
        if (lead != ideal)
            return {false, "index " + std::to_string(i) + ": leading entry generates <" +
                               lead.get_str() + ">, needs <" + ideal.get_str() + ">"};
    }
    if (by_index.size() != set.size() || static_cast<int>(set.size()) >
                                             n)  // unreachable given the checks above
        return {false, "inconsistent set"};
    return {true, ""};
}

CheckResult check_minimum_criterion(const ModulusContext& ctx, const std::vector<Spline>& set) {
    const Int& m = ctx.modulus();
    bool has_trivial = false;
    std::vector<std::pair<Int, Int>> constants;  // (gcd with m, printed constant)
    for (const Spline& s : set) {
        bool trivial = std::all_of(s.values.begin(), s.values.end(),
                                   [](const Int& x) { return x == 1; });
        if (trivial) {
            has_trivial = true;
            continue;
        }
        auto [constant, c] = is_constant_flow_up(s);
        if (!constant || c == 0)
            return {false, "set member is not a constant flow-up class"};
        constants.emplace_back(gcd(c, m), c);
    }
    if (!has_trivial) return {false, "trivial spline (1,...,1) missing"};
    std::sort(constants.begin(), constants.end());
    for (std::size_t i = 1; i < constants.size(); ++i)
        if (constants[i].first % constants[i - 1].first != 0)
            return {false, "constants " + constants[i - 1].second.get_str() + "," +
                               constants[i].second.get_str() + " incomparable"};
    return {true, ""};
}

namespace {

struct Progression {
    Int first;    // least admissible residue
    Int step;     // modulus of the progression, divides m
    bool empty;
};

// Intersects the congruences f == f_w mod d over assigned neighbors w.
Progression admissible(const EdgeLabeledGraph& g, const std::vector<Int>& partial, int v) {
    const Int& m = g.ctx().modulus();
    Int r = 0, mod = 1;
    for (auto [w, k] : g.neighbors(v)) {
        if (w >= v) continue;
        const Int& d = g.edges()[k].label;
        const Int& rw = partial[w - 1];
        // merge r (mod mod) with rw (mod d)
        Int gg = gcd(mod, d);
        if ((r - rw) % gg != 0) return {Int(0), Int(0), true};
        // CRT: x == r (mod mod), x == rw (mod d)
        Int l = lcm(mod, d);
        Int step = mod / gg;
        // solve r + mod*t == rw (mod d)  =>  t == (rw - r)/gg * inv(mod/gg) (mod d/gg)
        Int dg = d / gg;
        Int inv;
        if (mpz_invert(inv.get_mpz_t(), Int(mod / gg).get_mpz_t(), dg.get_mpz_t()) == 0 &&
            dg != 1)
            return {Int(0), Int(0), true};  // cannot happen: mod/gg is invertible mod d/gg
        Int t = dg == 1 ? Int(0) : Int((((rw - r) / gg) % dg * inv) % dg);
        r = r + mod * t;
        mod = l;
        Int rr;
        mpz_fdiv_r(rr.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
        r = rr;
    }
    (void)m;
    return {r, mod, false};
}

}  // namespace

std::vector<Spline> enumerate_splines(const EdgeLabeledGraph& g, std::uint64_t budget) {
    const int n = g.vertex_count();
    const Int& m = g.ctx().modulus();
    std::vector<Spline> out;
    std::vector<Int> partial(n);
    std::uint64_t visited = 0;

    // iterative DFS over vertices in index order
    struct Frame {
        Progression prog;
        Int next;  // next residue to try
    };
    std::vector<Frame> stack;
    auto push = [&](int depth) -> bool {
        Progression p = admissible(g, partial, depth + 1);
        stack.push_back({p, p.first});
        return !p.empty;
    };
    push(0);
    while (!stack.empty()) {
        int depth = static_cast<int>(stack.size()) - 1;
        Frame& f = stack.back();
        if (f.prog.empty || f.next >= m) {
            stack.pop_back();
            continue;
        }
        if (++visited > budget)
            throw OracleInfeasible("enumeration budget of " + std::to_string(budget) +
                                   " nodes exceeded");
        partial[depth] = f.next;
        f.next += f.prog.step;
        if (depth + 1 == n)
            out.push_back(Spline{partial});
        else
            push(depth + 1);
    }
    return out;
}

int oracle_rank(const EdgeLabeledGraph& g, std::uint64_t budget) {
    std::vector<Spline> all = enumerate_splines(g, budget);
    const int n = g.vertex_count();
    const Int& m = g.ctx().modulus();
    IntMatrix mat(n, all.size() + n);
    for (std::size_t c = 0; c < all.size(); ++c)
        for (int r = 0; r < n; ++r) mat.at(r, c) = all[c].values[r];
    for (int i = 0; i < n; ++i) mat.at(i, all.size() + i) = m;
    std::vector<Int> d = invariant_factors(mat);
    int rank = 0;
    for (const Int& x : d) {
        if (m % x != 0) throw std::logic_error("oracle_rank: invariant factor does not divide m");
        if (x != m) ++rank;
    }
    return rank;
}

long thm_min_violations(const EdgeLabeledGraph& g, const std::vector<Spline>& all) {
    const int n = g.vertex_count();
    const Int& m = g.ctx().modulus();
    long violations = 0;
    // L[j][i]: lcm of trail gcds from v_j to v_1..v_{i-1}; entry f_{v_j} of any
    // spline with i-1 leading zeros must lie in <L[j][i]>.
    for (int i = 2; i <= n; ++i) {
        std::vector<Int> bound(n + 1, Int(0));
        for (int j = i; j <= n; ++j) {
            std::set<Int> gcds;
            for (int k = 1; k < i; ++k) {
                std::set<Int> s = trail_gcd_set(g, j, k);
                gcds.insert(s.begin(), s.end());
            }
            LcmResult l = lcm_reduced(gcds, g.ctx());
            bound[j] = l.vanishes ? Int(0) : l.value;
        }
        for (const Spline& f : all) {
            int idx = flow_up_index(f);
            if (idx != kTrivialZero && idx < i) continue;  // fewer than i-1 leading zeros
            for (int j = i; j <= n; ++j) {
                if (bound[j] == 0) continue;
                if (f.values[j - 1] % gcd(bound[j], m) != 0) ++violations;
            }
        }
    }
    return violations;
}

}  // namespace gspline
