#include "gspline/constructions.hpp"
#include "gspline/io.hpp"
#include "gspline/lattice.hpp"
#include "gspline/splines.hpp"
#include "gspline/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace gspline;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;

std::vector<Int> parse_int_list(const std::string& csv) {
    std::vector<Int> out;
    size_t pos = 0;
    while (pos <= csv.size()) {
        size_t comma = csv.find(',', pos);
        out.push_back(parse_int_expr(csv.substr(pos, comma == std::string::npos
                                                         ? comma
                                                         : comma - pos)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

// Detects a canonical-order divisibility chain on a complete graph.
std::optional<ChainLabels> detect_chain(const EdgeLabeledGraph& g) {
    if (!g.is_complete() || g.vertex_count() < 3) return std::nullopt;
    std::vector<Int> labels(triangular(g.vertex_count()));
    for (const Edge& e : g.edges()) labels[complete_edge_index(e.u, e.v) - 1] = e.label;
    for (const Int& l : labels)
        if (l <= 1 || l >= g.ctx().modulus()) return std::nullopt;
    auto chained = [&](bool increasing) {
        for (std::size_t i = 0; i + 1 < labels.size(); ++i) {
            const Int& lo = increasing ? labels[i] : labels[i + 1];
            const Int& hi = increasing ? labels[i + 1] : labels[i];
            if (hi % lo != 0) return false;
        }
        return true;
    };
    if (chained(false)) return ChainLabels{labels, ChainLabels::Direction::Decreasing};
    if (chained(true)) return ChainLabels{labels, ChainLabels::Direction::Increasing};
    return std::nullopt;
}

bool all_prime_power_labels(const EdgeLabeledGraph& g) {
    if (!g.ctx().is_prime_power() || !g.is_complete()) return false;
    const Int& p = g.ctx().factorization()[0].first;
    for (const Edge& e : g.edges()) {
        Int l = e.label;
        if (l <= 1 || l >= g.ctx().modulus()) return false;
        while (l % p == 0) l /= p;
        if (l != 1) return false;
    }
    return true;
}

// Flow-up generating set from the lattice basis: one spline per index whose
// leading ideal is proper, scaled so the leading entry generates that ideal.
GeneratingSet mingen_generic(const EdgeLabeledGraph& g) {
    const Int& m = g.ctx().modulus();
    SplineLattice lat = build_spline_lattice(g);
    FlowUpBasisReport rep = flow_up_basis(lat);
    GeneratingSet set;
    for (int i = 1; i <= g.vertex_count(); ++i) {
        if (rep.leading_ideals[i - 1] == m) continue;
        Int gg, x, y;
        mpz_gcdext(gg.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(),
                   rep.basis.at(i - 1, i - 1).get_mpz_t(), m.get_mpz_t());
        std::vector<Int> col = rep.basis.column(i - 1);
        for (Int& e : col) e *= x;
        set.splines.push_back(reduce_spline(col, g.ctx()));
    }
    if (!spans(lat, set.splines, g.ctx())) {
        // fall back to the full reduced basis
        set.splines.clear();
        for (int i = 1; i <= g.vertex_count(); ++i)
            set.splines.push_back(reduce_spline(rep.basis.column(i - 1), g.ctx()));
    }
    ModuleInvariants inv = module_invariants(lat);
    set.rank = inv.rank;
    set.invariant_factors = inv.factors;
    for (const Spline& s : set.splines) {
        set.flow_up_indices.push_back(flow_up_index(s));
        auto [constant, c] = is_constant_flow_up(s);
        set.constants.push_back(constant ? c : Int(0));
    }
    bool criterion = check_minimum_criterion(g.ctx(), set.splines).ok;
    if (criterion && static_cast<int>(set.splines.size()) == set.rank)
        set.certificate = Certificate::CriterionMinimum;
    else if (static_cast<int>(set.splines.size()) == set.rank)
        set.certificate = Certificate::RankMatchedMinimum;
    else
        set.certificate = Certificate::GeneratingOnly;
    return set;
}

GeneratingSet compute_mingen(const EdgeLabeledGraph& g) {
    if (auto chain = detect_chain(g)) {
        if (chain->direction == ChainLabels::Direction::Decreasing)
            return son_decreasing(g.vertex_count(), *chain, g.ctx()).set;
        return son_increasing(g.vertex_count(), *chain, g.ctx()).set;
    }
    if (all_prime_power_labels(g)) return prime_power_unordered(g);
    return mingen_generic(g);
}

int run(int argc, char** argv) {
    CLI::App app{"generalized spline modules on edge-labeled graphs over Z/mZ"};
    app.require_subcommand(1);

    std::string graph_out = "graph.json", set_out = "genset.json", json_out;
    std::string graph_file, set_file, mode_str = "all-p", level = "minimum";
    std::string m_str, chain_str, labels_str, p_str = "2", q_str = "3";
    int n = 0, target_rank = 2;
    std::uint64_t budget = 10'000'000;
    bool check_trails = false;

    CLI::App* gen = app.add_subcommand("gen", "construct a labeled graph and generating set");
    gen->require_subcommand(1);
    auto add_outputs = [&](CLI::App* c) {
        c->add_option("--graph-out", graph_out, "graph JSON output path");
        c->add_option("--set-out", set_out, "generating-set JSON output path");
    };
    CLI::App* son_dec = gen->add_subcommand("son-dec", "decreasing divisibility chain on K_n");
    son_dec->add_option("--n", n)->required();
    son_dec->add_option("--m", m_str)->required();
    son_dec->add_option("--chain", chain_str, "comma-separated labels a_1..a_{r_n}")->required();
    add_outputs(son_dec);
    CLI::App* son_inc = gen->add_subcommand("son-inc", "increasing divisibility chain on K_n");
    son_inc->add_option("--n", n)->required();
    son_inc->add_option("--m", m_str)->required();
    son_inc->add_option("--chain", chain_str)->required();
    add_outputs(son_inc);
    CLI::App* ppow = gen->add_subcommand("prime-power", "unordered prime-power labels on K_n");
    ppow->add_option("--n", n)->required();
    ppow->add_option("--m", m_str)->required();
    ppow->add_option("--labels", labels_str, "comma-separated labels l_1..l_{r_n}")->required();
    add_outputs(ppow);
    CLI::App* r1 = gen->add_subcommand("rank-one-pq", "rank-1 complete graph over p^a q^b");
    r1->add_option("--n", n)->required();
    r1->add_option("--p", p_str, "first prime power");
    r1->add_option("--q", q_str, "second prime power");
    add_outputs(r1);
    CLI::App* pqr = gen->add_subcommand("pq-rank", "K_n over pq with prescribed rank");
    pqr->add_option("--n", n)->required();
    pqr->add_option("--rank", target_rank)->required();
    pqr->add_option("--p", p_str);
    pqr->add_option("--q", q_str);
    add_outputs(pqr);
    CLI::App* ext = gen->add_subcommand("star-ext", "add a star to a complete graph over pq");
    ext->add_option("--graph", graph_file)->required()->check(CLI::ExistingFile);
    ext->add_option("--mode", mode_str)->check(CLI::IsMember({"all-p", "one-q"}));
    ext->add_option("--p", p_str);
    ext->add_option("--q", q_str);
    add_outputs(ext);

    CLI::App* rank = app.add_subcommand("rank", "module rank and invariant factors");
    rank->add_option("graph", graph_file)->required()->check(CLI::ExistingFile);

    CLI::App* mingen = app.add_subcommand("mingen", "minimum (or flow-up) generating set");
    mingen->add_option("graph", graph_file)->required()->check(CLI::ExistingFile);
    mingen->add_option("--json-out", json_out, "generating-set JSON output path");

    CLI::App* verify = app.add_subcommand("verify", "check a generating set against a graph");
    verify->add_option("graph", graph_file)->required()->check(CLI::ExistingFile);
    verify->add_option("set", set_file)->required()->check(CLI::ExistingFile);
    verify->add_option("--level", level)
        ->check(CLI::IsMember({"spline", "flowup", "spanning", "minimum"}));

    CLI::App* oracle = app.add_subcommand("oracle", "exhaustive-enumeration cross checks");
    oracle->add_option("graph", graph_file)->required()->check(CLI::ExistingFile);
    oracle->add_option("--budget", budget, "enumeration node cap");
    oracle->add_flag("--check-trails", check_trails, "also compare trail vs path lcms");
    oracle->add_option("--json-out", json_out, "machine-readable report path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    auto emit = [&](const EdgeLabeledGraph& g, const GeneratingSet& set) {
        write_file(graph_out, graph_to_json(g));
        write_file(set_out, genset_to_json(set));
        std::cout << "wrote " << graph_out << " and " << set_out << "\n";
    };

    if (son_dec->parsed() || son_inc->parsed()) {
        ModulusContext ctx = ModulusContext::create(parse_int_expr(m_str));
        ChainLabels chain{parse_int_list(chain_str),
                          son_dec->parsed() ? ChainLabels::Direction::Decreasing
                                            : ChainLabels::Direction::Increasing};
        Construction c = son_dec->parsed() ? son_decreasing(n, chain, ctx)
                                           : son_increasing(n, chain, ctx);
        emit(c.graph, c.set);
        return kExitPass;
    }
    if (ppow->parsed()) {
        ModulusContext ctx = ModulusContext::create(parse_int_expr(m_str));
        EdgeLabeledGraph g = complete_from_labels({n, parse_int_list(labels_str)}, ctx);
        emit(g, prime_power_unordered(g));
        return kExitPass;
    }
    if (r1->parsed() || pqr->parsed()) {
        Int p = parse_int_expr(p_str), q = parse_int_expr(q_str);
        ModulusContext ctx = ModulusContext::create(p * q);
        EdgeLabeledGraph g = r1->parsed() ? rank_one_pq(n, p, q, ctx)
                                          : pq_rank(n, target_rank, p, q, ctx);
        emit(g, mingen_generic(g));
        return kExitPass;
    }
    if (ext->parsed()) {
        EdgeLabeledGraph g = graph_from_json(read_file(graph_file));
        Int p = parse_int_expr(p_str), q = parse_int_expr(q_str);
        EdgeLabeledGraph out = star_extension(
            g, mode_str == "all-p" ? StarMode::AllP : StarMode::OneQ, p, q);
        emit(out, mingen_generic(out));
        return kExitPass;
    }

    if (rank->parsed()) {
        EdgeLabeledGraph g = graph_from_json(read_file(graph_file));
        ModuleInvariants inv = module_invariants(build_spline_lattice(g));
        std::cout << "rank " << inv.rank << "\n";
        std::cout << "invariant factors:";
        for (const Int& f : inv.factors) std::cout << " " << f.get_str();
        std::cout << "\n";
        return kExitPass;
    }

    if (mingen->parsed()) {
        EdgeLabeledGraph g = graph_from_json(read_file(graph_file));
        GeneratingSet set = compute_mingen(g);
        std::string payload = genset_to_json(set);
        if (!json_out.empty())
            write_file(json_out, payload);
        else
            std::cout << payload;
        std::cerr << "rank " << set.rank << ", certificate " << to_string(set.certificate)
                  << (set.certificate == Certificate::GeneratingOnly ? " (not minimum)" : "")
                  << "\n";
        return kExitPass;
    }

    if (verify->parsed()) {
        EdgeLabeledGraph g = graph_from_json(read_file(graph_file));
        GeneratingSet set = genset_from_json(read_file(set_file));
        bool requested_ok = true;
        auto report = [&](const std::string& name, const CheckResult& r, bool requested) {
            std::cout << name << ": " << (r.ok ? "pass" : "fail")
                      << (r.ok || r.diagnostic.empty() ? "" : " (" + r.diagnostic + ")") << "\n";
            if (requested && !r.ok) requested_ok = false;
        };

        CheckResult spline_ok{true, ""};
        for (std::size_t i = 0; i < set.splines.size() && spline_ok.ok; ++i) {
            if (static_cast<int>(set.splines[i].values.size()) != g.vertex_count()) {
                spline_ok = {false, "member " + std::to_string(i + 1) + " has wrong length"};
                break;
            }
            for (const Edge& e : g.edges()) {
                Int diff = g.ctx().reduce(set.splines[i].values[e.u - 1] -
                                          set.splines[i].values[e.v - 1]);
                if (diff % e.label != 0) {
                    spline_ok = {false, "member " + std::to_string(i + 1) +
                                            " violates edge v" + std::to_string(e.u) + "v" +
                                            std::to_string(e.v)};
                    break;
                }
            }
        }
        report("spline", spline_ok, true);
        if (spline_ok.ok && (level == "flowup" || level == "minimum"))
            report("flowup", check_flow_up_generators(g, set.splines), level == "flowup");
        if (spline_ok.ok && (level == "spanning" || level == "minimum")) {
            bool s = spans(build_spline_lattice(g), set.splines, g.ctx());
            report("spanning", {s, s ? "" : "set does not span the module"},
                   level == "spanning" || level == "minimum");
        }
        if (spline_ok.ok && level == "minimum") {
            CheckResult crit = check_minimum_criterion(g.ctx(), set.splines);
            report("minimum", crit, true);
        }
        return requested_ok ? kExitPass : kExitFail;
    }

    if (oracle->parsed()) {
        EdgeLabeledGraph g = graph_from_json(read_file(graph_file));
        std::vector<Spline> all;
        try {
            all = enumerate_splines(g, budget);
        } catch (const OracleInfeasible& e) {
            std::cout << "infeasible: " << e.what() << "\n";
            return kExitInfeasible;
        }
        int enumerated_rank = oracle_rank(g, budget);
        int lattice_rank = module_invariants(build_spline_lattice(g)).rank;
        long violations = thm_min_violations(g, all);
        bool agree = enumerated_rank == lattice_rank;

        bool trails_match = true;
        if (check_trails) {
            for (int i = 2; i <= g.vertex_count() && trails_match; ++i)
                trails_match = smallest_leading_entry(g, i, true).value ==
                               smallest_leading_entry(g, i, false).value;
        }

        std::cout << (agree ? "ranks agree: " + std::to_string(lattice_rank)
                            : "RANK MISMATCH: lattice " + std::to_string(lattice_rank) +
                                  " vs enumeration " + std::to_string(enumerated_rank))
                  << "; splines: " << all.size() << "; thm-min violations: " << violations;
        if (check_trails) std::cout << "; trail-lcm matches paths: " << (trails_match ? "yes" : "NO");
        std::cout << "\n";

        if (!json_out.empty()) {
            ordered_json j;
            j["lattice_rank"] = lattice_rank;
            j["enumeration_rank"] = enumerated_rank;
            j["spline_count"] = all.size();
            j["thm_min_violations"] = violations;
            if (check_trails) j["trail_lcm_matches_paths"] = trails_match;
            write_file(json_out, j.dump(2) + "\n");
        }
        return (agree && violations == 0 && trails_match) ? kExitPass : kExitFail;
    }

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const OracleInfeasible& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
