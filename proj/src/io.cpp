#include "gspline/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gspline {

using json = nlohmann::ordered_json;

std::string graph_to_json(const EdgeLabeledGraph& g) {
    json j;
    j["modulus"] = g.ctx().modulus().get_str();
    j["vertices"] = g.vertex_count();
    j["edges"] = json::array();
    for (const Edge& e : g.edges())  // already in canonical (v, u) order
        j["edges"].push_back({{"u", e.u}, {"v", e.v}, {"label", e.label.get_str()}});
    return j.dump(2) + "\n";
}

EdgeLabeledGraph graph_from_json(const std::string& text, bool require_proper) {
    json j = json::parse(text);
    Int m(j.at("modulus").get<std::string>());
    ModulusContext ctx = ModulusContext::create(m);
    int n = j.at("vertices").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges"))
        edges.push_back({e.at("u").get<int>(), e.at("v").get<int>(),
                         Int(e.at("label").get<std::string>())});
    return EdgeLabeledGraph(std::move(ctx), n, std::move(edges), require_proper);
}

std::string genset_to_json(const GeneratingSet& set) {
    json j;
    j["splines"] = json::array();
    for (const Spline& s : set.splines) {
        json row = json::array();
        for (const Int& x : s.values) row.push_back(x.get_str());
        j["splines"].push_back(row);
    }
    j["certificate"] = to_string(set.certificate);
    j["rank"] = set.rank;
    j["invariant_factors"] = json::array();
    for (const Int& f : set.invariant_factors) j["invariant_factors"].push_back(f.get_str());
    return j.dump(2) + "\n";
}

GeneratingSet genset_from_json(const std::string& text) {
    json j = json::parse(text);
    GeneratingSet set;
    for (const auto& row : j.at("splines")) {
        Spline s;
        for (const auto& x : row) s.values.emplace_back(x.get<std::string>());
        set.flow_up_indices.push_back(flow_up_index(s));
        auto [constant, c] = is_constant_flow_up(s);
        set.constants.push_back(constant ? c : Int(0));
        set.splines.push_back(std::move(s));
    }
    std::string cert = j.value("certificate", "generating-only");
    if (cert == "criterion-minimum")
        set.certificate = Certificate::CriterionMinimum;
    else if (cert == "rank-matched-minimum")
        set.certificate = Certificate::RankMatchedMinimum;
    else
        set.certificate = Certificate::GeneratingOnly;
    set.rank = j.value("rank", 0);
    if (j.contains("invariant_factors"))
        for (const auto& f : j.at("invariant_factors"))
            set.invariant_factors.emplace_back(f.get<std::string>());
    return set;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

}  // namespace gspline
