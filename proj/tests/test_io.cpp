#include "gspline/io.hpp"

#include <doctest.h>

using namespace gspline;

TEST_CASE("graph json round trip is byte identical") {
    auto ctx = ModulusContext::create(15);
    EdgeLabeledGraph g(ctx, 5,
                       {{1, 2, Int(3)},
                        {2, 3, Int(5)},
                        {3, 4, Int(5)},
                        {4, 5, Int(3)},
                        {5, 1, Int(5)}});
    std::string text = graph_to_json(g);
    EdgeLabeledGraph back = graph_from_json(text);
    CHECK(back.vertex_count() == 5);
    CHECK(back.ctx().modulus() == 15);
    CHECK(graph_to_json(back) == text);
}

TEST_CASE("graph json carries a big modulus as a string") {
    auto ctx = ModulusContext::create(parse_int_expr("5^15"));
    EdgeLabeledGraph g(ctx, 2, {{1, 2, parse_int_expr("5^8")}});
    std::string text = graph_to_json(g);
    CHECK(text.find("\"30517578125\"") != std::string::npos);
    EdgeLabeledGraph back = graph_from_json(text);
    CHECK(back.label(1, 2) == parse_int_expr("5^8"));
}

TEST_CASE("graph json rejects malformed input") {
    CHECK_THROWS(graph_from_json("not json"));
    CHECK_THROWS(graph_from_json("{}"));
    CHECK_THROWS(graph_from_json(
        R"({"modulus": "6", "vertices": 2, "edges": [{"u": 1, "v": 3, "label": "2"}]})"));
}

TEST_CASE("genset json round trip") {
    GeneratingSet set;
    set.splines = {{{Int(1), Int(1), Int(1)}}, {{Int(0), Int(2), Int(2)}}};
    set.flow_up_indices = {1, 2};
    set.constants = {Int(1), Int(2)};
    set.certificate = Certificate::CriterionMinimum;
    set.invariant_factors = {Int(6), Int(3), Int(1)};
    set.rank = 2;
    std::string text = genset_to_json(set);
    GeneratingSet back = genset_from_json(text);
    CHECK(back.splines == set.splines);
    CHECK(back.certificate == Certificate::CriterionMinimum);
    CHECK(back.rank == 2);
    CHECK(back.invariant_factors == set.invariant_factors);
    CHECK(genset_to_json(back) == text);
}

TEST_CASE("file io round trip") {
    std::string path = "/tmp/gspline_io_test.json";
    write_file(path, "hello\n");
    CHECK(read_file(path) == "hello\n");
    CHECK_THROWS(read_file("/nonexistent/definitely/missing"));
}
