#include "gspline/graph.hpp"

#include <doctest.h>

#include <set>

using namespace gspline;

namespace {
ModulusContext ctx1000 = ModulusContext::create(1000);
}

TEST_CASE("canonical edge index is a bijection") {
    CHECK(complete_edge_index(1, 2) == 1);
    CHECK(complete_edge_index(1, 3) == 2);
    CHECK(complete_edge_index(2, 3) == 3);
    CHECK(complete_edge_index(1, 4) == 4);
    CHECK(complete_edge_index(2, 4) == 5);
    CHECK(complete_edge_index(3, 4) == 6);
    CHECK(complete_edge_index(1, 5) == 7);
    CHECK(complete_edge_index(4, 5) == 10);

    for (int n = 2; n <= 12; ++n) {
        std::set<long> seen;
        for (int j = 2; j <= n; ++j)
            for (int i = 1; i < j; ++i) {
                long idx = complete_edge_index(i, j);
                CHECK(idx >= 1);
                CHECK(idx <= triangular(n));
                CHECK(seen.insert(idx).second);
            }
        CHECK(static_cast<long>(seen.size()) == triangular(n));
    }
}

TEST_CASE("complete_from_labels places labels by canonical index") {
    EdgeLabeledGraph k3 = complete_from_labels({3, {Int(4), Int(10), Int(20)}}, ctx1000);
    CHECK(k3.label(1, 2) == Int(4));
    CHECK(k3.label(1, 3) == Int(10));
    CHECK(k3.label(2, 3) == Int(20));

    std::vector<Int> l6{Int(4), Int(10), Int(20), Int(8), Int(50), Int(25)};
    EdgeLabeledGraph k4 = complete_from_labels({4, l6}, ctx1000);
    CHECK(k4.label(1, 4) == l6[3]);
    CHECK(k4.label(2, 4) == l6[4]);
    CHECK(k4.label(3, 4) == l6[5]);

    CHECK_THROWS_AS(complete_from_labels({4, {Int(4)}}, ctx1000), std::invalid_argument);
}

TEST_CASE("labels are canonicalized at insertion") {
    auto ctx15 = ModulusContext::create(15);
    EdgeLabeledGraph g(ctx15, 2, {{1, 2, Int(10)}});
    CHECK(g.label(1, 2) == Int(5));  // gcd(10, 15)
}

TEST_CASE("trivial ideals rejected for constructions") {
    auto ctx6 = ModulusContext::create(6);
    CHECK_THROWS_AS(EdgeLabeledGraph(ctx6, 2, {{1, 2, Int(6)}}), std::invalid_argument);
    CHECK_THROWS_AS(EdgeLabeledGraph(ctx6, 2, {{1, 2, Int(1)}}), std::invalid_argument);
    CHECK_NOTHROW(EdgeLabeledGraph(ctx6, 2, {{1, 2, Int(1)}}, false));
}

TEST_CASE("add_star composes with complete_from_labels") {
    std::vector<Int> l10;
    for (int i = 1; i <= 10; ++i) l10.push_back(Int(2));
    EdgeLabeledGraph k5 = complete_from_labels({5, l10}, ctx1000);
    CHECK(k5.edges().size() == 10);

    EdgeLabeledGraph k4 = complete_from_labels({4, {l10.begin(), l10.begin() + 6}}, ctx1000);
    EdgeLabeledGraph k5b = add_star(k4, {Int(2), Int(2), Int(2), Int(2)});
    CHECK(k5b.vertex_count() == 5);
    REQUIRE(k5b.edges().size() == 10);
    for (int j = 2; j <= 5; ++j)
        for (int i = 1; i < j; ++i) CHECK(k5b.label(i, j) == k5.label(i, j));

    CHECK_THROWS_AS(add_star(k4, {Int(2)}), std::invalid_argument);
}

TEST_CASE("add_star rejects incomplete graphs") {
    auto ctx6 = ModulusContext::create(6);
    EdgeLabeledGraph path(ctx6, 3, {{1, 2, Int(2)}, {2, 3, Int(3)}});
    CHECK_THROWS_AS(add_star(path, {Int(2), Int(2), Int(2)}), std::invalid_argument);
}

TEST_CASE("spanning_subgraph keeps labels and rejects disconnection") {
    std::vector<Int> l6{Int(4), Int(10), Int(20), Int(8), Int(50), Int(25)};
    EdgeLabeledGraph k4 = complete_from_labels({4, l6}, ctx1000);
    // wheel W_4 with hub v_1: spokes v1v2, v1v3, v1v4 plus cycle v2v3, v3v4, v2v4
    std::vector<int> keep;
    for (int k = 0; k < static_cast<int>(k4.edges().size()); ++k) {
        const Edge& e = k4.edges()[k];
        if (e.u == 1 || (e.v - e.u == 1) || (e.u == 2 && e.v == 4)) keep.push_back(k);
    }
    EdgeLabeledGraph w4 = spanning_subgraph(k4, keep);
    CHECK(w4.vertex_count() == 4);
    for (int k : keep) {
        const Edge& e = k4.edges()[k];
        CHECK(w4.label(e.u, e.v) == e.label);
    }

    // star only around v2 leaves nothing touching... a disconnected pick must throw
    std::vector<int> bad;
    for (int k = 0; k < static_cast<int>(k4.edges().size()); ++k)
        if (k4.edges()[k].u >= 2) bad.push_back(k);  // v1 isolated
    CHECK_THROWS_AS(spanning_subgraph(k4, bad), std::invalid_argument);
}
