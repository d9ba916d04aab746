#include "gspline/lattice.hpp"

#include "gspline/verify.hpp"

#include <doctest.h>

using namespace gspline;

namespace {

EdgeLabeledGraph c5_z15() {
    auto ctx = ModulusContext::create(15);
    return EdgeLabeledGraph(ctx, 5,
                            {{1, 2, Int(3)},
                             {2, 3, Int(5)},
                             {3, 4, Int(5)},
                             {4, 5, Int(3)},
                             {5, 1, Int(5)}});
}

EdgeLabeledGraph p3_z6() {
    auto ctx = ModulusContext::create(6);
    return EdgeLabeledGraph(ctx, 3, {{1, 2, Int(2)}, {1, 3, Int(3)}});
}

std::vector<Int> vec(std::initializer_list<long> xs) {
    std::vector<Int> v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

}  // namespace

TEST_CASE("single edge lattice") {
    auto ctx = ModulusContext::create(6);
    EdgeLabeledGraph g(ctx, 2, {{1, 2, Int(2)}});
    SplineLattice lat = build_spline_lattice(g);
    auto rep = flow_up_basis(lat);
    REQUIRE(rep.diagonal.size() == 2);
    CHECK(rep.diagonal[0] == 1);
    CHECK(rep.diagonal[1] == 2);
    CHECK(in_lattice(rep, vec({1, 3})));
    CHECK_FALSE(in_lattice(rep, vec({0, 1})));
    auto inv = module_invariants(lat);
    CHECK(inv.rank == 2);
}

TEST_CASE("K_3 lattice with a common divisor everywhere") {
    auto ctx = ModulusContext::create(8);
    EdgeLabeledGraph k3(ctx, 3, {{1, 2, Int(2)}, {1, 3, Int(2)}, {2, 3, Int(2)}});
    auto rep = flow_up_basis(build_spline_lattice(k3));
    REQUIRE(rep.diagonal.size() == 3);
    CHECK(rep.diagonal[0] == 1);
    CHECK(rep.diagonal[1] == 2);
    CHECK(rep.diagonal[2] == 2);
    for (const Int& ideal : rep.leading_ideals) CHECK(ideal != 8);
}

TEST_CASE("P_3 flow-up basis and module invariants") {
    EdgeLabeledGraph g = p3_z6();
    SplineLattice lat = build_spline_lattice(g);
    auto rep = flow_up_basis(lat);
    REQUIRE(rep.diagonal.size() == 3);
    CHECK(rep.diagonal[0] == 1);
    CHECK(rep.diagonal[1] == 2);
    CHECK(rep.diagonal[2] == 3);
    // basis columns: (1,1,1), (0,2,0), (0,0,3)
    CHECK(rep.basis.column(0) == vec({1, 1, 1}));
    CHECK(rep.basis.column(1) == vec({0, 2, 0}));
    CHECK(rep.basis.column(2) == vec({0, 0, 3}));
    auto inv = module_invariants(lat);
    REQUIRE(inv.delta.size() == 3);
    CHECK(inv.delta[0] == 1);
    CHECK(inv.delta[1] == 1);
    CHECK(inv.delta[2] == 6);
    CHECK(inv.rank == 2);  // one factor is trivial
}

TEST_CASE("C_5 flow-up basis matches the worked example") {
    SplineLattice lat = build_spline_lattice(c5_z15());
    auto rep = flow_up_basis(lat);
    REQUIRE(rep.diagonal.size() == 5);
    CHECK(rep.diagonal[0] == 1);
    CHECK(rep.diagonal[1] == 3);
    CHECK(rep.diagonal[2] == 5);
    CHECK(rep.diagonal[3] == 5);
    CHECK(rep.diagonal[4] == 15);
    // index 5 has no flow-up class: its leading ideal is the zero ideal
    CHECK(rep.leading_ideals[4] == 15);
    auto inv = module_invariants(lat);
    CHECK(inv.rank == 3);
}

TEST_CASE("every lattice generator satisfies the edge constraints") {
    for (const EdgeLabeledGraph& g : {c5_z15(), p3_z6()}) {
        SplineLattice lat = build_spline_lattice(g);
        for (std::size_t c = 0; c < lat.generators.cols(); ++c)
            CHECK(is_spline(g, lat.generators.column(c)));
    }
}

TEST_CASE("spans accepts the reference P_3 set and rejects a strict subset") {
    EdgeLabeledGraph g = p3_z6();
    SplineLattice lat = build_spline_lattice(g);
    std::vector<Spline> reference{{vec({1, 1, 1})}, {vec({0, 2, 3})}};
    CHECK(spans(lat, reference, g.ctx()));
    std::vector<Spline> short_set{{vec({1, 1, 1})}};
    CHECK_FALSE(spans(lat, short_set, g.ctx()));
    std::vector<Spline> bad{{vec({0, 1, 0})}};
    CHECK_THROWS_AS(spans(lat, bad, g.ctx()), std::invalid_argument);
}

TEST_CASE("module rank agrees with exhaustive enumeration") {
    for (const EdgeLabeledGraph& g : {c5_z15(), p3_z6()}) {
        auto inv = module_invariants(build_spline_lattice(g));
        CHECK(inv.rank == oracle_rank(g));
    }
}
