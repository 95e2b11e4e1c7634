#include <doctest.h>

#include "rees.hpp"

using namespace rk;

namespace {

RingPtr ring_fp(std::vector<std::string> vars) {
    return make_ring(FieldSpec{32003}, std::move(vars));
}

IdealData ideal(const RingPtr& R, std::initializer_list<const char*> gens) {
    std::vector<Poly> g;
    for (auto s : gens) g.push_back(parse_poly(R, s));
    return IdealData(R, std::move(g));
}

}  // namespace

TEST_CASE("rees algebra of the maximal ideal in two variables") {
    auto R = ring_fp({"x", "y"});
    auto pkg = rees_package(module_of_ideal(ideal(R, {"x", "y"})));
    CHECK(pkg.ntvars == 2);
    // complete intersections are of linear type
    CHECK(is_linear_type(pkg));
    REQUIRE(pkg.rees.gb().size() == 1);
    CHECK(pkg.rees.gb()[0] == parse_poly(pkg.big, "y*T1 - x*T2"));
    CHECK(special_fiber_dim(pkg) == 2);
    auto r = reduction_number(pkg, 0);
    REQUIRE(r.has_value());
    CHECK(*r == 0);
}

TEST_CASE("rees algebra of the maximal ideal in three variables") {
    auto R = ring_fp({"x", "y", "z"});
    auto pkg = rees_package(module_of_ideal(ideal(R, {"x", "y", "z"})));
    CHECK(is_linear_type(pkg));
    // defining ideal = 2x2 minors of [[x,y,z],[T1,T2,T3]]
    CHECK(ideal_contains(pkg.rees, parse_poly(pkg.big, "x*T2 - y*T1")));
    CHECK(ideal_contains(pkg.rees, parse_poly(pkg.big, "x*T3 - z*T1")));
    CHECK(ideal_contains(pkg.rees, parse_poly(pkg.big, "y*T3 - z*T2")));
    CHECK(pkg.rees.gb().size() == 3);
    CHECK(special_fiber_dim(pkg) == 3);
    auto r = reduction_number(pkg, 0);
    REQUIRE(r.has_value());
    CHECK(*r == 0);
}

TEST_CASE("square of the maximal ideal is not of linear type") {
    auto R = ring_fp({"x", "y"});
    auto pkg = rees_package(module_of_ideal(ideal(R, {"x^2", "x*y", "y^2"})));
    CHECK(!is_linear_type(pkg));
    // the fiber carries the conic T1*T3 = T2^2
    CHECK(ideal_contains(pkg.rees, parse_poly(pkg.big, "T1*T3 - T2^2")));
    CHECK(special_fiber_dim(pkg) == 2);
    auto r = reduction_number(pkg, 0);
    REQUIRE(r.has_value());
    CHECK(*r == 1);
}

TEST_CASE("free modules are trivially of linear type") {
    auto R = ring_fp({"x", "y"});
    auto pkg = rees_package(free_module(R, 2));
    CHECK(is_linear_type(pkg));
    CHECK(pkg.rees.is_zero());
    CHECK(special_fiber_dim(pkg) == 2);
}

TEST_CASE("free summand shifts the analytic spread") {
    auto R = ring_fp({"x", "y"});
    auto E = direct_sum(module_of_ideal(ideal(R, {"x", "y"})), free_module(R, 1));
    auto pkg = rees_package(E);
    CHECK(is_linear_type(pkg));
    CHECK(special_fiber_dim(pkg) == 3);
}

TEST_CASE("power modules") {
    auto R = ring_fp({"x", "y"});
    auto E = module_of_ideal(ideal(R, {"x", "y"}));
    auto pkg = rees_package(E);

    // E^1 recovers E: same Fitting ideals
    PModule E1 = power_module(pkg, 1);
    CHECK(E1.ngens() == 2);
    CHECK(fitting_ideal(E1, 0).is_zero());
    CHECK(ideal_eq(fitting_ideal(E1, 1), ideal(R, {"x", "y"})));

    // E^2 = (x,y)^2: three generators, rank one, pd one
    PModule E2 = power_module(pkg, 2);
    CHECK(E2.ngens() == 3);
    CHECK(min_generators(E2) == 3);
    CHECK(module_rank(E2) == 1);
    auto dp = depth_and_pd(E2);
    CHECK(dp.pd == 1);
    CHECK(ideal_eq(fitting_ideal(E2, 1), ideal(R, {"x^2", "x*y", "y^2"})));

    CHECK(power_module(pkg, 0).ngens() == 1);
}

TEST_CASE("powers of a free module are free") {
    auto R = ring_fp({"x", "y"});
    auto pkg = rees_package(free_module(R, 2));
    PModule F3 = power_module(pkg, 3);
    CHECK(F3.ngens() == 4);
    CHECK(F3.nrels() == 0);
}

TEST_CASE("rees ideal is T-graded and contains the symmetric relations") {
    auto R = ring_fp({"x", "y"});
    auto pkg = rees_package(module_of_ideal(ideal(R, {"x^2", "x*y", "y^2"})));
    auto mask = tvar_mask(pkg);
    for (const auto& g : pkg.rees.gb()) {
        CHECK(g.is_homogeneous_in(mask));
        CHECK(g.degree_in(mask) >= 1);
    }
    for (const auto& l : pkg.sym.gens()) CHECK(ideal_contains(pkg.rees, l));
}

TEST_CASE("rank zero input is rejected") {
    auto R = ring_fp({"x", "y"});
    PolyMatrix p(R, 1, 1);
    p.at(0, 0) = parse_poly(R, "x");
    CHECK_THROWS_AS(rees_package(PModule(p)), InvalidInput);
}

TEST_CASE("degree monomials") {
    auto mons = degree_monomials(3, 2);
    REQUIRE(mons.size() == 6);
    CHECK(mons.front().e == std::vector<std::uint16_t>{2, 0, 0});
    CHECK(mons.back().e == std::vector<std::uint16_t>{0, 0, 2});
    CHECK(degree_monomials(2, 0).size() == 1);
}

TEST_CASE("non linear type module of projective dimension one") {
    // (x,y) + (z,w) direct sum stays linear type
    auto R = ring_fp({"x", "y", "z", "w"});
    auto E = direct_sum(module_of_ideal(ideal(R, {"x", "y"})),
                        module_of_ideal(ideal(R, {"z", "w"})));
    auto pkg = rees_package(E);
    CHECK(is_linear_type(pkg));
    CHECK(special_fiber_dim(pkg) == 4);
}
