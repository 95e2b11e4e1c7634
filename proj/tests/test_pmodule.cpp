#include <doctest.h>

#include "pmodule.hpp"

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

TEST_CASE("module of an ideal") {
    auto R = ring_fp({"x", "y"});
    PModule M = module_of_ideal(ideal(R, {"x", "y"}));
    CHECK(M.ngens() == 2);
    CHECK(M.nrels() == 1);
    CHECK(fitting_ideal(M, 0).is_zero());
    CHECK(ideal_eq(fitting_ideal(M, 1), ideal(R, {"x", "y"})));
    CHECK(fitting_ideal(M, 2).is_one());
    CHECK(module_rank(M) == 1);
    auto dp = depth_and_pd(M);
    CHECK(dp.pd == 1);
    CHECK(dp.depth == 1);
    CHECK(is_torsion_free(M));
}

TEST_CASE("matrix rank") {
    auto R = ring_fp({"x", "y"});
    PolyMatrix A(R, 2, 2);
    A.at(0, 0) = parse_poly(R, "x");
    A.at(0, 1) = parse_poly(R, "y");
    A.at(1, 0) = parse_poly(R, "y");
    A.at(1, 1) = parse_poly(R, "x");
    CHECK(matrix_rank(A) == 2);
    A.at(1, 0) = parse_poly(R, "x");
    A.at(1, 1) = parse_poly(R, "y");
    CHECK(matrix_rank(A) == 1);
    CHECK(matrix_rank(PolyMatrix(R, 3, 2)) == 0);
}

TEST_CASE("minimize prunes unit entries") {
    auto R = ring_fp({"x", "y"});
    PolyMatrix p(R, 2, 1);
    p.at(0, 0) = parse_poly(R, "1");
    p.at(1, 0) = parse_poly(R, "x");
    PModule m = minimize(PModule(p));
    CHECK(m.ngens() == 1);
    CHECK(m.nrels() == 0);
    CHECK(min_generators(PModule(p)) == 1);
}

TEST_CASE("depth and projective dimension") {
    auto R2 = ring_fp({"x", "y"});
    auto dpq = depth_and_pd(quotient_module(ideal(R2, {"x", "y"})));
    CHECK(dpq.pd == 2);
    CHECK(dpq.depth == 0);

    auto R3 = ring_fp({"x", "y", "z"});
    auto dpi = depth_and_pd(module_of_ideal(ideal(R3, {"x", "y", "z"})));
    CHECK(dpi.pd == 2);
    CHECK(dpi.depth == 1);
    auto dpr = depth_and_pd(quotient_module(ideal(R3, {"x", "y", "z"})));
    CHECK(dpr.pd == 3);
    CHECK(dpr.depth == 0);
    auto dpf = depth_and_pd(free_module(R3, 2));
    CHECK(dpf.pd == 0);
    CHECK(dpf.depth == 3);
    // complete intersection: R/(x,y) over three variables
    auto dpc = depth_and_pd(quotient_module(ideal(R3, {"x", "y"})));
    CHECK(dpc.pd == 2);
    CHECK(dpc.depth == 1);
}

TEST_CASE("direct sums") {
    auto R = ring_fp({"x", "y"});
    PModule M = direct_sum(module_of_ideal(ideal(R, {"x", "y"})), free_module(R, 1));
    CHECK(module_rank(M) == 2);
    auto dp = depth_and_pd(M);
    CHECK(dp.pd == 1);
    CHECK(dp.depth == 1);
}

TEST_CASE("zero module detection") {
    auto R = ring_fp({"x", "y"});
    CHECK(is_zero_module(PModule(PolyMatrix(R, 0, 0))));
    CHECK(is_zero_module(quotient_module(ideal(R, {"1"}))));
    CHECK(is_zero_module(quotient_module(ideal(R, {"x", "1 + x"}))));
    CHECK(!is_zero_module(quotient_module(ideal(R, {"x", "y"}))));
    CHECK(!is_zero_module(free_module(R, 1)));
}

TEST_CASE("torsion submodule") {
    auto R = ring_fp({"x", "y"});
    // R/(x) is all torsion
    PModule T = torsion_submodule(quotient_module(ideal(R, {"x"})));
    CHECK(!is_zero_module(T));
    CHECK(min_generators(T) == 1);
    CHECK(ideal_eq(fitting_ideal(minimize(T), 0), ideal(R, {"x"})));
    // torsion part of R/(x) + ideal module
    PModule M = direct_sum(quotient_module(ideal(R, {"x"})), module_of_ideal(ideal(R, {"x", "y"})));
    PModule T2 = torsion_submodule(M);
    CHECK(min_generators(T2) == 1);
    CHECK(ideal_eq(fitting_ideal(minimize(T2), 0), ideal(R, {"x"})));
    CHECK(!is_torsion_free(M));
    CHECK(is_torsion_free(free_module(R, 2)));
}

TEST_CASE("dual of an ideal of height two is free") {
    auto R = ring_fp({"x", "y"});
    auto D = hom_dual(module_of_ideal(ideal(R, {"x", "y"})));
    PModule m = minimize(D.module);
    CHECK(m.ngens() == 1);
    CHECK(m.nrels() == 0);
    // the embedding consists of kernel vectors of the transposed presentation
    CHECK(mat_is_zero(mat_mul(module_of_ideal(ideal(R, {"x", "y"})).pres.transpose(), D.embedding)));
}

TEST_CASE("ext modules of a complete intersection") {
    auto R = ring_fp({"x", "y"});
    PModule M = quotient_module(ideal(R, {"x", "y"}));
    CHECK(is_zero_module(ext_module(M, 0)));
    CHECK(is_zero_module(ext_module(M, 1)));
    PModule E2 = minimize(ext_module(M, 2));
    CHECK(min_generators(E2) == 1);
    CHECK(ideal_eq(fitting_ideal(E2, 0), ideal(R, {"x", "y"})));
    CHECK(is_zero_module(ext_module(M, 3)));
}

TEST_CASE("ext of a hypersurface") {
    auto R = ring_fp({"x", "y"});
    PModule M = quotient_module(ideal(R, {"x"}));
    CHECK(is_zero_module(ext_module(M, 0)));
    PModule E1 = minimize(ext_module(M, 1));
    CHECK(min_generators(E1) == 1);
    CHECK(ideal_eq(fitting_ideal(E1, 0), ideal(R, {"x"})));
}

TEST_CASE("ext of a free module") {
    auto R = ring_fp({"x", "y"});
    PModule E0 = ext_module(free_module(R, 3), 0);
    CHECK(min_generators(E0) == 3);
    CHECK(is_zero_module(ext_module(free_module(R, 3), 1)));
}

TEST_CASE("exterior powers") {
    auto R = ring_fp({"x", "y"});
    PModule M = module_of_ideal(ideal(R, {"x", "y"}));
    PModule L2 = minimize(exterior_power(M, 2));
    CHECK(L2.ngens() == 1);
    CHECK(ideal_eq(fitting_ideal(L2, 0), ideal(R, {"x", "y"})));
    CHECK(exterior_power(M, 0).ngens() == 1);
    CHECK(is_zero_module(exterior_power(M, 3)));
    // free module: wedge of R^3 is R^3 choose k with no relations
    PModule F = exterior_power(free_module(R, 3), 2);
    CHECK(F.ngens() == 3);
    CHECK(F.nrels() == 0);
}

TEST_CASE("orientability") {
    auto R = ring_fp({"x", "y"});
    CHECK(is_orientable(module_of_ideal(ideal(R, {"x", "y"})), true));
    CHECK(is_orientable(free_module(R, 2), true));
}

TEST_CASE("subquotient presentation") {
    auto R = ring_fp({"x", "y"});
    PolyMatrix U = PolyMatrix::identity(R, 1);
    PolyMatrix W(R, 1, 1);
    W.at(0, 0) = parse_poly(R, "x");
    PModule Q = present_subquotient(U, W);
    CHECK(min_generators(Q) == 1);
    CHECK(ideal_eq(fitting_ideal(minimize(Q), 0), ideal(R, {"x"})));
}

TEST_CASE("module saturation") {
    auto R = ring_fp({"x", "y"});
    PolyMatrix W(R, 1, 2);
    W.at(0, 0) = parse_poly(R, "x^2");
    W.at(0, 1) = parse_poly(R, "x*y");
    PolyMatrix S = module_saturation(W, parse_poly(R, "y"));
    auto gb = column_span_gb(S);
    CHECK(module_contains(gb, {parse_poly(R, "x")}));
    CHECK(!module_contains(gb, {parse_poly(R, "y")}));
    CHECK(!module_contains(gb, {parse_poly(R, "1")}));
    // saturating by x reaches the unit ideal
    auto gb2 = column_span_gb(module_saturation(W, parse_poly(R, "x")));
    CHECK(module_contains(gb2, {parse_poly(R, "1")}));
}
