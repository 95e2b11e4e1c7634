#include <doctest.h>

#include <random>

#include "ideal.hpp"

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

Poly random_poly(const RingPtr& R, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nt(1, 4), ex(0, 3);
    std::uniform_int_distribution<long long> cf(-20, 20);
    std::vector<Term> t;
    int n = nt(rng);
    for (int k = 0; k < n; ++k) {
        Mono m{std::vector<std::uint16_t>(R->nvars(), 0)};
        for (auto& e : m.e) e = static_cast<std::uint16_t>(ex(rng));
        t.push_back({R->field.from_int(cf(rng)), m});
    }
    return Poly(R, std::move(t));
}

// every S-polynomial of a GB must reduce to zero
void check_is_groebner(const std::vector<Poly>& G) {
    for (std::size_t i = 0; i < G.size(); ++i)
        for (std::size_t j = i + 1; j < G.size(); ++j) {
            const auto& R = G[i].ring();
            Mono l = mono_lcm(G[i].lm(), G[j].lm());
            Poly s = G[i].times_term(R->field.inv(G[i].lc()), mono_div(l, G[i].lm())) -
                     G[j].times_term(R->field.inv(G[j].lc()), mono_div(l, G[j].lm()));
            REQUIRE(normal_form(s, G).is_zero());
        }
}

}  // namespace

TEST_CASE("groebner basics") {
    auto R = ring_fp({"x", "y"});
    auto I = ideal(R, {"x^2 - 1", "x*y - 1"});
    std::vector<Poly> want = {parse_poly(R, "x - y"), parse_poly(R, "y^2 - 1")};
    auto gb = I.gb();
    REQUIRE(gb.size() == 2);
    CHECK(((gb[0] == want[0] && gb[1] == want[1]) || (gb[0] == want[1] && gb[1] == want[0])));
    check_is_groebner(gb);
}

TEST_CASE("groebner degenerate inputs") {
    auto R = ring_fp({"x", "y"});
    CHECK(ideal(R, {"0", "0"}).gb().empty());
    CHECK(ideal(R, {}).gb().empty());
    CHECK(ideal(R, {"x", "x", "0"}).gb().size() == 1);
    auto one = ideal(R, {"x", "x + 1"});
    CHECK(one.is_one());
    CHECK(one.gb().size() == 1);
    CHECK(one.gb()[0].is_unit());
}

TEST_CASE("normal form") {
    auto R = ring_fp({"x", "y"});
    std::vector<Poly> G = {parse_poly(R, "x - y")};
    CHECK(normal_form(parse_poly(R, "x*y + y"), G) == parse_poly(R, "y^2 + y"));
    auto I = ideal(R, {"x^2 - 1", "x*y - 1"});
    CHECK(normal_form(parse_poly(R, "x^2*y"), I) == parse_poly(R, "y"));
    CHECK(ideal_contains(I, parse_poly(R, "x - y")));
    CHECK(!ideal_contains(I, parse_poly(R, "x")));
}

TEST_CASE("membership is stable under random combinations") {
    auto R = ring_fp({"x", "y", "z"});
    auto I = ideal(R, {"x^2 - y*z", "x*y - z^2"});
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        Poly f = random_poly(R, rng) * I.gens()[0] + random_poly(R, rng) * I.gens()[1];
        REQUIRE(ideal_contains(I, f));
    }
}

TEST_CASE("ideal quotient") {
    auto R = ring_fp({"x", "y"});
    CHECK(ideal_eq(ideal_quotient(ideal(R, {"x^2", "y"}), ideal(R, {"x", "y"})),
                   ideal(R, {"x", "y"})));
    auto I = ideal(R, {"x^2 - y", "x*y"});
    CHECK(ideal_eq(ideal_quotient(I, ideal(R, {"1"})), I));
    CHECK(ideal_quotient(ideal(R, {"x"}), ideal(R, {"x"})).is_one());
    // (I : J) * J inside I
    auto Q = ideal_quotient(ideal(R, {"x*y^2"}), ideal(R, {"y"}));
    CHECK(ideal_eq(Q, ideal(R, {"x*y"})));
}

TEST_CASE("saturation") {
    auto R = ring_fp({"x", "y"});
    CHECK(ideal_eq(saturate(ideal(R, {"x*y"}), ideal(R, {"y"})), ideal(R, {"x"})));
    CHECK(ideal_eq(saturate(ideal(R, {"x^2", "x*y"}), ideal(R, {"x"})), ideal(R, {"1"})));
    CHECK(ideal_eq(saturate(ideal(R, {"x^2", "x*y"}), ideal(R, {"y"})), ideal(R, {"x"})));
    // agrees with the iterated-quotient fallback
    auto I = ideal(R, {"x^3*y", "x*y^3"});
    auto J = ideal(R, {"x + y"});
    CHECK(ideal_eq(saturate(I, J), saturate_iterated(I, J)));
}

TEST_CASE("intersection") {
    auto R = ring_fp({"x", "y"});
    CHECK(ideal_eq(ideal_intersect(ideal(R, {"x"}), ideal(R, {"y"})), ideal(R, {"x*y"})));
    auto I = ideal(R, {"x^2", "y"});
    CHECK(ideal_eq(ideal_intersect(I, ideal(R, {"1"})), I));
    auto J = ideal(R, {"x"});
    auto K = ideal_intersect(I, J);
    CHECK(ideal_eq(K, ideal(R, {"x^2", "x*y"})));
}

TEST_CASE("elimination") {
    auto R = ring_fp({"t", "x", "y"});
    auto I = ideal(R, {"x - t", "y - t^2"});
    auto E = eliminate(I, {"x", "y"});
    REQUIRE(E.ring()->nvars() == 2);
    CHECK(E.ring()->vars == std::vector<std::string>{"x", "y"});
    REQUIRE(E.gb().size() == 1);
    CHECK(E.gb()[0] == parse_poly(E.ring(), "x^2 - y"));
}

TEST_CASE("elimination of middle variable") {
    auto R = ring_fp({"x", "u", "y"});
    auto I = ideal(R, {"x - u^2", "y - u^3"});
    auto E = eliminate(I, {"x", "y"});
    CHECK(ideal_contains(E, parse_poly(E.ring(), "x^3 - y^2")));
}

TEST_CASE("dimension and height") {
    auto R3 = ring_fp({"x", "y", "z"});
    CHECK(dimension(ideal(R3, {})) == 3);
    CHECK(dimension(ideal(R3, {"x"})) == 2);
    CHECK(dimension(ideal(R3, {"x", "y"})) == 1);
    CHECK(dimension(ideal(R3, {"x", "y", "z"})) == 0);
    CHECK(dimension(ideal(R3, {"1"})) == kEmptyVariety);
    CHECK(height(ideal(R3, {"x", "y"})) == 2);
    CHECK(height(ideal(R3, {"1"})) == kInfiniteHeight);

    auto R4 = ring_fp({"x", "y", "z", "w"});
    auto I = ideal(R4, {"x*z", "x*w", "y*z", "y*w"});
    CHECK(dimension(I) == 2);
    CHECK(height(I) == 2);

    // twisted cubic: dim 2, height 1... no: height 2 in k[x,y,z,w]
    auto C = ideal(R4, {"x*z - y^2", "y*w - z^2", "x*w - y*z"});
    CHECK(dimension(C) == 2);
    CHECK(height(C) == 2);
}

TEST_CASE("quotient-saturation adjunctions on random ideals") {
    auto R = ring_fp({"x", "y"});
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 15; ++trial) {
        auto I = IdealData(R, {random_poly(R, rng), random_poly(R, rng)});
        auto J = IdealData(R, {random_poly(R, rng)});
        if (J.is_zero()) continue;
        auto Q = ideal_quotient(I, J);
        // I subset (I : J)
        for (const auto& g : I.gens()) REQUIRE(ideal_contains(Q, g));
        // (I : J) * J subset I
        for (const auto& q : Q.gb())
            for (const auto& j : J.gens()) REQUIRE(ideal_contains(I, q * j));
        // saturation is idempotent
        auto S = saturate(I, J);
        REQUIRE(ideal_eq(S, saturate(S, J)));
    }
}

TEST_CASE("reduced GB is canonical") {
    auto R = ring_fp({"x", "y", "z"});
    auto I = ideal(R, {"x^2 + y^2 + z^2 - 1", "x*y - z", "x - z^2"});
    auto J = IdealData(R, {I.gens()[2], I.gens()[0] + I.gens()[1], I.gens()[1]});
    CHECK(I.gb() == J.gb());
    check_is_groebner(I.gb());
    for (const auto& g : I.gb()) {
        CHECK(g.lc().u == 1);  // monic
        // tail-reduced against the others
        for (const auto& h : I.gb()) {
            if (&g == &h) continue;
            for (std::size_t k = 1; k < g.size(); ++k) CHECK(!mono_divides(h.lm(), g.terms()[k].m));
        }
    }
}

TEST_CASE("groebner over the rationals") {
    auto R = make_ring(FieldSpec{0}, {"x", "y"});
    auto I = IdealData(R, {parse_poly(R, "2*x^2 - 2"), parse_poly(R, "3*x*y - 3")});
    auto gb = I.gb();
    REQUIRE(gb.size() == 2);
    // normalized: integral, primitive, positive lead
    CHECK(gb[0] == parse_poly(R, "x - y"));
    CHECK(gb[1] == parse_poly(R, "y^2 - 1"));
}

TEST_CASE("budget enforcement") {
    auto R = ring_fp({"x", "y", "z"});
    auto saved = gb_budget();
    gb_budget().max_pairs = 1;
    auto I = ideal(R, {"x^2 + y*z", "y^2 + x*z", "z^2 + x*y"});
    CHECK_THROWS_AS((void)I.gb(), BudgetExceeded);
    gb_budget() = saved;
}
