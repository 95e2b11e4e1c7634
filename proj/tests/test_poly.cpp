#include <doctest.h>

#include <random>

#include "poly.hpp"

using namespace rk;

namespace {

RingPtr ring_fp(std::vector<std::string> vars, std::uint64_t p = 32003) {
    return make_ring(FieldSpec{p}, std::move(vars));
}

Poly random_poly(const RingPtr& R, std::mt19937_64& rng, int max_terms = 5, int max_exp = 4) {
    std::uniform_int_distribution<int> nt(0, max_terms);
    std::uniform_int_distribution<int> ex(0, max_exp);
    std::uniform_int_distribution<long long> cf(-50, 50);
    std::vector<Term> t;
    int n = nt(rng);
    for (int k = 0; k < n; ++k) {
        Mono m{std::vector<std::uint16_t>(R->nvars(), 0)};
        for (auto& e : m.e) e = static_cast<std::uint16_t>(ex(rng));
        t.push_back({R->field.from_int(cf(rng)), m});
    }
    return Poly(R, std::move(t));
}

Mono random_mono(const RingPtr& R, std::mt19937_64& rng, int max_exp = 6) {
    std::uniform_int_distribution<int> ex(0, max_exp);
    Mono m{std::vector<std::uint16_t>(R->nvars(), 0)};
    for (auto& e : m.e) e = static_cast<std::uint16_t>(ex(rng));
    return m;
}

}  // namespace

TEST_CASE("parse basics") {
    auto R = ring_fp({"x", "y"});
    Poly p = parse_poly(R, "x^2 - y*x");
    CHECK(p.size() == 2);
    CHECK(p.lm().e == std::vector<std::uint16_t>{2, 0});

    CHECK(parse_poly(R, "0").is_zero());
    CHECK(parse_poly(R, "3*x + x") == parse_poly(R, "4*x"));
    CHECK(parse_poly(R, "(x+y)^2") == parse_poly(R, "x^2 + 2*x*y + y^2"));

    CHECK_THROWS_AS(parse_poly(R, "x + z"), ParseError);
    CHECK_THROWS_AS(parse_poly(R, "x / y"), ParseError);
    CHECK_THROWS_AS(parse_poly(R, "x + "), ParseError);
}

TEST_CASE("modular arithmetic") {
    auto R = ring_fp({"x"}, 5);
    CHECK(parse_poly(R, "2*x") * parse_poly(R, "3*x") == parse_poly(R, "x^2"));
}

TEST_CASE("difference of squares and identities") {
    auto R = ring_fp({"x", "y"});
    Poly x = Poly::variable(R, 0), y = Poly::variable(R, 1);
    CHECK((x + y) * (x - y) == x * x - y * y);
    Poly p = parse_poly(R, "x^3 - 2*x*y + 7");
    CHECK(p + Poly::zero(R) == p);
    CHECK(p - p == Poly::zero(R));
}

TEST_CASE("ring axioms on random samples") {
    for (std::uint64_t ch : {32003ull, 0ull}) {
        auto R = make_ring(FieldSpec{ch}, {"x", "y", "z"});
        std::mt19937_64 rng(42);
        for (int trial = 0; trial < 1000; ++trial) {
            Poly a = random_poly(R, rng), b = random_poly(R, rng), c = random_poly(R, rng);
            REQUIRE((a + b) + c == a + (b + c));
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a * (b + c) == a * b + a * c);
            REQUIRE(a * b == b * a);
            REQUIRE(a + b == b + a);
        }
    }
}

TEST_CASE("canonical form: parse(print(p)) == p") {
    for (std::uint64_t ch : {32003ull, 0ull, 5ull}) {
        auto R = make_ring(FieldSpec{ch}, {"x", "y", "z"});
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 500; ++trial) {
            Poly p = random_poly(R, rng);
            CHECK(parse_poly(R, p.str()) == p);
        }
    }
}

TEST_CASE("degree of product adds") {
    auto R = ring_fp({"x", "y"});
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        Poly a = random_poly(R, rng), b = random_poly(R, rng);
        Poly p = a * b;
        if (!p.is_zero()) CHECK(p.degree() <= a.degree() + b.degree());
        if (!a.is_zero() && !b.is_zero()) CHECK(!p.is_zero());  // domain
    }
}

TEST_CASE("monomial order axioms") {
    for (auto kind : {OrderKind::GrevLex, OrderKind::Lex}) {
        auto R = make_ring(FieldSpec{32003}, {"x", "y", "z", "w"}, kind, 0);
        std::mt19937_64 rng(11);
        Mono one{std::vector<std::uint16_t>(4, 0)};
        for (int trial = 0; trial < 1000; ++trial) {
            Mono a = random_mono(R, rng), b = random_mono(R, rng), c = random_mono(R, rng);
            // total order
            int ab = R->cmp(a, b);
            CHECK(ab == -R->cmp(b, a));
            if (ab == 0) CHECK(a == b);
            // transitivity spot check
            if (R->cmp(a, b) <= 0 && R->cmp(b, c) <= 0) CHECK(R->cmp(a, c) <= 0);
            // multiplicative compatibility
            if (ab < 0) CHECK(R->cmp(mono_mul(c, a), mono_mul(c, b)) < 0);
            // 1 is minimum
            if (!(a == one)) CHECK(R->cmp(one, a) < 0);
        }
    }
}

TEST_CASE("block order eliminates leading block") {
    auto R = make_ring(FieldSpec{32003}, {"t", "x", "y"}, OrderKind::Block, 1);
    // any monomial containing t beats any t-free monomial
    Mono t{std::vector<std::uint16_t>{1, 0, 0}};
    Mono xy{std::vector<std::uint16_t>{0, 5, 5}};
    CHECK(R->cmp(t, xy) > 0);
}

TEST_CASE("exact division") {
    auto R = ring_fp({"x", "y"});
    Poly a = parse_poly(R, "x^2 - y^2");
    Poly b = parse_poly(R, "x - y");
    auto q = a.divide_exact(b);
    REQUIRE(q.has_value());
    CHECK(*q == parse_poly(R, "x + y"));
    CHECK(!parse_poly(R, "x^2 + y").divide_exact(b).has_value());
}

TEST_CASE("field of rationals") {
    auto R = make_ring(FieldSpec{0}, {"x"});
    Poly p = parse_poly(R, "1/2*x + 1/3*x");
    CHECK(p == parse_poly(R, "5/6*x"));
    CHECK(parse_poly(R, p.str()) == p);
}

TEST_CASE("invalid ring construction") {
    CHECK_THROWS_AS(make_ring(FieldSpec{6}, {"x"}), InvalidInput);
    CHECK_THROWS_AS(make_ring(FieldSpec{32003}, {"x", "x"}), InvalidInput);
}
