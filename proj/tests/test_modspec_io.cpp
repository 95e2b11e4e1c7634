#include <doctest.h>

#include "modspec_io.hpp"

using namespace rk;

namespace {

RingPtr ring_fp(std::vector<std::string> vars) {
    return make_ring(FieldSpec{32003}, std::move(vars));
}

std::string msg_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const InvalidInput& ex) {
        return ex.what();
    }
    return "";
}

}  // namespace

TEST_CASE("documented schema example parses to the (x,y)-type module") {
    auto spec = parse_module_spec(
        R"({"ring":{"char":32003,"vars":["x","y"]},"presentation":[["y"],["-x"]]})");
    CHECK(spec.module.ngens() == 2);
    CHECK(spec.module.nrels() == 1);
    auto R = spec.module.ring();
    CHECK(R->vars == std::vector<std::string>{"x", "y"});
    CHECK(spec.module.pres.at(0, 0) == parse_poly(R, "y"));
    CHECK(spec.module.pres.at(1, 0) == parse_poly(R, "-x"));
}

TEST_CASE("empty presentation with ambient rank gives a free module") {
    auto spec = parse_module_spec(
        R"({"ring":{"char":32003,"vars":["x","y"]},"presentation":[],"ambient_rank":2})");
    CHECK(spec.module.ngens() == 2);
    CHECK(spec.module.nrels() == 0);
    CHECK(module_rank(spec.module) == 2);
}

TEST_CASE("schema violations are rejected with a location") {
    // ragged grid
    CHECK(msg_of([] {
              parse_module_spec(
                  R"({"ring":{"char":32003,"vars":["x","y"]},"presentation":[["y"],["-x","x"]]})");
          }).find("ragged") != std::string::npos);
    // non-prime characteristic
    CHECK(msg_of([] {
              parse_module_spec(
                  R"({"ring":{"char":32004,"vars":["x"]},"presentation":[],"ambient_rank":1})");
          }).find("not prime") != std::string::npos);
    // unknown key
    CHECK(msg_of([] {
              parse_module_spec(
                  R"({"ring":{"char":7,"vars":["x"]},"presentation":[],"ambient_rank":1,"bogus":1})");
          }).find("bogus") != std::string::npos);
    // polynomial parse error carries the grid cell
    CHECK(msg_of([] {
              parse_module_spec(
                  R"({"ring":{"char":7,"vars":["x"]},"presentation":[["x +"]]})");
          }).find("presentation[0][0]") != std::string::npos);
    // free module needs the rank
    CHECK_THROWS_AS(
        (void)parse_module_spec(R"({"ring":{"char":7,"vars":["x"]},"presentation":[]})"),
        InvalidInput);
    // malformed JSON
    CHECK_THROWS_AS((void)parse_module_spec("{"), InvalidInput);
}

TEST_CASE("spec echo round-trips invariant-equal") {
    auto R = ring_fp({"x", "y"});
    std::vector<PModule> mods = {
        module_of_ideal(IdealData(R, {parse_poly(R, "x"), parse_poly(R, "y")})),
        module_of_ideal(IdealData(
            R, {parse_poly(R, "x^2"), parse_poly(R, "x*y"), parse_poly(R, "y^2")})),
        free_module(R, 3),
    };
    for (const auto& E : mods) {
        auto spec = parse_module_spec(module_spec_string(E, "echo"));
        CHECK(spec.label == "echo");
        REQUIRE(spec.module.ngens() == E.ngens());
        REQUIRE(spec.module.nrels() == E.nrels());
        for (std::size_t i = 0; i < E.ngens(); ++i)
            for (std::size_t j = 0; j < E.nrels(); ++j)
                CHECK(spec.module.pres.at(i, j) ==
                      parse_poly(R, E.pres.at(i, j).str()));
    }
}

TEST_CASE("report generators are sorted by degree then string") {
    auto R = ring_fp({"x", "y"});
    IdealData I(R, {parse_poly(R, "y^2"), parse_poly(R, "x")});
    auto gens = sorted_gb_strings(I);
    REQUIRE(gens.size() == 2);
    CHECK(gens[0] == "x");
    CHECK(gens[1] == "y^2");
}
