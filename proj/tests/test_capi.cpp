#include <doctest.h>

#include <reeskit.h>

#include <json.hpp>

#include <memory>
#include <string>

using json = nlohmann::json;

namespace {

constexpr const char* kMaxIdeal =
    R"({"ring":{"char":32003,"vars":["x","y"]},"presentation":[["y"],["-x"]]})";
constexpr const char* kSqMaxIdeal =
    R"({"ring":{"char":32003,"vars":["x","y"]},)"
    R"("presentation":[["y","0"],["-x","y"],["0","-x"]]})";

struct ModDeleter {
    void operator()(rk_module* m) const { rk_module_free(m); }
};
struct RepDeleter {
    void operator()(rk_report* r) const { rk_report_free(r); }
};
using ModPtr = std::unique_ptr<rk_module, ModDeleter>;
using RepPtr = std::unique_ptr<rk_report, RepDeleter>;

ModPtr parse(const char* text) {
    rk_module* m = nullptr;
    REQUIRE(rk_module_parse(text, &m) == RK_OK);
    return ModPtr(m);
}

json report_of(rk_report* r) {
    REQUIRE(r != nullptr);
    json doc = json::parse(rk_report_json(r));
    rk_report_free(r);
    return doc;
}

}  // namespace

TEST_CASE("parse failures set the thread-local error message") {
    rk_module* m = reinterpret_cast<rk_module*>(1);
    CHECK(rk_module_parse("{", &m) == RK_ERR_PARSE);
    CHECK(m == nullptr);
    CHECK(std::string(rk_last_error()).find("module spec") != std::string::npos);
    CHECK(rk_module_parse(
              R"({"ring":{"char":6,"vars":["x"]},"presentation":[],"ambient_rank":1})",
              &m) == RK_ERR_PARSE);
    CHECK(std::string(rk_last_error()).find("not prime") != std::string::npos);
}

TEST_CASE("rees report for the maximal ideal") {
    auto m = parse(kMaxIdeal);
    rk_report* r = nullptr;
    REQUIRE(rk_cmd_rees(m.get(), nullptr, &r) == RK_OK);
    json doc = report_of(r);
    CHECK(doc["version"] == rk_version());
    CHECK(doc["command"] == "rees");
    CHECK(doc["seed"] == 0);
    CHECK(doc["input"]["ring"]["char"] == 32003);
    CHECK(doc["results"]["linear_type"] == true);
    CHECK(doc["results"]["ntvars"] == 2);
    REQUIRE(doc["results"]["rees_gens"].size() == 1);
    CHECK(doc["results"]["rees_gens"][0] == "y*T1 - x*T2");
    CHECK(doc["results"]["rees_gens"] == doc["results"]["sym_gens"]);
    CHECK(doc["results"]["fiber_dim"] == 2);
    CHECK(doc["budget"].contains("pairs_used"));
    CHECK(doc.contains("timing_ms"));
}

TEST_CASE("rees report for the squared maximal ideal lists the quadric") {
    auto m = parse(kSqMaxIdeal);
    rk_report* r = nullptr;
    REQUIRE(rk_cmd_rees(m.get(), nullptr, &r) == RK_OK);
    json doc = report_of(r);
    CHECK(doc["results"]["linear_type"] == false);
    bool quadric = false;
    for (const auto& g : doc["results"]["rees_gens"])
        if (g == "T2^2 - T1*T3") quadric = true;
    CHECK(quadric);
}

TEST_CASE("fiber and powers commands") {
    auto m = parse(kSqMaxIdeal);
    rk_report* r = nullptr;
    REQUIRE(rk_cmd_fiber(m.get(), nullptr, &r) == RK_OK);
    json fib = report_of(r);
    CHECK(fib["results"]["fiber_dim"] == 2);
    CHECK(fib["results"]["fiber_gens"].size() == 1);

    rk_options o{7, 3, 0, 0};
    REQUIRE(rk_cmd_powers(m.get(), &o, &r) == RK_OK);
    json pow = report_of(r);
    REQUIRE(pow["results"]["powers"].size() == 3);
    CHECK(pow["results"]["linear_type"] == false);
    CHECK(pow["results"]["powers"][0]["mu"] == 3);
    CHECK(pow["results"]["powers"][0]["torsion_free"] == true);
    // Sym_2 of (x,y)^2 carries torsion: that is what defeats linear type
    CHECK(pow["results"]["powers"][1]["sym_torsion_free"] == false);
    CHECK(pow["results"]["powers"][1]["torsion_free"] == true);
}

TEST_CASE("check maps report status to exit-style codes") {
    auto m = parse(kMaxIdeal);
    rk_report* r = nullptr;
    CHECK(rk_cmd_check(m.get(), "T3.2", nullptr, &r) == RK_OK);
    json ok = report_of(r);
    CHECK(ok["results"]["status"] == "verified");
    CHECK(ok["results"]["id"] == "T3.2");
    CHECK(ok["results"]["hypotheses"].size() > 0);

    auto sq = parse(kSqMaxIdeal);
    CHECK(rk_cmd_check(sq.get(), "T2.11", nullptr, &r) == RK_ERR_HYPOTHESIS);
    json hf = report_of(r);
    CHECK(hf["results"]["status"] == "hypotheses-fail");

    r = reinterpret_cast<rk_report*>(1);
    CHECK(rk_cmd_check(m.get(), "T9.9", nullptr, &r) == RK_ERR_INVALID);
    CHECK(r == nullptr);
    CHECK(std::string(rk_last_error()).find("T9.9") != std::string::npos);
}

TEST_CASE("budget exhaustion is status 4 without a report") {
    auto m = parse(kSqMaxIdeal);
    rk_options o{0, 0, 1, 0};  // one Groebner pair: nothing finishes
    rk_report* r = nullptr;
    CHECK(rk_cmd_rees(m.get(), &o, &r) == RK_ERR_BUDGET);
    CHECK(r == nullptr);
    CHECK(std::string(rk_last_error()).find("budget") != std::string::npos);
    // the cap is restored afterwards: the same command succeeds with defaults
    CHECK(rk_cmd_rees(m.get(), nullptr, &r) == RK_OK);
    rk_report_free(r);
}

TEST_CASE("bourbaki and residual commands on a rank-one module") {
    auto m = parse(kMaxIdeal);
    rk_report* r = nullptr;
    REQUIRE(rk_cmd_bourbaki(m.get(), nullptr, &r) == RK_OK);
    json b = report_of(r);
    CHECK(b["results"]["free_case"] == false);
    CHECK(b["results"]["height"] == 2);
    CHECK(b["results"]["invariants"]["status"] == "verified");
    CHECK(b["results"]["deformation_check"] == true);

    REQUIRE(rk_cmd_residual(m.get(), nullptr, &r) == RK_OK);
    json res = report_of(r);
    CHECK(res["results"]["height"] == 2);
    REQUIRE(res["results"]["residuals"].size() >= 1);
    for (const auto& row : res["results"]["residuals"])
        if (!row["K_is_unit"].get<bool>())
            CHECK(row["height_K"].get<int>() >= row["s"].get<int>());
    CHECK(res["results"]["an_check"]["status"] == "verified");

    auto free2 = parse(
        R"({"ring":{"char":32003,"vars":["x","y"]},"presentation":[],"ambient_rank":2})");
    CHECK(rk_cmd_residual(free2.get(), nullptr, &r) == RK_ERR_INVALID);
    CHECK(r == nullptr);
}

TEST_CASE("reports are byte-stable apart from the timing field") {
    auto m = parse(kSqMaxIdeal);
    auto strip = [](json d) {
        d.erase("timing_ms");
        return d.dump();
    };
    rk_report* r = nullptr;
    REQUIRE(rk_cmd_rees(m.get(), nullptr, &r) == RK_OK);
    std::string first = strip(report_of(r));
    REQUIRE(rk_cmd_rees(m.get(), nullptr, &r) == RK_OK);
    CHECK(strip(report_of(r)) == first);
}

TEST_CASE("gallery with a filter reports per-module statuses") {
    rk_options o{0, 0, 0, 2};
    rk_report* r = nullptr;
    REQUIRE(rk_cmd_gallery("T2.5", &o, &r) == RK_OK);
    json doc = report_of(r);
    CHECK(doc["results"]["filter"] == "T2.5");
    CHECK(doc["results"]["entries"].size() == 12);
    CHECK(doc["results"]["summary"]["contradictions"] == 0);
    for (const auto& e : doc["results"]["entries"]) CHECK(e["theorem"] == "T2.5");

    r = reinterpret_cast<rk_report*>(1);
    CHECK(rk_cmd_gallery("nope", nullptr, &r) == RK_ERR_INVALID);
    CHECK(r == nullptr);
}
