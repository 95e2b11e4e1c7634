#include "reeskit.h"

#include "bourbaki.hpp"
#include "modspec_io.hpp"
#include "residual.hpp"
#include "theoremlab.hpp"

#include <json.hpp>

#include <chrono>
#include <string>

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "0.1.0";

thread_local std::string g_last_error;

rk_status fail(rk_status code, const std::string& msg) {
    g_last_error = msg;
    return code;
}

rk_options normalized(const rk_options* opts) {
    rk_options o{0, 0, 0, 0, 0};
    if (opts) o = *opts;
    if (o.max_degree == 0) o.max_degree = 6;
    if (o.jobs == 0) o.jobs = 1;
    return o;
}

rk::FieldSpec field_of(const rk_options& o) {
    if (o.field_char == 0) return rk::FieldSpec{};
    if (o.field_char == 1) return rk::FieldSpec{0};
    if (!rk::is_prime_u64(o.field_char))
        throw rk::InvalidInput("field characteristic is not prime");
    return rk::FieldSpec{o.field_char};
}

// apply the pair budget for the duration of one command
struct BudgetScope {
    rk::GbBudget saved;
    explicit BudgetScope(const rk_options& o) : saved(rk::gb_budget()) {
        if (o.budget != 0) rk::gb_budget().max_pairs = o.budget;
        rk::gb_budget().pairs_used = 0;
    }
    ~BudgetScope() { rk::gb_budget() = saved; }
};

ordered_json report_item_json(const rk::CheckItem& it) {
    ordered_json j;
    j["name"] = it.name;
    j["pass"] = it.pass;
    if (!it.detail.empty()) j["detail"] = it.detail;
    return j;
}

ordered_json check_report_json(const rk::CheckReport& rep) {
    ordered_json j;
    j["id"] = rep.id;
    j["status"] = rk::status_str(rep.status());
    j["hypotheses"] = ordered_json::array();
    for (const auto& h : rep.hypotheses) j["hypotheses"].push_back(report_item_json(h));
    j["conclusions"] = ordered_json::array();
    for (const auto& c : rep.conclusions) j["conclusions"].push_back(report_item_json(c));
    j["notes"] = rep.notes;
    return j;
}

bool report_hit_budget(const rk::CheckReport& rep) {
    for (const auto& n : rep.notes)
        if (n.rfind("BUDGET_EXHAUSTED", 0) == 0) return true;
    return false;
}

}  // namespace

struct rk_module {
    rk::ModuleSpec spec;
};

struct rk_report {
    std::string json;
};

extern "C" {

const char* rk_version(void) { return kVersion; }

const char* rk_last_error(void) { return g_last_error.c_str(); }

rk_status rk_module_parse(const char* json, rk_module** out) {
    if (out) *out = nullptr;
    if (!json || !out) return fail(RK_ERR_INVALID, "null argument");
    try {
        auto spec = rk::parse_module_spec(json);
        *out = new rk_module{std::move(spec)};
        g_last_error.clear();
        return RK_OK;
    } catch (const rk::InvalidInput& ex) {
        return fail(RK_ERR_PARSE, ex.what());
    } catch (const std::exception& ex) {
        return fail(RK_ERR_PARSE, ex.what());
    }
}

void rk_module_free(rk_module* m) { delete m; }

const char* rk_report_json(const rk_report* r) { return r ? r->json.c_str() : ""; }

void rk_report_free(rk_report* r) { delete r; }

}  // extern "C"

namespace {

// shared envelope; `run` fills the results object and may adjust the status
template <typename Fn>
rk_status run_command(const char* command, const rk_module* m, const rk_options* opts,
                      rk_report** out, Fn&& run) {
    if (out) *out = nullptr;
    if (!out) return fail(RK_ERR_INVALID, "null report pointer");
    rk_options o = normalized(opts);
    ordered_json doc;
    doc["version"] = kVersion;
    doc["command"] = command;
    doc["seed"] = o.seed;
    doc["options"]["max_degree"] = o.max_degree;
    doc["options"]["jobs"] = o.jobs;
    if (!m) doc["options"]["field_char"] = field_of(o).characteristic;
    doc["input"] =
        m ? ordered_json::parse(rk::module_spec_string(m->spec.module, m->spec.label))
          : ordered_json(nullptr);
    auto t0 = std::chrono::steady_clock::now();
    rk_status code = RK_OK;
    try {
        BudgetScope budget(o);
        code = run(o, doc["results"]);
        doc["budget"]["max_pairs"] = rk::gb_budget().max_pairs;
        // worker threads keep their own counters, so the count is only
        // meaningful (and deterministic) for single-threaded commands
        if (m) doc["budget"]["pairs_used"] = rk::gb_budget().pairs_used;
    } catch (const rk::BudgetExceeded& ex) {
        return fail(RK_ERR_BUDGET, ex.what());
    } catch (const rk::InvalidInput& ex) {
        return fail(RK_ERR_INVALID, ex.what());
    } catch (const std::exception& ex) {
        return fail(RK_ERR_INVALID, ex.what());
    }
    doc["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
    *out = new rk_report{doc.dump(2) + "\n"};
    g_last_error.clear();
    return code;
}

}  // namespace

extern "C" {

rk_status rk_cmd_rees(const rk_module* m, const rk_options* opts, rk_report** out) {
    if (out) *out = nullptr;
    if (!m) return fail(RK_ERR_INVALID, "null module");
    return run_command("rees", m, opts, out, [&](const rk_options&, ordered_json& res) {
        auto pkg = rk::rees_package(m->spec.module);
        res["ntvars"] = pkg.ntvars;
        res["linear_type"] = rk::is_linear_type(pkg);
        res["sym_gens"] = rk::sorted_gb_strings(pkg.sym);
        res["rees_gens"] = rk::sorted_gb_strings(pkg.rees);
        res["fiber_dim"] = rk::special_fiber_dim(pkg);
        return RK_OK;
    });
}

rk_status rk_cmd_fiber(const rk_module* m, const rk_options* opts, rk_report** out) {
    if (out) *out = nullptr;
    if (!m) return fail(RK_ERR_INVALID, "null module");
    return run_command("fiber", m, opts, out, [&](const rk_options&, ordered_json& res) {
        auto pkg = rk::rees_package(m->spec.module);
        auto fiber = rk::special_fiber_ideal(pkg);
        res["fiber_dim"] = rk::dimension(fiber);
        res["fiber_gens"] = rk::sorted_gb_strings(fiber);
        return RK_OK;
    });
}

rk_status rk_cmd_powers(const rk_module* m, const rk_options* opts, rk_report** out) {
    if (out) *out = nullptr;
    if (!m) return fail(RK_ERR_INVALID, "null module");
    return run_command("powers", m, opts, out, [&](const rk_options& o, ordered_json& res) {
        auto pkg = rk::rees_package(m->spec.module);
        auto spkg = rk::sym_package(m->spec.module);
        res["linear_type"] = rk::is_linear_type(pkg);
        res["powers"] = ordered_json::array();
        for (unsigned j = 1; j <= o.max_degree; ++j) {
            auto Ej = rk::power_module(pkg, j);
            ordered_json row;
            row["j"] = j;
            row["mu"] = rk::min_generators(Ej);
            row["torsion_free"] = rk::is_torsion_free(Ej);
            row["sym_torsion_free"] = rk::is_torsion_free(rk::sym_power_module(spkg, j));
            res["powers"].push_back(std::move(row));
        }
        return RK_OK;
    });
}

rk_status rk_cmd_bourbaki(const rk_module* m, const rk_options* opts, rk_report** out) {
    if (out) *out = nullptr;
    if (!m) return fail(RK_ERR_INVALID, "null module");
    return run_command("bourbaki", m, opts, out, [&](const rk_options& o, ordered_json& res) {
        auto B = rk::bourbaki_construct(m->spec.module, false, o.seed);
        res["free_case"] = B.free_case;
        if (B.free_case) return RK_OK;
        res["ideal_gens"] = rk::sorted_gb_strings(B.ideal_I);
        res["height"] = B.grade_I;
        if (B.gcd.degree() > 0) res["gcd_removed"] = B.gcd.str();
        res["invariants"] = check_report_json(
            rk::bourbaki_invariant_check(m->spec.module, B));
        bool cross = false;
        res["deformation_check"] = rk::rees_deformation_check(m->spec.module, B, &cross);
        res["deformation_cross"] = cross;
        return RK_OK;
    });
}

rk_status rk_cmd_residual(const rk_module* m, const rk_options* opts, rk_report** out) {
    if (out) *out = nullptr;
    if (!m) return fail(RK_ERR_INVALID, "null module");
    return run_command("residual", m, opts, out, [&](const rk_options& o, ordered_json& res) {
        if (rk::module_rank(m->spec.module) != 1)
            throw rk::InvalidInput("residual intersections need a rank-one module");
        auto B = rk::bourbaki_construct(m->spec.module, false, o.seed);
        if (B.free_case) throw rk::InvalidInput("free module has no ideal embedding");
        const rk::IdealData& I = B.ideal_I;
        int d = static_cast<int>(m->spec.module.ring()->nvars());
        int ht = rk::height(I);
        int smax = std::min(d, static_cast<int>(I.gens().size()));
        res["ideal_gens"] = rk::sorted_gb_strings(I);
        res["height"] = ht;
        res["residuals"] = ordered_json::array();
        for (int s = ht; s <= smax; ++s) {
            auto rd = rk::residual_intersection(I, static_cast<unsigned>(s), o.seed);
            ordered_json row;
            row["s"] = s;
            row["K_gens"] = rk::sorted_gb_strings(rd.K);
            row["K_is_unit"] = rd.K.is_one();
            // null when K is the unit ideal (no prime contains it)
            row["height_K"] = rd.K.is_one() ? ordered_json(nullptr)
                                            : ordered_json(rk::height(rd.K));
            row["proper"] = rd.proper;
            row["geometric"] = rd.geometric;
            row["cm_quotient"] = rd.cm_quotient;
            res["residuals"].push_back(std::move(row));
        }
        if (smax >= ht)
            res["an_check"] = check_report_json(
                rk::check_AN(I, static_cast<unsigned>(smax), 4, o.seed));
        return RK_OK;
    });
}

rk_status rk_cmd_check(const rk_module* m, const char* theorem_id, const rk_options* opts,
                       rk_report** out) {
    if (out) *out = nullptr;
    if (!m) return fail(RK_ERR_INVALID, "null module");
    if (!theorem_id) return fail(RK_ERR_INVALID, "null theorem id");
    std::string id = theorem_id;
    if (!rk::is_theorem_id(id))
        return fail(RK_ERR_INVALID, "unknown theorem id: " + id);
    return run_command("check", m, opts, out, [&](const rk_options& o, ordered_json& res) {
        rk::TheoremParams p;
        p.seed = o.seed;
        if (opts && opts->max_degree != 0) p.max_j = opts->max_degree;
        auto rep = rk::check_theorem(id, m->spec.module, p);
        res = check_report_json(rep);
        if (report_hit_budget(rep)) return RK_ERR_BUDGET;
        switch (rep.status()) {
            case rk::Status::Verified: return RK_OK;
            case rk::Status::HypothesesFail: return RK_ERR_HYPOTHESIS;
            default: return RK_ERR_CONTRADICTION;
        }
    });
}

rk_status rk_cmd_gallery(const char* theorem_id, const rk_options* opts, rk_report** out) {
    if (out) *out = nullptr;
    std::string filter = theorem_id ? theorem_id : "";
    if (!filter.empty() && !rk::is_theorem_id(filter))
        return fail(RK_ERR_INVALID, "unknown theorem id: " + filter);
    try {
        field_of(normalized(opts));
    } catch (const rk::InvalidInput& ex) {
        return fail(RK_ERR_INVALID, ex.what());
    }
    return run_command("gallery", nullptr, opts, out,
                       [&](const rk_options& o, ordered_json& res) {
        auto results = rk::run_gallery(filter, o.seed, o.jobs, field_of(o));
        res["filter"] = filter.empty() ? ordered_json(nullptr) : ordered_json(filter);
        res["entries"] = ordered_json::array();
        std::size_t verified = 0, hypfail = 0, contra = 0;
        for (const auto& r : results) {
            ordered_json row;
            row["module"] = r.label;
            row["theorem"] = r.report.id;
            row["status"] = rk::status_str(r.report.status());
            ordered_json failing = ordered_json::array();
            for (const auto& h : r.report.hypotheses)
                if (!h.pass) failing.push_back(h.name);
            for (const auto& c : r.report.conclusions)
                if (!c.pass) failing.push_back(c.name);
            if (!failing.empty()) row["failing"] = std::move(failing);
            res["entries"].push_back(std::move(row));
            switch (r.report.status()) {
                case rk::Status::Verified: ++verified; break;
                case rk::Status::HypothesesFail: ++hypfail; break;
                default: ++contra; break;
            }
        }
        res["summary"]["verified"] = verified;
        res["summary"]["hypotheses_fail"] = hypfail;
        res["summary"]["contradictions"] = contra;
        return contra > 0 ? RK_ERR_CONTRADICTION : RK_OK;
    });
}

}  // extern "C"
