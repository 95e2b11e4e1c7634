#include "modspec_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

namespace rk {

using ordered_json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw InvalidInput("module spec: " + where + ": " + what);
}

void check_keys(const ordered_json& obj, const std::string& where,
                const std::set<std::string>& allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key())) fail(where, "unknown key \"" + it.key() + "\"");
}

}  // namespace

ModuleSpec parse_module_spec(const std::string& bytes) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(bytes);
    } catch (const nlohmann::json::parse_error& ex) {
        throw InvalidInput(std::string("module spec: ") + ex.what());
    }
    if (!doc.is_object()) fail("top level", "expected a JSON object");
    check_keys(doc, "top level",
               {"ring", "presentation", "ambient_rank", "label", "generator_degrees"});
    if (!doc.contains("ring")) fail("top level", "missing \"ring\"");
    if (!doc.contains("presentation")) fail("top level", "missing \"presentation\"");

    const ordered_json& rj = doc["ring"];
    if (!rj.is_object()) fail("ring", "expected an object");
    check_keys(rj, "ring", {"char", "vars"});
    if (!rj.contains("char") || !rj["char"].is_number_unsigned())
        fail("ring.char", "expected a non-negative integer");
    std::uint64_t p = rj["char"].get<std::uint64_t>();
    if (p != 0 && !is_prime_u64(p))
        fail("ring.char", std::to_string(p) + " is not prime (use 0 for the rationals)");
    if (!rj.contains("vars") || !rj["vars"].is_array() || rj["vars"].empty())
        fail("ring.vars", "expected a non-empty array of variable names");
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < rj["vars"].size(); ++i) {
        const ordered_json& v = rj["vars"][i];
        if (!v.is_string() || v.get<std::string>().empty())
            fail("ring.vars[" + std::to_string(i) + "]", "expected a non-empty string");
        vars.push_back(v.get<std::string>());
    }
    RingPtr R = make_ring(FieldSpec{p}, vars);

    const ordered_json& pj = doc["presentation"];
    if (!pj.is_array()) fail("presentation", "expected an array of rows");
    std::size_t rows = pj.size();
    if (rows == 0) {
        if (!doc.contains("ambient_rank") || !doc["ambient_rank"].is_number_unsigned())
            fail("ambient_rank",
                 "required (non-negative integer) when the presentation is empty");
        std::size_t n = doc["ambient_rank"].get<std::size_t>();
        ModuleSpec out{free_module(R, n), {}};
        if (doc.contains("label")) out.label = doc["label"].get<std::string>();
        return out;
    }
    std::size_t cols = pj[0].is_array() ? pj[0].size() : 0;
    PolyMatrix pres(R, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const ordered_json& row = pj[i];
        std::string rw = "presentation[" + std::to_string(i) + "]";
        if (!row.is_array()) fail(rw, "expected an array of polynomial strings");
        if (row.size() != cols)
            fail(rw, "ragged grid: " + std::to_string(row.size()) + " entries, expected " +
                         std::to_string(cols));
        for (std::size_t j = 0; j < cols; ++j) {
            const ordered_json& cell = row[j];
            std::string cw = rw + "[" + std::to_string(j) + "]";
            if (!cell.is_string()) fail(cw, "expected a polynomial string");
            try {
                pres.at(i, j) = parse_poly(R, cell.get<std::string>());
            } catch (const ParseError& ex) {
                fail(cw, ex.what());
            }
        }
    }
    if (doc.contains("generator_degrees")) {
        const ordered_json& gd = doc["generator_degrees"];
        if (!gd.is_array() || gd.size() != rows)
            fail("generator_degrees", "expected one entry per generator");
    }
    ModuleSpec out{PModule(std::move(pres)), {}};
    if (doc.contains("label")) {
        if (!doc["label"].is_string()) fail("label", "expected a string");
        out.label = doc["label"].get<std::string>();
    }
    return out;
}

std::string module_spec_string(const PModule& E, const std::string& label) {
    ordered_json doc;
    doc["ring"]["char"] = E.ring()->field.characteristic;
    doc["ring"]["vars"] = E.ring()->vars;
    ordered_json grid = ordered_json::array();
    if (E.nrels() > 0) {
        for (std::size_t i = 0; i < E.ngens(); ++i) {
            ordered_json row = ordered_json::array();
            for (std::size_t j = 0; j < E.nrels(); ++j) row.push_back(E.pres.at(i, j).str());
            grid.push_back(std::move(row));
        }
    }
    doc["presentation"] = std::move(grid);
    if (E.nrels() == 0) doc["ambient_rank"] = E.ngens();
    if (!label.empty()) doc["label"] = label;
    return doc.dump();
}

std::vector<std::string> sorted_gb_strings(const IdealData& I) {
    std::vector<std::pair<unsigned, std::string>> keyed;
    for (const auto& g : I.gb()) keyed.emplace_back(g.degree(), g.str());
    std::sort(keyed.begin(), keyed.end());
    std::vector<std::string> out;
    out.reserve(keyed.size());
    for (auto& k : keyed) out.push_back(std::move(k.second));
    return out;
}

}  // namespace rk
