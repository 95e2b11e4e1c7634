// Command-line front end; all computation goes through the C interface.
#include <reeskit.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <unistd.h>

using json = nlohmann::json;

namespace {

struct Options {
    std::uint64_t seed = 0;
    std::uint64_t field = 32003;
    unsigned max_degree = 6;
    std::uint64_t budget = 0;
    unsigned jobs = 1;
    std::string out_path;
    bool json_out = false;
    std::string theorem;
    std::string spec_path;
    bool max_degree_set = false;
};

void add_common_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--seed", o.seed, "random seed")->default_val(0);
    cmd->add_option("--field", o.field,
                    "coefficient field: a prime, or 0 for the rationals")
        ->default_val(32003);
    cmd->add_option("--max-degree", o.max_degree, "bound for degreewise scans")
        ->default_val(6)
        ->trigger_on_parse()
        ->each([&o](const std::string&) { o.max_degree_set = true; });
    cmd->add_option("--budget", o.budget, "Groebner pair budget");
    cmd->add_option("--out", o.out_path, "write the JSON report to this path");
    cmd->add_flag("--json", o.json_out, "print the JSON report to stdout");
}

bool use_color() {
    return isatty(fileno(stdout)) && std::getenv("NO_COLOR") == nullptr;
}

std::string paint(const std::string& s, const char* code) {
    if (!use_color()) return s;
    return std::string("\033[") + code + "m" + s + "\033[0m";
}

std::string colored_status(const std::string& s) {
    if (s == "verified") return paint(s, "32");
    if (s == "CONTRADICTION") return paint(s, "31");
    return paint(s, "33");
}

int exit_code(rk_status st) {
    switch (st) {
        case RK_OK: return 0;
        case RK_ERR_PARSE: return 1;
        case RK_ERR_HYPOTHESIS: return 2;
        case RK_ERR_CONTRADICTION: return 3;
        case RK_ERR_BUDGET: return 4;
        default: return 1;
    }
}

struct ModDeleter {
    void operator()(rk_module* m) const { rk_module_free(m); }
};
using ModPtr = std::unique_ptr<rk_module, ModDeleter>;

// nullptr (with a message on stderr) means exit 1
ModPtr load_module(const std::string& path, std::uint64_t field, bool field_set) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open " << path << "\n";
        return nullptr;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    rk_module* m = nullptr;
    if (rk_module_parse(text.c_str(), &m) != RK_OK) {
        std::cerr << "error: " << path << ": " << rk_last_error() << "\n";
        return nullptr;
    }
    if (field_set) {
        json doc = json::parse(text);
        if (doc["ring"]["char"].get<std::uint64_t>() != field) {
            std::cerr << "error: --field " << field
                      << " conflicts with the spec's characteristic\n";
            rk_module_free(m);
            return nullptr;
        }
    }
    return ModPtr(m);
}

rk_options to_c_options(const Options& o) {
    rk_options c{};
    c.seed = o.seed;
    c.max_degree = o.max_degree_set ? o.max_degree : 0;
    c.budget = o.budget;
    c.jobs = o.jobs;
    c.field_char = o.field == 0 ? 1 : (o.field == 32003 ? 0 : o.field);
    return c;
}

void print_check_report(const json& res) {
    std::cout << res["id"].get<std::string>() << ": "
              << colored_status(res["status"].get<std::string>()) << "\n";
    for (const char* kind : {"hypotheses", "conclusions"})
        for (const auto& item : res[kind])
            if (!item["pass"].get<bool>())
                std::cout << "  failed " << kind << ": "
                          << item["name"].get<std::string>() << "\n";
    for (const auto& n : res["notes"])
        std::cout << "  note: " << n.get<std::string>() << "\n";
}

void print_human(const std::string& cmd, const json& doc) {
    const json& res = doc["results"];
    if (cmd == "rees") {
        std::cout << "linear type: " << (res["linear_type"].get<bool>() ? "yes" : "no")
                  << "\nanalytic spread: " << res["fiber_dim"] << "\n";
        std::cout << "symmetric-algebra ideal (" << res["sym_gens"].size() << " gens):\n";
        for (const auto& g : res["sym_gens"]) std::cout << "  " << g.get<std::string>() << "\n";
        std::cout << "rees ideal (" << res["rees_gens"].size() << " gens):\n";
        for (const auto& g : res["rees_gens"]) std::cout << "  " << g.get<std::string>() << "\n";
    } else if (cmd == "fiber") {
        std::cout << "special fiber dimension: " << res["fiber_dim"] << "\n";
        for (const auto& g : res["fiber_gens"]) std::cout << "  " << g.get<std::string>() << "\n";
    } else if (cmd == "powers") {
        std::cout << "linear type: " << (res["linear_type"].get<bool>() ? "yes" : "no") << "\n";
        for (const auto& row : res["powers"])
            std::cout << "E^" << row["j"] << ": mu = " << row["mu"]
                      << ", torsion-free = " << (row["torsion_free"].get<bool>() ? "yes" : "no")
                      << ", Sym torsion-free = "
                      << (row["sym_torsion_free"].get<bool>() ? "yes" : "no") << "\n";
    } else if (cmd == "bourbaki") {
        if (res["free_case"].get<bool>()) {
            std::cout << "module is free: trivial Bourbaki sequence\n";
            return;
        }
        std::cout << "bourbaki ideal (height " << res["height"] << "):\n";
        for (const auto& g : res["ideal_gens"]) std::cout << "  " << g.get<std::string>() << "\n";
        std::cout << "invariants: "
                  << colored_status(res["invariants"]["status"].get<std::string>())
                  << "\ndeformation check: "
                  << (res["deformation_check"].get<bool>() ? "pass" : "fail") << "\n";
    } else if (cmd == "residual") {
        std::cout << "ideal embedding (height " << res["height"] << "):\n";
        for (const auto& g : res["ideal_gens"]) std::cout << "  " << g.get<std::string>() << "\n";
        for (const auto& row : res["residuals"])
            std::cout << "s = " << row["s"] << ": height(K) = "
                      << (row["K_is_unit"].get<bool>() ? json("unit ideal") : row["height_K"])
                      << ", proper = " << (row["proper"].get<bool>() ? "yes" : "no")
                      << ", geometric = " << (row["geometric"].get<bool>() ? "yes" : "no")
                      << ", CM quotient = "
                      << (row["cm_quotient"].get<bool>() ? "yes" : "no") << "\n";
        if (res.contains("an_check"))
            std::cout << "Artin-Nagata check: "
                      << colored_status(res["an_check"]["status"].get<std::string>()) << "\n";
    } else if (cmd == "check") {
        print_check_report(res);
    } else if (cmd == "gallery") {
        for (const auto& e : res["entries"]) {
            std::cout << e["module"].get<std::string>() << " / "
                      << e["theorem"].get<std::string>() << ": "
                      << colored_status(e["status"].get<std::string>());
            if (e.contains("failing"))
                for (const auto& f : e["failing"])
                    std::cout << "  [" << f.get<std::string>() << "]";
            std::cout << "\n";
        }
        const json& sum = res["summary"];
        std::cout << "verified " << sum["verified"] << ", hypotheses-fail "
                  << sum["hypotheses_fail"] << ", contradictions "
                  << sum["contradictions"] << "\n";
    }
}

int emit(const std::string& cmd, const Options& o, rk_status st, rk_report* rep) {
    if (!rep) {
        std::cerr << "error: " << rk_last_error() << "\n";
        return exit_code(st == RK_OK ? RK_ERR_INVALID : st);
    }
    std::string text = rk_report_json(rep);
    if (!o.out_path.empty()) {
        std::ofstream out(o.out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << o.out_path << "\n";
            rk_report_free(rep);
            return 1;
        }
        out << text;
    }
    if (o.json_out) {
        std::cout << text;
    } else {
        print_human(cmd, json::parse(text));
    }
    rk_report_free(rep);
    return exit_code(st);
}

using CmdFn = rk_status (*)(const rk_module*, const rk_options*, rk_report**);

int run_module_command(const std::string& name, CmdFn fn, const Options& o, bool field_set) {
    auto m = load_module(o.spec_path, o.field, field_set);
    if (!m) return 1;
    rk_options c = to_c_options(o);
    rk_report* rep = nullptr;
    rk_status st = fn(m.get(), &c, &rep);
    return emit(name, o, st, rep);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rees algebras of modules: construction and theorem checking"};
    app.require_subcommand(1);

    Options o;
    struct Sub {
        const char* name;
        const char* desc;
        CmdFn fn;
        CLI::App* cmd = nullptr;
    };
    Sub subs[] = {
        {"rees", "symmetric-algebra and Rees ideals of a module", rk_cmd_rees},
        {"fiber", "special fiber of the Rees algebra", rk_cmd_fiber},
        {"powers", "module powers E^j and their torsion", rk_cmd_powers},
        {"bourbaki", "generic Bourbaki ideal of a module", rk_cmd_bourbaki},
        {"residual", "residual intersections of the ideal embedding", rk_cmd_residual},
    };
    for (auto& s : subs) {
        s.cmd = app.add_subcommand(s.name, s.desc);
        s.cmd->add_option("spec", o.spec_path, "module spec file (JSON)")->required();
        add_common_flags(s.cmd, o);
    }

    CLI::App* check = app.add_subcommand("check", "evaluate one registered statement");
    check->add_option("spec", o.spec_path, "module spec file (JSON)")->required();
    check->add_option("--theorem", o.theorem, "statement id (e.g. T3.2)")->required();
    add_common_flags(check, o);

    CLI::App* gallery =
        app.add_subcommand("gallery", "evaluate the registry over the built-in gallery");
    gallery->add_option("--theorem", o.theorem, "restrict to one statement id");
    gallery->add_option("--jobs", o.jobs, "worker threads")->default_val(1);
    add_common_flags(gallery, o);

    CLI11_PARSE(app, argc, argv);

    for (auto& s : subs)
        if (s.cmd->parsed())
            return run_module_command(s.name, s.fn, o, s.cmd->count("--field") > 0);

    if (check->parsed()) {
        auto m = load_module(o.spec_path, o.field, check->count("--field") > 0);
        if (!m) return 1;
        rk_options c = to_c_options(o);
        rk_report* rep = nullptr;
        rk_status st = rk_cmd_check(m.get(), o.theorem.c_str(), &c, &rep);
        return emit("check", o, st, rep);
    }

    // gallery
    rk_options c = to_c_options(o);
    rk_report* rep = nullptr;
    rk_status st =
        rk_cmd_gallery(o.theorem.empty() ? nullptr : o.theorem.c_str(), &c, &rep);
    return emit("gallery", o, st, rep);
}
