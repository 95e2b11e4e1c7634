#include "rees.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

namespace rk {

std::vector<Mono> degree_monomials(std::size_t n, unsigned j) {
    std::vector<Mono> out;
    Mono m{std::vector<std::uint16_t>(n, 0)};
    // lexicographically descending in the exponent vector
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
        if (i + 1 == n) {
            m.e[i] = static_cast<std::uint16_t>(left);
            out.push_back(m);
            m.e[i] = 0;
            return;
        }
        for (int e = static_cast<int>(left); e >= 0; --e) {
            m.e[i] = static_cast<std::uint16_t>(e);
            rec(i + 1, left - static_cast<unsigned>(e));
        }
        m.e[i] = 0;
    };
    if (n == 0) return out;
    rec(0, j);
    return out;
}

static ReesPackage rees_package_impl(const PModule& E, const std::string& tprefix,
                                     bool saturate_now);

ReesPackage sym_package(const PModule& E, const std::string& tprefix) {
    return rees_package_impl(E, tprefix, false);
}

ReesPackage rees_package(const PModule& E, const std::string& tprefix) {
    return rees_package_impl(E, tprefix, true);
}

static ReesPackage rees_package_impl(const PModule& E, const std::string& tprefix,
                                     bool saturate_now) {
    const RingPtr& R = E.ring();
    std::size_t n = E.ngens(), s = E.nrels();
    if (n == 0) throw InvalidInput("rees algebra needs a module with generators");
    std::size_t r = matrix_rank(E.pres);
    if (r == n) throw InvalidInput("rees algebra needs a module of positive rank");

    auto tnames = fresh_var_names(R->vars, tprefix, n);
    std::vector<std::string> vars = R->vars;
    for (auto& t : tnames) vars.push_back(t);
    RingPtr big = make_ring(R->field, std::move(vars));

    std::vector<Poly> lin;
    for (std::size_t j = 0; j < s; ++j) {
        Poly g = Poly::zero(big);
        for (std::size_t i = 0; i < n; ++i) {
            const Poly& entry = E.pres.at(i, j);
            if (entry.is_zero()) continue;
            g = g + shift_vars(entry, big, 0) * Poly::variable(big, R->nvars() + i);
        }
        if (!g.is_zero()) lin.push_back(g);
    }
    IdealData sym(big, lin);

    ReesPackage pkg;
    pkg.base = R;
    pkg.big = big;
    pkg.nbase = R->nvars();
    pkg.ntvars = n;
    pkg.sym = sym;
    if (lin.empty() || r == 0 || !saturate_now) {
        pkg.rees = sym;
        pkg.minor = Poly::from_int(big, 1);
        return pkg;
    }
    // a nonzero maximal minor of the presentation frees the module locally
    Poly f = Poly::zero(R);
    {
        auto all = minors_ideal(E.pres, r);  // small matrices: fine to enumerate
        for (const auto& g : all.gens())
            if (!g.is_zero()) {
                f = g;
                break;
            }
    }
    pkg.minor = shift_vars(f, big, 0);
    pkg.rees = saturate(sym, IdealData(big, {pkg.minor}));
    return pkg;
}

std::vector<bool> tvar_mask(const ReesPackage& pkg) {
    std::vector<bool> mask(pkg.big->nvars(), false);
    for (std::size_t i = pkg.nbase; i < pkg.big->nvars(); ++i) mask[i] = true;
    return mask;
}

bool is_linear_type(const ReesPackage& pkg) {
    return ideal_eq(pkg.sym, pkg.rees);
}

namespace {

// split a big-ring polynomial of pure T-degree j into a vector over the base
// ring, indexed by the degree-j T-monomials
Vec to_graded_vec(const ReesPackage& pkg, const Poly& h, unsigned j,
                  const std::vector<Mono>& mons,
                  const std::map<std::vector<std::uint16_t>, std::size_t>& index) {
    const RingPtr& R = pkg.base;
    std::vector<PolyBuilder> comps;
    comps.reserve(mons.size());
    for (std::size_t i = 0; i < mons.size(); ++i) comps.emplace_back(R);
    for (const auto& t : h.terms()) {
        std::vector<std::uint16_t> tpart(pkg.ntvars);
        Mono base{std::vector<std::uint16_t>(pkg.nbase, 0)};
        unsigned tdeg = 0;
        for (std::size_t i = 0; i < pkg.nbase; ++i) base.e[i] = t.m.e[i];
        for (std::size_t i = 0; i < pkg.ntvars; ++i) {
            tpart[i] = t.m.e[pkg.nbase + i];
            tdeg += tpart[i];
        }
        if (tdeg != j) throw Error("graded piece extraction hit a mixed-degree term");
        comps[index.at(tpart)].add_term(t.c, base);
    }
    Vec v;
    v.reserve(mons.size());
    for (auto& b : comps) v.push_back(b.build());
    return v;
}

struct GradedBasis {
    std::vector<Mono> mons;
    std::map<std::vector<std::uint16_t>, std::size_t> index;
};

GradedBasis graded_basis(std::size_t n, unsigned j) {
    GradedBasis gb;
    gb.mons = degree_monomials(n, j);
    for (std::size_t i = 0; i < gb.mons.size(); ++i) gb.index[gb.mons[i].e] = i;
    return gb;
}

// generators of the degree-j piece of a T-graded ideal, as vectors
std::vector<Vec> graded_piece(const ReesPackage& pkg, const IdealData& I, unsigned j,
                              const GradedBasis& basis) {
    const auto mask = tvar_mask(pkg);
    std::vector<Vec> out;
    for (const auto& g : I.gb()) {
        if (!g.is_homogeneous_in(mask)) throw Error("graded piece of a non-T-graded ideal");
        unsigned d = g.degree_in(mask);
        if (d > j) continue;
        for (const auto& beta : degree_monomials(pkg.ntvars, j - d)) {
            Mono full{std::vector<std::uint16_t>(pkg.big->nvars(), 0)};
            for (std::size_t i = 0; i < pkg.ntvars; ++i) full.e[pkg.nbase + i] = beta.e[i];
            Poly h = g.times_term(pkg.big->field.one(), full);
            out.push_back(to_graded_vec(pkg, h, j, basis.mons, basis.index));
        }
    }
    return out;
}

}  // namespace

PModule power_module(const ReesPackage& pkg, unsigned j) {
    if (j == 0) return free_module(pkg.base, 1);
    auto basis = graded_basis(pkg.ntvars, j);
    auto rels = graded_piece(pkg, pkg.rees, j, basis);
    return PModule(PolyMatrix::from_cols(pkg.base, basis.mons.size(), rels));
}

PModule sym_power_module(const ReesPackage& pkg, unsigned j) {
    if (j == 0) return free_module(pkg.base, 1);
    auto basis = graded_basis(pkg.ntvars, j);
    auto rels = graded_piece(pkg, pkg.sym, j, basis);
    return PModule(PolyMatrix::from_cols(pkg.base, basis.mons.size(), rels));
}

IdealData special_fiber_ideal(const ReesPackage& pkg) {
    std::vector<std::string> tnames(pkg.big->vars.begin() +
                                        static_cast<std::ptrdiff_t>(pkg.nbase),
                                    pkg.big->vars.end());
    RingPtr Tring = make_ring(pkg.big->field, tnames);
    std::vector<Poly> images;
    for (std::size_t i = 0; i < pkg.nbase; ++i) images.push_back(Poly::zero(Tring));
    for (std::size_t i = 0; i < pkg.ntvars; ++i) images.push_back(Poly::variable(Tring, i));
    std::vector<Poly> gens;
    for (const auto& g : pkg.rees.gb()) {
        Poly h = g.map_to(Tring, images);
        if (!h.is_zero()) gens.push_back(h);
    }
    return IdealData(Tring, gens);
}

int special_fiber_dim(const ReesPackage& pkg) {
    return dimension(special_fiber_ideal(pkg));
}

std::optional<int> reduction_number(const ReesPackage& pkg, std::uint64_t seed, unsigned cap,
                                    unsigned seeds) {
    const RingPtr& R = pkg.base;
    int ell = special_fiber_dim(pkg);
    if (ell <= 0) return 0;
    std::optional<int> best;
    for (unsigned trial = 0; trial < seeds; ++trial) {
        std::mt19937_64 rng(seed + trial);
        std::uniform_int_distribution<long long> d(
            1, R->field.is_fp() ? static_cast<long long>(R->field.characteristic - 1) : 1000);
        // random linear combinations of the generators, in the T variables
        std::vector<Poly> lambdas;
        for (int u = 0; u < ell; ++u) {
            Poly l = Poly::zero(pkg.big);
            for (std::size_t i = 0; i < pkg.ntvars; ++i)
                l = l + Poly::variable(pkg.big, pkg.nbase + i).scaled(
                            pkg.big->field.from_int(d(rng)));
            lambdas.push_back(l);
        }
        for (unsigned r = 0; r <= cap; ++r) {
            auto basis = graded_basis(pkg.ntvars, r + 1);
            std::vector<Vec> gens = graded_piece(pkg, pkg.rees, r + 1, basis);
            for (const auto& l : lambdas)
                for (const auto& beta : degree_monomials(pkg.ntvars, r)) {
                    Mono full{std::vector<std::uint16_t>(pkg.big->nvars(), 0)};
                    for (std::size_t i = 0; i < pkg.ntvars; ++i)
                        full.e[pkg.nbase + i] = beta.e[i];
                    Poly h = l.times_term(pkg.big->field.one(), full);
                    gens.push_back(to_graded_vec(pkg, h, r + 1, basis.mons, basis.index));
                }
            auto gb = module_groebner(R, basis.mons.size(), std::move(gens));
            bool all = true;
            for (std::size_t i = 0; i < basis.mons.size() && all; ++i) {
                Vec e = vec_zero(R, basis.mons.size());
                e[i] = Poly::from_int(R, 1);
                all = module_contains(gb, e);
            }
            if (all) {
                if (!best || static_cast<int>(r) < *best) best = static_cast<int>(r);
                break;
            }
        }
    }
    return best;
}

}  // namespace rk
