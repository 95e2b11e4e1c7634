#include "residual.hpp"

#include "rees.hpp"

#include <algorithm>
#include <random>

namespace rk {

GsReport check_Gs(const PModule& E, unsigned s) {
    GsReport rep;
    rep.s = s;
    rep.verdict = true;
    std::size_t e = module_rank(E);
    std::size_t hi;
    if (s == kGsInfinity)
        hi = E.ngens() == 0 ? 0 : E.ngens() - 1;
    else if (s < 2)
        return rep;  // empty index range
    else
        hi = e + s - 2;
    for (std::size_t j = e; j <= hi; ++j) {
        int h = height(fitting_ideal(E, j));
        rep.fitting_heights.emplace_back(j, h);
        if (h < static_cast<int>(j - e) + 2) rep.verdict = false;
    }
    return rep;
}

static std::vector<Poly> seeded_combinations(const RingPtr& R, const std::vector<Poly>& gens,
                                             unsigned count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> d(
        1, R->field.is_fp() ? static_cast<long long>(R->field.characteristic - 1) : 1000);
    std::vector<Poly> out;
    for (unsigned k = 0; k < count; ++k) {
        Poly f = Poly::zero(R);
        for (const auto& g : gens) f = f + g.scaled(R->field.from_int(d(rng)));
        out.push_back(f);
    }
    return out;
}

ResidualData residual_intersection(const IdealData& I, unsigned s, std::uint64_t seed,
                                   const std::optional<IdealData>& forced) {
    const RingPtr& R = I.ring();
    if (I.is_one()) throw InvalidInput("residual intersection of the unit ideal");
    int g = height(I);
    if (static_cast<int>(s) < g) throw InvalidInput("residual size below the height of I");
    unsigned attempts = forced ? 1 : 5;
    for (unsigned a = 0; a < attempts; ++a) {
        ResidualData rd;
        rd.I = I;
        rd.s = s;
        rd.seed = seed + a;
        rd.J = forced ? *forced : IdealData(R, seeded_combinations(R, I.gens(), s, seed + a));
        rd.K = ideal_quotient(rd.J, I);
        rd.proper = !rd.K.is_one();
        if (rd.proper) {
            if (!forced && height(rd.K) < static_cast<int>(s)) continue;  // re-seed
            rd.geometric = height(ideal_sum(rd.K, I)) >= static_cast<int>(s) + 1;
            rd.cm_quotient = is_cm_quotient(rd.K);
        }
        return rd;
    }
    throw GenericityFailure("no residual intersection of the expected height after 5 seeds");
}

CheckReport check_AN(const IdealData& I, unsigned s, unsigned trials, std::uint64_t seed,
                     bool geometric_only) {
    if (I.is_one()) throw InvalidInput("AN check on the unit ideal");
    CheckReport rep;
    rep.id = geometric_only ? "AN-" : "AN";
    rep.seed = seed;
    int g = height(I);
    if (static_cast<int>(s) < g) {
        rep.notes.push_back("vacuous: s below height of I");
        return rep;
    }
    for (unsigned i = static_cast<unsigned>(g); i <= s; ++i)
        for (unsigned t = 0; t < trials; ++t) {
            auto rd = residual_intersection(I, i, seed + 131 * t + i);
            std::string tag = "s=" + std::to_string(i) + " seed=" + std::to_string(rd.seed);
            if (!rd.proper) {
                rep.notes.push_back("improper (skipped): " + tag);
                continue;
            }
            if (geometric_only && !rd.geometric) {
                rep.notes.push_back("non-geometric (skipped): " + tag);
                continue;
            }
            rep.hypotheses.push_back(
                {"height(K) >= s at " + tag, height(rd.K) >= static_cast<int>(i), ""});
            rep.conclusions.push_back({"CM(R/K) at " + tag, rd.cm_quotient, ""});
        }
    return rep;
}

static std::vector<std::vector<std::size_t>> subsets_of(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = i;
    while (true) {
        out.push_back(c);
        std::size_t i = k;
        while (i > 0 && c[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++c[i - 1];
        for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
    }
    return out;
}

PolyMatrix koszul_differential(const RingPtr& ring, const std::vector<Poly>& gens,
                               std::size_t i) {
    if (i == 0) throw InvalidInput("koszul differential index must be positive");
    std::size_t n = gens.size();
    auto rows = subsets_of(n, i - 1);
    auto cols = subsets_of(n, i);
    auto row_index = [&](const std::vector<std::size_t>& S) {
        return static_cast<std::size_t>(
            std::lower_bound(rows.begin(), rows.end(), S) - rows.begin());
    };
    PolyMatrix d(ring, rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t k = 0; k < i; ++k) {
            std::vector<std::size_t> S = cols[c];
            std::size_t drop = S[k];
            S.erase(S.begin() + static_cast<std::ptrdiff_t>(k));
            Poly f = (k % 2 == 0) ? gens[drop] : -gens[drop];
            std::size_t r = row_index(S);
            d.at(r, c) = d.at(r, c) + f;
        }
    return d;
}

static std::vector<Poly> minimal_ideal_gens(const IdealData& I) {
    std::vector<Poly> gens;
    for (const auto& g : I.gens())
        if (!g.is_zero()) gens.push_back(g);
    for (std::size_t k = 0; k < gens.size();) {
        std::vector<Poly> others;
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (j != k) others.push_back(gens[j]);
        if (ideal_contains(IdealData(I.ring(), others), gens[k]))
            gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(k));
        else
            ++k;
    }
    return gens;
}

PModule koszul_homology(const IdealData& I, std::size_t j) {
    const RingPtr& R = I.ring();
    auto gens = minimal_ideal_gens(I);
    std::size_t n = gens.size();
    if (j > n) return PModule(PolyMatrix(R, 0, 0));
    PolyMatrix U = (j == 0) ? PolyMatrix::identity(R, 1)
                            : syzygy_matrix(koszul_differential(R, gens, j));
    std::size_t rank_j = subsets_of(n, j).size();
    PolyMatrix W = (j == n) ? PolyMatrix(R, rank_j, 0)
                            : koszul_differential(R, gens, j + 1);
    return present_subquotient(U, W);
}

bool sliding_depth_check(const IdealData& I) {
    auto gens = minimal_ideal_gens(I);
    if (gens.empty()) return true;
    int n = static_cast<int>(gens.size());
    int d = static_cast<int>(I.ring()->nvars());
    IdealData J(I.ring(), gens);
    for (int j = 0; j <= n; ++j) {
        PModule H = koszul_homology(J, static_cast<std::size_t>(j));
        if (is_zero_module(H)) continue;
        if (depth_and_pd(H).depth < d - n + j) return false;
    }
    return true;
}

bool ext_vanishing_locus_check(const PModule& E, unsigned j, unsigned target_codim) {
    if (j == 0) return true;  // E^0 = R is free
    auto pkg = rees_package(E);
    PModule Ej = power_module(pkg, j);
    PModule X = minimize(ext_module(Ej, j + 1));
    IdealData locus = ideal_sum(fitting_ideal(X, 0), fitting_ideal(E, module_rank(E)));
    return height(locus) >= static_cast<int>(target_codim) + 1;
}

bool is_ideal_module(const PModule& E) {
    std::size_t e = module_rank(E);
    if (e == 0) return false;
    PModule DD = hom_dual(hom_dual(E).module).module;
    return fitting_ideal(DD, e).is_one() && fitting_ideal(DD, e - 1).is_zero();
}

}  // namespace rk
