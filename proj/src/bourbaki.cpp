#include "bourbaki.hpp"

#include "residual.hpp"

#include <map>
#include <random>

namespace rk {

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.normalized();
    if (b.is_zero()) return a.normalized();
    if (a.is_constant() || b.is_constant()) return Poly::from_int(a.ring(), 1);
    // (a) : (b) is generated by a / gcd(a, b)
    IdealData q = ideal_quotient(IdealData(a.ring(), {a}), IdealData(a.ring(), {b}));
    if (q.gb().size() != 1) throw Error("colon of principal ideals is not principal");
    auto g = a.divide_exact(q.gb()[0]);
    if (!g) throw Error("gcd extraction failed to divide");
    return g->normalized();
}

namespace {

std::uniform_int_distribution<long long> scalar_dist(const RingPtr& R) {
    return std::uniform_int_distribution<long long>(
        1, R->field.is_fp() ? static_cast<long long>(R->field.characteristic - 1) : 1000);
}

// the hypothesis checks shared by the construction entry points
void check_bourbaki_pre(const PModule& E) {
    std::size_t e = module_rank(E);
    if (e == 0) throw InvalidInput("bourbaki construction needs positive rank");
    if (!is_torsion_free(E)) throw InvalidInput("bourbaki construction needs a torsion-free module");
    if (height(fitting_ideal(E, e)) < 2)
        throw InvalidInput("bourbaki construction needs freeness in codimension one");
}

}  // namespace

BourbakiData bourbaki_construct(const PModule& E, bool symbolic, std::uint64_t seed) {
    const RingPtr& R = E.ring();
    check_bourbaki_pre(E);
    std::size_t e = module_rank(E);

    BourbakiData B;
    B.symbolic = symbolic;
    B.seed = seed;
    if (minimize(E).nrels() == 0 && minimize(E).ngens() == module_rank(E)) {
        B.free_case = true;
        B.ext_ring = R;
        B.extended = E;
        B.ideal_I = IdealData(R, {Poly::from_int(R, 1)});
        B.grade_I = kInfiniteHeight;
        return B;
    }

    std::size_t n = E.ngens();
    RingPtr ext = R;
    PModule Eext = E;
    if (symbolic) {
        std::vector<std::string> names = R->vars;
        auto znames = fresh_var_names(R->vars, "Z", n * (e - 1));
        for (auto& z : znames) names.push_back(z);
        ext = make_ring(R->field, names);
        PolyMatrix p(ext, E.ngens(), E.nrels());
        for (std::size_t i = 0; i < E.ngens(); ++i)
            for (std::size_t j = 0; j < E.nrels(); ++j)
                p.at(i, j) = shift_vars(E.pres.at(i, j), ext, 0);
        Eext = PModule(p);
    }
    B.ext_ring = ext;
    B.extended = Eext;

    unsigned attempts = symbolic ? 1 : 5;
    std::string failure = "rank drop";
    for (unsigned a = 0; a < attempts; ++a) {
        std::mt19937_64 rng(seed + a);
        auto dist = scalar_dist(ext);
        PolyMatrix C(ext, n, e - 1);
        for (std::size_t j = 0; j + 1 < e; ++j)
            for (std::size_t i = 0; i < n; ++i)
                C.at(i, j) = symbolic
                                 ? Poly::variable(ext, R->nvars() + j * n + i)
                                 : Poly::from_int(ext, dist(rng));
        PModule Q(hconcat(Eext.pres, C));
        if (module_rank(Q) != 1) {
            failure = "quotient rank differs from one";
            continue;
        }
        if (!is_torsion_free(Q)) {
            failure = "quotient has torsion";
            continue;
        }
        PolyMatrix K = syzygy_matrix(Q.pres.transpose());
        std::size_t col = K.cols;
        for (std::size_t j = 0; j < K.cols && col == K.cols; ++j)
            if (!vec_is_zero(K.col(j))) col = j;
        if (col == K.cols) {
            failure = "no embedding functional";
            continue;
        }
        Vec h = K.col(col);
        Poly g = Poly::zero(ext);
        for (const auto& hi : h) g = poly_gcd(g, hi);
        std::vector<Poly> gens;
        for (const auto& hi : h) {
            if (hi.is_zero()) {
                gens.push_back(hi);
                continue;
            }
            auto q = hi.divide_exact(g);
            if (!q) throw Error("gcd removal failed to divide");
            gens.push_back(*q);
        }
        IdealData I(ext, gens);
        int grade = height(I);
        if (grade < 2 || I.is_one()) {
            failure = "image ideal of grade below two";
            continue;
        }
        B.xs = C;
        B.quotient = Q;
        B.hom_witness = h;
        B.gcd = g;
        B.ideal_I = I;
        B.grade_I = grade;
        B.seed = seed + a;
        return B;
    }
    throw GenericityFailure("bourbaki construction failed after re-seeding: " + failure);
}

CheckReport bourbaki_invariant_check(const PModule& E, const BourbakiData& B, unsigned s) {
    CheckReport rep;
    rep.id = "bourbaki-invariants";
    rep.seed = B.seed;
    if (B.free_case) {
        rep.notes.push_back("free module: construction skipped, trivially consistent");
        return rep;
    }
    std::size_t e = module_rank(E);
    auto pkgE = rees_package(B.extended);
    PModule MI = module_of_ideal(B.ideal_I);
    auto pkgI = rees_package(MI);

    int lE = special_fiber_dim(pkgE);
    int lI = special_fiber_dim(pkgI);
    rep.conclusions.push_back({"l(I) == l(E) - e + 1",
                               lI == lE - static_cast<int>(e) + 1,
                               "l(E)=" + std::to_string(lE) + " l(I)=" + std::to_string(lI)});

    auto rE = reduction_number(pkgE, B.seed);
    auto rI = reduction_number(pkgI, B.seed);
    if (rE && rI)
        rep.conclusions.push_back({"r(I) <= r(E)", *rI <= *rE,
                                   "r(E)=" + std::to_string(*rE) +
                                       " r(I)=" + std::to_string(*rI)});
    else
        rep.notes.push_back("reduction numbers not sampled within cap");

    if (s >= 2) {
        bool gsE = check_Gs(B.extended, s).verdict;
        bool gsI = check_Gs(MI, s).verdict;
        rep.conclusions.push_back({"G_s transfer", !gsE || gsI,
                                   std::string("G_s(E)=") + (gsE ? "T" : "F") +
                                       " G_s(I)=" + (gsI ? "T" : "F")});
    }
    return rep;
}

bool rees_deformation_check(const PModule& E, const BourbakiData& B, bool* cross) {
    (void)E;
    if (cross) *cross = true;
    if (B.free_case) return true;
    auto pkg = rees_package(B.extended);
    std::vector<Poly> gens = pkg.rees.gens();
    for (std::size_t j = 0; j < B.xs.cols; ++j) {
        Poly l = Poly::zero(pkg.big);
        for (std::size_t i = 0; i < B.xs.rows; ++i)
            l = l + shift_vars(B.xs.at(i, j), pkg.big, 0) *
                        Poly::variable(pkg.big, pkg.nbase + i);
        gens.push_back(l);
    }
    IdealData Q(pkg.big, gens);
    bool stable = pkg.minor.is_unit()
                      ? true
                      : ideal_eq(saturate(Q, IdealData(pkg.big, {pkg.minor})), Q);
    if (stable && cross) {
        // generator images of the quotient present the Bourbaki ideal on the
        // same T variables: Q must agree with its Rees ideal
        std::vector<Poly> igens;
        for (const auto& hi : B.hom_witness) {
            auto q = hi.is_zero() ? std::optional<Poly>(hi) : hi.divide_exact(B.gcd);
            igens.push_back(q ? *q : hi);
        }
        auto pkgI = rees_package(module_of_gens(B.ext_ring, igens));
        *cross = ideal_eq(Q, pkgI.rees);
    }
    return stable;
}

std::vector<PModule> koszul_piece_homology(const PModule& E, const BourbakiData& B, unsigned j) {
    (void)E;
    const RingPtr& R = B.ext_ring;
    if (B.free_case) return {PModule(PolyMatrix(R, 0, 0))};
    std::size_t n = B.extended.ngens();
    std::size_t em1 = B.xs.cols;  // e - 1
    auto pkgE = rees_package(B.extended);
    std::vector<Poly> igens;
    for (const auto& hi : B.hom_witness) {
        auto q = hi.is_zero() ? std::optional<Poly>(hi) : hi.divide_exact(B.gcd);
        igens.push_back(q ? *q : hi);
    }
    auto pkgI = rees_package(module_of_gens(R, igens));

    auto nmons = [&](unsigned d) { return degree_monomials(n, d).size(); };
    // multiplication by x_u: E^d -> E^{d+1} on monomial generators
    auto mult_matrix = [&](std::size_t u, unsigned d) {
        auto lo = degree_monomials(n, d);
        auto hi = degree_monomials(n, d + 1);
        std::map<std::vector<std::uint16_t>, std::size_t> hidx;
        for (std::size_t i = 0; i < hi.size(); ++i) hidx[hi[i].e] = i;
        PolyMatrix M(R, hi.size(), lo.size());
        for (std::size_t c = 0; c < lo.size(); ++c)
            for (std::size_t i = 0; i < n; ++i) {
                if (B.xs.at(i, u).is_zero()) continue;
                Mono m = lo[c];
                m.e[i] = static_cast<std::uint16_t>(m.e[i] + 1);
                std::size_t r = hidx.at(m.e);
                M.at(r, c) = M.at(r, c) + B.xs.at(i, u);
            }
        return M;
    };

    std::size_t top = std::min<std::size_t>(em1, j);
    auto subsets = [&](std::size_t k) {
        std::vector<std::vector<std::size_t>> out;
        std::vector<std::size_t> c(k);
        if (k > em1) return out;
        for (std::size_t i = 0; i < k; ++i) c[i] = i;
        while (true) {
            out.push_back(c);
            std::size_t i = k;
            while (i > 0 && c[i - 1] == em1 - k + i - 1) --i;
            if (i == 0) break;
            ++c[i - 1];
            for (std::size_t q = i; q < k; ++q) c[q] = c[q - 1] + 1;
        }
        return out;
    };

    // presentations of the strand modules
    std::vector<PModule> mods;  // index i = 0..top
    for (std::size_t i = 0; i <= top; ++i) {
        PModule piece = power_module(pkgE, j - static_cast<unsigned>(i));
        PModule sum = piece;
        std::size_t copies = subsets(i).size();
        for (std::size_t c = 1; c < copies; ++c) sum = direct_sum(sum, piece);
        mods.push_back(sum);
    }
    PModule target = power_module(pkgI, j);

    // differentials D_i : mods[i] -> mods[i-1]
    std::vector<PolyMatrix> D;  // D[i-1] = D_i
    for (std::size_t i = 1; i <= top; ++i) {
        auto rows_s = subsets(i - 1);
        auto cols_s = subsets(i);
        std::map<std::vector<std::size_t>, std::size_t> ridx;
        for (std::size_t r = 0; r < rows_s.size(); ++r) ridx[rows_s[r]] = r;
        unsigned d = j - static_cast<unsigned>(i);
        std::size_t blk_r = nmons(d + 1), blk_c = nmons(d);
        PolyMatrix M(R, rows_s.size() * blk_r, cols_s.size() * blk_c);
        for (std::size_t c = 0; c < cols_s.size(); ++c)
            for (std::size_t k = 0; k < i; ++k) {
                std::vector<std::size_t> S = cols_s[c];
                std::size_t u = S[k];
                S.erase(S.begin() + static_cast<std::ptrdiff_t>(k));
                PolyMatrix blk = mult_matrix(u, d);
                std::size_t r0 = ridx.at(S) * blk_r, c0 = c * blk_c;
                for (std::size_t a = 0; a < blk_r; ++a)
                    for (std::size_t b = 0; b < blk_c; ++b) {
                        Poly v = (k % 2 == 0) ? blk.at(a, b) : -blk.at(a, b);
                        M.at(r0 + a, c0 + b) = M.at(r0 + a, c0 + b) + v;
                    }
            }
        D.push_back(M);
    }

    // homology right to left; the augmentation is the identity on generators
    std::vector<PModule> H;
    // at I^j: cokernel of the (surjective) augmentation
    H.push_back(present_subquotient(PolyMatrix::identity(R, target.ngens()),
                                    hconcat(target.pres, PolyMatrix::identity(R, target.ngens()))));
    // at E^j: ker(aug)/im(D_1) with ker(aug) generated by the relations of I^j
    {
        PolyMatrix W = (top >= 1) ? hconcat(D[0], mods[0].pres) : mods[0].pres;
        H.push_back(present_subquotient(target.pres, W));
    }
    for (std::size_t i = 1; i <= top; ++i) {
        // kernel of D_i over image of D_{i+1}
        PolyMatrix S = syzygy_matrix(hconcat(D[i - 1], mods[i - 1].pres));
        PolyMatrix U(R, mods[i].ngens(), S.cols);
        for (std::size_t r = 0; r < U.rows; ++r)
            for (std::size_t c = 0; c < S.cols; ++c) U.at(r, c) = S.at(r, c);
        PolyMatrix W = (i < top) ? hconcat(D[i], mods[i].pres) : mods[i].pres;
        H.push_back(present_subquotient(U, W));
    }
    return H;
}

PModule iter_generic_quotient(const PModule& E, std::uint64_t seed) {
    const RingPtr& R = E.ring();
    check_bourbaki_pre(E);
    std::size_t e = module_rank(E);
    if (e < 2) throw InvalidInput("generic quotient needs rank at least two");
    for (unsigned a = 0; a < 5; ++a) {
        std::mt19937_64 rng(seed + a);
        auto dist = scalar_dist(R);
        PolyMatrix col(R, E.ngens(), 1);
        for (std::size_t i = 0; i < E.ngens(); ++i) col.at(i, 0) = Poly::from_int(R, dist(rng));
        PModule Q(hconcat(E.pres, col));
        if (module_rank(Q) == e - 1 && is_torsion_free(Q)) return Q;
    }
    throw GenericityFailure("generic quotient failed after re-seeding");
}

}  // namespace rk
