#include "pmodule.hpp"

#include <algorithm>
#include <random>

namespace rk {

PModule module_of_ideal(const IdealData& I) {
    const RingPtr& R = I.ring();
    std::vector<Poly> gens;
    for (const auto& g : I.gens())
        if (!g.is_zero()) gens.push_back(g);
    PolyMatrix row(R, 1, gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j) row.at(0, j) = gens[j];
    PolyMatrix syz = syzygy_matrix(row);
    return PModule(syz);
}

PModule module_of_gens(const RingPtr& ring, const std::vector<Poly>& gens) {
    PolyMatrix row(ring, 1, gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j) row.at(0, j) = gens[j];
    return PModule(syzygy_matrix(row));
}

PModule quotient_module(const IdealData& I) {
    PolyMatrix p(I.ring(), 1, I.gens().size());
    for (std::size_t j = 0; j < I.gens().size(); ++j) p.at(0, j) = I.gens()[j];
    return PModule(p);
}

bool is_cm_quotient(const IdealData& I) {
    int d = dimension(I);
    if (d == kEmptyVariety) throw InvalidInput("CM test on the unit ideal");
    auto dp = depth_and_pd(quotient_module(I));
    return dp.pd == static_cast<int>(I.ring()->nvars()) - d;
}

PModule free_module(const RingPtr& ring, std::size_t rank) {
    return PModule(PolyMatrix(ring, rank, 0));
}

PModule direct_sum(const PModule& a, const PModule& b) {
    check_same_ring(a.ring(), b.ring());
    PolyMatrix p(a.ring(), a.ngens() + b.ngens(), a.nrels() + b.nrels());
    for (std::size_t i = 0; i < a.ngens(); ++i)
        for (std::size_t j = 0; j < a.nrels(); ++j) p.at(i, j) = a.pres.at(i, j);
    for (std::size_t i = 0; i < b.ngens(); ++i)
        for (std::size_t j = 0; j < b.nrels(); ++j)
            p.at(a.ngens() + i, a.nrels() + j) = b.pres.at(i, j);
    return PModule(p);
}

std::vector<Vec> column_span_gb(const PolyMatrix& A) {
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < A.cols; ++j) cols.push_back(A.col(j));
    return module_groebner(A.ring, A.rows, std::move(cols));
}

bool is_zero_module(const PModule& M) {
    if (M.ngens() == 0) return true;
    auto gb = column_span_gb(M.pres);
    for (std::size_t i = 0; i < M.ngens(); ++i) {
        Vec e = vec_zero(M.ring(), M.ngens());
        e[i] = Poly::from_int(M.ring(), 1);
        if (!module_contains(gb, e)) return false;
    }
    return true;
}

PModule minimize(const PModule& M) {
    const RingPtr& R = M.ring();
    auto a = M.pres.a;
    while (true) {
        std::size_t pi = a.size(), pj = 0;
        for (std::size_t i = 0; i < a.size() && pi == a.size(); ++i)
            for (std::size_t j = 0; j < a[i].size(); ++j)
                if (a[i][j].is_unit()) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == a.size()) break;
        Coeff inv = R->field.inv(a[pi][pj].lc());
        for (std::size_t j = 0; j < a[pi].size(); ++j) {
            if (j == pj || a[pi][j].is_zero()) continue;
            Poly f = a[pi][j].scaled(inv);
            for (std::size_t i = 0; i < a.size(); ++i) a[i][j] = a[i][j] - f * a[i][pj];
        }
        for (auto& row : a) row.erase(row.begin() + static_cast<std::ptrdiff_t>(pj));
        a.erase(a.begin() + static_cast<std::ptrdiff_t>(pi));
    }
    PolyMatrix p(R, a.size(), a.empty() ? 0 : a[0].size());
    p.a = std::move(a);
    // drop zero relation columns
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < p.cols; ++j) {
        bool nz = false;
        for (std::size_t i = 0; i < p.rows; ++i) nz = nz || !p.at(i, j).is_zero();
        if (nz) keep.push_back(j);
    }
    PolyMatrix q(R, p.rows, keep.size());
    for (std::size_t j = 0; j < keep.size(); ++j) q.set_col(j, p.col(keep[j]));
    return PModule(q);
}

std::size_t min_generators(const PModule& M) {
    return minimize(M).ngens();
}

std::vector<PolyMatrix> minimal_resolution(const PModule& M) {
    const RingPtr& R = M.ring();
    std::vector<PolyMatrix> res;
    PModule m0 = minimize(M);
    if (m0.nrels() == 0) return res;
    res.push_back(m0.pres);
    while (true) {
        PolyMatrix S = syzygy_matrix(res.back());
        // prune unit entries: a unit at (r, c) splits off a trivial summand,
        // deleting column r of the previous differential with it
        while (true) {
            std::size_t pr = S.rows, pc = 0;
            for (std::size_t i = 0; i < S.rows && pr == S.rows; ++i)
                for (std::size_t j = 0; j < S.cols; ++j)
                    if (S.at(i, j).is_unit()) {
                        pr = i;
                        pc = j;
                        break;
                    }
            if (pr == S.rows) break;
            Coeff inv = R->field.inv(S.at(pr, pc).lc());
            for (std::size_t j = 0; j < S.cols; ++j) {
                if (j == pc || S.at(pr, j).is_zero()) continue;
                Poly f = S.at(pr, j).scaled(inv);
                for (std::size_t i = 0; i < S.rows; ++i)
                    S.at(i, j) = S.at(i, j) - f * S.at(i, pc);
            }
            for (auto& row : S.a) row.erase(row.begin() + static_cast<std::ptrdiff_t>(pc));
            S.a.erase(S.a.begin() + static_cast<std::ptrdiff_t>(pr));
            --S.cols;
            --S.rows;
            // delete the corresponding generator column of the previous step
            PolyMatrix& prev = res.back();
            for (auto& row : prev.a) row.erase(row.begin() + static_cast<std::ptrdiff_t>(pr));
            --prev.cols;
        }
        if (res.back().cols == 0) {
            res.pop_back();
            break;
        }
        if (S.cols == 0) break;
        res.push_back(S);
        if (res.size() > R->nvars() + 2) throw Error("resolution failed to terminate");
    }
    return res;
}

DepthPd depth_and_pd(const PModule& M) {
    if (is_zero_module(M)) return {kInfiniteHeight, 0};
    auto res = minimal_resolution(M);
    int pd = static_cast<int>(res.size());
    return {static_cast<int>(M.ring()->nvars()) - pd, pd};
}

IdealData fitting_ideal(const PModule& M, std::size_t i) {
    if (i >= M.ngens()) return IdealData(M.ring(), {Poly::from_int(M.ring(), 1)});
    return minors_ideal(M.pres, M.ngens() - i);
}

static bool next_comb(std::vector<std::size_t>& c, std::size_t n) {
    std::size_t k = c.size(), i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
    return true;
}

// exact rank by fraction-free (Bareiss) elimination with full pivoting; the
// division by the previous pivot is exact over an integral domain, so entries
// stay polynomial (they are minors of the input)
static std::size_t bareiss_rank(const PolyMatrix& A) {
    std::vector<std::vector<Poly>> m(A.rows);
    for (std::size_t i = 0; i < A.rows; ++i) {
        m[i].reserve(A.cols);
        for (std::size_t j = 0; j < A.cols; ++j) m[i].push_back(A.at(i, j));
    }
    Poly prev = Poly::from_int(A.ring, 1);
    std::size_t steps = std::min(A.rows, A.cols);
    for (std::size_t s = 0; s < steps; ++s) {
        // smallest nonzero entry of the remaining block as pivot
        std::size_t pi = A.rows, pj = 0;
        for (std::size_t i = s; i < A.rows; ++i)
            for (std::size_t j = s; j < A.cols; ++j)
                if (!m[i][j].is_zero() &&
                    (pi == A.rows || m[i][j].size() < m[pi][pj].size())) {
                    pi = i;
                    pj = j;
                }
        if (pi == A.rows) return s;
        std::swap(m[s], m[pi]);
        for (auto& row : m) std::swap(row[s], row[pj]);
        for (std::size_t i = s + 1; i < A.rows; ++i) {
            for (std::size_t j = s + 1; j < A.cols; ++j) {
                Poly num = m[s][s] * m[i][j] - m[i][s] * m[s][j];
                auto q = num.divide_exact(prev);
                if (!q) throw Error("fraction-free elimination division failed");
                m[i][j] = *q;
            }
            m[i][s] = Poly::zero(A.ring);
        }
        prev = m[s][s];
    }
    return steps;
}

static std::uint64_t eval_at(const Poly& p, const std::vector<std::uint64_t>& pt) {
    const FieldSpec& F = p.ring()->field;
    Coeff acc = F.zero();
    for (const auto& t : p.terms()) {
        Coeff v = t.c;
        for (std::size_t i = 0; i < pt.size(); ++i)
            for (unsigned e = 0; e < t.m.e[i]; ++e) v = F.mul(v, Coeff{pt[i], {}});
        acc = F.add(acc, v);
    }
    return acc.u;
}

// numeric rank of the evaluated matrix, as a fast lower-bound guess
static std::size_t numeric_rank_guess(const PolyMatrix& A) {
    const FieldSpec& F = A.ring->field;
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::uint64_t> d(1, F.characteristic - 1);
    std::vector<std::uint64_t> pt(A.ring->nvars());
    for (auto& x : pt) x = d(rng);
    std::vector<std::vector<std::uint64_t>> m(A.rows, std::vector<std::uint64_t>(A.cols));
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t j = 0; j < A.cols; ++j) m[i][j] = eval_at(A.at(i, j), pt);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < A.cols && rank < A.rows; ++col) {
        std::size_t piv = rank;
        while (piv < A.rows && m[piv][col] == 0) ++piv;
        if (piv == A.rows) continue;
        std::swap(m[piv], m[rank]);
        Coeff inv = F.inv(Coeff{m[rank][col], {}});
        for (std::size_t i = rank + 1; i < A.rows; ++i) {
            if (m[i][col] == 0) continue;
            Coeff f = F.mul(Coeff{m[i][col], {}}, inv);
            for (std::size_t j = col; j < A.cols; ++j)
                m[i][j] = F.sub(Coeff{m[i][j], {}}, F.mul(f, Coeff{m[rank][j], {}})).u;
        }
        ++rank;
    }
    return rank;
}

std::size_t matrix_rank(const PolyMatrix& A) {
    std::size_t m = std::min(A.rows, A.cols);
    if (m == 0) return 0;
    // full numeric rank at a random point certifies full rank for free
    if (A.ring->field.is_fp() && numeric_rank_guess(A) == m) return m;
    return bareiss_rank(A);
}

std::size_t module_rank(const PModule& M) {
    return M.ngens() - matrix_rank(M.pres);
}

PModule present_subquotient(const PolyMatrix& U, const PolyMatrix& W) {
    check_same_ring(U.ring, W.ring);
    if (U.rows != W.rows) throw InvalidInput("subquotient shape mismatch");
    if (U.cols == 0) return PModule(PolyMatrix(U.ring, 0, 0));
    PolyMatrix S = syzygy_matrix(hconcat(U, W));
    PolyMatrix pres(U.ring, U.cols, S.cols);
    for (std::size_t i = 0; i < U.cols; ++i)
        for (std::size_t j = 0; j < S.cols; ++j) pres.at(i, j) = S.at(i, j);
    return PModule(pres);
}

static bool submodule_leq(const PolyMatrix& A, const std::vector<Vec>& gbB) {
    for (std::size_t j = 0; j < A.cols; ++j)
        if (!module_contains(gbB, A.col(j))) return false;
    return true;
}

PolyMatrix module_saturation(const PolyMatrix& W, const Poly& f) {
    const RingPtr& R = W.ring;
    if (f.is_zero()) throw InvalidInput("saturation by zero");
    if (f.is_unit()) return W;
    PolyMatrix cur = W;
    for (int round = 0; round < 256; ++round) {
        // (im cur : f) from syzygies of [f*I | cur]
        PolyMatrix fI(R, W.rows, W.rows);
        for (std::size_t i = 0; i < W.rows; ++i) fI.at(i, i) = f;
        PolyMatrix S = syzygy_matrix(hconcat(fI, cur));
        PolyMatrix next(R, W.rows, S.cols);
        for (std::size_t i = 0; i < W.rows; ++i)
            for (std::size_t j = 0; j < S.cols; ++j) next.at(i, j) = S.at(i, j);
        if (submodule_leq(next, column_span_gb(cur))) return cur;
        cur = next;
    }
    throw Error("module saturation failed to stabilize");
}

// nonzero r x r minor of A; over F_p the pivot rows/columns are located by
// full-pivot elimination on a random evaluation, so only one symbolic
// determinant is computed (exhaustive enumeration is the fallback)
static Poly nonzero_maximal_minor(const PolyMatrix& A, std::size_t r) {
    const RingPtr& R = A.ring;
    const FieldSpec& F = R->field;
    if (F.is_fp()) {
        std::mt19937_64 rng(0x5eedb00b);
        std::uniform_int_distribution<std::uint64_t> d(1, F.characteristic - 1);
        for (int attempt = 0; attempt < 8; ++attempt) {
            std::vector<std::uint64_t> pt(R->nvars());
            for (auto& x : pt) x = d(rng);
            std::vector<std::vector<std::uint64_t>> m(A.rows,
                                                      std::vector<std::uint64_t>(A.cols));
            for (std::size_t i = 0; i < A.rows; ++i)
                for (std::size_t j = 0; j < A.cols; ++j) m[i][j] = eval_at(A.at(i, j), pt);
            std::vector<std::size_t> ri(A.rows), ci(A.cols);
            for (std::size_t i = 0; i < A.rows; ++i) ri[i] = i;
            for (std::size_t j = 0; j < A.cols; ++j) ci[j] = j;
            std::size_t rank = 0;
            for (; rank < r; ++rank) {
                std::size_t pi = rank, pj = rank;
                bool found = false;
                for (std::size_t i = rank; i < A.rows && !found; ++i)
                    for (std::size_t j = rank; j < A.cols && !found; ++j)
                        if (m[i][j] != 0) { pi = i; pj = j; found = true; }
                if (!found) break;
                std::swap(m[rank], m[pi]);
                std::swap(ri[rank], ri[pi]);
                for (auto& row : m) std::swap(row[rank], row[pj]);
                std::swap(ci[rank], ci[pj]);
                Coeff inv = F.inv(Coeff{m[rank][rank], {}});
                for (std::size_t i = rank + 1; i < A.rows; ++i) {
                    if (m[i][rank] == 0) continue;
                    Coeff f = F.mul(Coeff{m[i][rank], {}}, inv);
                    for (std::size_t j = rank; j < A.cols; ++j)
                        m[i][j] =
                            F.sub(Coeff{m[i][j], {}}, F.mul(f, Coeff{m[rank][j], {}})).u;
                }
            }
            if (rank < r) continue;
            PolyMatrix S(R, r, r);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) S.at(i, j) = A.at(ri[i], ci[j]);
            Poly f = determinant(S);
            if (!f.is_zero()) return f;
        }
    }
    std::vector<std::size_t> rs(r), cs(r);
    for (std::size_t i = 0; i < r; ++i) rs[i] = i;
    do {
        for (std::size_t i = 0; i < r; ++i) cs[i] = i;
        do {
            PolyMatrix S(R, r, r);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) S.at(i, j) = A.at(rs[i], cs[j]);
            Poly f = determinant(S);
            if (!f.is_zero()) return f;
        } while (next_comb(cs, A.cols));
    } while (next_comb(rs, A.rows));
    throw Error("no nonzero minor at the computed rank");
}

PModule torsion_submodule(const PModule& M0) {
    PModule M = minimize(M0);
    const RingPtr& R = M.ring();
    if (M.ngens() == 0 || M.nrels() == 0) return PModule(PolyMatrix(R, 0, 0));
    std::size_t r = matrix_rank(M.pres);
    if (r == 0) return PModule(PolyMatrix(R, 0, 0));
    // any nonzero maximal minor works: inverting it frees the cokernel
    Poly f = nonzero_maximal_minor(M.pres, r);
    PolyMatrix U = module_saturation(M.pres, f);
    return present_subquotient(U, M.pres);
}

Poly freeing_minor(const PModule& M0) {
    PModule M = minimize(M0);
    const RingPtr& R = M.ring();
    if (M.ngens() == 0 || M.nrels() == 0) return Poly::from_int(R, 1);
    std::size_t r = matrix_rank(M.pres);
    if (r == 0) return Poly::from_int(R, 1);
    return nonzero_maximal_minor(M.pres, r);
}

bool is_torsion_free_via(const PModule& M0, const Poly& f) {
    PModule M = minimize(M0);
    const RingPtr& R = M.ring();
    if (M.ngens() == 0 || M.nrels() == 0) return true;
    if (f.is_zero()) throw InvalidInput("torsion test via zero");
    if (f.is_unit()) return true;
    // (im pres : f) == im pres, read off the top block of the syzygies
    PolyMatrix fI(R, M.ngens(), M.ngens());
    for (std::size_t i = 0; i < M.ngens(); ++i) fI.at(i, i) = f;
    PolyMatrix S = syzygy_matrix(hconcat(fI, M.pres));
    auto gb = column_span_gb(M.pres);
    for (std::size_t j = 0; j < S.cols; ++j) {
        Vec v;
        v.reserve(M.ngens());
        for (std::size_t i = 0; i < M.ngens(); ++i) v.push_back(S.at(i, j));
        if (!module_contains(gb, v)) return false;
    }
    return true;
}

bool is_torsion_free(const PModule& M) {
    PModule m = minimize(M);
    if (m.ngens() == 0 || m.nrels() == 0) return true;
    std::size_t r = matrix_rank(m.pres);
    if (r == 0) return true;
    return is_torsion_free_via(m, nonzero_maximal_minor(m.pres, r));
}

DualPackage hom_dual(const PModule& M) {
    PolyMatrix K = syzygy_matrix(M.pres.transpose());
    return {present_subquotient(K, PolyMatrix(M.ring(), M.ngens(), 0)), K};
}

PModule ext_module(const PModule& M, std::size_t i) {
    const RingPtr& R = M.ring();
    PModule m0 = minimize(M);
    auto res = minimal_resolution(m0);
    std::size_t p = res.size();
    if (i > p) return PModule(PolyMatrix(R, 0, 0));
    if (p == 0) return i == 0 ? free_module(R, m0.ngens()) : PModule(PolyMatrix(R, 0, 0));
    if (i == p) return PModule(res[p - 1].transpose());
    PolyMatrix U = syzygy_matrix(res[i].transpose());
    PolyMatrix W = (i == 0) ? PolyMatrix(R, res[0].rows, 0) : res[i - 1].transpose();
    return present_subquotient(U, W);
}

PModule exterior_power(const PModule& M, std::size_t k) {
    const RingPtr& R = M.ring();
    std::size_t n = M.ngens(), s = M.nrels();
    if (k == 0) return free_module(R, 1);
    if (k > n) return PModule(PolyMatrix(R, 0, 0));
    std::vector<std::vector<std::size_t>> subsets;
    {
        std::vector<std::size_t> c(k);
        for (std::size_t i = 0; i < k; ++i) c[i] = i;
        do subsets.push_back(c);
        while (next_comb(c, n));
    }
    auto index_of = [&](const std::vector<std::size_t>& I) {
        return static_cast<std::size_t>(
            std::lower_bound(subsets.begin(), subsets.end(), I) - subsets.begin());
    };
    std::vector<std::vector<std::size_t>> small;
    if (k >= 1) {
        std::vector<std::size_t> c(k - 1);
        for (std::size_t i = 0; i + 1 < k; ++i) c[i] = i;
        if (k == 1)
            small.push_back({});
        else
            do small.push_back(c);
            while (next_comb(c, n));
    }
    PolyMatrix pres(R, subsets.size(), s * small.size());
    std::size_t col = 0;
    for (std::size_t j = 0; j < s; ++j)
        for (const auto& J : small) {
            // phi(col j) wedge e_J
            for (std::size_t i = 0; i < n; ++i) {
                if (std::find(J.begin(), J.end(), i) != J.end()) continue;
                const Poly& entry = M.pres.at(i, j);
                if (entry.is_zero()) continue;
                std::vector<std::size_t> I = J;
                std::size_t pos = 0;
                while (pos < I.size() && I[pos] < i) ++pos;
                I.insert(I.begin() + static_cast<std::ptrdiff_t>(pos), i);
                Poly signed_entry = (pos % 2 == 0) ? entry : -entry;
                std::size_t r = index_of(I);
                pres.at(r, col) = pres.at(r, col) + signed_entry;
            }
            ++col;
        }
    return PModule(pres);
}

bool is_orientable(const PModule& M, bool verify) {
    if (!verify) return true;  // polynomial rings are UFDs
    std::size_t e = module_rank(M);
    PModule W = exterior_power(minimize(M), e);
    PModule DD = hom_dual(hom_dual(W).module).module;
    PModule m = minimize(DD);
    return m.ngens() == 1 && m.nrels() == 0;
}

}  // namespace rk
