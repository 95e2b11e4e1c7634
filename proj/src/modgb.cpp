#include "modgb.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

namespace rk {

Vec vec_zero(const RingPtr& ring, std::size_t rank) {
    return Vec(rank, Poly::zero(ring));
}

bool vec_is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Poly& p) { return p.is_zero(); });
}

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw InvalidInput("vector rank mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw InvalidInput("vector rank mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec vec_scaled(const Vec& a, const Poly& p) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * p;
    return r;
}

bool vec_eq(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

static Vec vec_times_term(const Vec& a, const Coeff& c, const Mono& m) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i].times_term(c, m);
    return r;
}

// ---- PolyMatrix ----

PolyMatrix::PolyMatrix(RingPtr r, std::size_t m, std::size_t n)
    : ring(std::move(r)), rows(m), cols(n),
      a(m, std::vector<Poly>(n, Poly::zero(ring))) {}

Vec PolyMatrix::col(std::size_t j) const {
    Vec v;
    v.reserve(rows);
    for (std::size_t i = 0; i < rows; ++i) v.push_back(a[i][j]);
    return v;
}

void PolyMatrix::set_col(std::size_t j, const Vec& v) {
    if (v.size() != rows) throw InvalidInput("column rank mismatch");
    for (std::size_t i = 0; i < rows; ++i) a[i][j] = v[i];
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix t(ring, cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) t.a[j][i] = a[i][j];
    return t;
}

PolyMatrix PolyMatrix::identity(const RingPtr& r, std::size_t n) {
    PolyMatrix m(r, n, n);
    for (std::size_t i = 0; i < n; ++i) m.a[i][i] = Poly::from_int(r, 1);
    return m;
}

PolyMatrix PolyMatrix::from_cols(const RingPtr& r, std::size_t rank,
                                 const std::vector<Vec>& cols) {
    PolyMatrix m(r, rank, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
    return m;
}

PolyMatrix mat_mul(const PolyMatrix& A, const PolyMatrix& B) {
    check_same_ring(A.ring, B.ring);
    if (A.cols != B.rows) throw InvalidInput("matrix shape mismatch");
    PolyMatrix C(A.ring, A.rows, B.cols);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t k = 0; k < A.cols; ++k) {
            if (A.a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < B.cols; ++j)
                C.a[i][j] = C.a[i][j] + A.a[i][k] * B.a[k][j];
        }
    return C;
}

Vec mat_apply(const PolyMatrix& A, const Vec& x) {
    if (A.cols != x.size()) throw InvalidInput("matrix shape mismatch");
    Vec y = vec_zero(A.ring, A.rows);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t j = 0; j < A.cols; ++j) y[i] = y[i] + A.a[i][j] * x[j];
    return y;
}

PolyMatrix hconcat(const PolyMatrix& A, const PolyMatrix& B) {
    check_same_ring(A.ring, B.ring);
    if (A.rows != B.rows) throw InvalidInput("matrix shape mismatch");
    PolyMatrix C(A.ring, A.rows, A.cols + B.cols);
    for (std::size_t i = 0; i < A.rows; ++i) {
        for (std::size_t j = 0; j < A.cols; ++j) C.a[i][j] = A.a[i][j];
        for (std::size_t j = 0; j < B.cols; ++j) C.a[i][A.cols + j] = B.a[i][j];
    }
    return C;
}

bool mat_eq(const PolyMatrix& A, const PolyMatrix& B) {
    if (A.rows != B.rows || A.cols != B.cols) return false;
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t j = 0; j < A.cols; ++j)
            if (A.a[i][j] != B.a[i][j]) return false;
    return true;
}

bool mat_is_zero(const PolyMatrix& A) {
    for (const auto& row : A.a)
        for (const auto& p : row)
            if (!p.is_zero()) return false;
    return true;
}

// Expansion along rows with memoization on the set of available columns.
static Poly det_rec(const PolyMatrix& A, const std::vector<std::size_t>& rows,
                    const std::vector<std::size_t>& cols, std::size_t depth,
                    std::uint64_t colmask, std::map<std::uint64_t, Poly>& memo) {
    const auto& R = A.ring;
    if (depth == rows.size()) return Poly::from_int(R, 1);
    auto it = memo.find(colmask);
    if (it != memo.end()) return it->second;
    Poly acc = Poly::zero(R);
    int sign = 1;
    for (std::size_t k = 0; k < cols.size(); ++k) {
        if (!(colmask & (1ull << k))) continue;
        const Poly& entry = A.a[rows[depth]][cols[k]];
        if (!entry.is_zero()) {
            Poly sub = det_rec(A, rows, cols, depth + 1, colmask & ~(1ull << k), memo);
            Poly term = entry * sub;
            acc = (sign > 0) ? acc + term : acc - term;
        }
        sign = -sign;
    }
    memo.emplace(colmask, acc);
    return acc;
}

Poly determinant(const PolyMatrix& A) {
    if (A.rows != A.cols) throw InvalidInput("determinant of a non-square matrix");
    if (A.rows > 20) throw BudgetExceeded("determinant too large");
    std::vector<std::size_t> idx(A.rows);
    for (std::size_t i = 0; i < A.rows; ++i) idx[i] = i;
    std::map<std::uint64_t, Poly> memo;
    return det_rec(A, idx, idx, 0, (A.rows == 64) ? ~0ull : ((1ull << A.rows) - 1), memo);
}

static void combinations(std::size_t n, std::size_t k,
                         const std::function<void(const std::vector<std::size_t>&)>& f) {
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = i;
    while (true) {
        f(c);
        std::size_t i = k;
        while (i > 0 && c[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++c[i - 1];
        for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
    }
}

IdealData minors_ideal(const PolyMatrix& A, std::size_t k) {
    if (k == 0) return IdealData(A.ring, {Poly::from_int(A.ring, 1)});
    if (k > A.rows || k > A.cols) return IdealData(A.ring, {});
    std::vector<Poly> gens;
    combinations(A.rows, k, [&](const std::vector<std::size_t>& rs) {
        combinations(A.cols, k, [&](const std::vector<std::size_t>& cs) {
            PolyMatrix S(A.ring, k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) S.a[i][j] = A.a[rs[i]][cs[j]];
            Poly d = determinant(S);
            if (!d.is_zero()) gens.push_back(d);
        });
    });
    return IdealData(A.ring, std::move(gens));
}

// ---- module Groebner machinery ----

std::size_t lead_component(const Vec& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) return i;
    return v.size();
}

// -1 / 0 / +1 comparing lead terms (i, lm) under position-over-term.
static int cmp_lead(const RingPtr& R, std::size_t ia, const Mono& ma, std::size_t ib,
                    const Mono& mb) {
    if (ia != ib) return ia < ib ? 1 : -1;
    return R->cmp(ma, mb);
}

Vec module_normal_form(const Vec& v, const std::vector<Vec>& G) {
    if (G.empty()) return v;
    const RingPtr& R = v.empty() ? G[0][0].ring() : v[0].ring();
    Vec rem = vec_zero(R, v.size());
    Vec h = v;
    while (true) {
        std::size_t i = lead_component(h);
        if (i == h.size()) break;
        const Term& t = h[i].lt();
        bool reduced = false;
        for (const Vec& g : G) {
            std::size_t ig = lead_component(g);
            if (ig != i) continue;
            if (!mono_divides(g[ig].lm(), t.m)) continue;
            Coeff c = R->field.div(t.c, g[ig].lc());
            h = vec_sub(h, vec_times_term(g, c, mono_div(t.m, g[ig].lm())));
            reduced = true;
            break;
        }
        if (!reduced) {
            rem[i] = rem[i] + Poly::monomial(R, t.c, t.m);
            h[i] = h[i] - Poly::monomial(R, t.c, t.m);
        }
    }
    return rem;
}

static Vec vec_normalized(const RingPtr& R, const Vec& v) {
    std::size_t i = lead_component(v);
    if (i == v.size()) return v;
    Vec r(v.size(), Poly::zero(R));
    Coeff inv = R->field.inv(v[i].lc());
    for (std::size_t k = 0; k < v.size(); ++k) r[k] = v[k].scaled(inv);
    return r;
}

std::vector<Vec> module_groebner(const RingPtr& ring, std::size_t rank,
                                 std::vector<Vec> gens) {
    std::vector<Vec> basis;
    for (auto& g : gens) {
        if (g.size() != rank) throw InvalidInput("generator rank mismatch");
        if (!vec_is_zero(g)) basis.push_back(std::move(g));
    }
    // deterministic starting order: by lead term, then size
    std::sort(basis.begin(), basis.end(), [&](const Vec& a, const Vec& b) {
        std::size_t ia = lead_component(a), ib = lead_component(b);
        int c = cmp_lead(ring, ia, a[ia].lm(), ib, b[ib].lm());
        if (c != 0) return c < 0;
        std::size_t sa = 0, sb = 0;
        for (const auto& p : a) sa += p.size();
        for (const auto& p : b) sb += p.size();
        return sa < sb;
    });

    struct Pair {
        std::size_t i, j;
        Mono lcm;
        unsigned deg;
    };
    std::deque<Pair> pairs;
    auto push_pairs = [&](std::size_t j) {
        std::size_t cj = lead_component(basis[j]);
        for (std::size_t i = 0; i < j; ++i) {
            if (lead_component(basis[i]) != cj) continue;
            Mono l = mono_lcm(basis[i][cj].lm(), basis[j][cj].lm());
            pairs.push_back({i, j, l, ring->wdeg(l)});
        }
    };
    for (std::size_t j = 0; j < basis.size(); ++j) push_pairs(j);

    std::size_t processed = 0;
    while (!pairs.empty()) {
        auto best = pairs.begin();
        for (auto it = pairs.begin(); it != pairs.end(); ++it) {
            if (it->deg != best->deg) {
                if (it->deg < best->deg) best = it;
                continue;
            }
            int c = ring->cmp(it->lcm, best->lcm);
            if (c < 0 || (c == 0 && std::tie(it->j, it->i) < std::tie(best->j, best->i)))
                best = it;
        }
        Pair p = *best;
        pairs.erase(best);
        ++gb_budget().pairs_used;
        if (++processed > gb_budget().max_pairs)
            throw BudgetExceeded("module groebner pair budget exhausted");
        if (gb_budget().expired())
            throw BudgetExceeded("module groebner computation exceeded its deadline");

        const Vec &f = basis[p.i], &g = basis[p.j];
        std::size_t c = lead_component(f);
        Vec s = vec_sub(
            vec_times_term(f, ring->field.inv(f[c].lc()), mono_div(p.lcm, f[c].lm())),
            vec_times_term(g, ring->field.inv(g[c].lc()), mono_div(p.lcm, g[c].lm())));
        Vec r = module_normal_form(s, basis);
        if (vec_is_zero(r)) continue;
        basis.push_back(r);
        if (basis.size() > gb_budget().max_basis)
            throw BudgetExceeded("module groebner basis budget exhausted");
        push_pairs(basis.size() - 1);
    }

    // minimalize
    std::vector<bool> alive(basis.size(), true);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        std::size_t ci = lead_component(basis[i]);
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j || !alive[j]) continue;
            std::size_t cj = lead_component(basis[j]);
            if (cj != ci || !mono_divides(basis[j][cj].lm(), basis[i][ci].lm())) continue;
            if (basis[j][cj].lm() == basis[i][ci].lm() && j > i) continue;
            alive[i] = false;
            break;
        }
    }
    std::vector<Vec> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (alive[i]) minimal.push_back(basis[i]);

    // tail-reduce each element against the others
    std::vector<Vec> out;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Vec> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Vec r = module_normal_form(minimal[i], others);
        if (!vec_is_zero(r)) out.push_back(vec_normalized(ring, r));
    }
    std::sort(out.begin(), out.end(), [&](const Vec& a, const Vec& b) {
        std::size_t ia = lead_component(a), ib = lead_component(b);
        return cmp_lead(ring, ia, a[ia].lm(), ib, b[ib].lm()) < 0;
    });
    return out;
}

bool module_contains(const std::vector<Vec>& gb, const Vec& v) {
    return vec_is_zero(module_normal_form(v, gb));
}

// Tagged generators (col_j ; e_j) in R^{rows+cols}; under position-over-term
// the presentation block dominates the tag block.
static std::vector<Vec> tagged_groebner(const PolyMatrix& M) {
    const RingPtr& R = M.ring;
    std::size_t n = M.rows, s = M.cols;
    std::vector<Vec> gens;
    for (std::size_t j = 0; j < s; ++j) {
        Vec v = vec_zero(R, n + s);
        for (std::size_t i = 0; i < n; ++i) v[i] = M.a[i][j];
        v[n + j] = Poly::from_int(R, 1);
        gens.push_back(std::move(v));
    }
    return module_groebner(R, n + s, std::move(gens));
}

PolyMatrix syzygy_matrix(const PolyMatrix& M) {
    const RingPtr& R = M.ring;
    std::size_t n = M.rows, s = M.cols;
    std::vector<Vec> syz;
    for (const Vec& g : tagged_groebner(M)) {
        if (lead_component(g) < n) continue;
        syz.emplace_back(g.begin() + static_cast<std::ptrdiff_t>(n), g.end());
    }
    return PolyMatrix::from_cols(R, s, syz);
}

std::optional<Vec> lift_through(const PolyMatrix& M, const Vec& v) {
    const RingPtr& R = M.ring;
    std::size_t n = M.rows, s = M.cols;
    if (v.size() != n) throw InvalidInput("vector rank mismatch");
    Vec tagged = vec_zero(R, n + s);
    for (std::size_t i = 0; i < n; ++i) tagged[i] = v[i];
    Vec r = module_normal_form(tagged, tagged_groebner(M));
    for (std::size_t i = 0; i < n; ++i)
        if (!r[i].is_zero()) return std::nullopt;
    Vec x(s, Poly::zero(R));
    for (std::size_t j = 0; j < s; ++j) x[j] = -r[n + j];
    return x;
}

}  // namespace rk
