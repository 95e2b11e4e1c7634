#include "ideal.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rk {

GbBudget& gb_budget() {
    thread_local GbBudget b;
    return b;
}

IdealData::IdealData(RingPtr ring, std::vector<Poly> gens) : ring_(std::move(ring)), gens_(std::move(gens)) {
    for (auto& g : gens_) check_same_ring(ring_, g.ring());
}

Poly normal_form(const Poly& f, const std::vector<Poly>& G) {
    const RingPtr& R = f.ring();
    const auto& F = R->field;
    Poly r = f;
    std::vector<Term> rem;
    while (!r.is_zero()) {
        bool reduced = false;
        for (const auto& g : G) {
            if (g.is_zero()) continue;
            if (mono_divides(g.lm(), r.lm())) {
                Coeff c = F.div(r.lc(), g.lc());
                Mono m = mono_div(r.lm(), g.lm());
                r = r - g.times_term(c, m);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.push_back(r.lt());
            r = r - Poly::monomial(R, r.lt().c, r.lt().m);
        }
    }
    return Poly(R, std::move(rem));
}

Poly normal_form(const Poly& f, const IdealData& I) {
    check_same_ring(f.ring(), I.ring());
    return normal_form(f, I.gb());
}

static Poly s_poly(const Poly& f, const Poly& g) {
    const RingPtr& R = f.ring();
    Mono l = mono_lcm(f.lm(), g.lm());
    Poly a = f.times_term(R->field.inv(f.lc()), mono_div(l, f.lm()));
    Poly b = g.times_term(R->field.inv(g.lc()), mono_div(l, g.lm()));
    return a - b;
}

namespace {

struct Pair {
    std::size_t i, j;  // i < j
    Mono lcm;
    unsigned deg;
};

// Buchberger with the Gebauer-Moeller pair update.
struct Buchberger {
    const RingPtr& ring;
    std::vector<Poly> G;
    std::vector<bool> alive;  // lead-term-minimal flag
    std::vector<Pair> pairs;
    std::size_t processed = 0;

    explicit Buchberger(const RingPtr& r) : ring(r) {}

    bool pair_less(const Pair& a, const Pair& b) const {
        if (a.deg != b.deg) return a.deg < b.deg;
        int c = ring->cmp(a.lcm, b.lcm);
        if (c) return c < 0;
        if (a.j != b.j) return a.j < b.j;
        return a.i < b.i;
    }

    void add_generator(const Poly& h0) {
        Poly h = normal_form(h0, G).normalized();
        if (h.is_zero()) return;
        std::size_t t = G.size();

        // candidate new pairs, Gebauer-Moeller pruned
        std::vector<Pair> cand;
        for (std::size_t k = 0; k < t; ++k) {
            if (!alive[k]) continue;
            Mono l = mono_lcm(G[k].lm(), h.lm());
            cand.push_back({k, t, l, l.deg()});
        }
        std::vector<Pair> kept;
        for (std::size_t a = 0; a < cand.size(); ++a) {
            bool drop = false;
            if (mono_coprime(G[cand[a].i].lm(), h.lm())) {
                drop = true;  // Buchberger's first criterion
            } else {
                for (std::size_t b = 0; b < cand.size() && !drop; ++b) {
                    if (b == a) continue;
                    if (!(cand[b].lcm == cand[a].lcm) && mono_divides(cand[b].lcm, cand[a].lcm))
                        drop = true;
                }
                if (!drop) {
                    // among equal lcms keep only the first
                    for (std::size_t b = 0; b < a && !drop; ++b)
                        if (cand[b].lcm == cand[a].lcm) drop = true;
                }
            }
            if (!drop) kept.push_back(cand[a]);
        }
        // prune old pairs made redundant by h (chain criterion)
        std::vector<Pair> npairs;
        for (auto& p : pairs) {
            bool drop = mono_divides(h.lm(), p.lcm) &&
                        !(mono_lcm(G[p.i].lm(), h.lm()) == p.lcm) &&
                        !(mono_lcm(G[p.j].lm(), h.lm()) == p.lcm);
            if (!drop) npairs.push_back(p);
        }
        pairs = std::move(npairs);
        for (auto& p : kept) pairs.push_back(p);

        for (std::size_t k = 0; k < t; ++k)
            if (alive[k] && mono_divides(h.lm(), G[k].lm())) alive[k] = false;
        G.push_back(h);
        alive.push_back(true);
        if (G.size() > gb_budget().max_basis)
            throw BudgetExceeded("Groebner basis size exceeded budget");
    }

    void run() {
        while (!pairs.empty()) {
            std::size_t best = 0;
            for (std::size_t a = 1; a < pairs.size(); ++a)
                if (pair_less(pairs[a], pairs[best])) best = a;
            Pair p = pairs[best];
            pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
            ++gb_budget().pairs_used;
            if (++processed > gb_budget().max_pairs)
                throw BudgetExceeded("Groebner pair count exceeded budget");
            if (gb_budget().expired())
                throw BudgetExceeded("Groebner computation exceeded its deadline");
            Poly s = s_poly(G[p.i], G[p.j]);
            add_generator(s);
        }
    }
};

}  // namespace

bool buchberger_certificate(const std::vector<Poly>& G) {
    for (std::size_t i = 0; i < G.size(); ++i)
        for (std::size_t j = i + 1; j < G.size(); ++j)
            if (!normal_form(s_poly(G[i], G[j]), G).is_zero()) return false;
    return true;
}

std::vector<Poly> reduced_groebner(const RingPtr& ring, const std::vector<Poly>& gens) {
    Buchberger b(ring);
    // deterministic seeding order: sort inputs by lead term, then size
    std::vector<Poly> start;
    for (auto& g : gens)
        if (!g.is_zero()) start.push_back(g);
    std::sort(start.begin(), start.end(), [&](const Poly& x, const Poly& y) {
        int c = ring->cmp(x.lm(), y.lm());
        if (c) return c < 0;
        return x.size() < y.size();
    });
    for (auto& g : start) b.add_generator(g);
    b.run();

    // minimalize
    std::vector<Poly> min;
    for (std::size_t i = 0; i < b.G.size(); ++i)
        if (b.alive[i]) min.push_back(b.G[i]);
    // tail-reduce each element against the others
    std::vector<Poly> red;
    for (std::size_t i = 0; i < min.size(); ++i) {
        std::vector<Poly> others;
        for (std::size_t j = 0; j < min.size(); ++j)
            if (j != i) others.push_back(min[j]);
        Poly r = normal_form(min[i], others).normalized();
        if (!r.is_zero()) red.push_back(r);
    }
    std::sort(red.begin(), red.end(),
              [&](const Poly& x, const Poly& y) { return ring->cmp(x.lm(), y.lm()) < 0; });
    return red;
}

const std::vector<Poly>& IdealData::gb() const {
    if (!gb_done_) {
        gb_ = reduced_groebner(ring_, gens_);
        gb_done_ = true;
    }
    return gb_;
}

bool IdealData::is_zero() const {
    for (auto& g : gens_)
        if (!g.is_zero()) return false;
    return true;
}

bool IdealData::is_one() const {
    if (is_zero()) return false;
    for (auto& g : gens_)
        if (g.is_unit()) return true;
    const auto& B = gb();
    return B.size() == 1 && B[0].is_unit();
}

bool ideal_contains(const IdealData& I, const Poly& f) { return normal_form(f, I).is_zero(); }

bool ideal_eq(const IdealData& I, const IdealData& J) {
    check_same_ring(I.ring(), J.ring());
    const auto& A = I.gb();
    const auto& B = J.gb();
    if (A.size() != B.size()) return false;
    for (std::size_t i = 0; i < A.size(); ++i)
        if (A[i] != B[i]) return false;
    return true;
}

IdealData ideal_sum(const IdealData& I, const IdealData& J) {
    check_same_ring(I.ring(), J.ring());
    std::vector<Poly> g = I.gens();
    for (auto& p : J.gens()) g.push_back(p);
    return IdealData(I.ring(), std::move(g));
}

std::vector<std::string> fresh_var_names(const std::vector<std::string>& taken,
                                         const std::string& prefix, std::size_t count) {
    auto used = [&](const std::string& n) {
        return std::find(taken.begin(), taken.end(), n) != taken.end();
    };
    std::vector<std::string> out;
    std::size_t k = 1;
    while (out.size() < count) {
        std::string name = prefix + std::to_string(k++);
        while (used(name)) name = "_" + name;
        out.push_back(name);
    }
    return out;
}

RingPtr prepend_elim_vars(const RingPtr& ring, std::size_t extra, const std::string& prefix) {
    std::vector<std::string> vars = fresh_var_names(ring->vars, prefix, extra);
    for (auto& v : ring->vars) vars.push_back(v);
    std::vector<unsigned> w(extra, 1);
    for (auto x : ring->weights) w.push_back(x);
    return make_ring(ring->field, std::move(vars), OrderKind::Block, extra, std::move(w));
}

Poly shift_vars(const Poly& p, const RingPtr& target, std::size_t offset) {
    std::vector<Term> out;
    for (auto& tm : p.terms()) {
        Mono m{std::vector<std::uint16_t>(target->nvars(), 0)};
        for (std::size_t i = 0; i < tm.m.e.size(); ++i) m.e[i + offset] = tm.m.e[i];
        out.push_back({tm.c, std::move(m)});
    }
    return Poly(target, std::move(out));
}

Poly unshift_vars(const Poly& p, const RingPtr& target, std::size_t offset) {
    std::vector<Term> out;
    for (auto& tm : p.terms()) {
        Mono m{std::vector<std::uint16_t>(target->nvars(), 0)};
        for (std::size_t i = 0; i < offset; ++i)
            if (tm.m.e[i]) throw InvalidInput("polynomial depends on eliminated variable");
        for (std::size_t i = offset; i < tm.m.e.size(); ++i) m.e[i - offset] = tm.m.e[i];
        out.push_back({tm.c, std::move(m)});
    }
    return Poly(target, std::move(out));
}

IdealData ideal_intersect(const IdealData& I, const IdealData& J) {
    check_same_ring(I.ring(), J.ring());
    if (I.is_zero() || J.is_zero()) return IdealData(I.ring(), {});
    const RingPtr& R = I.ring();
    RingPtr Rt = prepend_elim_vars(R, 1, "tint");
    Poly t = Poly::variable(Rt, 0);
    Poly omt = Poly::from_int(Rt, 1) - t;
    std::vector<Poly> gens;
    for (auto& f : I.gens()) gens.push_back(t * shift_vars(f, Rt, 1));
    for (auto& g : J.gens()) gens.push_back(omt * shift_vars(g, Rt, 1));
    auto B = reduced_groebner(Rt, gens);
    std::vector<Poly> out;
    for (auto& b : B)
        if (!b.depends_on(0)) out.push_back(unshift_vars(b, R, 1));
    return IdealData(R, std::move(out));
}

// (I : g) for a single nonzero g, via (I cap (g)) / g
static IdealData quotient_single(const IdealData& I, const Poly& g) {
    IdealData cap = ideal_intersect(I, IdealData(I.ring(), {g}));
    std::vector<Poly> out;
    for (auto& h : cap.gens()) {
        auto q = h.divide_exact(g);
        if (!q) throw Error("internal: intersection element not divisible");
        out.push_back(*q);
    }
    return IdealData(I.ring(), std::move(out));
}

IdealData ideal_quotient(const IdealData& I, const IdealData& J) {
    check_same_ring(I.ring(), J.ring());
    bool any = false;
    IdealData acc;
    for (auto& g : J.gens()) {
        if (g.is_zero()) continue;
        IdealData q = g.is_unit() ? I : quotient_single(I, g);
        acc = any ? ideal_intersect(acc, q) : q;
        any = true;
    }
    if (!any) return IdealData(I.ring(), {Poly::from_int(I.ring(), 1)});  // I : (0)
    return acc;
}

// (I : g^inf) by Rabinowitsch: eliminate w from I + (1 - w g)
static IdealData saturate_single(const IdealData& I, const Poly& g) {
    const RingPtr& R = I.ring();
    RingPtr Rw = prepend_elim_vars(R, 1, "wsat");
    Poly w = Poly::variable(Rw, 0);
    std::vector<Poly> gens;
    for (auto& f : I.gens()) gens.push_back(shift_vars(f, Rw, 1));
    gens.push_back(Poly::from_int(Rw, 1) - w * shift_vars(g, Rw, 1));
    auto B = reduced_groebner(Rw, gens);
    std::vector<Poly> out;
    for (auto& b : B)
        if (!b.depends_on(0)) out.push_back(unshift_vars(b, R, 1));
    return IdealData(R, std::move(out));
}

IdealData saturate(const IdealData& I, const IdealData& J) {
    check_same_ring(I.ring(), J.ring());
    bool any = false;
    IdealData acc;
    for (auto& g : J.gens()) {
        if (g.is_zero()) continue;
        IdealData s = g.is_unit() ? I : saturate_single(I, g);
        acc = any ? ideal_intersect(acc, s) : s;
        any = true;
    }
    if (!any) return IdealData(I.ring(), {Poly::from_int(I.ring(), 1)});
    return acc;
}

IdealData saturate_iterated(const IdealData& I, const IdealData& J) {
    IdealData cur = I;
    for (int guard = 0; guard < 256; ++guard) {
        IdealData nxt = ideal_quotient(cur, J);
        if (ideal_eq(nxt, cur)) return cur;
        cur = nxt;
    }
    throw BudgetExceeded("iterated saturation did not stabilize");
}

IdealData eliminate(const IdealData& I, const std::vector<std::string>& keep) {
    const RingPtr& R = I.ring();
    std::vector<bool> kept(R->nvars(), false);
    for (auto& name : keep) {
        int idx = R->var_index(name);
        if (idx < 0) throw InvalidInput("eliminate: unknown variable '" + name + "'");
        kept[static_cast<std::size_t>(idx)] = true;
    }
    std::vector<std::size_t> elim_idx, keep_idx;
    for (std::size_t i = 0; i < R->nvars(); ++i) (kept[i] ? keep_idx : elim_idx).push_back(i);

    // permuted ring: eliminated block first
    std::vector<std::string> vars;
    for (auto i : elim_idx) vars.push_back(R->vars[i]);
    for (auto i : keep_idx) vars.push_back(R->vars[i]);
    RingPtr Rp = make_ring(R->field, vars, OrderKind::Block, elim_idx.size());
    std::vector<Poly> images(R->nvars());
    {
        std::vector<std::size_t> pos(R->nvars());
        std::size_t k = 0;
        for (auto i : elim_idx) pos[i] = k++;
        for (auto i : keep_idx) pos[i] = k++;
        for (std::size_t i = 0; i < R->nvars(); ++i) images[i] = Poly::variable(Rp, pos[i]);
    }
    std::vector<Poly> gens;
    for (auto& f : I.gens()) gens.push_back(f.map_to(Rp, images));
    auto B = reduced_groebner(Rp, gens);

    // target subring, original variable order
    std::vector<std::string> sub_vars;
    for (std::size_t i = 0; i < R->nvars(); ++i)
        if (kept[i]) sub_vars.push_back(R->vars[i]);
    RingPtr Rs = make_ring(R->field, sub_vars);
    std::vector<Poly> out;
    for (auto& b : B) {
        bool pure = true;
        for (std::size_t i = 0; i < elim_idx.size() && pure; ++i)
            if (b.depends_on(i)) pure = false;
        if (!pure) continue;
        // map from permuted ring down to the subring
        std::vector<Term> terms;
        for (auto& tm : b.terms()) {
            Mono m{std::vector<std::uint16_t>(sub_vars.size(), 0)};
            for (std::size_t k = 0; k < keep_idx.size(); ++k) {
                std::size_t src = elim_idx.size() + k;
                int dst = Rs->var_index(R->vars[keep_idx[k]]);
                m.e[static_cast<std::size_t>(dst)] = tm.m.e[src];
            }
            terms.push_back({tm.c, std::move(m)});
        }
        out.push_back(Poly(Rs, std::move(terms)));
    }
    return IdealData(Rs, std::move(out));
}

int dimension(const IdealData& I) {
    const RingPtr& R = I.ring();
    std::size_t n = R->nvars();
    if (I.is_one()) return kEmptyVariety;
    if (n > 24) throw InvalidInput("dimension: too many variables for subset search");
    std::vector<std::uint32_t> supports;
    for (auto& g : I.gb()) {
        std::uint32_t s = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (g.lm().e[i]) s |= (1u << i);
        supports.push_back(s);
    }
    int best = 0;
    for (std::uint32_t S = 0; S < (1u << n); ++S) {
        int size = __builtin_popcount(S);
        if (size <= best) continue;
        bool indep = true;
        for (auto sup : supports) {
            if ((sup & ~S) == 0) {  // lead monomial supported inside S
                indep = false;
                break;
            }
        }
        if (indep) best = size;
    }
    return best;
}

int height(const IdealData& I) {
    int d = dimension(I);
    if (d == kEmptyVariety) return kInfiniteHeight;
    return static_cast<int>(I.ring()->nvars()) - d;
}

}  // namespace rk
