#pragma once

#include "poly.hpp"

#include <chrono>
#include <limits>
#include <optional>
#include <vector>

namespace rk {

// Resource caps for Buchberger. Exceeding them raises BudgetExceeded.
struct GbBudget {
    std::size_t max_pairs = 2000000;
    std::size_t max_basis = 50000;
    // optional wall-clock cutoff, checked alongside the pair count
    std::optional<std::chrono::steady_clock::time_point> deadline;
    std::size_t pairs_used = 0;  // pairs processed since last reset

    bool expired() const {
        return deadline && std::chrono::steady_clock::now() > *deadline;
    }
};

GbBudget& gb_budget();  // thread-local, mutable

constexpr int kEmptyVariety = -1;
constexpr int kInfiniteHeight = std::numeric_limits<int>::max() / 2;

// Ideal given by generators, with a lazily cached reduced Groebner basis
// w.r.t. the ring's order.
class IdealData {
  public:
    IdealData() = default;
    IdealData(RingPtr ring, std::vector<Poly> gens);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Poly>& gens() const { return gens_; }
    const std::vector<Poly>& gb() const;  // reduced GB, cached

    bool is_zero() const;
    bool is_one() const;

  private:
    RingPtr ring_;
    std::vector<Poly> gens_;
    mutable std::vector<Poly> gb_;
    mutable bool gb_done_ = false;
};

// Remainder of f on division by the polynomials in G (need not be a GB; for
// membership tests G must be one).
Poly normal_form(const Poly& f, const std::vector<Poly>& G);
Poly normal_form(const Poly& f, const IdealData& I);

// Reduced Groebner basis of the given generators w.r.t. their ring's order.
std::vector<Poly> reduced_groebner(const RingPtr& ring, const std::vector<Poly>& gens);

// Buchberger post-check: every S-polynomial of G reduces to zero over G.
bool buchberger_certificate(const std::vector<Poly>& G);

bool ideal_contains(const IdealData& I, const Poly& f);
bool ideal_eq(const IdealData& I, const IdealData& J);
IdealData ideal_sum(const IdealData& I, const IdealData& J);
IdealData ideal_intersect(const IdealData& I, const IdealData& J);
IdealData ideal_quotient(const IdealData& I, const IdealData& J);  // I : J
IdealData saturate(const IdealData& I, const IdealData& J);        // I : J^inf
IdealData saturate_iterated(const IdealData& I, const IdealData& J);

// I intersected with the subring on the kept variables; result lives in a
// fresh grevlex ring on exactly those variables, in their original order.
IdealData eliminate(const IdealData& I, const std::vector<std::string>& keep);

// Krull dimension of ring/I (combinatorial, from the lead-term ideal).
// Returns kEmptyVariety for the unit ideal; nvars for the zero ideal.
int dimension(const IdealData& I);
// nvars - dimension; kInfiniteHeight for the unit ideal.
int height(const IdealData& I);

// ---- ring plumbing ----

// New ring with `extra` fresh variables prepended and a block order that
// eliminates them first. Fresh names derived from `prefix`.
RingPtr prepend_elim_vars(const RingPtr& ring, std::size_t extra, const std::string& prefix);
// Map a polynomial into a ring whose variables contain this ring's variables
// as the suffix starting at `offset` (same field).
Poly shift_vars(const Poly& p, const RingPtr& target, std::size_t offset);
// Inverse of shift_vars; requires p to not involve the first `offset` variables.
Poly unshift_vars(const Poly& p, const RingPtr& target, std::size_t offset);

std::vector<std::string> fresh_var_names(const std::vector<std::string>& taken,
                                         const std::string& prefix, std::size_t count);

}  // namespace rk
