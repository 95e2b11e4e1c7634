#pragma once

#include "pmodule.hpp"
#include "report.hpp"

#include <optional>

namespace rk {

constexpr unsigned kGsInfinity = static_cast<unsigned>(-1);

struct GsReport {
    unsigned s = 0;  // kGsInfinity for G_infinity
    std::vector<std::pair<std::size_t, int>> fitting_heights;  // (j, height Fitt_j)
    bool verdict = false;
};

// G_s condition: height(Fitt_j(E)) >= j - e + 2 for e <= j <= e + s - 2.
// s = kGsInfinity runs j up to ngens - 1.
GsReport check_Gs(const PModule& E, unsigned s);

struct ResidualData {
    IdealData I;
    unsigned s = 0;
    IdealData J;  // <= s combinations of the generators of I
    IdealData K;  // J : I
    bool proper = false;
    bool geometric = false;
    bool cm_quotient = false;
    std::uint64_t seed = 0;
};

// s-residual intersection K = J : I with J built from s seeded scalar
// combinations of the generators; pass `forced` to pin J (test hook).
// Re-seeds (<= 5) when a proper K violates height(K) >= s.
ResidualData residual_intersection(const IdealData& I, unsigned s, std::uint64_t seed,
                                   const std::optional<IdealData>& forced = std::nullopt);

// Artin-Nagata: every sampled proper i-residual intersection for
// height(I) <= i <= s has Cohen-Macaulay quotient. geometric_only restricts
// to geometric samples (the AN_s^- variant).
CheckReport check_AN(const IdealData& I, unsigned s, unsigned trials, std::uint64_t seed,
                     bool geometric_only = false);

// Koszul differential d_i : R^C(n,i) -> R^C(n,i-1) on the given elements.
PolyMatrix koszul_differential(const RingPtr& ring, const std::vector<Poly>& gens,
                               std::size_t i);
// Koszul homology H_j of a minimal generating set of I.
PModule koszul_homology(const IdealData& I, std::size_t j);

// depth H_j >= d - n + j for all nonzero Koszul homology modules.
bool sliding_depth_check(const IdealData& I);

// height(Fitt_0(Ext^{j+1}(E^j, R)) + Fitt_e(E)) >= target_codim + 1.
bool ext_vanishing_locus_check(const PModule& E, unsigned j, unsigned target_codim);

// E** free, detected through Fitting ideals of the double dual.
bool is_ideal_module(const PModule& E);

}  // namespace rk
