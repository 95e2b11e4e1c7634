#pragma once

#include "rees.hpp"
#include "report.hpp"

namespace rk {

// gcd of two polynomials over a UFD, via the principal colon (f) : (g).
Poly poly_gcd(const Poly& a, const Poly& b);

// Generic Bourbaki data for a module E of rank e: e-1 generic elements x_j
// spanning a free submodule F, the quotient E/F of rank one, and its
// embedding as an ideal (common factor removed).
struct BourbakiData {
    bool symbolic = false;
    bool free_case = false;  // E free: sentinel, no ideal constructed
    RingPtr ext_ring;        // R itself (random mode) or R with Z_ij adjoined
    PModule extended;        // E over ext_ring
    PolyMatrix xs;           // ngens x (e-1) coefficient columns of the x_j
    PModule quotient;        // E/F, rank one
    Vec hom_witness;         // kernel vector of quotient.pres^T: the embedding
    Poly gcd;                // factor removed from the image ideal
    IdealData ideal_I;
    int grade_I = 0;
    std::uint64_t seed = 0;
};

// Random mode draws the x_j coefficients as seeded field scalars; symbolic
// mode adjoins fresh variables Z_ij. Re-seeds up to 5 times on genericity
// failures (wrong rank, torsion, grade < 2); free E returns the sentinel.
BourbakiData bourbaki_construct(const PModule& E, bool symbolic, std::uint64_t seed);

// Prop 2.8 shadow: l(I) == l(E) - e + 1, r(I) <= r(E) (sampled), and G_s
// transfer when s >= 2 is requested.
CheckReport bourbaki_invariant_check(const PModule& E, const BourbakiData& B, unsigned s = 0);

// Torsion-freeness of R(E)/(F): Q = P_E + (lambda_j) stable under saturation
// by the package minor. When true and cross != nullptr, *cross records
// whether Q equals the Rees ideal of ideal_I built independently.
bool rees_deformation_check(const PModule& E, const BourbakiData& B, bool* cross = nullptr);

// Homology of the degree-j strand of the Koszul complex on x_1..x_{e-1} over
// the Rees algebra, augmented onto I^j. Returned right-to-left: position 0
// sits at I^j, position i+1 at the strand module (E^{j-i})^{C(e-1,i)}.
std::vector<PModule> koszul_piece_homology(const PModule& E, const BourbakiData& B, unsigned j);

// One generic quotient step E/Rx for a seeded scalar combination x;
// requires rank >= 2, retries up to 5 seeds for rank drop + torsion-freeness.
PModule iter_generic_quotient(const PModule& E, std::uint64_t seed);

}  // namespace rk
