#pragma once

#include "modgb.hpp"

namespace rk {

// Finitely presented module, given as the cokernel of its presentation
// matrix: R^cols --pres--> R^rows --> M --> 0.
struct PModule {
    PolyMatrix pres;

    PModule() = default;
    explicit PModule(PolyMatrix p) : pres(std::move(p)) {}

    const RingPtr& ring() const { return pres.ring; }
    std::size_t ngens() const { return pres.rows; }
    std::size_t nrels() const { return pres.cols; }
};

// Module generated by the generators of I, presented by their syzygies.
PModule module_of_ideal(const IdealData& I);
// Same, but on an explicit ordered generator list (zeros kept).
PModule module_of_gens(const RingPtr& ring, const std::vector<Poly>& gens);
// R/I as a presented module.
PModule quotient_module(const IdealData& I);
// Cohen-Macaulayness of R/I via pd(R/I) == nvars - dim(R/I).
bool is_cm_quotient(const IdealData& I);
PModule free_module(const RingPtr& ring, std::size_t rank);
PModule direct_sum(const PModule& a, const PModule& b);

bool is_zero_module(const PModule& M);

// Prune unit (nonzero scalar) entries from the presentation. For graded
// input this yields the minimal presentation.
PModule minimize(const PModule& M);
std::size_t min_generators(const PModule& M);

// Differentials [d1, d2, ...] of a free resolution of M built from iterated
// syzygies, with unit entries pruned at every step; minimal for graded input.
// Empty when (the minimization of) M is free.
std::vector<PolyMatrix> minimal_resolution(const PModule& M);

struct DepthPd {
    int depth;
    int pd;
};
// Projective dimension from the minimal resolution and depth via the
// Auslander-Buchsbaum formula (graded-local convention). Requires M != 0.
DepthPd depth_and_pd(const PModule& M);

// Fitting ideal Fitt_i(M) = ideal of (ngens - i)-minors of the presentation.
IdealData fitting_ideal(const PModule& M, std::size_t i);

// Largest k with a nonzero k x k minor.
std::size_t matrix_rank(const PolyMatrix& A);
// Generic rank of M: ngens - rank of the presentation.
std::size_t module_rank(const PModule& M);

// Presentation of (im U + im W)/im W on the columns of U as generators.
PModule present_subquotient(const PolyMatrix& U, const PolyMatrix& W);

// Generators of the submodule (im W : f^inf) of R^rows, as columns.
PolyMatrix module_saturation(const PolyMatrix& W, const Poly& f);

// Torsion submodule of M, as a presented module.
PModule torsion_submodule(const PModule& M);
bool is_torsion_free(const PModule& M);

// Nonzero maximal minor of the (minimized) presentation; inverting it frees
// the cokernel. Returns 1 when the presentation already has full column rank
// zero (free module).
Poly freeing_minor(const PModule& M);

// Torsion-freeness test given an f with supp T(M) inside V(f) (any freeing
// minor of M, or of a module M is functorially built from): T(M) = 0 iff
// multiplication by f is injective, a single colon instead of a saturation.
bool is_torsion_free_via(const PModule& M, const Poly& f);

// Dual Hom(M, R): `module` is a presentation on the columns of `embedding`,
// which exhibit the dual inside R^ngens as the kernel of pres^T.
struct DualPackage {
    PModule module;
    PolyMatrix embedding;
};
DualPackage hom_dual(const PModule& M);

// Ext^i(M, R), as the i-th cohomology of the dualized resolution.
PModule ext_module(const PModule& M, std::size_t i);

// Exterior power of M with the induced presentation.
PModule exterior_power(const PModule& M, std::size_t k);

// Rank-e modules over a polynomial ring always carry an orientation; with
// verify set, confirm that (Lambda^e M)^** is free of rank one.
bool is_orientable(const PModule& M, bool verify = false);

// Reduced module GB of the column span of the presentation (cached nowhere;
// helper for containment tests).
std::vector<Vec> column_span_gb(const PolyMatrix& A);

}  // namespace rk
