#pragma once

#include "pmodule.hpp"

#include <optional>

namespace rk {

// Rees algebra data for a module E = coker-presented submodule with
// generators e_1..e_n. Everything lives in big = R[T_1..T_n] with the base
// variables first; `sym` is the symmetric-algebra ideal of linear forms
// T * pres, `rees` is its saturation by a maximal nonzero minor of the
// presentation, which kills the base-ring torsion.
struct ReesPackage {
    RingPtr base;
    RingPtr big;
    std::size_t nbase = 0;  // base variables occupy [0, nbase) in big
    std::size_t ntvars = 0;
    IdealData sym;
    IdealData rees;
    Poly minor;  // saturation element (in big); 1 when there are no relations
};

// Requires a module of positive rank (torsion would otherwise survive the
// saturation in the wrong way); throws InvalidInput when rank is zero.
ReesPackage rees_package(const PModule& E, const std::string& tprefix = "T");

// Symmetric-algebra data only: skips the saturation, `rees` aliases `sym`.
// For degreewise torsion scans that must not depend on the Rees ideal.
ReesPackage sym_package(const PModule& E, const std::string& tprefix = "T");

// mask of the T variables in pkg.big
std::vector<bool> tvar_mask(const ReesPackage& pkg);

bool is_linear_type(const ReesPackage& pkg);

// j-th power E^j = degree-j graded piece of the Rees algebra, presented on
// the degree-j monomials in the T variables (ordered lexicographically by
// exponent, descending in T_1).
PModule power_module(const ReesPackage& pkg, unsigned j);

// j-th symmetric power Sym_j(E), the degree-j piece of the symmetric algebra
// on the same monomial basis as power_module.
PModule sym_power_module(const ReesPackage& pkg, unsigned j);

// Special fiber ideal: image of the Rees ideal in k[T] (base vars to zero).
IdealData special_fiber_ideal(const ReesPackage& pkg);

// Analytic spread: dimension of the special fiber k[T]/(rees mod base vars).
int special_fiber_dim(const ReesPackage& pkg);

// Smallest r <= cap with E^{r+1} = U E^r for U generated by ell random
// linear combinations of the generators; tries `seeds` successive seeds and
// keeps the minimum. nullopt when no sampled U is a reduction within cap.
std::optional<int> reduction_number(const ReesPackage& pkg, std::uint64_t seed,
                                    unsigned cap = 10, unsigned seeds = 3);

// degree-j monomials in n variables, ordered lexicographically descending
std::vector<Mono> degree_monomials(std::size_t n, unsigned j);

}  // namespace rk
