#pragma once

#include "ideal.hpp"

#include <optional>

namespace rk {

// Element of a free module R^rank, stored densely by component.
using Vec = std::vector<Poly>;

Vec vec_zero(const RingPtr& ring, std::size_t rank);
bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scaled(const Vec& a, const Poly& p);
bool vec_eq(const Vec& a, const Vec& b);

// Matrix over the polynomial ring, row-major.
struct PolyMatrix {
    RingPtr ring;
    std::size_t rows = 0, cols = 0;
    std::vector<std::vector<Poly>> a;

    PolyMatrix() = default;
    PolyMatrix(RingPtr r, std::size_t m, std::size_t n);

    Poly& at(std::size_t i, std::size_t j) { return a[i][j]; }
    const Poly& at(std::size_t i, std::size_t j) const { return a[i][j]; }

    Vec col(std::size_t j) const;
    void set_col(std::size_t j, const Vec& v);
    PolyMatrix transpose() const;

    static PolyMatrix identity(const RingPtr& r, std::size_t n);
    static PolyMatrix from_cols(const RingPtr& r, std::size_t rank, const std::vector<Vec>& cols);
};

PolyMatrix mat_mul(const PolyMatrix& A, const PolyMatrix& B);
Vec mat_apply(const PolyMatrix& A, const Vec& x);
PolyMatrix hconcat(const PolyMatrix& A, const PolyMatrix& B);
bool mat_eq(const PolyMatrix& A, const PolyMatrix& B);
bool mat_is_zero(const PolyMatrix& A);

// Determinant (fraction-free expansion; intended for small matrices).
Poly determinant(const PolyMatrix& A);
// Ideal of k x k minors.
IdealData minors_ideal(const PolyMatrix& A, std::size_t k);

// ---- Groebner bases of submodules of R^rank ----
//
// Terms (i, m) are ordered position-over-term: lower component wins, ties by
// the ring's monomial order. The lead term of a vector sits in its first
// nonzero component.

std::size_t lead_component(const Vec& v);  // rank if v == 0

// Remainder of v on division by G (a module GB for membership tests).
Vec module_normal_form(const Vec& v, const std::vector<Vec>& G);

// Reduced module Groebner basis.
std::vector<Vec> module_groebner(const RingPtr& ring, std::size_t rank, std::vector<Vec> gens);

bool module_contains(const std::vector<Vec>& gb, const Vec& v);

// Generators of { x in R^cols : M x = 0 }, as columns of the result.
PolyMatrix syzygy_matrix(const PolyMatrix& M);

// Solve M x = v; nullopt when v is outside the column span.
std::optional<Vec> lift_through(const PolyMatrix& M, const Vec& v);

}  // namespace rk
