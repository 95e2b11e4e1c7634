#pragma once

#include "ring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rk {

struct Term {
    Coeff c;
    Mono m;
};

// Sparse multivariate polynomial; terms sorted descending by the ring order,
// no zero coefficients stored.
class Poly {
  public:
    Poly() = default;
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}
    Poly(RingPtr ring, std::vector<Term> terms);  // normalizes

    static Poly zero(const RingPtr& ring) { return Poly(ring); }
    static Poly constant(const RingPtr& ring, const Coeff& c);
    static Poly from_int(const RingPtr& ring, long long v);
    static Poly variable(const RingPtr& ring, std::size_t idx, unsigned exp = 1);
    static Poly monomial(const RingPtr& ring, const Coeff& c, Mono m);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }

    const Term& lt() const { return t_.front(); }
    const Mono& lm() const { return t_.front().m; }
    const Coeff& lc() const { return t_.front().c; }

    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.is_one()); }
    // nonzero scalar, i.e. a unit of the polynomial ring
    bool is_unit() const { return t_.size() == 1 && t_[0].m.is_one(); }

    unsigned degree() const;  // total (weighted) degree; 0 for the zero poly
    // weighted degree over a subset of variables (mask true = count)
    unsigned degree_in(const std::vector<bool>& mask) const;
    bool is_homogeneous() const;
    bool is_homogeneous_in(const std::vector<bool>& mask) const;
    bool depends_on(std::size_t var) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const Coeff& c) const;
    Poly times_term(const Coeff& c, const Mono& m) const;
    Poly monic() const;
    // Canonical scaling: monic over F_p; integral, primitive, positive lead over Q.
    Poly normalized() const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Exact division by a single polynomial; nullopt if not divisible.
    std::optional<Poly> divide_exact(const Poly& d) const;

    // Ring homomorphism: substitute images[i] for variable i, coefficients mapped
    // verbatim (target field must match).
    Poly map_to(const RingPtr& target, const std::vector<Poly>& images) const;

    std::string str() const;

  private:
    RingPtr ring_;
    std::vector<Term> t_;
    friend class PolyBuilder;
};

// Accumulates terms, then produces a normalized Poly.
class PolyBuilder {
  public:
    explicit PolyBuilder(RingPtr ring) : ring_(std::move(ring)) {}
    void add_term(const Coeff& c, const Mono& m);
    void add(const Poly& p);
    void add_scaled(const Poly& p, const Coeff& c, const Mono& m);
    Poly build();

  private:
    RingPtr ring_;
    std::vector<Term> t_;
};

struct ParseError : Error {
    std::size_t pos;
    ParseError(const std::string& msg, std::size_t at)
        : Error(msg + " (at position " + std::to_string(at) + ")"), pos(at) {}
};

Poly parse_poly(const RingPtr& ring, const std::string& text);

std::string coeff_str(const FieldSpec& f, const Coeff& c);

}  // namespace rk
