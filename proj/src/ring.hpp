#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rk {

using Rat = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct RingMismatch : Error {
    RingMismatch() : Error("operands belong to different rings") {}
};
struct InvalidInput : Error {
    using Error::Error;
};
struct BudgetExceeded : Error {
    using Error::Error;
};
struct GenericityFailure : Error {
    using Error::Error;
};

// Coefficient of a polynomial. `u` carries the reduced residue when the
// field is F_p; `q` carries the value when the field is Q.
struct Coeff {
    std::uint64_t u = 0;
    Rat q;
};

// F_p for prime p, or Q when characteristic == 0.
struct FieldSpec {
    std::uint64_t characteristic = 32003;

    bool is_fp() const { return characteristic != 0; }

    Coeff zero() const { return {}; }
    Coeff one() const;
    Coeff from_int(long long v) const;
    Coeff from_rat(long long num, long long den) const;
    bool is_zero(const Coeff& a) const;
    bool eq(const Coeff& a, const Coeff& b) const;
    Coeff add(const Coeff& a, const Coeff& b) const;
    Coeff sub(const Coeff& a, const Coeff& b) const;
    Coeff mul(const Coeff& a, const Coeff& b) const;
    Coeff neg(const Coeff& a) const;
    Coeff inv(const Coeff& a) const;
    Coeff div(const Coeff& a, const Coeff& b) const { return mul(a, inv(b)); }

    bool operator==(const FieldSpec& o) const { return characteristic == o.characteristic; }
};

bool is_prime_u64(std::uint64_t n);

enum class OrderKind {
    GrevLex,
    Lex,
    // Block elimination order: variables [0, block_split) are compared first
    // (grevlex within the block), then the remaining variables (grevlex).
    Block,
};

// Exponent vector. Fixed width = number of ring variables.
struct Mono {
    std::vector<std::uint16_t> e;

    bool operator==(const Mono& o) const { return e == o.e; }
    unsigned deg() const {
        unsigned d = 0;
        for (auto x : e) d += x;
        return d;
    }
    bool is_one() const {
        for (auto x : e)
            if (x) return false;
        return true;
    }
};

Mono mono_mul(const Mono& a, const Mono& b);
bool mono_divides(const Mono& a, const Mono& b);  // a | b
Mono mono_div(const Mono& a, const Mono& b);      // a / b, requires b | a
Mono mono_lcm(const Mono& a, const Mono& b);
bool mono_coprime(const Mono& a, const Mono& b);

struct PolyRingData;
using RingPtr = std::shared_ptr<const PolyRingData>;

struct PolyRingData {
    FieldSpec field;
    std::vector<std::string> vars;
    OrderKind order = OrderKind::GrevLex;
    std::size_t block_split = 0;            // only for OrderKind::Block
    std::vector<unsigned> weights;          // grading, default all 1

    std::size_t nvars() const { return vars.size(); }
    int var_index(const std::string& name) const;  // -1 if absent

    // Strict total order on monomials; returns +1 if a > b, 0, or -1.
    int cmp(const Mono& a, const Mono& b) const;
    bool lt(const Mono& a, const Mono& b) const { return cmp(a, b) < 0; }

    unsigned wdeg(const Mono& m) const {
        unsigned d = 0;
        for (std::size_t i = 0; i < m.e.size(); ++i) d += weights[i] * m.e[i];
        return d;
    }

    bool same_structure(const PolyRingData& o) const;
};

RingPtr make_ring(FieldSpec field, std::vector<std::string> vars,
                  OrderKind order = OrderKind::GrevLex, std::size_t block_split = 0,
                  std::vector<unsigned> weights = {});

inline void check_same_ring(const RingPtr& a, const RingPtr& b) {
    if (a.get() == b.get()) return;
    if (!a || !b || !a->same_structure(*b)) throw RingMismatch{};
}

}  // namespace rk
