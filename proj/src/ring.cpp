#include "ring.hpp"

#include <algorithm>

namespace rk {

static std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

static std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    // deterministic Miller-Rabin for 64-bit
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Coeff FieldSpec::one() const {
    Coeff c;
    if (is_fp())
        c.u = 1 % characteristic;
    else
        c.q = 1;
    return c;
}

Coeff FieldSpec::from_int(long long v) const {
    Coeff c;
    if (is_fp()) {
        long long m = v % static_cast<long long>(characteristic);
        if (m < 0) m += static_cast<long long>(characteristic);
        c.u = static_cast<std::uint64_t>(m);
    } else {
        c.q = v;
    }
    return c;
}

Coeff FieldSpec::from_rat(long long num, long long den) const {
    if (den == 0) throw InvalidInput("zero denominator");
    if (is_fp()) return mul(from_int(num), inv(from_int(den)));
    Coeff c;
    c.q = Rat(num, den);
    return c;
}

bool FieldSpec::is_zero(const Coeff& a) const { return is_fp() ? a.u == 0 : a.q == 0; }

bool FieldSpec::eq(const Coeff& a, const Coeff& b) const { return is_fp() ? a.u == b.u : a.q == b.q; }

Coeff FieldSpec::add(const Coeff& a, const Coeff& b) const {
    Coeff c;
    if (is_fp()) {
        c.u = a.u + b.u;
        if (c.u >= characteristic) c.u -= characteristic;
    } else {
        c.q = a.q + b.q;
    }
    return c;
}

Coeff FieldSpec::sub(const Coeff& a, const Coeff& b) const {
    Coeff c;
    if (is_fp()) {
        c.u = a.u + characteristic - b.u;
        if (c.u >= characteristic) c.u -= characteristic;
    } else {
        c.q = a.q - b.q;
    }
    return c;
}

Coeff FieldSpec::mul(const Coeff& a, const Coeff& b) const {
    Coeff c;
    if (is_fp())
        c.u = mulmod(a.u, b.u, characteristic);
    else
        c.q = a.q * b.q;
    return c;
}

Coeff FieldSpec::neg(const Coeff& a) const {
    Coeff c;
    if (is_fp())
        c.u = a.u == 0 ? 0 : characteristic - a.u;
    else
        c.q = -a.q;
    return c;
}

Coeff FieldSpec::inv(const Coeff& a) const {
    if (is_zero(a)) throw InvalidInput("inverse of zero");
    Coeff c;
    if (is_fp())
        c.u = powmod(a.u, characteristic - 2, characteristic);
    else
        c.q = 1 / a.q;
    return c;
}

Mono mono_mul(const Mono& a, const Mono& b) {
    Mono r = a;
    for (std::size_t i = 0; i < r.e.size(); ++i) {
        unsigned s = static_cast<unsigned>(r.e[i]) + b.e[i];
        if (s > 0xFFFFu) throw InvalidInput("exponent overflow (> 2^16)");
        r.e[i] = static_cast<std::uint16_t>(s);
    }
    return r;
}

bool mono_divides(const Mono& a, const Mono& b) {
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

Mono mono_div(const Mono& a, const Mono& b) {
    Mono r = a;
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = static_cast<std::uint16_t>(r.e[i] - b.e[i]);
    return r;
}

Mono mono_lcm(const Mono& a, const Mono& b) {
    Mono r = a;
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
}

bool mono_coprime(const Mono& a, const Mono& b) {
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] && b.e[i]) return false;
    return true;
}

int PolyRingData::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return static_cast<int>(i);
    return -1;
}

static int cmp_grevlex_range(const Mono& a, const Mono& b, std::size_t lo, std::size_t hi) {
    unsigned da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) da += a.e[i], db += b.e[i];
    if (da != db) return da < db ? -1 : 1;
    // grevlex tie-break: last variable with differing exponent; smaller exp wins
    for (std::size_t i = hi; i-- > lo;) {
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
    }
    return 0;
}

static int cmp_lex_range(const Mono& a, const Mono& b, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    return 0;
}

int PolyRingData::cmp(const Mono& a, const Mono& b) const {
    switch (order) {
        case OrderKind::GrevLex:
            return cmp_grevlex_range(a, b, 0, nvars());
        case OrderKind::Lex:
            return cmp_lex_range(a, b, 0, nvars());
        case OrderKind::Block: {
            int c = cmp_grevlex_range(a, b, 0, block_split);
            if (c) return c;
            return cmp_grevlex_range(a, b, block_split, nvars());
        }
    }
    return 0;
}

bool PolyRingData::same_structure(const PolyRingData& o) const {
    return field == o.field && vars == o.vars && order == o.order &&
           (order != OrderKind::Block || block_split == o.block_split);
}

RingPtr make_ring(FieldSpec field, std::vector<std::string> vars, OrderKind order,
                  std::size_t block_split, std::vector<unsigned> weights) {
    if (field.characteristic != 0 && !is_prime_u64(field.characteristic))
        throw InvalidInput("characteristic must be 0 or a prime");
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j]) throw InvalidInput("duplicate variable name: " + vars[i]);
    if (order == OrderKind::Block && block_split > vars.size())
        throw InvalidInput("block split out of range");
    if (weights.empty()) weights.assign(vars.size(), 1);
    if (weights.size() != vars.size()) throw InvalidInput("weight count mismatch");
    for (unsigned w : weights)
        if (w == 0) throw InvalidInput("weights must be positive");
    auto r = std::make_shared<PolyRingData>();
    r->field = field;
    r->vars = std::move(vars);
    r->order = order;
    r->block_split = block_split;
    r->weights = std::move(weights);
    return r;
}

}  // namespace rk
