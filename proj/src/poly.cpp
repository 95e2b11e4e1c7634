#include "poly.hpp"

#include <algorithm>
#include <cctype>

#include <boost/multiprecision/cpp_int.hpp>

namespace rk {

using boost::multiprecision::cpp_int;

static void normalize_terms(const PolyRingData& R, std::vector<Term>& t) {
    std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return R.cmp(a.m, b.m) > 0; });
    std::vector<Term> out;
    out.reserve(t.size());
    for (auto& tm : t) {
        if (!out.empty() && out.back().m == tm.m)
            out.back().c = R.field.add(out.back().c, tm.c);
        else
            out.push_back(std::move(tm));
        if (!out.empty() && R.field.is_zero(out.back().c)) out.pop_back();
    }
    t = std::move(out);
}

Poly::Poly(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), t_(std::move(terms)) {
    normalize_terms(*ring_, t_);
}

Poly Poly::constant(const RingPtr& ring, const Coeff& c) {
    Poly p(ring);
    if (!ring->field.is_zero(c)) p.t_.push_back({c, Mono{std::vector<std::uint16_t>(ring->nvars(), 0)}});
    return p;
}

Poly Poly::from_int(const RingPtr& ring, long long v) { return constant(ring, ring->field.from_int(v)); }

Poly Poly::variable(const RingPtr& ring, std::size_t idx, unsigned exp) {
    Mono m{std::vector<std::uint16_t>(ring->nvars(), 0)};
    if (exp > 0xFFFFu) throw InvalidInput("exponent overflow (> 2^16)");
    m.e[idx] = static_cast<std::uint16_t>(exp);
    if (exp == 0) return constant(ring, ring->field.one());
    Poly p(ring);
    p.t_.push_back({ring->field.one(), std::move(m)});
    return p;
}

Poly Poly::monomial(const RingPtr& ring, const Coeff& c, Mono m) {
    Poly p(ring);
    if (!ring->field.is_zero(c)) p.t_.push_back({c, std::move(m)});
    return p;
}

unsigned Poly::degree() const {
    unsigned d = 0;
    for (auto& tm : t_) d = std::max(d, ring_->wdeg(tm.m));
    return d;
}

unsigned Poly::degree_in(const std::vector<bool>& mask) const {
    unsigned d = 0;
    for (auto& tm : t_) {
        unsigned s = 0;
        for (std::size_t i = 0; i < tm.m.e.size(); ++i)
            if (mask[i]) s += ring_->weights[i] * tm.m.e[i];
        d = std::max(d, s);
    }
    return d;
}

bool Poly::is_homogeneous() const {
    if (t_.empty()) return true;
    unsigned d = ring_->wdeg(t_[0].m);
    for (auto& tm : t_)
        if (ring_->wdeg(tm.m) != d) return false;
    return true;
}

bool Poly::is_homogeneous_in(const std::vector<bool>& mask) const {
    if (t_.empty()) return true;
    auto dm = [&](const Mono& m) {
        unsigned s = 0;
        for (std::size_t i = 0; i < m.e.size(); ++i)
            if (mask[i]) s += ring_->weights[i] * m.e[i];
        return s;
    };
    unsigned d = dm(t_[0].m);
    for (auto& tm : t_)
        if (dm(tm.m) != d) return false;
    return true;
}

bool Poly::depends_on(std::size_t var) const {
    for (auto& tm : t_)
        if (tm.m.e[var]) return true;
    return false;
}

Poly Poly::operator+(const Poly& o) const {
    check_same_ring(ring_, o.ring_);
    const auto& R = *ring_;
    Poly r(ring_);
    r.t_.reserve(t_.size() + o.t_.size());
    std::size_t i = 0, j = 0;
    while (i < t_.size() && j < o.t_.size()) {
        int c = R.cmp(t_[i].m, o.t_[j].m);
        if (c > 0)
            r.t_.push_back(t_[i++]);
        else if (c < 0)
            r.t_.push_back(o.t_[j++]);
        else {
            Coeff s = R.field.add(t_[i].c, o.t_[j].c);
            if (!R.field.is_zero(s)) r.t_.push_back({s, t_[i].m});
            ++i, ++j;
        }
    }
    for (; i < t_.size(); ++i) r.t_.push_back(t_[i]);
    for (; j < o.t_.size(); ++j) r.t_.push_back(o.t_[j]);
    return r;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& tm : r.t_) tm.c = ring_->field.neg(tm.c);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::scaled(const Coeff& c) const {
    const auto& F = ring_->field;
    if (F.is_zero(c)) return Poly(ring_);
    Poly r = *this;
    for (auto& tm : r.t_) tm.c = F.mul(tm.c, c);
    return r;
}

Poly Poly::times_term(const Coeff& c, const Mono& m) const {
    const auto& F = ring_->field;
    if (F.is_zero(c)) return Poly(ring_);
    Poly r(ring_);
    r.t_.reserve(t_.size());
    for (auto& tm : t_) r.t_.push_back({F.mul(tm.c, c), mono_mul(tm.m, m)});
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    check_same_ring(ring_, o.ring_);
    if (is_zero() || o.is_zero()) return Poly(ring_);
    PolyBuilder b(ring_);
    const auto& small = t_.size() <= o.t_.size() ? *this : o;
    const auto& big = t_.size() <= o.t_.size() ? o : *this;
    for (auto& tm : small.t_) b.add_scaled(big, tm.c, tm.m);
    return b.build();
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(ring_->field.inv(lc()));
}

Poly Poly::normalized() const {
    if (is_zero()) return *this;
    if (ring_->field.is_fp()) return monic();
    // over Q: clear denominators, divide by content, make lead positive
    cpp_int den_lcm = 1, num_gcd = 0;
    for (auto& tm : t_) {
        den_lcm = lcm(den_lcm, denominator(tm.c.q));
    }
    for (auto& tm : t_) {
        cpp_int n = numerator(tm.c.q) * (den_lcm / denominator(tm.c.q));
        num_gcd = gcd(num_gcd, n);
    }
    Rat scale(den_lcm, num_gcd);
    if (lc().q < 0) scale = -scale;
    Coeff s;
    s.q = scale;
    return scaled(s);
}

bool Poly::operator==(const Poly& o) const {
    check_same_ring(ring_, o.ring_);
    if (t_.size() != o.t_.size()) return false;
    for (std::size_t i = 0; i < t_.size(); ++i)
        if (!(t_[i].m == o.t_[i].m) || !ring_->field.eq(t_[i].c, o.t_[i].c)) return false;
    return true;
}

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
    check_same_ring(ring_, d.ring_);
    if (d.is_zero()) return std::nullopt;
    const auto& F = ring_->field;
    Poly r = *this;
    std::vector<Term> q;
    while (!r.is_zero()) {
        if (!mono_divides(d.lm(), r.lm())) return std::nullopt;
        Coeff c = F.div(r.lc(), d.lc());
        Mono m = mono_div(r.lm(), d.lm());
        q.push_back({c, m});
        r = r - d.times_term(c, m);
    }
    return Poly(ring_, std::move(q));
}

Poly Poly::map_to(const RingPtr& target, const std::vector<Poly>& images) const {
    if (images.size() != ring_->nvars()) throw InvalidInput("substitution image count mismatch");
    Poly acc(target);
    for (auto& tm : t_) {
        Poly prod = Poly::constant(target, tm.c);
        for (std::size_t i = 0; i < images.size(); ++i) {
            for (unsigned k = 0; k < tm.m.e[i]; ++k) prod = prod * images[i];
        }
        acc = acc + prod;
    }
    return acc;
}

void PolyBuilder::add_term(const Coeff& c, const Mono& m) { t_.push_back({c, m}); }

void PolyBuilder::add(const Poly& p) {
    for (auto& tm : p.terms()) t_.push_back(tm);
}

void PolyBuilder::add_scaled(const Poly& p, const Coeff& c, const Mono& m) {
    const auto& F = ring_->field;
    for (auto& tm : p.terms()) t_.push_back({F.mul(tm.c, c), mono_mul(tm.m, m)});
}

Poly PolyBuilder::build() {
    Poly p(ring_);
    p.t_ = std::move(t_);
    normalize_terms(*ring_, p.t_);
    t_.clear();
    return p;
}

// ---- printing ----

std::string coeff_str(const FieldSpec& f, const Coeff& c) {
    if (f.is_fp()) return std::to_string(c.u);
    std::string s = numerator(c.q).str();
    if (denominator(c.q) != 1) s += "/" + denominator(c.q).str();
    return s;
}

static std::string mono_str(const PolyRingData& R, const Mono& m) {
    std::string s;
    for (std::size_t i = 0; i < m.e.size(); ++i) {
        if (!m.e[i]) continue;
        if (!s.empty()) s += "*";
        s += R.vars[i];
        if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
    }
    return s;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    const auto& R = *ring_;
    const auto& F = R.field;
    std::string out;
    bool first = true;
    for (auto& tm : t_) {
        bool neg;
        Coeff mag = tm.c;
        if (F.is_fp()) {
            neg = tm.c.u > F.characteristic / 2;
            if (neg) mag.u = F.characteristic - tm.c.u;
        } else {
            neg = tm.c.q < 0;
            if (neg) mag.q = -tm.c.q;
        }
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string ms = mono_str(R, tm.m);
        bool mag_one = F.is_fp() ? mag.u == 1 : mag.q == 1;
        if (ms.empty())
            out += coeff_str(F, mag);
        else if (mag_one)
            out += ms;
        else
            out += coeff_str(F, mag) + "*" + ms;
    }
    return out;
}

// ---- parsing ----

namespace {

struct Parser {
    const RingPtr& ring;
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool peek(char c) {
        skip_ws();
        return i < s.size() && s[i] == c;
    }
    bool eat(char c) {
        if (peek(c)) {
            ++i;
            return true;
        }
        return false;
    }

    unsigned long long parse_nat() {
        skip_ws();
        std::size_t start = i;
        unsigned long long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + static_cast<unsigned long long>(s[i] - '0');
            if (v > (1ull << 62)) throw ParseError("integer literal too large", start);
            ++i;
        }
        if (i == start) throw ParseError("expected integer", i);
        return v;
    }

    Poly parse_expr() {
        Poly p = parse_term();
        while (true) {
            if (eat('+'))
                p = p + parse_term();
            else if (eat('-'))
                p = p - parse_term();
            else
                break;
        }
        return p;
    }

    Poly parse_term() {
        Poly p = parse_factor();
        while (true) {
            skip_ws();
            if (eat('*'))
                p = p * parse_factor();
            else if (peek('/'))
                throw ParseError("division is not allowed outside rational literals", i);
            else
                break;
        }
        return p;
    }

    Poly parse_factor() {
        skip_ws();
        if (eat('-')) return -parse_factor();
        Poly base = parse_base();
        skip_ws();
        if (eat('^')) {
            unsigned long long e = parse_nat();
            if (e > 0xFFFFu) throw ParseError("exponent overflow (> 2^16)", i);
            Poly r = Poly::from_int(ring, 1);
            for (unsigned long long k = 0; k < e; ++k) r = r * base;
            return r;
        }
        return base;
    }

    Poly parse_base() {
        skip_ws();
        if (i >= s.size()) throw ParseError("unexpected end of input", i);
        char c = s[i];
        if (c == '(') {
            ++i;
            Poly p = parse_expr();
            if (!eat(')')) throw ParseError("expected ')'", i);
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            unsigned long long n = parse_nat();
            skip_ws();
            if (i < s.size() && s[i] == '/') {
                ++i;
                unsigned long long d = parse_nat();
                if (d == 0) throw ParseError("zero denominator", i);
                return Poly::constant(ring, ring->field.from_rat(static_cast<long long>(n),
                                                                 static_cast<long long>(d)));
            }
            return Poly::from_int(ring, static_cast<long long>(n));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = i;
            while (i < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                ++i;
            std::string name = s.substr(start, i - start);
            int idx = ring->var_index(name);
            if (idx < 0) throw ParseError("unknown variable '" + name + "'", start);
            return Poly::variable(ring, static_cast<std::size_t>(idx));
        }
        throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
};

}  // namespace

Poly parse_poly(const RingPtr& ring, const std::string& text) {
    Parser p{ring, text};
    Poly r = p.parse_expr();
    p.skip_ws();
    if (p.i != text.size()) throw ParseError("trailing input", p.i);
    return r;
}

}  // namespace rk
