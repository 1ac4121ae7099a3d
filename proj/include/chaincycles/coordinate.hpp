#pragma once

// The position algebra on a cycle.
//
// A point on cycle i is written <xi>_i: the point xi * l(v_i,w_i) units along
// the positive path starting at w_i. So <0>_i = w_i and <-1>_i = v_i. The
// library restricts xi to sums of generic symbols plus a rational shift; that
// is exactly the closure of the three input categories (integer class,
// rational point, generic point) under the additions performed by the Abel
// map. Two coordinates denote the same point iff their difference lies in
// rho_i * Z where rho_i = l_i / l(v_i,w_i); reduction below picks a canonical
// representative of that class.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "chaincycles/rational.hpp"
#include "chaincycles/symbols.hpp"

namespace chaincycles {

// Raised for inputs that fall outside the supported symbolic categories,
// e.g. a rational point on an irrational-ratio cycle.
struct unsupported_error : std::runtime_error {
    std::string code;
    unsupported_error(std::string c, const std::string& what)
        : std::runtime_error(what), code(std::move(c)) {}
};

// Equality semantics on one cycle. `torsion` is the m of Definition 1
// (0 means integer classes are compared exactly). `rho` is present only when
// the cycle has concrete geometry with a rational circumference/arc ratio;
// then torsion == numerator(rho) and rational points can be reduced.
struct ClassContext {
    long long torsion = 0;
    std::optional<Rational> rho;
};

struct Coordinate {
    std::map<int, long long> syms; // symbol id -> nonzero coefficient
    Rational shift;

    static Coordinate integer_class(long long n) {
        Coordinate c;
        c.shift = Rational(n);
        return c;
    }
    static Coordinate rational_point(const Rational& xi) {
        Coordinate c;
        c.shift = xi;
        return c;
    }
    static Coordinate generic(int symbol) {
        Coordinate c;
        c.syms[symbol] = 1;
        return c;
    }

    bool is_symbol_free() const { return syms.empty(); }

    enum class Kind { IntegerClass, RationalPoint, Generic, GenericSum };
    Kind kind() const {
        if (syms.empty())
            return shift.is_integer() ? Kind::IntegerClass : Kind::RationalPoint;
        if (syms.size() == 1 && syms.begin()->second == 1 && shift.is_zero())
            return Kind::Generic;
        return Kind::GenericSum;
    }

    Coordinate& operator+=(const Coordinate& o) {
        for (const auto& [s, k] : o.syms) {
            long long v = (syms[s] += k);
            if (v == 0) syms.erase(s);
        }
        shift = shift + o.shift;
        return *this;
    }
    friend Coordinate operator+(Coordinate a, const Coordinate& b) { return a += b; }
    Coordinate operator-() const {
        Coordinate c;
        for (const auto& [s, k] : syms) c.syms[s] = -k;
        c.shift = -shift;
        return c;
    }
    friend Coordinate operator-(const Coordinate& a, const Coordinate& b) { return a + (-b); }
    Coordinate scaled(long long k) const {
        Coordinate c;
        if (k != 0)
            for (const auto& [s, v] : syms) c.syms[s] = detail::narrow128((__int128)v * k);
        c.shift = shift * Rational(k);
        return c;
    }

    friend bool operator==(const Coordinate& a, const Coordinate& b) {
        return a.shift == b.shift && a.syms == b.syms;
    }
    friend bool operator!=(const Coordinate& a, const Coordinate& b) { return !(a == b); }
    friend bool operator<(const Coordinate& a, const Coordinate& b) {
        if (a.syms != b.syms) return a.syms < b.syms;
        return a.shift < b.shift;
    }

    std::string str() const {
        std::string out;
        for (const auto& [s, k] : syms) {
            if (!out.empty()) out += "+";
            if (k != 1) out += std::to_string(k) + "*";
            out += symbols::name(s);
        }
        if (out.empty()) return shift.str();
        if (!shift.is_zero()) out += (shift.num > 0 ? "+" : "") + shift.str();
        return out;
    }
};

namespace detail {

inline long long mod_inverse(long long a, long long m) {
    long long t = 0, newt = 1, r = m, newr = mod_ll(a, m);
    while (newr != 0) {
        long long q = r / newr;
        long long tmp = t - q * newt;
        t = newt; newt = tmp;
        tmp = r - q * newr;
        r = newr; newr = tmp;
    }
    if (r != 1) throw std::logic_error("mod_inverse: arguments not coprime");
    return mod_ll(t, m);
}

// Converts a sym-free value xi to its integer class when xi lies in
// Z + rho*Z (rho = p/q in lowest terms): xi = c/q maps to c * q^{-1} mod p.
inline std::optional<long long> class_of_rational(const Rational& xi, const Rational& rho) {
    if (rho.num <= 0) throw std::logic_error("rho must be positive");
    long long p = rho.num, q = rho.den;
    if (q % xi.den != 0) return std::nullopt;
    long long c = detail::narrow128((__int128)xi.num * (q / xi.den));
    if (p == 1) return 0; // cannot happen for valid geometry (rho >= 2), kept for safety
    long long qinv = mod_inverse(q, p);
    return mod_ll(detail::narrow128((__int128)mod_ll(c, p) * qinv), p);
}

} // namespace detail

// Canonical representative of the point denoted by `c` on a cycle with
// semantics `ctx`. Integer classes normalize to [0, torsion); rational points
// in Z + rho*Z become integer classes; other rational points normalize into
// [0, rho). Symbol-carrying coordinates keep their symbols and normalize the
// shift the same way (without the class conversion).
inline Coordinate reduce(Coordinate c, const ClassContext& ctx) {
    if (c.syms.empty()) {
        if (!c.shift.is_integer()) {
            if (!ctx.rho)
                throw unsupported_error("unsupported-coordinate",
                                        "rational point on a cycle without rational ratio");
            if (auto cls = detail::class_of_rational(c.shift, *ctx.rho)) {
                c.shift = Rational(*cls);
            } else {
                c.shift = mod_into(c.shift, *ctx.rho);
                return c;
            }
        }
        if (ctx.torsion > 0) c.shift = Rational(mod_ll(c.shift.num, ctx.torsion));
        return c;
    }
    if (ctx.rho) {
        c.shift = mod_into(c.shift, *ctx.rho);
        // prefer the integer representative of the shift class when one exists
        if (!c.shift.is_integer()) {
            if (auto cls = detail::class_of_rational(c.shift, *ctx.rho))
                c.shift = Rational(mod_ll(*cls, ctx.torsion));
        } else if (ctx.torsion > 0) {
            c.shift = Rational(mod_ll(c.shift.num, ctx.torsion));
        }
        return c;
    }
    if (!c.shift.is_integer())
        throw unsupported_error("unsupported-coordinate",
                                "non-integral symbolic shift without rational ratio");
    if (ctx.torsion > 0) c.shift = Rational(mod_ll(c.shift.num, ctx.torsion));
    return c;
}

inline bool coordinates_equal(const Coordinate& a, const Coordinate& b, const ClassContext& ctx) {
    return reduce(a, ctx) == reduce(b, ctx);
}

// The normalized integer class of `c`, if `c` denotes one.
inline std::optional<long long> integer_class_of(const Coordinate& c, const ClassContext& ctx) {
    Coordinate r = reduce(c, ctx);
    if (!r.syms.empty() || !r.shift.is_integer()) return std::nullopt;
    return r.shift.num;
}

// True iff `c` denotes the point <offset> on the cycle.
inline bool matches_class(const Coordinate& c, long long offset, const ClassContext& ctx) {
    auto cls = integer_class_of(c, ctx);
    if (!cls) return false;
    if (ctx.torsion > 0) return mod_ll(offset - *cls, ctx.torsion) == 0;
    return *cls == offset;
}

} // namespace chaincycles
