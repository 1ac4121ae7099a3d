#pragma once

// Exact rational arithmetic for cycle lengths, arc positions and bridge
// offsets. All geometry in this library is either rational or symbolic, so a
// fraction of two 64-bit integers (with 128-bit intermediates) is all we need.

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace chaincycles {

namespace detail {

inline long long narrow128(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN)
        throw std::overflow_error("rational arithmetic overflow");
    return static_cast<long long>(v);
}

} // namespace detail

struct Rational {
    long long num = 0;
    long long den = 1; // always > 0, gcd(num, den) == 1

    Rational() = default;
    Rational(long long n) : num(n), den(1) {}
    Rational(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    bool is_integer() const { return den == 1; }
    bool is_zero() const { return num == 0; }

    long long floor() const {
        if (num >= 0) return num / den;
        return -((-num + den - 1) / den);
    }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        __int128 n = (__int128)a.num * b.den + (__int128)b.num * a.den;
        __int128 d = (__int128)a.den * b.den;
        return make128(n, d);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        __int128 n = (__int128)a.num * b.den - (__int128)b.num * a.den;
        __int128 d = (__int128)a.den * b.den;
        return make128(n, d);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return make128((__int128)a.num * b.num, (__int128)a.den * b.den);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num == 0) throw std::invalid_argument("rational division by zero");
        return make128((__int128)a.num * b.den, (__int128)a.den * b.num);
    }
    Rational operator-() const { Rational r; r.num = -num; r.den = den; return r; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return (__int128)a.num * b.den < (__int128)b.num * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

private:
    static Rational make128(__int128 n, __int128 d) {
        if (d == 0) throw std::invalid_argument("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 an = n < 0 ? -n : n;
        __int128 g = gcd128(an, d);
        if (g > 1) { n /= g; d /= g; }
        Rational r;
        r.num = detail::narrow128(n);
        r.den = detail::narrow128(d);
        if (r.num == 0) r.den = 1;
        return r;
    }
    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        return a;
    }
};

// Largest integer k with k*b <= a (b > 0).
inline long long floor_div(const Rational& a, const Rational& b) {
    if (b.num <= 0) throw std::invalid_argument("floor_div needs positive divisor");
    return (a / b).floor();
}

// Canonical representative of a modulo m*Z in [0, m), m > 0.
inline Rational mod_into(const Rational& a, const Rational& m) {
    long long k = floor_div(a, m);
    return a - Rational(k) * m;
}

inline long long mod_ll(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

// Parses "p/q" or "n". Returns nullopt on malformed text.
inline std::optional<Rational> parse_rational(std::string_view s) {
    auto parse_ll = [](std::string_view t, long long& out) -> bool {
        if (t.empty()) return false;
        std::size_t i = 0;
        bool neg = false;
        if (t[0] == '-' || t[0] == '+') { neg = t[0] == '-'; i = 1; }
        if (i == t.size()) return false;
        __int128 v = 0;
        for (; i < t.size(); ++i) {
            if (t[i] < '0' || t[i] > '9') return false;
            v = v * 10 + (t[i] - '0');
            if (v > INT64_MAX) return false;
        }
        out = neg ? -static_cast<long long>(v) : static_cast<long long>(v);
        return true;
    };
    auto slash = s.find('/');
    long long n = 0, d = 1;
    if (slash == std::string_view::npos) {
        if (!parse_ll(s, n)) return std::nullopt;
    } else {
        if (!parse_ll(s.substr(0, slash), n)) return std::nullopt;
        if (!parse_ll(s.substr(slash + 1), d)) return std::nullopt;
        if (d == 0) return std::nullopt;
    }
    return Rational(n, d);
}

} // namespace chaincycles
