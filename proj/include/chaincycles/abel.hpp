#pragma once

// Tropical Abel map and representing divisors.
//
// Every divisor D of degree d is equivalent to a unique divisor of the form
// sum_i <xi_i>_i + (d-g) w_g. Writing the Abel integral of each cycle in
// units of l(v_j,w_j) reduces it to pure counting: a point <xi>_j on C_j
// contributes xi, every point strictly left of C_j contributes -1, and the
// normal form picks up a +(j-1) shift. All computations stay in the symbolic
// position algebra, never touching real integrals.

#include <optional>
#include <string>
#include <vector>

#include "chaincycles/chain.hpp"
#include "chaincycles/coordinate.hpp"
#include "chaincycles/divisor.hpp"

namespace chaincycles {

// I(d): per-cycle integral of D against omega_j from deg(D) * w_g, in units
// of l(v_j,w_j), reduced modulo rho_j * Z.
inline std::vector<Coordinate> abel_coordinates(const ChainContext& ctx, const Divisor& d) {
    Divisor nd = normalize_divisor(ctx, d);
    std::vector<Coordinate> on_cycle(static_cast<std::size_t>(ctx.genus));
    std::vector<long long> weight(static_cast<std::size_t>(ctx.genus), 0);
    for (const auto& [key, mult] : nd.cycle_points) {
        auto& [cycle, pos] = key;
        on_cycle[cycle - 1] += pos.scaled(mult);
        weight[cycle - 1] += mult;
    }
    std::vector<Coordinate> out(static_cast<std::size_t>(ctx.genus));
    long long left = 0;
    for (int j = 1; j <= ctx.genus; ++j) {
        Coordinate c = on_cycle[j - 1];
        c += Coordinate::integer_class(-left);
        out[j - 1] = reduce(c, ctx.at(j));
        left += weight[j - 1];
    }
    return out;
}

struct RepresentingDivisor {
    int genus = 1;
    std::vector<Coordinate> xi; // size g, reduced coordinates
    long long tail = 0;         // coefficient of w_g, = deg - g
    long long degree = 0;

    Divisor to_divisor() const {
        Divisor d;
        for (int i = 1; i <= genus; ++i) d.add(i, xi[static_cast<std::size_t>(i) - 1]);
        if (tail != 0) d.add(genus, Coordinate::integer_class(0), tail);
        return d;
    }

    friend bool operator==(const RepresentingDivisor& a, const RepresentingDivisor& b) {
        return a.genus == b.genus && a.degree == b.degree && a.xi == b.xi;
    }
};

inline RepresentingDivisor representing_divisor(const ChainContext& ctx, const Divisor& d) {
    RepresentingDivisor rep;
    rep.genus = ctx.genus;
    rep.degree = d.degree();
    rep.tail = rep.degree - ctx.genus;
    rep.xi = abel_coordinates(ctx, d);
    for (int j = 1; j <= ctx.genus; ++j) {
        auto& c = rep.xi[static_cast<std::size_t>(j) - 1];
        c += Coordinate::integer_class(j - 1);
        c = reduce(c, ctx.at(j));
    }
    return rep;
}

struct EquivalenceResult {
    bool equivalent = false;
    std::string code; // "degree-mismatch" when degrees differ
    explicit operator bool() const { return equivalent; }
};

inline EquivalenceResult is_equivalent(const ChainContext& ctx, const Divisor& d1, const Divisor& d2) {
    if (d1.degree() != d2.degree()) return {false, "degree-mismatch"};
    bool eq = representing_divisor(ctx, d1) == representing_divisor(ctx, d2);
    return {eq, ""};
}

struct DistinctCycleReduction {
    Divisor divisor;
    std::vector<int> occupied; // cycles carrying the single points, ascending
};

// Rewrites an effective divisor of degree <= g as an equivalent effective
// divisor with at most one point per cycle and no bridge points. On a single
// cycle a degree-k divisor is equivalent to (k-1) w_i + <sum of coordinates>_i
// and to (k-1) v_i + <sum + (k-1)>_i; excess chips at w_i / v_i slide across
// the bridges. One rightward sweep collects the excess on C_g, one leftward
// sweep spreads it over the unoccupied cycles.
inline DistinctCycleReduction reduce_to_distinct_cycles(const ChainContext& ctx, const Divisor& e) {
    if (!e.is_effective())
        throw std::invalid_argument("reduce_to_distinct_cycles needs an effective divisor");
    long long deg = e.degree();
    if (deg > ctx.genus)
        throw unsupported_error("degree-exceeds-genus",
                                "distinct-cycle reduction is only guaranteed for degree <= g");
    Divisor nd = normalize_divisor(ctx, e);

    int g = ctx.genus;
    std::vector<std::vector<std::pair<Coordinate, long long>>> pts(static_cast<std::size_t>(g) + 1);
    for (const auto& [key, mult] : nd.cycle_points)
        pts[static_cast<std::size_t>(key.first)].push_back({key.second, mult});

    auto weight_of = [](const std::vector<std::pair<Coordinate, long long>>& v) {
        long long w = 0;
        for (const auto& [c, m] : v) w += m;
        return w;
    };
    auto sum_of = [](const std::vector<std::pair<Coordinate, long long>>& v) {
        Coordinate s;
        for (const auto& [c, m] : v) s += c.scaled(m);
        return s;
    };

    // rightward: leave one point per visited cycle, push excess to C_{i+1} at v
    for (int i = 1; i < g; ++i) {
        auto& cur = pts[static_cast<std::size_t>(i)];
        long long k = weight_of(cur);
        if (k <= 1) continue;
        Coordinate p = reduce(sum_of(cur), ctx.at(i));
        cur.clear();
        cur.push_back({p, 1});
        pts[static_cast<std::size_t>(i) + 1].push_back({Coordinate::integer_class(-1), k - 1});
    }
    // leftward from C_g: excess chips leave at v_i and arrive at w_{i-1}
    for (int i = g; i >= 1; --i) {
        auto& cur = pts[static_cast<std::size_t>(i)];
        long long k = weight_of(cur);
        if (k <= 1) break;
        if (i == 1)
            throw std::logic_error("distinct-cycle reduction ran out of cycles");
        Coordinate p = reduce(sum_of(cur) + Coordinate::integer_class(k - 1), ctx.at(i));
        cur.clear();
        cur.push_back({p, 1});
        pts[static_cast<std::size_t>(i) - 1].push_back({Coordinate::integer_class(0), k - 1});
    }

    DistinctCycleReduction out;
    for (int i = 1; i <= g; ++i) {
        auto& cur = pts[static_cast<std::size_t>(i)];
        if (cur.empty()) continue;
        if (cur.size() != 1 || cur[0].second != 1)
            throw std::logic_error("distinct-cycle reduction left a cycle with several points");
        out.divisor.add(i, reduce(cur[0].first, ctx.at(i)));
        out.occupied.push_back(i);
    }
    return out;
}

} // namespace chaincycles
