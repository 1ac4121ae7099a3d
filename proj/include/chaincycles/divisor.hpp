#pragma once

// Divisors: finite formal integer combinations of points of the chain.
// Points either sit on a cycle (as a Coordinate) or on a bridge (as a
// rational offset from the w_i endpoint). Bridge chips move freely across
// their bridge, so normalization replaces them by chips at w_i.

#include <map>
#include <utility>
#include <vector>

#include "chaincycles/chain.hpp"
#include "chaincycles/coordinate.hpp"

namespace chaincycles {

struct Divisor {
    // (cycle index 1..g, position) -> multiplicity
    std::map<std::pair<int, Coordinate>, long long> cycle_points;
    // (bridge index 1..g-1, offset from w_i) -> multiplicity
    std::map<std::pair<int, Rational>, long long> bridge_points;

    long long degree() const {
        long long d = 0;
        for (const auto& [k, m] : cycle_points) d += m;
        for (const auto& [k, m] : bridge_points) d += m;
        return d;
    }

    bool is_effective() const {
        for (const auto& [k, m] : cycle_points)
            if (m < 0) return false;
        for (const auto& [k, m] : bridge_points)
            if (m < 0) return false;
        return true;
    }

    bool empty() const { return cycle_points.empty() && bridge_points.empty(); }

    Divisor& add(int cycle, const Coordinate& pos, long long mult = 1) {
        if (mult == 0) return *this;
        auto key = std::make_pair(cycle, pos);
        long long v = (cycle_points[key] += mult);
        if (v == 0) cycle_points.erase(key);
        return *this;
    }
    Divisor& add_bridge(int bridge, const Rational& offset, long long mult = 1) {
        if (mult == 0) return *this;
        auto key = std::make_pair(bridge, offset);
        long long v = (bridge_points[key] += mult);
        if (v == 0) bridge_points.erase(key);
        return *this;
    }

    friend Divisor operator+(Divisor a, const Divisor& b) {
        for (const auto& [k, m] : b.cycle_points) a.add(k.first, k.second, m);
        for (const auto& [k, m] : b.bridge_points) a.add_bridge(k.first, k.second, m);
        return a;
    }
    friend Divisor operator-(Divisor a, const Divisor& b) {
        for (const auto& [k, m] : b.cycle_points) a.add(k.first, k.second, -m);
        for (const auto& [k, m] : b.bridge_points) a.add_bridge(k.first, k.second, -m);
        return a;
    }

    friend bool operator==(const Divisor& a, const Divisor& b) {
        return a.cycle_points == b.cycle_points && a.bridge_points == b.bridge_points;
    }
};

// Moves every bridge chip to the adjacent w_i, reduces every position to its
// canonical representative and merges coinciding points. Idempotent and
// degree-preserving; the result is equivalent to the input.
inline Divisor normalize_divisor(const ChainContext& ctx, const Divisor& d) {
    Divisor out;
    for (const auto& [key, mult] : d.cycle_points) {
        auto [cycle, pos] = key;
        if (cycle < 1 || cycle > ctx.genus)
            throw std::invalid_argument("divisor references cycle outside the chain");
        out.add(cycle, reduce(pos, ctx.at(cycle)), mult);
    }
    for (const auto& [key, mult] : d.bridge_points) {
        int bridge = key.first;
        if (bridge < 1 || bridge >= ctx.genus)
            throw std::invalid_argument("divisor references bridge outside the chain");
        out.add(bridge, reduce(Coordinate::integer_class(0), ctx.at(bridge)), mult);
    }
    return out;
}

} // namespace chaincycles
