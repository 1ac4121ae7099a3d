#pragma once

// Finite-graph chip-firing oracle.
//
// A rational-length chain subdivides (at the least common denominator of all
// lengths and point offsets) into a finite multigraph with unit edges, and
// Baker-Norine rank on that graph equals the metric-graph rank for divisors
// supported on the subdivision points. Everything here is independent of the
// tableau machinery; it exists to cross-validate it.

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <vector>

#include "chaincycles/chain.hpp"
#include "chaincycles/divisor.hpp"

namespace chaincycles {

struct FiniteGraphModel {
    int n = 0;
    std::vector<std::vector<int>> adj; // parallel edges listed repeatedly
    int q = 0;                         // reduction base point (the w_g vertex)
    Rational step{1};
    ChainOfCycles chain;
    std::vector<int> cycle_base;  // first vertex index of each cycle's ring
    std::vector<int> cycle_size;
    std::vector<int> bridge_base; // first internal vertex of each bridge (or -1)
    std::vector<int> bridge_size; // number of internal vertices

    int graph_genus() const {
        long long edges = 0;
        for (const auto& a : adj) edges += static_cast<long long>(a.size());
        return static_cast<int>(edges / 2 - n + 1);
    }

    int vertex_of_cycle_offset(int cycle, const Rational& arc_offset) const {
        const auto& c = chain.cycles[static_cast<std::size_t>(cycle) - 1];
        Rational off = mod_into(arc_offset, c.circumference);
        Rational idx = off / step;
        if (!idx.is_integer())
            throw unsupported_error("oracle-unavailable",
                                    "divisor point does not lie on the subdivision");
        return cycle_base[static_cast<std::size_t>(cycle) - 1] + static_cast<int>(idx.num);
    }

    int vertex_of_point(int cycle, const Coordinate& pos) const {
        if (!pos.is_symbol_free())
            throw unsupported_error("oracle-unavailable",
                                    "generic positions have no finite-graph image");
        const auto& c = chain.cycles[static_cast<std::size_t>(cycle) - 1];
        if (!c.arc)
            throw unsupported_error("oracle-unavailable",
                                    "irrational-ratio cycles have no finite-graph image");
        return vertex_of_cycle_offset(cycle, pos.shift * *c.arc);
    }

    int vertex_of_bridge_offset(int bridge, const Rational& offset) const {
        const Rational& len = chain.bridges[static_cast<std::size_t>(bridge) - 1];
        if (offset.num < 0 || offset > len)
            throw std::invalid_argument("bridge offset outside the bridge");
        Rational idx = offset / step;
        if (!idx.is_integer())
            throw unsupported_error("oracle-unavailable",
                                    "divisor point does not lie on the subdivision");
        long long k = idx.num;
        if (k == 0) return vertex_of_cycle_offset(bridge, Rational(0)); // w_i
        if (offset == len) { // v_{i+1}
            const auto& c = chain.cycles[static_cast<std::size_t>(bridge)];
            return vertex_of_cycle_offset(bridge + 1, c.circumference - *c.arc);
        }
        return bridge_base[static_cast<std::size_t>(bridge) - 1] + static_cast<int>(k - 1);
    }

    std::vector<long long> to_chips(const Divisor& d) const {
        std::vector<long long> chips(static_cast<std::size_t>(n), 0);
        for (const auto& [key, mult] : d.cycle_points)
            chips[static_cast<std::size_t>(vertex_of_point(key.first, key.second))] += mult;
        for (const auto& [key, mult] : d.bridge_points)
            chips[static_cast<std::size_t>(vertex_of_bridge_offset(key.first, key.second))] += mult;
        return chips;
    }

    std::vector<long long> canonical_divisor() const {
        std::vector<long long> k(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            k[static_cast<std::size_t>(v)] = static_cast<long long>(adj[static_cast<std::size_t>(v)].size()) - 2;
        return k;
    }
};

// Builds the subdivision model. Every cycle arc, bridge and every point of
// the given divisors must be a multiple of the step; the step is chosen as
// the least common denominator of all of them.
inline FiniteGraphModel build_finite_model(const ChainOfCycles& chain,
                                           const std::vector<Divisor>& divisors = {}) {
    chain.validate();
    FiniteGraphModel m;
    m.chain = chain;
    int g = chain.genus();

    long long lcd = 1;
    auto feed = [&lcd](const Rational& r) {
        lcd = std::lcm(lcd, r.den);
        if (lcd <= 0) throw std::overflow_error("subdivision denominator overflow");
    };
    for (const auto& c : chain.cycles) {
        if (!c.arc)
            throw unsupported_error("oracle-unavailable",
                                    "irrational-ratio cycles have no finite-graph image");
        feed(c.circumference);
        feed(*c.arc);
    }
    for (const auto& b : chain.bridges) feed(b);
    for (const auto& d : divisors) {
        for (const auto& [key, mult] : d.cycle_points) {
            const auto& c = chain.cycles[static_cast<std::size_t>(key.first) - 1];
            if (!key.second.is_symbol_free())
                throw unsupported_error("oracle-unavailable",
                                        "generic positions have no finite-graph image");
            feed(key.second.shift * *c.arc);
        }
        for (const auto& [key, mult] : d.bridge_points) feed(key.second);
    }
    // keep at least two vertices per cycle so rings need no self-loops
    while (true) {
        bool ok = true;
        for (const auto& c : chain.cycles)
            if (c.circumference * Rational(lcd) < Rational(2)) ok = false;
        if (ok) break;
        lcd *= 2;
    }
    m.step = Rational(1, lcd);

    m.cycle_base.resize(static_cast<std::size_t>(g));
    m.cycle_size.resize(static_cast<std::size_t>(g));
    int next = 0;
    for (int i = 0; i < g; ++i) {
        Rational count = chain.cycles[static_cast<std::size_t>(i)].circumference / m.step;
        m.cycle_base[static_cast<std::size_t>(i)] = next;
        m.cycle_size[static_cast<std::size_t>(i)] = static_cast<int>(count.num);
        next += static_cast<int>(count.num);
    }
    m.bridge_base.assign(static_cast<std::size_t>(g > 0 ? g - 1 : 0), -1);
    m.bridge_size.assign(static_cast<std::size_t>(g > 0 ? g - 1 : 0), 0);
    for (int i = 0; i < g - 1; ++i) {
        Rational count = chain.bridges[static_cast<std::size_t>(i)] / m.step;
        int internal = static_cast<int>(count.num) - 1;
        m.bridge_base[static_cast<std::size_t>(i)] = internal > 0 ? next : -1;
        m.bridge_size[static_cast<std::size_t>(i)] = internal;
        next += internal;
    }
    m.n = next;
    m.adj.assign(static_cast<std::size_t>(m.n), {});
    auto link = [&m](int a, int b) {
        m.adj[static_cast<std::size_t>(a)].push_back(b);
        m.adj[static_cast<std::size_t>(b)].push_back(a);
    };
    for (int i = 0; i < g; ++i) {
        int base = m.cycle_base[static_cast<std::size_t>(i)];
        int size = m.cycle_size[static_cast<std::size_t>(i)];
        for (int k = 0; k < size; ++k) link(base + k, base + (k + 1) % size);
    }
    for (int i = 1; i <= g - 1; ++i) {
        int w = m.vertex_of_cycle_offset(i, Rational(0));
        // v_{i+1} sits at circumference - arc along the positive path from w_{i+1}
        const auto& cnext = chain.cycles[static_cast<std::size_t>(i)];
        int v = m.vertex_of_cycle_offset(i + 1, cnext.circumference - *cnext.arc);
        int internal = m.bridge_size[static_cast<std::size_t>(i) - 1];
        if (internal == 0) {
            link(w, v);
        } else {
            int base = m.bridge_base[static_cast<std::size_t>(i) - 1];
            link(w, base);
            for (int k = 0; k + 1 < internal; ++k) link(base + k, base + k + 1);
            link(base + internal - 1, v);
        }
    }
    m.q = m.vertex_of_cycle_offset(g, Rational(0)); // w_g
    if (m.graph_genus() != g)
        throw std::logic_error("subdivision changed the graph genus");
    return m;
}

namespace dhar_detail {

inline long long edges_into(const FiniteGraphModel& m, int v, const std::vector<char>& in_set) {
    long long c = 0;
    for (int u : m.adj[static_cast<std::size_t>(v)]) c += in_set[static_cast<std::size_t>(u)];
    return c;
}

inline void fire_set(const FiniteGraphModel& m, std::vector<long long>& chips,
                     const std::vector<char>& in_set) {
    for (int v = 0; v < m.n; ++v) {
        if (in_set[static_cast<std::size_t>(v)]) {
            for (int u : m.adj[static_cast<std::size_t>(v)])
                if (!in_set[static_cast<std::size_t>(u)]) {
                    --chips[static_cast<std::size_t>(v)];
                    ++chips[static_cast<std::size_t>(u)];
                }
        }
    }
}

} // namespace dhar_detail

// q-reduced representative of the divisor class of `chips`: nonnegative away
// from q and stable under Dhar's burning algorithm. Unique per class.
inline std::vector<long long> q_reduced(const FiniteGraphModel& m, std::vector<long long> chips) {
    if (static_cast<int>(chips.size()) != m.n)
        throw std::invalid_argument("chip vector does not match the model");
    // distances from q
    std::vector<int> dist(static_cast<std::size_t>(m.n), -1);
    std::queue<int> bfs;
    bfs.push(m.q);
    dist[static_cast<std::size_t>(m.q)] = 0;
    int maxdist = 0;
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop();
        for (int u : m.adj[static_cast<std::size_t>(v)])
            if (dist[static_cast<std::size_t>(u)] < 0) {
                dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
                maxdist = std::max(maxdist, dist[static_cast<std::size_t>(u)]);
                bfs.push(u);
            }
    }
    // phase 1: make chips nonnegative away from q, farthest layers first.
    // Firing the ball of radius k-1 raises every layer-k vertex and touches
    // nothing beyond layer k.
    for (int k = maxdist; k >= 1; --k) {
        std::vector<char> ball(static_cast<std::size_t>(m.n), 0);
        for (int v = 0; v < m.n; ++v)
            if (dist[static_cast<std::size_t>(v)] < k) ball[static_cast<std::size_t>(v)] = 1;
        int guard = 0;
        while (true) {
            bool deficit = false;
            for (int v = 0; v < m.n; ++v)
                if (dist[static_cast<std::size_t>(v)] == k && chips[static_cast<std::size_t>(v)] < 0)
                    deficit = true;
            if (!deficit) break;
            dhar_detail::fire_set(m, chips, ball);
            if (++guard > 1000000) throw std::logic_error("q-reduction phase 1 diverged");
        }
    }
    // phase 2: Dhar burning until the whole graph burns
    int guard = 0;
    while (true) {
        std::vector<char> burnt(static_cast<std::size_t>(m.n), 0);
        burnt[static_cast<std::size_t>(m.q)] = 1;
        bool grew = true;
        while (grew) {
            grew = false;
            for (int v = 0; v < m.n; ++v) {
                if (burnt[static_cast<std::size_t>(v)]) continue;
                if (dhar_detail::edges_into(m, v, burnt) > chips[static_cast<std::size_t>(v)]) {
                    burnt[static_cast<std::size_t>(v)] = 1;
                    grew = true;
                }
            }
        }
        bool all = true;
        for (int v = 0; v < m.n; ++v)
            if (!burnt[static_cast<std::size_t>(v)]) all = false;
        if (all) break;
        std::vector<char> unburnt(static_cast<std::size_t>(m.n), 0);
        for (int v = 0; v < m.n; ++v)
            unburnt[static_cast<std::size_t>(v)] = !burnt[static_cast<std::size_t>(v)];
        dhar_detail::fire_set(m, chips, unburnt);
        if (++guard > 1000000) throw std::logic_error("q-reduction phase 2 diverged");
    }
    return chips;
}

inline bool dhar_effective_class(const FiniteGraphModel& m, const std::vector<long long>& chips) {
    long long deg = std::accumulate(chips.begin(), chips.end(), 0LL);
    if (deg < 0) return false;
    auto red = q_reduced(m, chips);
    return red[static_cast<std::size_t>(m.q)] >= 0;
}

inline bool dhar_equivalent(const FiniteGraphModel& m, const std::vector<long long>& a,
                            const std::vector<long long>& b) {
    long long da = std::accumulate(a.begin(), a.end(), 0LL);
    long long db = std::accumulate(b.begin(), b.end(), 0LL);
    if (da != db) return false;
    return q_reduced(m, a) == q_reduced(m, b);
}

namespace dhar_detail {

// Baker-Norine rank by brute force over effective test divisors E:
// rank >= k iff D - E is equivalent to an effective divisor for every E of
// degree k.
inline long long rank_brute(const FiniteGraphModel& m, const std::vector<long long>& chips) {
    long long deg = std::accumulate(chips.begin(), chips.end(), 0LL);
    if (deg < 0) return -1;
    if (!dhar_effective_class(m, chips)) return -1;
    for (long long k = 1;; ++k) {
        if (k > deg) return deg; // removing more than deg chips always fails
        std::vector<long long> test = chips;
        bool found_failure = false;
        std::function<void(int, long long)> rec = [&](int start, long long remaining) {
            if (found_failure) return;
            if (remaining == 0) {
                if (!dhar_effective_class(m, test)) found_failure = true;
                return;
            }
            for (int v = start; v < m.n && !found_failure; ++v) {
                --test[static_cast<std::size_t>(v)];
                rec(v, remaining - 1);
                ++test[static_cast<std::size_t>(v)];
            }
        };
        rec(0, k);
        if (found_failure) return k - 1;
    }
}

} // namespace dhar_detail

// Baker-Norine rank of `chips` on the subdivision. Degrees above g-1 are
// routed through Riemann-Roch so the brute-force side always works on the
// small-degree divisor.
inline long long dhar_rank(const FiniteGraphModel& m, const std::vector<long long>& chips) {
    long long deg = std::accumulate(chips.begin(), chips.end(), 0LL);
    if (deg < 0) return -1;
    long long g = m.graph_genus();
    if (deg > g - 1) {
        auto k = m.canonical_divisor();
        std::vector<long long> dual(chips.size());
        for (std::size_t i = 0; i < chips.size(); ++i) dual[i] = k[i] - chips[i];
        long long dual_deg = 2 * g - 2 - deg;
        long long dual_rank = dual_deg < 0 ? -1 : dhar_detail::rank_brute(m, dual);
        return deg - g + 1 + dual_rank;
    }
    return dhar_detail::rank_brute(m, chips);
}

} // namespace chaincycles
