#pragma once

// Chains of cycles and their torsion profiles.
//
// A chain of genus g is g circles C_1..C_g, each carrying marked points v_i
// and w_i with the positive arc from v_i to w_i the shortest one, joined by
// bridges w_i -- v_{i+1}. The torsion m_i is the least positive integer with
// m_i * l(v_i,w_i) in Z * l_i, or 0 when the ratio is irrational. Writing
// rho_i = l_i / l(v_i,w_i) = p/q in lowest terms gives m_i = p.

#include <optional>
#include <stdexcept>
#include <vector>

#include "chaincycles/coordinate.hpp"
#include "chaincycles/rational.hpp"

namespace chaincycles {

struct CycleGeometry {
    Rational circumference;
    // nullopt marks an arc length l(v_i,w_i) that is an irrational multiple
    // of the circumference (forcing torsion 0).
    std::optional<Rational> arc;

    void validate() const {
        if (circumference.num <= 0)
            throw std::invalid_argument("cycle circumference must be positive");
        if (arc) {
            if (arc->num <= 0)
                throw std::invalid_argument("cycle arc length must be positive");
            if (*arc * Rational(2) > circumference)
                throw std::invalid_argument("arc v->w must be the shortest one (arc <= circumference/2)");
        }
    }

    std::optional<Rational> rho() const {
        if (!arc) return std::nullopt;
        return circumference / *arc;
    }

    long long torsion() const {
        auto r = rho();
        return r ? r->num : 0;
    }

    ClassContext class_context() const { return ClassContext{torsion(), rho()}; }
};

inline long long torsion_from_geometry(const CycleGeometry& c) {
    c.validate();
    return c.torsion();
}

struct TorsionProfile {
    int genus = 1;
    std::vector<long long> m; // m_2 .. m_{g-1}; empty when genus <= 2

    TorsionProfile() = default;
    explicit TorsionProfile(int g) : genus(g) {
        if (g < 1) throw std::invalid_argument("genus must be >= 1");
        m.assign(g >= 2 ? g - 2 : 0, 2);
    }
    TorsionProfile(int g, std::vector<long long> interior) : genus(g), m(std::move(interior)) {
        validate();
    }
    static TorsionProfile from_interior(std::vector<long long> interior) {
        TorsionProfile p;
        p.genus = static_cast<int>(interior.size()) + 2;
        p.m = std::move(interior);
        p.validate();
        return p;
    }

    void validate() const {
        if (genus < 1) throw std::invalid_argument("genus must be >= 1");
        std::size_t expect = genus >= 2 ? static_cast<std::size_t>(genus - 2) : 0;
        if (m.size() != expect)
            throw std::invalid_argument("torsion profile must list m_2..m_{g-1}");
        for (long long v : m)
            if (v < 0 || v == 1)
                throw std::invalid_argument("torsion values are 0 or >= 2");
    }

    // Torsion governing cycle i (1-based). The profile does not constrain the
    // end cycles; at profile level their integer classes compare exactly.
    long long torsion_at(int i) const {
        if (i < 1 || i > genus) throw std::out_of_range("cycle index out of range");
        if (i == 1 || i == genus) return 0;
        return m[static_cast<std::size_t>(i) - 2];
    }

    friend bool operator==(const TorsionProfile& a, const TorsionProfile& b) {
        return a.genus == b.genus && a.m == b.m;
    }
};

struct ChainOfCycles {
    std::vector<CycleGeometry> cycles;          // size g
    std::vector<Rational> bridges;              // size g-1, positive lengths

    int genus() const { return static_cast<int>(cycles.size()); }

    void validate() const {
        if (cycles.empty()) throw std::invalid_argument("chain needs at least one cycle");
        for (const auto& c : cycles) c.validate();
        if (bridges.size() + 1 != cycles.size())
            throw std::invalid_argument("chain of genus g needs exactly g-1 bridges");
        for (const auto& b : bridges)
            if (b.num <= 0) throw std::invalid_argument("bridge lengths must be positive");
    }
};

inline TorsionProfile profile_of(const ChainOfCycles& chain) {
    chain.validate();
    TorsionProfile p;
    p.genus = chain.genus();
    for (int i = 2; i <= p.genus - 1; ++i)
        p.m.push_back(chain.cycles[static_cast<std::size_t>(i) - 1].torsion());
    return p;
}

// Canonical geometry realizing a profile: arc 1 everywhere, circumference m_i
// on interior cycles (irrational marker when m_i = 0), circumference 2 on the
// end cycles, all bridges of length 1.
inline ChainOfCycles synthesize_chain(const TorsionProfile& profile) {
    profile.validate();
    ChainOfCycles chain;
    for (int i = 1; i <= profile.genus; ++i) {
        CycleGeometry c;
        if (i == 1 || i == profile.genus) {
            c.circumference = Rational(2);
            c.arc = Rational(1);
        } else {
            long long mi = profile.m[static_cast<std::size_t>(i) - 2];
            if (mi == 0) {
                c.circumference = Rational(2);
                c.arc = std::nullopt;
            } else {
                c.circumference = Rational(mi);
                c.arc = Rational(1);
            }
        }
        chain.cycles.push_back(c);
    }
    chain.bridges.assign(profile.genus >= 1 ? profile.genus - 1 : 0, Rational(1));
    return chain;
}

// Per-cycle equality semantics for a whole chain. Concrete chains use each
// cycle's actual geometric torsion (including the end cycles); profile-level
// contexts have no geometry, so only integer classes and generic symbols are
// representable and the end cycles compare exactly.
struct ChainContext {
    int genus = 1;
    std::vector<ClassContext> cycle; // size g, index 0 = C_1

    static ChainContext of(const ChainOfCycles& chain) {
        chain.validate();
        ChainContext ctx;
        ctx.genus = chain.genus();
        for (const auto& c : chain.cycles) ctx.cycle.push_back(c.class_context());
        return ctx;
    }
    static ChainContext of(const TorsionProfile& profile) {
        profile.validate();
        ChainContext ctx;
        ctx.genus = profile.genus;
        for (int i = 1; i <= profile.genus; ++i)
            ctx.cycle.push_back(ClassContext{profile.torsion_at(i), std::nullopt});
        return ctx;
    }

    const ClassContext& at(int i) const { // 1-based cycle index
        if (i < 1 || i > genus) throw std::out_of_range("cycle index out of range");
        return cycle[static_cast<std::size_t>(i) - 1];
    }
};

} // namespace chaincycles
