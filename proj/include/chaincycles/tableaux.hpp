#pragma once

// m-displacement tableaux.
//
// A tableau on the rectangle [a x b] (cell (1,1) = lower left) with values in
// 1..g certifies rank: a divisor of degree d has rank >= r iff some tableau
// on [(g-d+r) x (r+1)] pins its representing divisor, cell (x,y) demanding
// the class <x-y> on cycle t(x,y). Validity requires strict increase along
// rows and columns plus, for repeated values, x-y congruent mod m_{t(x,y)}.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chaincycles/chain.hpp"

namespace chaincycles {

struct DisplacementTableau {
    int cols = 0;
    int rows = 0;
    std::vector<int> vals; // row-major, bottom row first

    DisplacementTableau() = default;
    DisplacementTableau(int c, int r) : cols(c), rows(r), vals(static_cast<std::size_t>(c) * r, 0) {}

    bool empty_shape() const { return cols <= 0 || rows <= 0; }

    int& at(int x, int y) { return vals[static_cast<std::size_t>(y - 1) * cols + (x - 1)]; }
    int at(int x, int y) const { return vals[static_cast<std::size_t>(y - 1) * cols + (x - 1)]; }

    // values actually used, ascending and deduplicated
    std::vector<int> image() const {
        std::vector<int> im(vals);
        std::sort(im.begin(), im.end());
        im.erase(std::unique(im.begin(), im.end()), im.end());
        return im;
    }

    // value -> x-y of its first (lowest, leftmost) occurrence
    std::vector<std::pair<int, long long>> value_offsets() const {
        std::map<int, long long> first;
        for (int y = 1; y <= rows; ++y)
            for (int x = 1; x <= cols; ++x)
                first.emplace(at(x, y), x - y);
        return {first.begin(), first.end()};
    }

    friend bool operator==(const DisplacementTableau& a, const DisplacementTableau& b) {
        return a.cols == b.cols && a.rows == b.rows && a.vals == b.vals;
    }
};

struct TableauValidation {
    bool ok = false;
    std::string reason;                                       // empty when ok
    std::optional<std::pair<std::pair<int, int>, std::pair<int, int>>> cells; // first violating pair
    explicit operator bool() const { return ok; }
};

inline TableauValidation validate_tableau(const TorsionProfile& profile, const DisplacementTableau& t) {
    if (t.empty_shape()) return {true, "", std::nullopt};
    for (int y = 1; y <= t.rows; ++y)
        for (int x = 1; x <= t.cols; ++x) {
            int v = t.at(x, y);
            if (v < 1 || v > profile.genus)
                return {false, "malformed-input: entry outside 1..g", std::pair{std::pair{x, y}, std::pair{x, y}}};
        }
    for (int y = 1; y <= t.rows; ++y)
        for (int x = 1; x <= t.cols; ++x) {
            if (x > 1 && t.at(x - 1, y) >= t.at(x, y))
                return {false, "row not strictly increasing", std::pair{std::pair{x - 1, y}, std::pair{x, y}}};
            if (y > 1 && t.at(x, y - 1) >= t.at(x, y))
                return {false, "column not strictly increasing", std::pair{std::pair{x, y - 1}, std::pair{x, y}}};
        }
    std::map<int, std::pair<int, int>> first;
    for (int y = 1; y <= t.rows; ++y)
        for (int x = 1; x <= t.cols; ++x) {
            int v = t.at(x, y);
            auto [it, inserted] = first.emplace(v, std::pair{x, y});
            if (inserted) continue;
            long long m = profile.torsion_at(v);
            long long d1 = it->second.first - it->second.second;
            long long d2 = x - y;
            bool ok = m > 0 ? mod_ll(d1 - d2, m) == 0 : d1 == d2;
            if (!ok)
                return {false, "displacement congruence failed for value " + std::to_string(v),
                        std::pair{it->second, std::pair{x, y}}};
        }
    return {true, "", std::nullopt};
}

// The rectangle certifying rank >= r in degree d. cols <= 0 means the empty
// rectangle: the rank condition is vacuous (Riemann-Roch regime).
inline std::pair<int, int> rank_rectangle(int g, long long d, long long r) {
    return {static_cast<int>(g - d + r), static_cast<int>(r + 1)};
}

// Lazy deterministic enumeration: cells are filled bottom row first, left to
// right, candidate values ascending, pruning on monotonicity bounds and on
// the displacement congruences. An optional cell filter restricts admissible
// values (used by the rank search).
class TableauEnumerator {
public:
    using CellFilter = std::function<bool(int value, int x, int y)>;

    TableauEnumerator(const TorsionProfile& profile, int cols, int rows, CellFilter filter = {})
        : profile_(profile), cols_(cols), rows_(rows), filter_(std::move(filter)) {
        if (cols_ <= 0 || rows_ <= 0) {
            empty_pending_ = true;
            cells_ = 0;
        } else {
            cells_ = cols_ * rows_;
            cur_.assign(static_cast<std::size_t>(cells_), 0);
            first_offset_.assign(static_cast<std::size_t>(profile_.genus) + 1, 0);
            use_count_.assign(static_cast<std::size_t>(profile_.genus) + 1, 0);
        }
    }

    std::optional<DisplacementTableau> next() {
        if (empty_pending_) {
            empty_pending_ = false;
            done_ = true;
            return DisplacementTableau{}; // the single empty tableau
        }
        if (done_) return std::nullopt;
        int p = fresh_ ? 0 : cells_ - 1;
        if (fresh_) fresh_ = false;
        else unuse(p);
        while (p >= 0 && p < cells_) {
            int x = p % cols_ + 1;
            int y = p / cols_ + 1;
            int lower = cur_[static_cast<std::size_t>(p)]; // 0 when untried
            int minv = 1;
            if (x > 1) minv = std::max(minv, cur_[static_cast<std::size_t>(p) - 1] + 1);
            if (y > 1) minv = std::max(minv, cur_[static_cast<std::size_t>(p) - cols_] + 1);
            int maxv = profile_.genus - (cols_ - x) - (rows_ - y);
            int v = std::max(lower + 1, minv);
            for (; v <= maxv; ++v)
                if (admissible(v, x, y)) break;
            if (v > maxv) {
                cur_[static_cast<std::size_t>(p)] = 0;
                --p;
                if (p >= 0) unuse(p);
                continue;
            }
            cur_[static_cast<std::size_t>(p)] = v;
            use(p);
            ++p;
        }
        if (p < 0) {
            done_ = true;
            return std::nullopt;
        }
        DisplacementTableau t(cols_, rows_);
        for (int i = 0; i < cells_; ++i) t.vals[static_cast<std::size_t>(i)] = cur_[static_cast<std::size_t>(i)];
        return t;
    }

private:
    bool admissible(int v, int x, int y) const {
        if (use_count_[static_cast<std::size_t>(v)] > 0) {
            long long m = profile_.torsion_at(v);
            long long diff = (x - y) - first_offset_[static_cast<std::size_t>(v)];
            if (m > 0 ? mod_ll(diff, m) != 0 : diff != 0) return false;
        }
        if (filter_ && !filter_(v, x, y)) return false;
        return true;
    }
    void use(int p) {
        int v = cur_[static_cast<std::size_t>(p)];
        int x = p % cols_ + 1, y = p / cols_ + 1;
        if (use_count_[static_cast<std::size_t>(v)]++ == 0)
            first_offset_[static_cast<std::size_t>(v)] = x - y;
    }
    void unuse(int p) {
        int v = cur_[static_cast<std::size_t>(p)];
        if (v > 0) --use_count_[static_cast<std::size_t>(v)];
    }

    TorsionProfile profile_;
    int cols_, rows_, cells_ = 0;
    CellFilter filter_;
    std::vector<int> cur_;
    std::vector<long long> first_offset_;
    std::vector<int> use_count_;
    bool fresh_ = true;
    bool done_ = false;
    bool empty_pending_ = false;
};

// All m-displacement tableaux on [(g-d+r) x (r+1)], deterministic order.
inline std::vector<DisplacementTableau> enumerate_tableaux(const TorsionProfile& profile,
                                                           long long d, long long r) {
    auto [cols, rows] = rank_rectangle(profile.genus, d, r);
    TableauEnumerator en(profile, cols, rows);
    std::vector<DisplacementTableau> out;
    while (auto t = en.next()) out.push_back(*t);
    return out;
}

struct TorusStratum {
    DisplacementTableau tableau;
    int genus = 0;
    std::vector<int> free_indices;          // cycles not in im(t)
    int dimension = 0;                      // = free_indices.size()
    std::map<int, long long> determined;    // value in im(t) -> pinned class x-y
};

inline TorusStratum torus_of(const DisplacementTableau& t, int g) {
    TorusStratum s;
    s.tableau = t;
    s.genus = g;
    for (const auto& [v, off] : t.value_offsets()) s.determined[v] = off;
    for (int i = 1; i <= g; ++i)
        if (!s.determined.count(i)) s.free_indices.push_back(i);
    s.dimension = static_cast<int>(s.free_indices.size());
    return s;
}

// Dimension of W^r_d as the maximum torus dimension over all tableaux;
// -1 when no tableau exists (W^r_d empty).
inline long long wrd_dim(const TorsionProfile& profile, long long d, long long r) {
    auto [cols, rows] = rank_rectangle(profile.genus, d, r);
    if (cols <= 0) return profile.genus; // empty rectangle: every class qualifies
    TableauEnumerator en(profile, cols, rows);
    long long best = -1;
    while (auto t = en.next()) {
        long long dim = profile.genus - static_cast<long long>(t->image().size());
        best = std::max(best, dim);
        if (best >= d - 2 * r) break; // Lemma-2 ceiling
    }
    return best;
}

// The unique candidate for a degree-2 rank-1 certificate: t(x,1) = x,
// t(x,2) = x+1 on [(g-1) x 2]. Valid iff every interior torsion equals 2.
inline DisplacementTableau hyperelliptic_tableau(int g) {
    if (g < 2) throw std::invalid_argument("hyperelliptic tableau needs genus >= 2");
    DisplacementTableau t(g - 1, 2);
    for (int x = 1; x <= g - 1; ++x) {
        t.at(x, 1) = x;
        t.at(x, 2) = x + 1;
    }
    return t;
}

} // namespace chaincycles
