#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "corecrystal/partition.hpp"

namespace corecrystal {

// Cap for operations that enumerate all partitions of n, overridable through
// CORECRYSTAL_MAX_N.
inline int default_enumeration_cap() {
    if (const char* env = std::getenv("CORECRYSTAL_MAX_N")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 30;
}

namespace detail {

// Positions of ladder k, bottom (row k, col 1) to top, step (-(ell-1), +1).
inline std::vector<BoxCoord> ladder_positions(long long k, int ell) {
    std::vector<BoxCoord> out;
    for (long long row = k, col = 1; row >= 1; row -= ell - 1, ++col)
        out.push_back({static_cast<int>(row), static_cast<int>(col)});
    return out;
}

inline long long ladder_index(BoxCoord b, int ell) {
    return b.row + static_cast<long long>(b.col - 1) * (ell - 1);
}

} // namespace detail

// James' regularization R: slide every box to the top of its ladder.
inline Partition regularize(const Partition& lam, int ell) {
    require(ell >= 2, "ell-too-small", "regularization needs ell >= 2");
    std::map<long long, int> count;
    long long max_k = 0;
    for (int r = 1; r <= lam.length(); ++r)
        for (int c = 1; c <= lam.part(r); ++c) {
            long long k = detail::ladder_index({r, c}, ell);
            ++count[k];
            max_k = std::max(max_k, k);
        }
    std::vector<int> rows(static_cast<std::size_t>(std::max<long long>(max_k, 0)), 0);
    for (auto& [k, c] : count) {
        auto pos = detail::ladder_positions(k, ell);
        // Highest c positions of the ladder.
        for (int j = 0; j < c; ++j) ++rows[pos[pos.size() - 1 - j].row - 1];
    }
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i - 1] < rows[i]) broken("regularization produced a non-partition");
    return Partition(std::move(rows));
}

enum class LockLabel { unlocked, locked_i, locked_ii, locked_both };

inline bool is_locked(LockLabel l) { return l != LockLabel::unlocked; }

// Locked-box labelling, iterated to its fixed point. Type I: nothing above
// blocks it and every empty ladder position below has an empty position
// directly above it. Type II: some locked box to the right in the same row.
inline std::vector<std::vector<LockLabel>> lock_labels(const Partition& lam, int ell) {
    require(ell >= 3, "ell-too-small", "locked boxes need ell >= 3");
    std::vector<std::vector<LockLabel>> label(lam.length());
    for (int r = 1; r <= lam.length(); ++r)
        label[r - 1].assign(lam.part(r), LockLabel::unlocked);

    // The ladder condition does not depend on labels; precompute it.
    auto ladder_ok = [&](int r, int c) {
        for (int row = r + (ell - 1), col = c - 1; col >= 1; row += ell - 1, --col) {
            if (lam.contains({row, col})) continue;
            if (lam.contains({row - 1, col})) return false;
        }
        return true;
    };
    std::vector<std::vector<bool>> ladder_cond(lam.length());
    for (int r = 1; r <= lam.length(); ++r) {
        ladder_cond[r - 1].assign(lam.part(r), false);
        for (int c = 1; c <= lam.part(r); ++c)
            ladder_cond[r - 1][c - 1] = ladder_ok(r, c);
    }

    int rounds = 0;
    for (bool changed = true; changed; ++rounds) {
        if (rounds > lam.size() + 1) broken("lock labelling failed to stabilize");
        changed = false;
        for (int r = 1; r <= lam.length(); ++r) {
            for (int c = lam.part(r); c >= 1; --c) {
                bool type1 = ladder_cond[r - 1][c - 1] &&
                             (r == 1 || is_locked(label[r - 2][c - 1]));
                bool type2 = false;
                for (int c2 = c + 1; c2 <= lam.part(r) && !type2; ++c2)
                    type2 = is_locked(label[r - 1][c2 - 1]);
                LockLabel next = type1 && type2 ? LockLabel::locked_both
                                 : type1        ? LockLabel::locked_i
                                 : type2        ? LockLabel::locked_ii
                                                : LockLabel::unlocked;
                if (next != label[r - 1][c - 1]) {
                    label[r - 1][c - 1] = next;
                    changed = true;
                }
            }
        }
    }
    return label;
}

// Deregularization S: locked boxes stay put, unlocked boxes drop to the
// lowest free positions of their ladders. Yields the dominance-smallest
// member of the regularization class.
inline Partition deregularize(const Partition& lam, int ell) {
    auto label = lock_labels(lam, ell);
    std::map<long long, int> unlocked_count;
    std::map<long long, std::vector<int>> locked_rows;  // ladder -> rows held
    long long max_k = 0;
    for (int r = 1; r <= lam.length(); ++r)
        for (int c = 1; c <= lam.part(r); ++c) {
            long long k = detail::ladder_index({r, c}, ell);
            max_k = std::max(max_k, k);
            if (is_locked(label[r - 1][c - 1]))
                locked_rows[k].push_back(r);
            else
                ++unlocked_count[k];
        }
    std::map<int, int> row_count;
    for (auto& [k, rs] : locked_rows)
        for (int r : rs) ++row_count[r];
    for (auto& [k, cnt] : unlocked_count) {
        auto pos = detail::ladder_positions(k, ell);
        const auto lr = locked_rows.find(k);
        int placed = 0;
        for (const BoxCoord& p : pos) {  // bottom to top
            if (placed == cnt) break;
            bool held = lr != locked_rows.end() &&
                        std::find(lr->second.begin(), lr->second.end(), p.row) != lr->second.end();
            if (held) continue;
            ++row_count[p.row];
            ++placed;
        }
        if (placed != cnt) broken("ladder too short while deregularizing");
    }
    std::vector<int> rows(static_cast<std::size_t>(max_k), 0);
    for (auto& [row, cnt] : row_count) rows[row - 1] = cnt;
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i - 1] < rows[i]) broken("deregularization produced a non-partition");
    return Partition(std::move(rows));
}

// RC(lambda): all partitions of |lambda| with the same regularization.
inline std::vector<Partition> regularization_class(const Partition& lam, int ell,
                                                   int max_n = -1) {
    if (max_n < 0) max_n = default_enumeration_cap();
    if (lam.size() > max_n)
        fail("size-limit-exceeded",
             "|lambda| = " + std::to_string(lam.size()) + " exceeds cap " + std::to_string(max_n));
    Partition target = regularize(lam, ell);
    std::vector<Partition> out;
    enumerate_partitions(lam.size(), [&](const Partition& mu) {
        if (regularize(mu, ell) == target) out.push_back(mu);
    });
    return out;
}

struct DimensionViolation {
    Partition lam;
    unsigned long long dim_s = 0;
    unsigned long long dim_r = 0;
};

struct DimensionReport {
    int n = 0;
    int ell = 0;
    long long checked = 0;
    std::vector<DimensionViolation> violations;
    bool ok() const { return violations.empty(); }
};

// Checks dim S^{S lambda} <= dim S^{R lambda} over all partitions of n via
// exact standard-tableau counts.
inline DimensionReport check_dimension_conjecture(int n, int ell) {
    DimensionReport report;
    report.n = n;
    report.ell = ell;
    enumerate_partitions(n, [&](const Partition& lam) {
        unsigned long long s = count_standard_tableaux(deregularize(lam, ell));
        unsigned long long r = count_standard_tableaux(regularize(lam, ell));
        ++report.checked;
        if (s > r) report.violations.push_back({lam, s, r});
    });
    return report;
}

// Diagram with L/U per box, matching the locked-box figures.
inline std::string render_locks(const Partition& lam, int ell) {
    auto label = lock_labels(lam, ell);
    std::string out;
    for (int r = 1; r <= lam.length(); ++r) {
        for (int c = 1; c <= lam.part(r); ++c)
            out += is_locked(label[r - 1][c - 1]) ? 'L' : 'U';
        out += '\n';
    }
    return out;
}

} // namespace corecrystal
