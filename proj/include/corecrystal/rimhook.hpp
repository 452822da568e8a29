#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "corecrystal/abacus.hpp"
#include "corecrystal/partition.hpp"

namespace corecrystal {

enum class HookKind { horizontal, vertical, other };

// A removable ell-rim hook: ell edge-connected rim boxes, no 2x2 square,
// whose removal leaves a partition.
struct RimHook {
    std::vector<BoxCoord> boxes;
    HookKind kind = HookKind::other;
};

// All removable ell-rim hooks, ordered by their topmost (hand) box in
// row-major order. Each hook corresponds to a box with hook length ell; the
// hook runs along the rim from the end of that box's row to the bottom of
// its column.
inline std::vector<RimHook> removable_rim_hooks(const Partition& lam, int ell) {
    require(ell >= 2, "ell-too-small", "rim hooks need ell >= 2");
    Partition tr = transpose(lam);
    std::vector<RimHook> out;
    for (int a = 1; a <= lam.length(); ++a) {
        for (int b = 1; b <= lam.part(a); ++b) {
            if (hook_length(lam, {a, b}) != ell) continue;
            RimHook h;
            int r = a, c = lam.part(a);
            int foot_row = tr.part(b);
            h.boxes.push_back({r, c});
            while (!(r == foot_row && c == b)) {
                if (lam.part(r + 1) >= c)
                    ++r;
                else
                    --c;
                h.boxes.push_back({r, c});
            }
            bool one_row = true, one_col = true;
            for (const BoxCoord& x : h.boxes) {
                one_row = one_row && x.row == a;
                one_col = one_col && x.col == b;
            }
            h.kind = one_row ? HookKind::horizontal
                             : one_col ? HookKind::vertical
                                       : HookKind::other;
            out.push_back(std::move(h));
        }
    }
    return out;
}

inline Partition remove_hook(const Partition& lam, const RimHook& h) {
    std::vector<int> parts = lam.parts();
    for (const BoxCoord& b : h.boxes) {
        if (b.row > static_cast<int>(parts.size()) || parts[b.row - 1] != b.col)
            fail("invalid-hook", "hook boxes do not peel off the rim of " + lam.to_text());
        parts[b.row - 1] -= 1;
    }
    return Partition(std::move(parts));
}

// True iff some box of h1 shares an edge with some box of h2.
inline bool adjacent(const RimHook& h1, const RimHook& h2) {
    std::set<BoxCoord> s1(h1.boxes.begin(), h1.boxes.end());
    for (const BoxCoord& b : h2.boxes)
        if (s1.count(b)) fail("overlapping-hooks", "hooks share a box");
    for (const BoxCoord& x : h1.boxes)
        for (const BoxCoord& y : h2.boxes)
            if (std::abs(x.row - y.row) + std::abs(x.col - y.col) == 1) return true;
    return false;
}

// Strip hooks to the ell-core; the number removed is the weight. The core
// does not depend on removal order, which we check by peeling with two
// different policies.
inline std::pair<Partition, int> core_and_weight(const Partition& lam, int ell) {
    auto peel = [&](bool from_back) {
        Partition cur = lam;
        int weight = 0;
        for (;;) {
            auto hooks = removable_rim_hooks(cur, ell);
            if (hooks.empty()) break;
            cur = remove_hook(cur, from_back ? hooks.back() : hooks.front());
            ++weight;
        }
        return std::pair<Partition, int>(cur, weight);
    };
    auto first = peel(false);
    auto second = peel(true);
    if (first != second) broken("core depends on removal order for " + lam.to_text());
    return first;
}

// (star): within every column, the ell-divisible hook lengths are
// all-or-none.
inline bool is_carter(const Partition& lam, int ell) {
    require(ell >= 2, "ell-too-small", "Carter criterion needs ell >= 2");
    Partition tr = transpose(lam);
    for (int c = 1; c <= tr.length(); ++c) {
        bool any = false, all = true;
        for (int r = 1; r <= tr.part(c); ++r) {
            bool div = hook_length(lam, {r, c}) % ell == 0;
            any = any || div;
            all = all && div;
        }
        if (any && !all) return false;
    }
    return true;
}

// Symmetric-group variant: within each column all hooks carry the same
// exponent of p. Kept separate from the indicator form used everywhere else.
inline bool is_carter_padic(const Partition& lam, int p) {
    require(p >= 2, "ell-too-small", "p-adic Carter needs p >= 2");
    auto val = [&](int h) {
        int v = 0;
        while (h % p == 0) { h /= p; ++v; }
        return v;
    };
    Partition tr = transpose(lam);
    for (int c = 1; c <= tr.length(); ++c) {
        int expect = -1;
        for (int r = 1; r <= tr.part(c); ++r) {
            int v = val(hook_length(lam, {r, c}));
            if (expect == -1) expect = v;
            if (v != expect) return false;
        }
    }
    return true;
}

namespace detail {

// Closure of "only horizontal hooks, ever" under horizontal removals.
inline bool ell_partition_rec(const Partition& lam, int ell,
                              std::map<Partition, bool>& memo) {
    auto it = memo.find(lam);
    if (it != memo.end()) return it->second;
    bool ok = true;
    auto hooks = removable_rim_hooks(lam, ell);
    for (const RimHook& h : hooks)
        if (h.kind != HookKind::horizontal) { ok = false; break; }
    if (ok)
        for (const RimHook& h : hooks)
            if (!ell_partition_rec(remove_hook(lam, h), ell, memo)) { ok = false; break; }
    memo[lam] = ok;
    return ok;
}

} // namespace detail

// ell-regular, no non-horizontal ell-rim hook appears under any sequence of
// horizontal removals.
inline bool is_ell_partition(const Partition& lam, int ell) {
    require(ell >= 2, "ell-too-small", "ell-partitions need ell >= 2");
    if (!is_regular(lam, ell)) return false;
    std::map<Partition, bool> memo;
    return detail::ell_partition_rec(lam, ell, memo);
}

// Count of leading rows with successive difference exactly ell-1.
inline int leading_row_run(const Partition& lam, int ell) {
    int r = 0;
    while (lam.part(r + 1) - lam.part(r + 2) == ell - 1) ++r;
    return r;
}

// lambda ~ (mu, r, kappa): an ell-core mu with mu_1 - mu_2 != ell - 1,
// r extra rows above it in arithmetic progression of step ell-1, and
// kappa_i horizontal hooks added to row i for i <= r+1.
struct EllDecomposition {
    Partition mu;
    int r = 0;
    Partition kappa;
};

inline Partition compose_ell(const EllDecomposition& d, int ell) {
    require(ell >= 2, "ell-too-small", "");
    require(d.r >= 0, "invalid-triple", "r must be nonnegative");
    if (!is_core(d.mu, ell) || d.mu.part(1) - d.mu.part(2) == ell - 1)
        fail("invalid-triple", "mu must be an ell-core with mu1 - mu2 != ell - 1");
    if (d.kappa.length() > d.r + 1)
        fail("invalid-triple", "kappa may have at most r + 1 parts");
    std::vector<int> rows;
    for (int i = 1; i <= d.r; ++i)
        rows.push_back(d.mu.part(1) + (d.r + 1 - i) * (ell - 1) + d.kappa.part(i) * ell);
    rows.push_back(d.mu.part(1) + d.kappa.part(d.r + 1) * ell);
    for (int i = 2; i <= d.mu.length(); ++i) rows.push_back(d.mu.part(i));
    return Partition(std::move(rows));
}

inline EllDecomposition decompose_ell(const Partition& lam, int ell) {
    if (!is_ell_partition(lam, ell)) fail("not-an-ell-partition", lam.to_text());
    std::map<int, int> strip_count;
    Partition cur = lam;
    for (;;) {
        auto hooks = removable_rim_hooks(cur, ell);
        if (hooks.empty()) break;
        ++strip_count[hooks.front().boxes.front().row];
        cur = remove_hook(cur, hooks.front());
    }
    EllDecomposition d;
    d.r = leading_row_run(cur, ell);
    std::vector<int> mu_rows, kappa;
    for (int i = d.r + 1; i <= cur.length(); ++i) mu_rows.push_back(cur.part(i));
    d.mu = Partition(std::move(mu_rows));
    for (int i = 1; i <= d.r + 1; ++i) {
        auto it = strip_count.find(i);
        kappa.push_back(it == strip_count.end() ? 0 : it->second);
    }
    for (auto& [row, cnt] : strip_count)
        if (row > d.r + 1) broken("hook above row r+1 in an ell-partition");
    d.kappa = Partition(std::move(kappa));
    if (compose_ell(d, ell) != lam) broken("ell decomposition does not recompose");
    return d;
}

// Fayers' criterion: no triple (a,b),(a,y),(x,b) with ell | h(a,b) and
// ell dividing neither h(a,y) nor h(x,b).
inline bool is_jm(const Partition& lam, int ell) {
    require(ell >= 3, "ell-too-small", "JM criterion needs ell >= 3");
    Partition tr = transpose(lam);
    std::vector<bool> row_nondiv(lam.length() + 1, false);
    std::vector<bool> col_nondiv(tr.length() + 1, false);
    for (int a = 1; a <= lam.length(); ++a)
        for (int b = 1; b <= lam.part(a); ++b)
            if (hook_length(lam, {a, b}) % ell != 0)
                row_nondiv[a] = col_nondiv[b] = true;
    for (int a = 1; a <= lam.length(); ++a)
        for (int b = 1; b <= lam.part(a); ++b)
            if (hook_length(lam, {a, b}) % ell == 0 && row_nondiv[a] && col_nondiv[b])
                return false;
    return true;
}

namespace detail {

inline bool generalized_rec(const Partition& lam, int ell,
                            std::map<Partition, bool>& memo) {
    auto it = memo.find(lam);
    if (it != memo.end()) return it->second;
    bool ok = true;
    auto hooks = removable_rim_hooks(lam, ell);
    for (const RimHook& h : hooks)
        if (h.kind == HookKind::other) { ok = false; break; }
    if (ok) {
        // No vertical-then-adjacent-horizontal pair (or the converse) across
        // a single removal.
        for (const RimHook& r : hooks) {
            Partition rest = remove_hook(lam, r);
            for (const RimHook& s : removable_rim_hooks(rest, ell)) {
                if (s.kind == r.kind || s.kind == HookKind::other) continue;
                if (adjacent(r, s)) { ok = false; break; }
            }
            if (!ok) break;
        }
    }
    if (ok)
        for (const RimHook& h : hooks)
            if (!generalized_rec(remove_hook(lam, h), ell, memo)) { ok = false; break; }
    memo[lam] = ok;
    return ok;
}

} // namespace detail

// Only horizontal/vertical hooks, never adjacent across one removal, closed
// under all removal sequences.
inline bool is_generalized_ell(const Partition& lam, int ell) {
    require(ell >= 3, "ell-too-small", "generalized ell-partitions need ell >= 3");
    std::map<Partition, bool> memo;
    return detail::generalized_rec(lam, ell, memo);
}

// lambda ~ (mu, r, s, rho, sigma): core mu with both top-row and top-column
// differences < ell - 1, r rows attached above in steps of ell-1, s columns
// attached left likewise, rho_i horizontal hooks on row i, sigma_j vertical
// hooks on column j.
struct JMDecomposition {
    Partition mu;
    int r = 0;
    int s = 0;
    Partition rho;
    Partition sigma;
};

inline Partition compose_jm(const JMDecomposition& d, int ell) {
    require(ell >= 3, "ell-too-small", "JM decompositions need ell >= 3");
    require(d.r >= 0 && d.s >= 0, "invalid-tuple", "r and s must be nonnegative");
    if (!is_core(d.mu, ell)) fail("invalid-tuple", "mu must be an ell-core");
    Partition mut = transpose(d.mu);
    if (d.mu.part(1) - d.mu.part(2) >= ell - 1 || mut.part(1) - mut.part(2) >= ell - 1)
        fail("invalid-tuple", "mu must have top row and column differences < ell - 1");
    if (d.rho.length() > d.r + 1 || d.sigma.length() > d.s + 1)
        fail("invalid-tuple", "rho/sigma longer than r+1/s+1");
    if (d.mu.empty() && d.rho.part(d.r + 1) != 0 && d.sigma.part(d.s + 1) != 0)
        fail("invalid-tuple", "empty mu needs rho_{r+1} = 0 or sigma_{s+1} = 0");
    std::vector<int> rows;
    for (int i = 1; i <= d.r; ++i)
        rows.push_back(d.s + d.mu.part(1) + (d.r + 1 - i) * (ell - 1) + d.rho.part(i) * ell);
    // Row r+1 is the first row of mu. When mu is empty that row is the top
    // row of the s-column staircase: it exists separately only if horizontal
    // hooks land on it, in which case the staircase below loses one s-row.
    bool absorbed_staircase_row = false;
    if (!d.mu.empty()) {
        rows.push_back(d.s + d.mu.part(1) + d.rho.part(d.r + 1) * ell);
    } else if (d.rho.part(d.r + 1) > 0) {
        rows.push_back(d.s + d.rho.part(d.r + 1) * ell);
        absorbed_staircase_row = d.s > 0;
    }
    for (int i = 2; i <= d.mu.length(); ++i) rows.push_back(d.s + d.mu.part(i));
    for (int k = 0; k < d.sigma.part(d.s + 1) * ell; ++k) rows.push_back(d.s + 1);
    for (int j = d.s; j >= 1; --j) {
        int copies = (ell - 1) + (d.sigma.part(j) - d.sigma.part(j + 1)) * ell;
        if (j == d.s && absorbed_staircase_row) --copies;
        for (int k = 0; k < copies; ++k) rows.push_back(j);
    }
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i - 1] < rows[i]) fail("invalid-tuple", "tuple does not stack into a partition");
    return Partition(std::move(rows));
}

inline JMDecomposition decompose_jm(const Partition& lam, int ell) {
    if (!is_jm(lam, ell)) fail("not-a-JM-partition", lam.to_text());
    std::map<int, int> row_count, col_count;
    Partition cur = lam;
    for (;;) {
        auto hooks = removable_rim_hooks(cur, ell);
        if (hooks.empty()) break;
        const RimHook& h = hooks.front();
        if (h.kind == HookKind::horizontal)
            ++row_count[h.boxes.front().row];
        else if (h.kind == HookKind::vertical)
            ++col_count[h.boxes.front().col];
        else
            broken("non-straight hook while peeling a JM partition");
        cur = remove_hook(cur, h);
    }
    JMDecomposition d;
    d.r = leading_row_run(cur, ell);
    d.s = leading_row_run(transpose(cur), ell);
    std::vector<int> mu_rows;
    for (int i = d.r + 1; i <= cur.length(); ++i)
        if (cur.part(i) - d.s > 0) mu_rows.push_back(cur.part(i) - d.s);
    d.mu = Partition(std::move(mu_rows));
    std::vector<int> rho, sigma;
    for (int i = 1; i <= d.r + 1; ++i) rho.push_back(row_count.count(i) ? row_count[i] : 0);
    for (int j = 1; j <= d.s + 1; ++j) sigma.push_back(col_count.count(j) ? col_count[j] : 0);
    for (auto& [row, cnt] : row_count)
        if (row > d.r + 1) broken("horizontal hook below row r+1 in a JM partition");
    for (auto& [col, cnt] : col_count)
        if (col > d.s + 1) broken("vertical hook right of column s+1 in a JM partition");
    d.rho = Partition(std::move(rho));
    d.sigma = Partition(std::move(sigma));
    if (compose_jm(d, ell) != lam) broken("JM decomposition does not recompose");
    return d;
}

// Fayers/Lyle L-partitions: no box with ell | h whose hook is short relative
// to both the arm and the leg. The two published forms are kept as separate
// routes and must agree.
inline bool is_L_partition(const Partition& lam, int ell) {
    require(ell >= 3, "ell-too-small", "L-partitions need ell >= 3");
    bool direct = true, lyle = true;
    for (int r = 1; r <= lam.length() && (direct || lyle); ++r) {
        for (int c = 1; c <= lam.part(r); ++c) {
            int h = hook_length(lam, {r, c});
            if (h % ell != 0) continue;
            int a = arm(lam, {r, c});
            int l = leg(lam, {r, c});
            if (a < (ell - 1) * l && l < (ell - 1) * a) direct = false;
            if (h / ell <= std::min(a, l)) lyle = false;
        }
    }
    if (direct != lyle) broken("L-partition forms disagree on " + lam.to_text());
    return direct;
}

// Node test for the ladder crystal: no box with hook = ell * arm.
inline bool is_ladder_node(const Partition& lam, int ell) {
    require(ell >= 3, "ell-too-small", "ladder nodes need ell >= 3");
    for (int r = 1; r <= lam.length(); ++r)
        for (int c = 1; c <= lam.part(r); ++c)
            if (hook_length(lam, {r, c}) == ell * arm(lam, {r, c})) return false;
    return true;
}

} // namespace corecrystal
