#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "corecrystal/abacus.hpp"
#include "corecrystal/partition.hpp"

namespace corecrystal {

namespace detail {

// Nonnegative bead positions of the canonical abacus (first-column hooks);
// every negative position is implicitly a bead.
inline std::vector<long long> hook_beads(const Partition& lam) {
    std::vector<long long> out;
    for (int i = 1; i <= lam.length(); ++i)
        out.push_back(static_cast<long long>(lam.part(i)) + lam.length() - i);
    return out;  // strictly decreasing
}

// Partition read from a nonnegative bead set (descending) with a solid
// negative tail.
inline Partition partition_from_nonneg_beads(std::vector<long long> beads) {
    std::sort(beads.begin(), beads.end(), std::greater<>());
    std::vector<int> parts;
    for (std::size_t j = 0; j < beads.size(); ++j) {
        long long gaps = beads[j] - (static_cast<long long>(beads.size()) - 1 - j);
        if (gaps < 0) broken("bead set not strictly decreasing");
        if (gaps > 0) parts.push_back(static_cast<int>(gaps));
    }
    return Partition(std::move(parts));
}

} // namespace detail

// Phi_ell^k with k = lambda_1: delete the runner holding the largest bead
// (the rightmost runner when there are none) and close up, keeping levels.
inline Partition phi(const Partition& lam, int ell) {
    require(ell >= 2, "ell-too-small", "the bijection needs ell >= 2");
    if (!is_core(lam, ell)) fail("not-a-core", lam.to_text());
    auto beads = detail::hook_beads(lam);
    int removed = beads.empty() ? ell - 1 : static_cast<int>(beads.front() % ell);
    std::vector<long long> kept;
    for (long long p : beads) {
        int c = static_cast<int>(p % ell);
        if (c == removed) continue;
        kept.push_back((p / ell) * (ell - 1) + c - (c > removed ? 1 : 0));
    }
    return detail::partition_from_nonneg_beads(std::move(kept));
}

// Inverse: insert a flush runner whose top bead sits just after the k-th gap
// of an abacus of mu.
inline Partition phi_inverse(const Partition& mu, int ell, int k) {
    require(ell >= 2, "ell-too-small", "the bijection needs ell >= 2");
    require(k >= 0, "invalid-k", "k must be nonnegative");
    int m = ell - 1;
    if (m == 1) {
        if (!mu.empty()) fail("not-a-core", "the only 1-core is the empty partition");
    } else if (!is_core(mu, m)) {
        fail("not-a-core", mu.to_text() + " is not a " + std::to_string(m) + "-core");
    }
    if (mu.part(1) > k)
        fail("first-part-exceeds-k", mu.to_text() + " has first part > " + std::to_string(k));
    if (k == 0) return Partition{};

    auto beads = detail::hook_beads(mu);
    std::set<long long> bead_set(beads.begin(), beads.end());
    long long g = -1;
    for (long long q = 0, found = 0; found < k; ++q)
        if (!bead_set.count(q)) { ++found; g = q; }

    int c = static_cast<int>(g % m);
    long long level = g / m;
    int inserted;
    long long top_level;
    if (c < m - 1) {
        inserted = c + 1;
        top_level = level;
    } else {
        inserted = 0;
        top_level = level + 1;
    }
    std::vector<long long> out;
    for (long long p : beads) {
        int pc = static_cast<int>(p % m);
        int nc = pc + (pc >= inserted ? 1 : 0);
        out.push_back((p / m) * ell + nc);
    }
    for (long long lv = 0; lv <= top_level; ++lv) out.push_back(lv * ell + inserted);
    Partition lam = detail::partition_from_nonneg_beads(std::move(out));
    if (lam.part(1) != k || !is_core(lam, ell)) broken("phi_inverse produced a wrong core");
    return lam;
}

// Same bijection on the Young diagram: delete the rows whose first-column
// hook is congruent to h_(1,1) mod ell.
inline Partition phi_rows(const Partition& lam, int ell) {
    require(ell >= 2, "ell-too-small", "the bijection needs ell >= 2");
    if (!is_core(lam, ell)) fail("not-a-core", lam.to_text());
    if (lam.empty()) return lam;
    int len = lam.length();
    int target = imod(static_cast<long long>(lam.part(1)) + len - 1, ell);
    std::vector<int> rows;
    for (int i = 1; i <= len; ++i)
        if (imod(static_cast<long long>(lam.part(i)) + len - i, ell) != target)
            rows.push_back(lam.part(i));
    return Partition(std::move(rows));
}

// psi_m: rotate right and add 1 to the new first coordinate.
inline std::vector<long long> psi_step(std::vector<long long> v) {
    require(!v.empty(), "invalid-vector", "psi needs m >= 1");
    std::rotate(v.rbegin(), v.rbegin() + 1, v.rend());
    v.front() += 1;
    return v;
}

// The bijection on root-lattice coordinates: drop the rightmost largest
// coordinate a_i and apply psi_{ell-1} a_i times.
inline std::vector<long long> phi_geometric(const RootVector& a, int ell) {
    detail::check_root_vector(a, ell);
    std::size_t i = 0;
    for (std::size_t j = 0; j < a.size(); ++j)
        if (a[j] >= a[i]) i = j;
    long long t = a[i];
    if (t < 0) broken("maximum of a sum-zero vector is negative");
    std::vector<long long> w;
    for (std::size_t j = 0; j < a.size(); ++j)
        if (j != i) w.push_back(a[j]);
    for (long long step = 0; step < t; ++step) w = psi_step(std::move(w));
    return w;
}

enum class StepKind { ascent, descent, neither };

// s_i classification from the level vector: ascent when b_{i-1} > b_i -
// delta_{i,0}, with b_{-1} read as b_{ell-1}.
inline StepKind ascent_descent(const Partition& lam, int ell, int i) {
    require(i >= 0 && i < ell, "bad-residue", "need 0 <= i < ell");
    RootVector b = to_root_vector(lam, ell);
    long long left = i == 0 ? b[ell - 1] : b[i - 1];
    long long right = b[i] - (i == 0 ? 1 : 0);
    if (left > right) return StepKind::ascent;
    if (left < right) return StepKind::descent;
    return StepKind::neither;
}

// s_i action on an ell-core: add every addable residue-i box (ascent),
// remove every removable one (descent), or do nothing.
inline Partition apply_si(const Partition& lam, int ell, int i) {
    StepKind kind = ascent_descent(lam, ell, i);
    if (kind == StepKind::neither) return lam;
    std::vector<int> parts = lam.parts();
    if (kind == StepKind::ascent) {
        for (BoxCoord b : addable_boxes(lam, ell, i)) {
            if (b.row == static_cast<int>(parts.size()) + 1)
                parts.push_back(1);
            else
                parts[b.row - 1] += 1;
        }
    } else {
        for (BoxCoord b : removable_boxes(lam, ell, i)) parts[b.row - 1] -= 1;
    }
    return Partition(std::move(parts));
}

struct CoxeterWord {
    std::vector<int> letters;
    friend bool operator==(const CoxeterWord&, const CoxeterWord&) = default;
};

// Canonical reduced word w(lambda): repeatedly strip the residue of the
// rightmost box in the bottom row. Reading the word left to right replays
// the reduction to the empty partition.
inline CoxeterWord canonical_word(const Partition& lam, int ell) {
    if (!is_core(lam, ell)) fail("not-a-core", lam.to_text());
    CoxeterWord w;
    Partition cur = lam;
    while (!cur.empty()) {
        int len = cur.length();
        int i = imod(static_cast<long long>(cur.part(len)) - len, ell);
        Partition next = apply_si(cur, ell, i);
        if (next.size() >= cur.size()) broken("bottom-row residue was not a descent");
        w.letters.push_back(i);
        cur = std::move(next);
    }
    return w;
}

// Coxeter length: sum over residues of the longest row ending in that
// residue.
inline long long coxeter_length(const Partition& lam, int ell) {
    if (!is_core(lam, ell)) fail("not-a-core", lam.to_text());
    std::vector<long long> best(ell, 0);
    for (int r = 1; r <= lam.length(); ++r) {
        int i = imod(static_cast<long long>(lam.part(r)) - r, ell);
        best[i] = std::max(best[i], static_cast<long long>(lam.part(r)));
    }
    long long sum = 0;
    for (long long v : best) sum += v;
    return sum;
}

// lambda_1 from the balanced level vector, via the rightmost largest
// coordinate; both displayed formulas are computed and must agree.
inline long long first_part_from_vector(const RootVector& a, int ell) {
    detail::check_root_vector(a, ell);
    std::size_t i = 0;
    for (std::size_t j = 0; j < a.size(); ++j)
        if (a[j] >= a[i]) i = j;
    long long direct = (a[i] - 1) * ell + static_cast<long long>(i) + 1;
    long long gaps = 0;
    for (std::size_t j = 0; j < i; ++j) gaps += a[i] - a[j];
    for (std::size_t j = i + 1; j < a.size(); ++j) gaps += a[i] - a[j] - 1;
    if (direct != gaps) broken("first-part formulas disagree");
    return direct;
}

// Membership of pi^{-1}(lambda) in the hyperplane H_ell^k. The hyperplane
// coordinates use the 1-based residue convention 1 <= (k mod ell) <= ell.
inline bool hyperplane_check(const RootVector& a, int ell, long long k) {
    detail::check_root_vector(a, ell);
    require(k >= 0, "invalid-k", "k must be nonnegative");
    int idx = k == 0 ? ell : imod(k - 1, ell) + 1;
    long long level = (k + ell - 1) / ell;  // ceil(k / ell)
    return a[idx - 1] == level;
}

struct Subexpression {
    CoxeterWord word;             // w(lambda)
    std::vector<int> j_indices;   // 0-based positions kept by Phi
    CoxeterWord relabelled;       // the J-subword re-indexed mod ell-1
};

namespace detail {

// Rows not equivalent to the first row (equivalence: residue of the
// rightmost box), i.e. the rows Phi keeps.
inline Partition surviving_rows(const Partition& lam, int ell) {
    if (lam.empty()) return lam;
    int target = imod(static_cast<long long>(lam.part(1)) - 1, ell);
    std::vector<int> rows;
    for (int r = 1; r <= lam.length(); ++r)
        if (imod(static_cast<long long>(lam.part(r)) - r, ell) != target)
            rows.push_back(lam.part(r));
    return Partition(std::move(rows));
}

} // namespace detail

// The bijection as a subexpression of w(lambda): J collects the steps that
// leave the first row untouched; replaying those steps against the image at
// modulus ell-1 yields w(Phi(lambda)).
inline Subexpression phi_subexpression(const Partition& lam, int ell) {
    if (!is_core(lam, ell)) fail("not-a-core", lam.to_text());
    Subexpression out;
    Partition cur = lam;
    Partition image = detail::surviving_rows(cur, ell);
    int idx = 0;
    while (!cur.empty()) {
        int len = cur.length();
        int i = imod(static_cast<long long>(cur.part(len)) - len, ell);
        out.word.letters.push_back(i);
        Partition next = apply_si(cur, ell, i);
        if (next.part(1) == cur.part(1)) {
            // Step stays inside the image: advance its own reduction.
            if (image.empty()) broken("image exhausted before the word");
            int jlen = image.length();
            int letter = imod(static_cast<long long>(image.part(jlen)) - jlen, ell - 1);
            image = apply_si(image, ell - 1, letter);
            if (detail::surviving_rows(next, ell) != image)
                broken("subexpression step does not track the image");
            out.j_indices.push_back(idx);
            out.relabelled.letters.push_back(letter);
        } else if (detail::surviving_rows(next, ell) != image) {
            broken("deleted step disturbed the image");
        }
        cur = std::move(next);
        ++idx;
    }
    if (!image.empty()) broken("image not exhausted with the word");
    if (static_cast<long long>(out.word.letters.size()) -
            static_cast<long long>(out.j_indices.size()) != lam.part(1))
        broken("length drop is not lambda_1");
    return out;
}

// Lapointe--Morse rho_ell: left-justify the boxes with hook length <= ell.
inline Partition lm_rho(const Partition& lam, int ell) {
    require(ell >= 2, "ell-too-small", "rho needs ell >= 2");
    if (!is_core(lam, ell)) fail("not-a-core", lam.to_text());
    std::vector<int> rows;
    for (int r = 1; r <= lam.length(); ++r) {
        int count = 0;
        for (int c = 1; c <= lam.part(r); ++c)
            if (hook_length(lam, {r, c}) <= ell) ++count;
        if (count == 0 || count > ell - 1) broken("skew row count out of range");
        rows.push_back(count);
    }
    return Partition(std::move(rows));
}

// Per-box mask of the skew (hook <= ell) boxes behind rho.
inline std::vector<std::vector<bool>> lm_skew_mask(const Partition& lam, int ell) {
    require(ell >= 2, "ell-too-small", "rho needs ell >= 2");
    if (!is_core(lam, ell)) fail("not-a-core", lam.to_text());
    std::vector<std::vector<bool>> mask(lam.length());
    for (int r = 1; r <= lam.length(); ++r) {
        mask[r - 1].assign(lam.part(r), false);
        for (int c = 1; c <= lam.part(r); ++c)
            mask[r - 1][c - 1] = hook_length(lam, {r, c}) <= ell;
    }
    return mask;
}

// Upsilon: delete the first column.
inline Partition upsilon(const Partition& nu) {
    std::vector<int> rows;
    for (int r = 1; r <= nu.length(); ++r)
        if (nu.part(r) > 1) rows.push_back(nu.part(r) - 1);
    return Partition(std::move(rows));
}

// Commuting square through the transposed bijection:
// rho_{ell-1}(tr(phi(tr lambda))) = upsilon(rho_ell(lambda)).
inline bool verify_lm_diagram(const Partition& lam, int ell) {
    require(ell >= 3, "ell-too-small", "the diagram needs ell >= 3");
    if (!is_core(lam, ell)) fail("not-a-core", lam.to_text());
    Partition tilde = transpose(phi(transpose(lam), ell));
    return lm_rho(tilde, ell - 1) == upsilon(lm_rho(lam, ell));
}

} // namespace corecrystal
