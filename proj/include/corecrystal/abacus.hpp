#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "corecrystal/partition.hpp"

namespace corecrystal {

// A finite set of beta-numbers: exactly `bead_count` positions, strictly
// decreasing. The canonical N-bead set of lambda is lambda_i + N - i.
struct BetaSet {
    long long bead_count = 0;
    std::vector<long long> positions;
};

inline BetaSet beta_set(const Partition& lam, long long n_beads) {
    if (n_beads < lam.length())
        fail("N-too-small", "need at least " + std::to_string(lam.length()) + " beads");
    BetaSet b;
    b.bead_count = n_beads;
    b.positions.reserve(static_cast<std::size_t>(n_beads));
    for (long long i = 1; i <= n_beads; ++i)
        b.positions.push_back(lam.part(static_cast<int>(i)) + n_beads - i);
    return b;
}

// An abacus on `ell` runners. Beads sit at lambda_i + N - i for i >= 1
// (lambda_i = 0 past the last row), so positions below N - len - 1 form the
// solid tail present in every representative. N may be any integer; changing
// N by 1 shifts every bead one slot in reading order.
class Abacus {
public:
    Abacus(int ell, Partition lam, long long n_param)
        : ell_(ell), lam_(std::move(lam)), n_(n_param) {
        require(ell_ >= 2, "ell-too-small", "an abacus needs at least 2 runners");
    }

    static Abacus from_beta(int ell, const BetaSet& beta) {
        if (static_cast<long long>(beta.positions.size()) != beta.bead_count)
            fail("invalid-beta-set", "bead count does not match position list");
        std::vector<long long> pos = beta.positions;
        std::sort(pos.begin(), pos.end(), std::greater<>());
        if (std::adjacent_find(pos.begin(), pos.end()) != pos.end())
            fail("invalid-beta-set", "duplicate bead positions");
        if (!pos.empty() && pos.back() < 0)
            fail("invalid-beta-set", "listed positions must be nonnegative");
        // Recover the partition by counting gaps before each bead.
        std::vector<int> parts;
        for (std::size_t j = 0; j < pos.size(); ++j) {
            long long gaps = pos[j] - (beta.bead_count - 1 - static_cast<long long>(j));
            if (gaps < 0) fail("invalid-beta-set", "positions inconsistent with bead count");
            if (gaps > 0) parts.push_back(static_cast<int>(gaps));
        }
        return Abacus(ell, Partition(std::move(parts)), beta.bead_count);
    }

    int ell() const { return ell_; }
    const Partition& partition() const { return lam_; }
    long long n_param() const { return n_; }

    // Position of the i-th bead (i >= 1), rows past the diagram included.
    long long bead(long long i) const {
        int p = (i >= 1 && i <= lam_.length()) ? lam_.part(static_cast<int>(i)) : 0;
        return p + n_ - i;
    }

    bool is_bead(long long position) const {
        // Solid tail below the listed rows.
        if (position <= n_ - lam_.length() - 1) return true;
        for (int i = 1; i <= lam_.length(); ++i)
            if (lam_.part(i) + n_ - i == position) return true;
        return false;
    }

    // Highest bead level on the given runner.
    long long top_level(int runner) const {
        long long best;
        long long tail_top = n_ - lam_.length() - 1;
        // Largest tail position congruent to `runner`.
        long long cand = tail_top - imod(tail_top - runner, ell_);
        best = fdiv(cand, ell_);
        for (int i = 1; i <= lam_.length(); ++i) {
            long long p = lam_.part(i) + n_ - i;
            if (imod(p, ell_) == runner) best = std::max(best, fdiv(p, ell_));
        }
        return best;
    }

private:
    int ell_;
    Partition lam_;
    long long n_;
};

inline Partition partition_from_abacus(const Abacus& a) { return a.partition(); }

// Sum over runners of the highest bead level.
inline long long balance_number(const Abacus& a) {
    long long sum = 0;
    for (int c = 0; c < a.ell(); ++c) sum += a.top_level(c);
    return sum;
}

inline bool is_flush(const Abacus& a) {
    const Partition& lam = a.partition();
    int len = lam.length();
    // N-independent: bead i at lambda_i - i (up to shift); flush means every
    // bead has a bead one level up on its runner.
    std::set<long long> keys;
    for (int i = 1; i <= len; ++i) keys.insert(static_cast<long long>(lam.part(i)) - i);
    for (int i = 1; i <= len; ++i) {
        long long t = static_cast<long long>(lam.part(i)) - i - a.ell();
        if (t <= -(len + 1)) continue;  // inside the solid tail
        if (!keys.count(t)) return false;
    }
    return true;
}

// lambda is an ell-core iff its abacus is flush.
inline bool is_core(const Partition& lam, int ell) {
    return is_flush(Abacus(ell, lam, lam.length()));
}

// A point of the A_{ell-1} root lattice in runner coordinates
// (b_0, ..., b_{ell-1}); entries sum to zero.
using RootVector = std::vector<long long>;

namespace detail {
inline void check_root_vector(const RootVector& a, int ell) {
    require(static_cast<int>(a.size()) == ell, "bad-root-vector", "length must equal ell");
    if (std::accumulate(a.begin(), a.end(), 0LL) != 0)
        fail("nonzero-sum", "root vector coordinates must sum to 0");
}
} // namespace detail

// Level vector of the balanced flush abacus of an ell-core (pi^{-1}).
inline RootVector to_root_vector(const Partition& lam, int ell) {
    if (!is_core(lam, ell)) fail("not-a-core", lam.to_text());
    Abacus canonical(ell, lam, lam.length());
    long long shift = balance_number(canonical);
    Abacus balanced(ell, lam, lam.length() - shift);
    RootVector b(ell);
    for (int c = 0; c < ell; ++c) b[c] = balanced.top_level(c);
    return b;
}

// pi: fill runner c with beads from -inf down to level b_c and read off the
// unique ell-core with that balanced flush abacus.
inline Partition from_root_vector(const RootVector& b, int ell) {
    detail::check_root_vector(b, ell);
    long long lo = *std::min_element(b.begin(), b.end());
    long long hi = *std::max_element(b.begin(), b.end());
    std::vector<int> parts;
    long long gaps = 0;
    for (long long level = lo; level <= hi; ++level) {
        for (int c = 0; c < ell; ++c) {
            if (level <= b[c]) {
                if (gaps > 0) parts.push_back(static_cast<int>(gaps));
            } else {
                ++gaps;
            }
        }
    }
    std::reverse(parts.begin(), parts.end());
    Partition out(std::move(parts));
    if (!is_core(out, ell)) broken("from_root_vector produced a non-core");
    return out;
}

// Region r of a box: (r-1)*ell <= col - row < r*ell.
inline int region(BoxCoord b, int ell) {
    require(ell >= 2, "ell-too-small", "regions need ell >= 2");
    return static_cast<int>(fdiv(static_cast<long long>(b.col) - b.row, ell)) + 1;
}

// Garvan--Kim--Stanton n-vector: per residue, the maximum region holding a
// row-exposed box. The diagram is padded with zero rows so every residue has
// a column-0 boundary box.
inline RootVector n_vector(const Partition& lam, int ell) {
    if (!is_core(lam, ell)) fail("not-a-core", lam.to_text());
    RootVector b(ell);
    std::vector<bool> seen(ell, false);
    for (int r = 1; r <= lam.length(); ++r) {
        BoxCoord end{r, lam.part(r)};
        int i = residue(end, ell).value;
        int reg = region(end, ell);
        if (!seen[i] || reg > b[i]) { b[i] = reg; seen[i] = true; }
    }
    // Boundary boxes (r, 0) for the first ell zero rows cover each residue
    // once; deeper ones only have smaller regions.
    for (int r = lam.length() + 1; r <= lam.length() + ell; ++r) {
        int i = imod(0LL - r, ell);
        int reg = static_cast<int>(fdiv(0LL - r, ell)) + 1;
        if (!seen[i] || reg > b[i]) { b[i] = reg; seen[i] = true; }
    }
    if (std::accumulate(b.begin(), b.end(), 0LL) != 0)
        broken("n-vector does not sum to zero for " + lam.to_text());
    return b;
}

// Text art: runners as columns, levels descending; beads "(x)", gaps " x ".
inline std::string render_abacus(const Abacus& a) {
    const Partition& lam = a.partition();
    long long top = 0;
    for (int i = 1; i <= lam.length(); ++i)
        top = std::max(top, fdiv(lam.part(i) + a.n_param() - i, a.ell()));
    long long lo_listed = a.n_param() - lam.length() - 1;
    long long bottom = std::min<long long>(-1, fdiv(lo_listed, a.ell()));
    std::size_t width = std::max(std::to_string(bottom * a.ell()).size(),
                                 std::to_string((top + 1) * a.ell() + a.ell() - 1).size());
    std::string out;
    for (long long level = bottom; level <= top + 1; ++level) {
        for (int c = 0; c < a.ell(); ++c) {
            long long entry = level * a.ell() + c;
            std::string num = std::to_string(entry);
            while (num.size() < width) num.insert(num.begin(), ' ');
            out += a.is_bead(entry) ? "(" + num + ")" : " " + num + " ";
            if (c + 1 < a.ell()) out += ' ';
        }
        out += '\n';
    }
    return out;
}

} // namespace corecrystal
