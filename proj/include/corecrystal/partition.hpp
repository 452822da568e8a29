#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "corecrystal/errors.hpp"

namespace corecrystal {

// Always-nonnegative modulus.
inline int imod(long long v, int m) {
    int r = static_cast<int>(v % m);
    return r < 0 ? r + m : r;
}

// Floor division (round toward -inf).
inline long long fdiv(long long a, long long b) {
    long long q = a / b;
    return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

// A box position in a Young diagram, 1-indexed: (row, col).
struct BoxCoord {
    int row = 0;
    int col = 0;
    friend auto operator<=>(const BoxCoord&, const BoxCoord&) = default;
};

// Residue of a box: (col - row) mod ell.
struct Residue {
    int value = 0;
    int modulus = 0;
    friend bool operator==(const Residue&, const Residue&) = default;
};

// Integer partition: weakly decreasing positive parts. Trailing zeros are
// stripped on construction; the empty partition has length 0.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]))
                fail("invalid-partition", "parts must be weakly decreasing and positive");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    // 1-indexed part; 0 beyond the stored length.
    int part(int i) const {
        return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
    }

    bool contains(BoxCoord b) const {
        return b.row >= 1 && b.col >= 1 && b.col <= part(b.row);
    }

    friend auto operator<=>(const Partition&, const Partition&) = default;

    // Text form "8,5,4,1"; the empty partition renders as "".
    std::string to_text() const {
        std::string out;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(parts_[i]);
        }
        return out;
    }

    // Accepts "8,5,4,1" and exponent shorthand "6,1^7".
    static Partition parse(std::string_view text);

private:
    std::vector<int> parts_;
};

inline Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && text[pos] == ' ') ++pos; };
    auto read_int = [&]() -> int {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == start) fail("invalid-partition", "expected integer in \"" + std::string(text) + "\"");
        long long v = 0;
        for (std::size_t i = start; i < pos; ++i) {
            v = v * 10 + (text[i] - '0');
            if (v > 1000000000) fail("invalid-partition", "part too large");
        }
        return static_cast<int>(v);
    };
    skip_ws();
    if (pos == text.size()) return Partition{};
    for (;;) {
        int value = read_int();
        int repeat = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            repeat = read_int();
            skip_ws();
        }
        if (repeat < 0 || repeat > 100000) fail("invalid-partition", "bad exponent");
        for (int i = 0; i < repeat; ++i) parts.push_back(value);
        if (pos == text.size()) break;
        if (text[pos] != ',') fail("invalid-partition", "unexpected character in \"" + std::string(text) + "\"");
        ++pos;
    }
    return Partition(std::move(parts));
}

namespace detail {
inline void check_in_diagram(const Partition& lam, BoxCoord b) {
    if (!lam.contains(b))
        fail("box-outside-diagram",
             "(" + std::to_string(b.row) + "," + std::to_string(b.col) + ") not in " + lam.to_text());
}
} // namespace detail

// Boxes strictly to the right of b in its row.
inline int arm(const Partition& lam, BoxCoord b) {
    detail::check_in_diagram(lam, b);
    return lam.part(b.row) - b.col;
}

// Boxes strictly below b in its column.
inline int leg(const Partition& lam, BoxCoord b) {
    detail::check_in_diagram(lam, b);
    int count = 0;
    for (int r = b.row + 1; lam.part(r) >= b.col; ++r) ++count;
    return count;
}

inline int hook_length(const Partition& lam, BoxCoord b) {
    return arm(lam, b) + leg(lam, b) + 1;
}

inline Residue residue(BoxCoord b, int ell) {
    require(ell >= 2, "ell-too-small", "residues need ell >= 2");
    return Residue{imod(static_cast<long long>(b.col) - b.row, ell), ell};
}

inline Partition transpose(const Partition& lam) {
    std::vector<int> cols(lam.empty() ? 0 : lam.part(1), 0);
    for (int r = 1; r <= lam.length(); ++r)
        for (int c = 0; c < lam.part(r); ++c) ++cols[c];
    return Partition(std::move(cols));
}

// ell-regular: no part value repeated ell or more times.
inline bool is_regular(const Partition& lam, int ell) {
    require(ell >= 2, "ell-too-small", "regularity needs ell >= 2");
    int run = 1;
    for (int i = 2; i <= lam.length(); ++i) {
        run = (lam.part(i) == lam.part(i - 1)) ? run + 1 : 1;
        if (run >= ell) return false;
    }
    return true;
}

// Dominance order on partitions of equal size: all prefix sums compare.
inline bool dominance_leq(const Partition& lam, const Partition& mu) {
    if (lam.size() != mu.size())
        fail("size-mismatch", lam.to_text() + " vs " + mu.to_text());
    long long a = 0, b = 0;
    int n = std::max(lam.length(), mu.length());
    for (int i = 1; i <= n; ++i) {
        a += lam.part(i);
        b += mu.part(i);
        if (a > b) return false;
    }
    return true;
}

// Addable residue-i corners, in row order.
inline std::vector<BoxCoord> addable_boxes(const Partition& lam, int ell, int i) {
    require(ell >= 2 && i >= 0 && i < ell, "bad-residue", "need 0 <= i < ell");
    std::vector<BoxCoord> out;
    for (int r = 1; r <= lam.length() + 1; ++r) {
        if (r > 1 && lam.part(r - 1) <= lam.part(r)) continue;
        BoxCoord b{r, lam.part(r) + 1};
        if (residue(b, ell).value == i) out.push_back(b);
    }
    return out;
}

// Removable residue-i corners, in row order.
inline std::vector<BoxCoord> removable_boxes(const Partition& lam, int ell, int i) {
    require(ell >= 2 && i >= 0 && i < ell, "bad-residue", "need 0 <= i < ell");
    std::vector<BoxCoord> out;
    for (int r = 1; r <= lam.length(); ++r) {
        if (lam.part(r) == lam.part(r + 1)) continue;
        BoxCoord b{r, lam.part(r)};
        if (residue(b, ell).value == i) out.push_back(b);
    }
    return out;
}

// mu covers lam in Young's lattice: one box added.
inline bool covers(const Partition& lam, const Partition& mu) {
    if (mu.size() != lam.size() + 1) return false;
    int n = std::max(lam.length(), mu.length());
    for (int i = 1; i <= n; ++i)
        if (lam.part(i) > mu.part(i)) return false;
    return true;
}

// Streams every partition of n exactly once in descending lexicographic
// order: (n), (n-1,1), ..., (1^n).
inline void enumerate_partitions(int n, const std::function<void(const Partition&)>& fn) {
    require(n >= 0, "invalid-partition", "n must be nonnegative");
    std::vector<int> acc;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            fn(Partition(acc));
            return;
        }
        for (int p = std::min(max_part, remaining); p >= 1; --p) {
            acc.push_back(p);
            self(self, remaining - p, p);
            acc.pop_back();
        }
    };
    rec(rec, n, n);
}

inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    enumerate_partitions(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

// Number of standard Young tableaux of shape lam, by path counting in
// Young's lattice. Overflow is signalled, never wrapped.
inline unsigned long long count_standard_tableaux(const Partition& lam) {
    std::map<Partition, unsigned long long> memo;
    auto rec = [&](auto&& self, const Partition& p) -> unsigned long long {
        if (p.empty()) return 1;
        auto it = memo.find(p);
        if (it != memo.end()) return it->second;
        unsigned long long total = 0;
        for (int r = 1; r <= p.length(); ++r) {
            if (p.part(r) == p.part(r + 1)) continue;
            std::vector<int> smaller = p.parts();
            smaller[r - 1] -= 1;
            unsigned long long below = self(self, Partition(std::move(smaller)));
            if (__builtin_add_overflow(total, below, &total))
                fail("overflow", "standard tableau count exceeds machine word");
        }
        memo.emplace(p, total);
        return total;
    };
    return rec(rec, lam);
}

} // namespace corecrystal
