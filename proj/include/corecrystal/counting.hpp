#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

#include "corecrystal/partition.hpp"
#include "corecrystal/rimhook.hpp"

namespace corecrystal {

using BigInt = boost::multiprecision::cpp_int;

// Truncated power series over the integers; all ring operations are exact up
// to the truncation order.
class IntSeries {
public:
    explicit IntSeries(int trunc) : c_(static_cast<std::size_t>(trunc) + 1) {
        require(trunc >= 0, "invalid-truncation", "");
    }

    static IntSeries monomial(int trunc, int degree, BigInt coeff = 1) {
        IntSeries s(trunc);
        if (degree <= trunc) s.c_[static_cast<std::size_t>(degree)] = std::move(coeff);
        return s;
    }

    static IntSeries one(int trunc) { return monomial(trunc, 0); }

    int trunc() const { return static_cast<int>(c_.size()) - 1; }

    const BigInt& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
    BigInt& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }

    IntSeries operator+(const IntSeries& o) const {
        check_same(o);
        IntSeries out(trunc());
        for (int k = 0; k <= trunc(); ++k) out[k] = (*this)[k] + o[k];
        return out;
    }

    IntSeries operator-(const IntSeries& o) const {
        check_same(o);
        IntSeries out(trunc());
        for (int k = 0; k <= trunc(); ++k) out[k] = (*this)[k] - o[k];
        return out;
    }

    IntSeries operator*(const IntSeries& o) const {
        check_same(o);
        IntSeries out(trunc());
        for (int i = 0; i <= trunc(); ++i) {
            if ((*this)[i] == 0) continue;
            for (int j = 0; i + j <= trunc(); ++j)
                out[i + j] += (*this)[i] * o[j];
        }
        return out;
    }

    // Multiplicative inverse; needs a unit constant term so the result stays
    // integral.
    IntSeries reciprocal() const {
        if (c_[0] != 1 && c_[0] != -1)
            fail("non-unit-constant", "series reciprocal needs constant term +-1");
        IntSeries out(trunc());
        out[0] = c_[0];
        for (int k = 1; k <= trunc(); ++k) {
            BigInt acc = 0;
            for (int j = 1; j <= k; ++j) acc += c_[static_cast<std::size_t>(j)] * out[k - j];
            out[k] = -c_[0] * acc;
        }
        return out;
    }

    IntSeries pow(int e) const {
        require(e >= 0, "invalid-exponent", "");
        IntSeries out = one(trunc());
        for (int i = 0; i < e; ++i) out = out * *this;
        return out;
    }

    friend bool operator==(const IntSeries&, const IntSeries&) = default;

private:
    void check_same(const IntSeries& o) const {
        if (trunc() != o.trunc()) fail("truncation-mismatch", "");
    }
    std::vector<BigInt> c_;
};

inline BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    BigInt out = 1;
    for (long long i = 0; i < k; ++i) {
        out *= n - i;
        out /= i + 1;
    }
    return out;
}

// Number of ell-cores with first part exactly k: binom(k + ell - 2, k).
inline BigInt core_count(int ell, int k) {
    require(ell >= 2, "ell-too-small", "");
    require(k >= 0, "invalid-k", "");
    return binomial(k + ell - 2, k);
}

// C_ell(x) = 1 / (1-x)^{ell-1}, coefficient k counting cores by first part.
inline IntSeries core_gf(int ell, int trunc) {
    require(ell >= 2, "ell-too-small", "");
    IntSeries one_minus_x = IntSeries::one(trunc) - IntSeries::monomial(trunc, 1);
    return one_minus_x.pow(ell - 1).reciprocal();
}

// B_ell(x) = (1 - x^{ell-1}) / ((1-x)^{ell-1} (1 - x^{ell-1} - x^ell)),
// coefficient k counting ell-partitions by first part.
inline IntSeries lpartition_gf(int ell, int trunc) {
    require(ell >= 2, "ell-too-small", "");
    IntSeries numer = IntSeries::one(trunc) - IntSeries::monomial(trunc, ell - 1);
    IntSeries denom = (IntSeries::one(trunc) - IntSeries::monomial(trunc, 1)).pow(ell - 1) *
                      (IntSeries::one(trunc) - IntSeries::monomial(trunc, ell - 1) -
                       IntSeries::monomial(trunc, ell));
    return numer * denom.reciprocal();
}

// p(n, at most m parts).
inline BigInt partitions_at_most_parts(int n, int m) {
    if (n < 0) return 0;
    if (m < 0) return n == 0 ? 1 : 0;
    std::vector<std::vector<BigInt>> dp(static_cast<std::size_t>(m) + 1,
                                        std::vector<BigInt>(static_cast<std::size_t>(n) + 1));
    for (int parts = 0; parts <= m; ++parts) dp[parts][0] = 1;
    for (int parts = 1; parts <= m; ++parts)
        for (int v = 1; v <= n; ++v)
            dp[parts][v] = dp[parts - 1][v] + (v >= parts ? dp[parts][v - parts] : 0);
    return dp[m][n];
}

// Number of ell-partitions of weight w with the given core: partitions of w
// into at most r+1 parts, where r counts the leading rows of the core in
// arithmetic progression of step ell-1.
inline BigInt count_lpartitions_core_weight(const Partition& core, int ell, int w) {
    require(w >= 0, "invalid-weight", "");
    if (!is_core(core, ell)) fail("not-a-core", core.to_text());
    int r = leading_row_run(core, ell);
    return partitions_at_most_parts(w, r + 1);
}

// Number of (ell,0)-JM partitions of weight w with the given core. For cores
// with a nonempty central mu this is the pair count (len <= r+1, len <= s+1);
// when mu is empty the tuples with rho_{r+1} = 0 or sigma_{s+1} = 0 form a
// union counted by inclusion-exclusion.
inline BigInt count_jm_core_weight(const Partition& core, int ell, int w) {
    require(ell >= 3, "ell-too-small", "JM counts need ell >= 3");
    require(w >= 0, "invalid-weight", "");
    if (!is_core(core, ell)) fail("not-a-core", core.to_text());
    int r = leading_row_run(core, ell);
    int s = leading_row_run(transpose(core), ell);
    bool mu_empty = core.part(r + 1) == s;
    BigInt total = 0;
    for (int a = 0; a <= w; ++a) {
        int b = w - a;
        if (!mu_empty) {
            total += partitions_at_most_parts(a, r + 1) * partitions_at_most_parts(b, s + 1);
        } else {
            total += partitions_at_most_parts(a, r + 1) * partitions_at_most_parts(b, s);
            total += partitions_at_most_parts(a, r) * partitions_at_most_parts(b, s + 1);
            total -= partitions_at_most_parts(a, r) * partitions_at_most_parts(b, s);
        }
    }
    return total;
}

} // namespace corecrystal
