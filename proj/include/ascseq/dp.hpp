#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

#include "ascseq/common.hpp"
#include "ascseq/multipoly.hpp"

namespace ascseq::dp {

// Reference sequences ---------------------------------------------------------

BigCount catalan(std::size_t n);

/// N(n,k) = binom(n,k) binom(n,k-1) / n for 1 <= k <= n, zero otherwise.
BigCount narayana(std::size_t n, std::size_t k);

/// sum_{i=0}^{n-1} binom(n-1, i) C_i, for n >= 1.
BigCount binomial_catalan_transform(std::size_t n);

// Dense storage ----------------------------------------------------------------

/// Four-index table of counts. Reads outside the allocated box return zero so that
/// recurrences can reference negative or out-of-range indices directly; writes are
/// bounds-checked with assert.
class DenseArray4 {
public:
    DenseArray4() = default;
    DenseArray4(std::size_t d0, std::size_t d1, std::size_t d2, std::size_t d3);

    const BigCount& get(long i, long j, long k, long l) const;
    BigCount& ref(long i, long j, long k, long l);

private:
    bool inside(long i, long j, long k, long l) const;
    std::size_t index(long i, long j, long k, long l) const;

    std::size_t d0_ = 0, d1_ = 0, d2_ = 0, d3_ = 0;
    std::vector<BigCount> data_;
};

// b-array (0012-avoiders not ending in 0) ---------------------------------------

/// b[n][m][r][l]: members of S_0012(n) not ending in 0 with m ascents, r zeros and
/// final weakly decreasing run of length l. Non-zero only for n >= 2, 1 <= m <= n-1,
/// 1 <= r, l <= n-m.
class BArray {
public:
    explicit BArray(std::size_t nmax) : nmax_(nmax), data_(nmax + 1, nmax + 1, nmax + 1, nmax + 1) {}

    std::size_t nmax() const noexcept { return nmax_; }
    const BigCount& at(long n, long m, long r, long l) const { return data_.get(n, m, r, l); }
    BigCount& ref(long n, long m, long r, long l) { return data_.ref(n, m, r, l); }

    /// B_{n,m,r}(u) = sum_{l=1}^{n-m} b[n][m][r][l] u^l. The sum runs over l, the run
    /// length; r is fixed.
    series::MultiPoly row_poly(std::size_t n, std::size_t m, std::size_t r) const;

    /// |B_n| = sum over (m, r, l).
    BigCount total(std::size_t n) const;
    /// A_0012(n) = 1 + sum_{k=2}^{n} |B_k|: strip the trailing zeros of each sequence.
    BigCount count_0012(std::size_t n) const;

private:
    std::size_t nmax_;
    DenseArray4 data_;
};

/// Fills b by increasing n. Requires nmax >= 2.
BArray build_b_array(std::size_t nmax);

/// Same recurrence with a caller-supplied upper limit for the inner j-sum of the r = 1
/// case: `capped` uses min(i-1, l-1), otherwise l-1 only. Both must agree.
BArray build_b_array_variant(std::size_t nmax, bool capped);

/// table[n][m] = B_{n,m}(u, v) = sum_{r,l} b[n][m][r][l] u^l v^r.
using BPolyTable = std::vector<std::vector<series::MultiPoly>>;

/// Builds B_{n,m}(u,v) from the polynomial recurrence. The (1-u) quotient is an exact
/// polynomial division; a nonzero remainder throws InconsistencyError.
BPolyTable build_b_polys(std::size_t nmax);

// a-array (1012 / 12123) -------------------------------------------------------------

/// a[n][t][s]: 12123-avoiding partitions of [n] with at least two blocks whose largest
/// letter first appears at t and second largest at s. Non-zero only for 1 <= s < t <= n.
class AArray1012 {
public:
    explicit AArray1012(std::size_t nmax);

    std::size_t nmax() const noexcept { return nmax_; }
    const BigCount& at(long n, long t, long s) const;
    BigCount& ref(long n, long t, long s);

    /// A_1012(n) = 1 + sum_{t,s} a[n][t][s].
    BigCount count_1012(std::size_t n) const;

private:
    bool inside(long n, long t, long s) const;

    std::size_t nmax_;
    std::vector<BigCount> data_;
};

AArray1012 build_a1012_array(std::size_t nmax);
BigCount a1012(std::size_t n);

// 0123 ---------------------------------------------------------------------------

/// a_0..a_nmax from a_n = 5a_{n-1} - 6a_{n-2} + a_{n-3}, a_0 = a_1 = 1, a_2 = 2.
std::vector<BigCount> a0123_sequence(std::size_t nmax);

/// 0123-avoiders with at least three distinct letters, by the closed quintuple sum
/// over (r, l, i, j, s).
BigCount b0123_direct(std::size_t n);

// c/d arrays (210) -----------------------------------------------------------------

/// c[n][m][r][s]: members of S_210(n) with m ascents, largest letter r, last letter s.
/// d: the subset whose next-to-last letter is r.
class CDArrays {
public:
    explicit CDArrays(std::size_t nmax)
        : nmax_(nmax), c_(nmax + 1, nmax, nmax, nmax), d_(nmax + 1, nmax, nmax, nmax)
    {
    }

    std::size_t nmax() const noexcept { return nmax_; }
    const BigCount& c(long n, long m, long r, long s) const { return c_.get(n, m, r, s); }
    const BigCount& d(long n, long m, long r, long s) const { return d_.get(n, m, r, s); }
    BigCount& c_ref(long n, long m, long r, long s) { return c_.ref(n, m, r, s); }
    BigCount& d_ref(long n, long m, long r, long s) { return d_.ref(n, m, r, s); }

    /// A_210(n) = sum_{m,r,s} c[n][m][r][s].
    BigCount count_210(std::size_t n) const;

private:
    std::size_t nmax_;
    DenseArray4 c_, d_;
};

CDArrays build_cd_arrays(std::size_t nmax);
BigCount a210_from_cd(std::size_t n);

}  // namespace ascseq::dp
