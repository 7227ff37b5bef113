#include "ascseq/dp.hpp"

#include <algorithm>

namespace ascseq::dp {

using series::MultiPoly;
using series::Var;

BigCount catalan(std::size_t n)
{
    BigCount c = binomial(static_cast<long>(2 * n), static_cast<long>(n));
    return c / static_cast<unsigned long>(n + 1);
}

BigCount narayana(std::size_t n, std::size_t k)
{
    if (n == 0 || k < 1 || k > n)
        return 0;
    const long nn = static_cast<long>(n), kk = static_cast<long>(k);
    BigCount v = binomial(nn, kk) * binomial(nn, kk - 1);
    return v / static_cast<unsigned long>(n);
}

BigCount binomial_catalan_transform(std::size_t n)
{
    if (n == 0)
        throw DomainError("binomial_catalan_transform: n must be at least 1");
    BigCount sum = 0;
    for (std::size_t i = 0; i < n; ++i)
        sum += binomial(static_cast<long>(n - 1), static_cast<long>(i)) * catalan(i);
    return sum;
}

// DenseArray4 --------------------------------------------------------------------

DenseArray4::DenseArray4(std::size_t d0, std::size_t d1, std::size_t d2, std::size_t d3)
    : d0_(d0), d1_(d1), d2_(d2), d3_(d3), data_(d0 * d1 * d2 * d3)
{
}

bool DenseArray4::inside(long i, long j, long k, long l) const
{
    return i >= 0 && j >= 0 && k >= 0 && l >= 0 && static_cast<std::size_t>(i) < d0_ &&
           static_cast<std::size_t>(j) < d1_ && static_cast<std::size_t>(k) < d2_ && static_cast<std::size_t>(l) < d3_;
}

std::size_t DenseArray4::index(long i, long j, long k, long l) const
{
    return ((static_cast<std::size_t>(i) * d1_ + static_cast<std::size_t>(j)) * d2_ + static_cast<std::size_t>(k)) *
               d3_ +
           static_cast<std::size_t>(l);
}

const BigCount& DenseArray4::get(long i, long j, long k, long l) const
{
    static const BigCount zero = 0;
    if (!inside(i, j, k, l))
        return zero;
    return data_[index(i, j, k, l)];
}

BigCount& DenseArray4::ref(long i, long j, long k, long l)
{
    assert(inside(i, j, k, l));
    if (!inside(i, j, k, l))
        throw InconsistencyError("dense array write out of bounds");
    return data_[index(i, j, k, l)];
}

// b-array ---------------------------------------------------------------------------

MultiPoly BArray::row_poly(std::size_t n, std::size_t m, std::size_t r) const
{
    MultiPoly p;
    for (std::size_t l = 1; l + m <= n; ++l)
        p += MultiPoly::monomial(Rat(at(static_cast<long>(n), static_cast<long>(m), static_cast<long>(r),
                                        static_cast<long>(l))),
                                 {0, static_cast<unsigned>(l), 0});
    return p;
}

BigCount BArray::total(std::size_t n) const
{
    BigCount t = 0;
    const long nn = static_cast<long>(n);
    for (long m = 1; m < nn; ++m)
        for (long r = 1; r <= nn - m; ++r)
            for (long l = 1; l <= nn - m; ++l)
                t += at(nn, m, r, l);
    return t;
}

BigCount BArray::count_0012(std::size_t n) const
{
    if (n == 0 || n > nmax_)
        throw DomainError("count_0012: n outside 1.." + std::to_string(nmax_));
    BigCount t = 1;
    for (std::size_t k = 2; k <= n; ++k)
        t += total(k);
    return t;
}

BArray build_b_array_variant(std::size_t nmax, bool capped)
{
    if (nmax < 2)
        throw DomainError("build_b_array: nmax must be at least 2");
    BArray b(nmax);
    const long N = static_cast<long>(nmax);
    for (long n = 2; n <= N; ++n) {
        for (long m = 1; m <= n - 1; ++m) {
            for (long r = 1; r <= n - m; ++r) {
                for (long l = 1; l <= n - m; ++l) {
                    BigCount v = 0;
                    if (m == 1) {
                        v = (r + l == n) ? 1 : 0;
                    } else if (r == 1) {
                        for (long i = 1; i <= n - m; ++i) {
                            const long t = capped ? std::min(i - 1, l - 1) : l - 1;
                            for (long j = 0; j <= t; ++j)
                                v += b.at(n - j - 1, m - 1, i - j, l - j);
                        }
                    } else {
                        v = b.at(n - 1, m, r - 1, l);
                        for (long j = l + 1; j <= n - m; ++j)
                            v += b.at(n - 1, m - 1, r - 1, j);
                    }
                    b.ref(n, m, r, l) = v;
                }
            }
        }
    }
    return b;
}

BArray build_b_array(std::size_t nmax) { return build_b_array_variant(nmax, true); }

BPolyTable build_b_polys(std::size_t nmax)
{
    if (nmax < 2)
        throw DomainError("build_b_polys: nmax must be at least 2");
    BPolyTable B(nmax + 1);
    for (std::size_t n = 0; n <= nmax; ++n)
        B[n].assign(n + 1, MultiPoly());
    auto get = [&](std::size_t n, std::size_t m) -> const MultiPoly& {
        static const MultiPoly zero;
        return (n < B.size() && m < B[n].size()) ? B[n][m] : zero;
    };
    const MultiPoly u = MultiPoly::var(Var::u), v = MultiPoly::var(Var::v);
    const MultiPoly one_minus_u = MultiPoly(1) - u;

    for (std::size_t n = 2; n <= nmax; ++n) {
        for (std::size_t r = 1; r <= n - 1; ++r)
            B[n][1] += MultiPoly::monomial(1, {0, static_cast<unsigned>(n - r), static_cast<unsigned>(r)});
        for (std::size_t m = 2; m + 1 <= n; ++m) {
            const MultiPoly& prev = get(n - 1, m - 1);
            MultiPoly diff = u * prev.substitute(Var::u, Rat(1)) - prev;
            MultiPoly quotient = diff.divide_exact(
                one_minus_u, "B_{" + std::to_string(n) + "," + std::to_string(m) + "} (1-u) quotient");
            MultiPoly tail;
            for (std::size_t j = 0; j + m + 1 <= n; ++j)
                tail += MultiPoly::var(Var::u, static_cast<unsigned>(j)) * get(n - j - 1, m - 1).substitute(Var::v, Rat(1));
            B[n][m] = v * (get(n - 1, m) + quotient + tail);
        }
    }
    return B;
}

// a-array ----------------------------------------------------------------------------

AArray1012::AArray1012(std::size_t nmax) : nmax_(nmax), data_((nmax + 1) * (nmax + 1) * (nmax + 1)) {}

bool AArray1012::inside(long n, long t, long s) const
{
    const long N = static_cast<long>(nmax_);
    return n >= 0 && t >= 0 && s >= 0 && n <= N && t <= N && s <= N;
}

const BigCount& AArray1012::at(long n, long t, long s) const
{
    static const BigCount zero = 0;
    if (!inside(n, t, s))
        return zero;
    const std::size_t d = nmax_ + 1;
    return data_[(static_cast<std::size_t>(n) * d + static_cast<std::size_t>(t)) * d + static_cast<std::size_t>(s)];
}

BigCount& AArray1012::ref(long n, long t, long s)
{
    assert(inside(n, t, s));
    if (!inside(n, t, s))
        throw InconsistencyError("a-array write out of bounds");
    const std::size_t d = nmax_ + 1;
    return data_[(static_cast<std::size_t>(n) * d + static_cast<std::size_t>(t)) * d + static_cast<std::size_t>(s)];
}

BigCount AArray1012::count_1012(std::size_t n) const
{
    if (n == 0 || n > nmax_)
        throw DomainError("count_1012: n outside 1.." + std::to_string(nmax_));
    BigCount total = 1;
    const long nn = static_cast<long>(n);
    for (long t = 2; t <= nn; ++t)
        for (long s = 1; s < t; ++s)
            total += at(nn, t, s);
    return total;
}

AArray1012 build_a1012_array(std::size_t nmax)
{
    if (nmax < 2)
        throw DomainError("build_a1012_array: nmax must be at least 2");
    AArray1012 a(nmax);
    const long N = static_cast<long>(nmax);
    for (long n = 2; n <= N; ++n) {
        for (long t = 2; t <= n; ++t) {
            a.ref(n, t, 1) = pow2(static_cast<unsigned>(n - t));
            if (n < 3)
                continue;
            for (long s = 2; s < t; ++s) {
                BigCount v = 0;
                for (long j = t; j <= n - 1; ++j)
                    v += a.at(n - 1, j, s);
                for (long r = 1; r <= t - s; ++r)
                    for (long i = 1; i <= s - 1; ++i)
                        v += a.at(n - r, t - r, i);
                a.ref(n, t, s) = v;
            }
        }
    }
    return a;
}

BigCount a1012(std::size_t n)
{
    if (n == 0)
        throw DomainError("a1012: n must be at least 1");
    if (n == 1)
        return 1;
    return build_a1012_array(n).count_1012(n);
}

// 0123 -----------------------------------------------------------------------------------

std::vector<BigCount> a0123_sequence(std::size_t nmax)
{
    std::vector<BigCount> a;
    a.reserve(nmax + 1);
    for (std::size_t n = 0; n <= nmax; ++n) {
        if (n <= 1)
            a.emplace_back(1);
        else if (n == 2)
            a.emplace_back(2);
        else
            a.push_back(5 * a[n - 1] - 6 * a[n - 2] + a[n - 3]);
    }
    return a;
}

BigCount b0123_direct(std::size_t n)
{
    BigCount b = 0;
    const long N = static_cast<long>(n);
    for (long r = 2; 2 * r <= N + 1; ++r)
        for (long l = 1; l <= r - 1; ++l)
            for (long i = 2 * r - 2; i <= N - 1; ++i)
                for (long j = 2 * r - 2; j <= i; ++j)
                    for (long s = 0; s <= N - i - 1; ++s)
                        b += binomial(j - 1, 2 * r - 3) * binomial(N - i - 1, s) * binomial(s + l - 1, l - 1) *
                             pow2(static_cast<unsigned>(N - i - s - 1));
    return b;
}

// c/d arrays --------------------------------------------------------------------------------

BigCount CDArrays::count_210(std::size_t n) const
{
    if (n == 0 || n > nmax_)
        throw DomainError("count_210: n outside 1.." + std::to_string(nmax_));
    BigCount total = 0;
    const long nn = static_cast<long>(n);
    for (long m = 0; m < nn; ++m)
        for (long r = 0; r <= m; ++r)
            for (long s = 0; s <= r; ++s)
                total += c(nn, m, r, s);
    return total;
}

CDArrays build_cd_arrays(std::size_t nmax)
{
    if (nmax < 1)
        throw DomainError("build_cd_arrays: nmax must be at least 1");
    CDArrays a(nmax);
    a.c_ref(1, 0, 0, 0) = 1;
    a.d_ref(1, 0, 0, 0) = 0;
    const long N = static_cast<long>(nmax);
    for (long n = 2; n <= N; ++n) {
        // d on the diagonal
        for (long m = 0; m < n; ++m)
            for (long r = 0; r <= m; ++r)
                a.d_ref(n, m, r, r) = a.c(n - 1, m, r, r);
        // d below the diagonal
        for (long m = 0; m < n; ++m)
            for (long r = 0; r <= m; ++r)
                for (long s = 0; s < r; ++s) {
                    BigCount v = a.d(n - 1, m, r, s);
                    for (long i = s + 1; i <= r - 1; ++i)
                        v += a.d(n - 1, m - 1, i, s);
                    for (long i = 0; i <= s; ++i)
                        for (long j = i; j <= r; ++j)
                            v += a.c(n - 2, m - 1, j, i);
                    a.d_ref(n, m, r, s) = v;
                }
        // c on the diagonal
        for (long m = 0; m < n; ++m)
            for (long r = 0; r <= m; ++r) {
                BigCount v = a.d(n, m, r, r);
                for (long i = 0; i <= r - 1; ++i)
                    for (long j = i; j <= r; ++j)
                        v += a.c(n - 1, m - 1, j, i);
                a.c_ref(n, m, r, r) = v;
            }
        // c below the diagonal
        for (long m = 0; m < n; ++m)
            for (long r = 0; r <= m; ++r)
                for (long s = 0; s < r; ++s) {
                    BigCount v = a.c(n - 1, m, r, s) + a.d(n, m, r, s);
                    for (long i = 0; i <= s - 1; ++i)
                        v += a.c(n - 1, m - 1, r, i);
                    a.c_ref(n, m, r, s) = v;
                }
    }
    return a;
}

BigCount a210_from_cd(std::size_t n) { return build_cd_arrays(n).count_210(n); }

}  // namespace ascseq::dp
