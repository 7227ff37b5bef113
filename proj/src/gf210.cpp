#include "ascseq/gf210.hpp"

namespace ascseq::series {

Gf210Table::Gf210Table(std::size_t mmax) : mmax_(mmax), f_(mmax + 1)
{
    for (std::size_t m = 0; m <= mmax; ++m) {
        f_[m].resize(m + 1);
        for (std::size_t r = 0; r <= m; ++r)
            f_[m][r].resize(r + 1);
    }
}

const RationalFun& Gf210Table::at(long m, long r, long s) const
{
    static const RationalFun zero;
    if (m < 0 || s < 0 || s > r || r > m || static_cast<std::size_t>(m) > mmax_)
        return zero;
    return f_[static_cast<std::size_t>(m)][static_cast<std::size_t>(r)][static_cast<std::size_t>(s)];
}

RationalFun Gf210Table::f_m(std::size_t m) const
{
    RationalFun sum;
    for (const auto& row : f_.at(m))
        for (const auto& f : row)
            sum += f;
    return sum;
}

std::vector<Rat> Gf210Table::total(std::size_t order) const
{
    std::vector<Rat> out(order + 1);
    out[0] = 1;
    for (std::size_t m = 0; m <= mmax_; ++m) {
        const auto e = f_m(m).expand(order);
        for (std::size_t n = 0; n <= order; ++n)
            out[n] += e[n];
    }
    return out;
}

Gf210Table build_gf210_table(std::size_t mmax, std::size_t order, Gf210Variant variant)
{
    Gf210Table t(mmax);
    const RationalFun one_run = RationalFun::monomial(1, 1);   // x/(1-x)
    const RationalFun two_runs = RationalFun::monomial(2, 2);  // x^2/(1-x)^2
    t.ref(0, 0, 0) = one_run;

    for (long m = 1; m <= static_cast<long>(mmax); ++m) {
        for (long r = 0; r <= m; ++r) {
            // s < r: the final run of s follows a run of some i < s, or a run of r
            for (long s = 0; s < r; ++s) {
                RationalFun lower, between, after_small, overlap;
                for (long i = 0; i <= s - 1; ++i)
                    lower += t.at(m - 1, r, i);
                for (long j = s + 1; j <= r - 1; ++j)
                    between += t.at(m - 1, j, s);
                for (long i = 0; i <= s; ++i) {
                    const long jmax = variant == Gf210Variant::displayed ? r : s;
                    for (long j = i; j <= jmax; ++j)
                        after_small += t.at(m - 1, j, i);
                }
                for (long j = s + 1; j <= r - 1; ++j)
                    for (long i = 0; i <= s - 1; ++i)
                        overlap += t.at(m - 2, j, i);
                t.ref(m, r, s) = one_run * (lower + between) + two_runs * (after_small - overlap);
            }
            // s = r; at r = 0 this evaluates to zero rather than assuming it
            RationalFun below;
            for (long j = 0; j <= r; ++j)
                for (long i = 0; i <= j; ++i)
                    below += t.at(m - 1, j, i);
            t.ref(m, r, r) = one_run * (below - t.at(m - 1, r, r));
        }
    }

    for (long m = 0; m <= static_cast<long>(mmax); ++m)
        for (long r = 0; r <= m; ++r)
            for (long s = 0; s <= r; ++s) {
                const auto coeffs = t.at(m, r, s).expand(order);
                for (std::size_t n = 0; n <= order; ++n)
                    if (coeffs[n] < 0 || coeffs[n].get_den() != 1)
                        throw IntegrityError("f_{" + std::to_string(m) + "," + std::to_string(r) + "," +
                                             std::to_string(s) + "} has coefficient " + coeffs[n].get_str() +
                                             " at x^" + std::to_string(n));
            }
    return t;
}

}  // namespace ascseq::series
