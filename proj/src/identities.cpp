#include "ascseq/identities.hpp"

#include <algorithm>
#include <array>

#include "ascseq/distribution.hpp"
#include "ascseq/dp.hpp"

namespace ascseq::series {

namespace {

const MultiPoly kY = MultiPoly::var(Var::y);
const MultiPoly kU = MultiPoly::var(Var::u);
const MultiPoly kV = MultiPoly::var(Var::v);

TruncSeries x_pow(std::size_t order, std::size_t k, const MultiPoly& c = MultiPoly(1))
{
    return TruncSeries::monomial(order, k, c);
}

TruncSeries one(std::size_t order) { return TruncSeries::constant(order, MultiPoly(1)); }

// (1 - u)(1 - ux) + uxy
TruncSeries kernel_denominator(std::size_t order)
{
    const MultiPoly one_minus_u = MultiPoly(1) - kU;
    return TruncSeries(order, {one_minus_u, -(one_minus_u * kU) + kU * kY});
}

}  // namespace

void require_equal(const TruncSeries& a, const TruncSeries& b, const char* what)
{
    const std::size_t order = std::min(a.order(), b.order());
    for (std::size_t k = 0; k <= order; ++k)
        if (a[k] != b[k])
            throw InconsistencyError(std::string(what) + ": sides differ at x^" + std::to_string(k) + " (" +
                                     a[k].to_string() + " vs " + b[k].to_string() + ")");
}

TruncSeries kappa_series(std::size_t order)
{
    if (order < 1)
        throw DomainError("kappa_series: order must be at least 1");
    const std::size_t n1 = order + 1;
    const TruncSeries a(n1, {MultiPoly(1), -(kY + MultiPoly(1))});
    const TruncSeries disc = a * a - x_pow(n1, 2, kY * Rat(4));
    const TruncSeries numer = a - disc.sqrt();
    try {
        return numer.divide_exact_by_monomial(1, {1, 0, 0}) * MultiPoly(Rat(1, 2));
    } catch (const DomainError& e) {
        throw InconsistencyError(std::string("kappa numerator not divisible by xy: ") + e.what());
    }
}

TruncSeries kappa_quadratic_residual(const TruncSeries& kappa)
{
    const std::size_t n = kappa.order();
    const TruncSeries a(n, {MultiPoly(1), -(kY + MultiPoly(1))});
    return x_pow(n, 1, kY) * kappa * kappa - a * kappa + x_pow(n, 1);
}

TruncSeries g_closed_form(std::size_t order)
{
    const TruncSeries kappa = kappa_series(order);
    const TruncSeries one_minus_ux(order, {MultiPoly(1), -kU});
    const TruncSeries numer = x_pow(order, 1, kU * kY) * one_minus_ux * kappa - x_pow(order, 2, kU * kU * kY);
    return numer.divide_exact(kernel_denominator(order));
}

TruncSeries g_from_b_polys(std::size_t order)
{
    const auto B = dp::build_b_polys(std::max<std::size_t>(order, 2));
    TruncSeries g(order);
    for (std::size_t n = 2; n <= order; ++n)
        for (std::size_t m = 1; m < n; ++m)
            g.coeff(n) += B[n][m] * MultiPoly::var(Var::y, static_cast<unsigned>(m));
    return g;
}

TruncSeries g_from_enumeration(std::size_t order, unsigned threads)
{
    const auto pattern = core::Pattern::parse("0012");
    const std::array<core::Stat, 3> sel{core::Stat::asc, core::Stat::fwd, core::Stat::zeros};
    core::DistributionOptions opts;
    opts.not_ending_in_zero = true;
    opts.threads = threads;
    TruncSeries g(order);
    for (std::size_t n = 1; n <= order; ++n) {
        const auto table = core::distribution(pattern, n, sel, opts);
        for (const auto& [key, count] : table.entries())
            g.coeff(n) += MultiPoly::monomial(Rat(count), {static_cast<unsigned>(key[0]),
                                                           static_cast<unsigned>(key[1]),
                                                           static_cast<unsigned>(key[2])});
    }
    return g;
}

GClosedSides g_closed(std::size_t order)
{
    GClosedSides sides;
    sides.closed = g_closed_form(order);
    const TruncSeries g = g_from_b_polys(order);
    sides.run_side = g.substitute(Var::v, Rat(1));
    sides.zeros_side = g.substitute(Var::u, Rat(1)).rename(Var::v, Var::u);
    require_equal(sides.run_side, sides.closed, "g(x,y;u,1) against the closed form");
    require_equal(sides.zeros_side, sides.closed, "g(x,y;1,u) against the closed form");
    return sides;
}

TruncSeries functional_equation_residual(const TruncSeries& g)
{
    const std::size_t n = g.order();
    const MultiPoly one_minus_u = MultiPoly(1) - kU;
    const TruncSeries one_minus_ux(n, {MultiPoly(1), -kU});
    // (1 - vx)(1 - u) + vxy
    const TruncSeries lhs_factor(n, {one_minus_u, -(kV * one_minus_u) + kV * kY});
    const TruncSeries g_1v = g.substitute(Var::u, Rat(1));
    const TruncSeries g_u1 = g.substitute(Var::v, Rat(1));

    const TruncSeries lhs = lhs_factor * one_minus_ux * g;
    const TruncSeries rhs = x_pow(n, 2, kU * kV * kY * one_minus_u) +
                            x_pow(n, 1, kU * kV * kY) * one_minus_ux * g_1v +
                            x_pow(n, 1, kV * kY * one_minus_u) * g_u1;
    return lhs - rhs;
}

TruncSeries f_closed(std::size_t order)
{
    const TruncSeries one_minus_ux(order, {MultiPoly(1), -kU});
    const TruncSeries via_g = (one(order) + g_closed_form(order)) * one_minus_ux.invert();

    const TruncSeries kappa = kappa_series(order);
    const TruncSeries numer =
        TruncSeries::constant(order, MultiPoly(1) - kU) + x_pow(order, 1, kU * kY) * (kappa + one(order));
    const TruncSeries simplified = numer.divide_exact(kernel_denominator(order));

    require_equal(via_g, simplified, "f from g(x,y;1,u) against the simplified form");
    return simplified;
}

TruncSeries h_series(std::size_t order)
{
    const TruncSeries kappa = kappa_series(order);
    const TruncSeries closed = (one(order) - x_pow(order, 1, kU) - x_pow(order, 1, kU * kY) * kappa).invert();

    // Each round fixes one more power of x, so order + 2 rounds always suffice.
    TruncSeries h = one(order);
    bool settled = false;
    for (std::size_t round = 0; round < order + 2; ++round) {
        const TruncSeries at_u1 = h.substitute(Var::u, Rat(1));
        TruncSeries next = one(order) + x_pow(order, 1, kU) * h + x_pow(order, 1, kU * kY) * (at_u1 - one(order)) * h;
        if (next == h) {
            settled = true;
            break;
        }
        h = std::move(next);
    }
    if (!settled)
        throw InconsistencyError("h fixpoint did not settle within " + std::to_string(order + 2) + " rounds");

    require_equal(closed, h, "h closed form against the fixpoint");
    return closed;
}

TruncSeries a1012_gf(std::size_t order)
{
    const TruncSeries one_minus_x(order, {MultiPoly(1), MultiPoly(-1)});
    const TruncSeries inv_1mx = one_minus_x.invert();
    const TruncSeries ratio = TruncSeries(order, {MultiPoly(1), MultiPoly(-5)}) * inv_1mx;
    const TruncSeries first = (one(order) - ratio.sqrt()) * MultiPoly(Rat(1, 2));

    const TruncSeries disc(order, {MultiPoly(1), MultiPoly(-6), MultiPoly(5)});
    const TruncSeries second = (TruncSeries(order, {MultiPoly(1), MultiPoly(-3)}) - disc.sqrt()) * inv_1mx *
                                   MultiPoly(Rat(1, 2)) +
                               x_pow(order, 1) * inv_1mx;

    require_equal(first, second, "1012 generating function forms");
    return first;
}

Gf0123 gf_0123(std::size_t order)
{
    const TruncSeries cubic(order, {MultiPoly(1), MultiPoly(-5), MultiPoly(6), MultiPoly(-1)});
    const TruncSeries one_minus_2x(order, {MultiPoly(1), MultiPoly(-2)});
    Gf0123 out;
    out.all = TruncSeries(order, {MultiPoly(1), MultiPoly(-4), MultiPoly(3)}) * cubic.invert();
    out.wide = TruncSeries(order, {MultiPoly(0), MultiPoly(0), MultiPoly(0), MultiPoly(1), MultiPoly(-1)}) *
               (one_minus_2x * cubic).invert();
    const TruncSeries rebuilt = out.wide + x_pow(order, 1) * one_minus_2x.invert() + one(order);
    require_equal(out.all, rebuilt, "0123 generating function split");
    return out;
}

}  // namespace ascseq::series
