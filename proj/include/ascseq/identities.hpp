#pragma once

#include <cstddef>

#include "ascseq/series.hpp"

// Closed-form generating functions and the identities relating them. Every function
// that states an identity computes both sides independently and throws
// InconsistencyError naming the first differing coefficient if they disagree.
namespace ascseq::series {

/// kappa(x, y) = (1 - x(y+1) - sqrt((1 - x(y+1))^2 - 4x^2 y)) / (2xy), to order N.
/// The numerator is expanded to order N+1 so the division by xy keeps order N.
TruncSeries kappa_series(std::size_t order);

/// x y kappa^2 - (1 - x(y+1)) kappa + x, which must vanish.
TruncSeries kappa_quadratic_residual(const TruncSeries& kappa);

/// (u x y (1 - u x) kappa - u^2 x^2 y) / ((1 - u)(1 - u x) + u x y), in (x, y, u).
/// The denominator's constant term 1 - u is not a unit, so each coefficient is an exact
/// polynomial quotient.
TruncSeries g_closed_form(std::size_t order);

/// g(x,y;u,v) = sum_{n>=2} B_n(y;u,v) x^n with y marking ascents, u the final weakly
/// decreasing run and v the zeros, assembled from the B_{n,m}(u,v) recurrence.
TruncSeries g_from_b_polys(std::size_t order);

/// The same series read off brute-force enumeration of 0012-avoiders not ending in 0.
TruncSeries g_from_enumeration(std::size_t order, unsigned threads = 1);

struct GClosedSides {
    TruncSeries closed;         // the displayed closed form in u
    TruncSeries run_side;       // g(x,y;u,1) from the recurrence
    TruncSeries zeros_side;     // g(x,y;1,u) from the recurrence, v renamed to u
};

/// Both specialisations of the recurrence-built g against the closed form.
GClosedSides g_closed(std::size_t order);

/// Cleared functional equation for g:
///   ((1-vx)(1-u) + vxy)(1-ux) g  -  u v x^2 y (1-u)  -  u v x y (1-ux) g(1,v)
///   -  v x y (1-u) g(u,1)
/// Zero exactly when g satisfies the kernel equation.
TruncSeries functional_equation_residual(const TruncSeries& g);

/// f(x,y;u) for 0012-avoiders by (asc, fwd). Computes (1 + g(x,y;1,u)) / (1 - ux) and the
/// simplified (1 - u + uxy(kappa+1)) / ((1-u)(1-ux) + uxy) and requires them equal.
TruncSeries f_closed(std::size_t order);

/// h(x,y;u) for 132-avoiders by (asc, rlmax). Computes 1 / (1 - ux - uxy kappa) and the
/// fixpoint of H = 1 + uxH + uxy(H|_{u=1} - 1)H and requires them equal.
TruncSeries h_series(std::size_t order);

/// (1/2)(1 - sqrt((1-5x)/(1-x))), checked against
/// (1 - 3x - sqrt(1 - 6x + 5x^2)) / (2(1-x)) + x/(1-x).
TruncSeries a1012_gf(std::size_t order);

struct Gf0123 {
    TruncSeries all;    // (1-x)(1-3x) / (1 - 5x + 6x^2 - x^3)
    TruncSeries wide;   // x^3 (1-x) / ((1-2x)(1 - 5x + 6x^2 - x^3)), three or more letters
};

/// Both rational functions; requires all = wide + x/(1-2x) + 1.
Gf0123 gf_0123(std::size_t order);

/// Throws InconsistencyError at the first coefficient where a and b differ.
void require_equal(const TruncSeries& a, const TruncSeries& b, const char* what);

}  // namespace ascseq::series
