#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "ascseq/multipoly.hpp"

namespace ascseq::series {

/// Power series in x truncated after x^order, with MultiPoly coefficients.
/// Arithmetic is exact modulo x^(order+1); binary operations take the smaller order.
class TruncSeries {
public:
    explicit TruncSeries(std::size_t order = 0);
    TruncSeries(std::size_t order, std::vector<MultiPoly> coeffs);
    /// Polynomial in x, coefficients listed from x^0 upward.
    TruncSeries(std::size_t order, std::initializer_list<MultiPoly> coeffs);

    static TruncSeries constant(std::size_t order, const MultiPoly& c);
    /// c * x^power
    static TruncSeries monomial(std::size_t order, std::size_t power, const MultiPoly& c = MultiPoly(1));

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const MultiPoly& operator[](std::size_t k) const { return coeffs_.at(k); }
    MultiPoly& coeff(std::size_t k) { return coeffs_.at(k); }
    const std::vector<MultiPoly>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const;

    TruncSeries& operator+=(const TruncSeries& o);
    TruncSeries& operator-=(const TruncSeries& o);
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator*(TruncSeries a, const MultiPoly& c);
    friend TruncSeries operator*(const MultiPoly& c, TruncSeries a) { return std::move(a) * c; }
    TruncSeries operator-() const;

    /// Multiplicative inverse. The constant term must be a nonzero rational; it is
    /// normalised away before the unit-constant recurrence runs.
    TruncSeries invert() const;

    /// Square root with constant term 1. Requires the constant term to be exactly 1.
    TruncSeries sqrt() const;

    /// this / divisor where every coefficient step is an exact polynomial division by the
    /// divisor's constant term (which need not be a unit, e.g. 1 - u).
    TruncSeries divide_exact(const TruncSeries& divisor) const;

    /// Divides by x^x_power * (y,u,v)^e. The result has order order() - x_power. Throws
    /// DomainError naming the offending coefficient if the division is not exact.
    TruncSeries divide_exact_by_monomial(std::size_t x_power, const Exponents& e) const;

    /// Multiplies by x^k, keeping the order.
    TruncSeries shift(std::size_t k) const;
    TruncSeries truncate(std::size_t order) const;

    TruncSeries substitute(Var x, const Rat& value) const;
    TruncSeries substitute(Var x, const MultiPoly& value) const;
    TruncSeries rename(Var from, Var to) const;

    /// One line per coefficient, "x^k: <polynomial>", k ascending from 0.
    std::string to_string() const;

    bool operator==(const TruncSeries&) const = default;

private:
    std::vector<MultiPoly> coeffs_;
};

}  // namespace ascseq::series
