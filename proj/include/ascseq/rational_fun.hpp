#pragma once

#include <string>
#include <vector>

#include "ascseq/common.hpp"

namespace ascseq::series {

/// p(x) / (1-x)^k with rational coefficients, kept in lowest terms: k is reduced while
/// p(1) = 0, and trailing zero coefficients of p are dropped. Equality is structural.
class RationalFun {
public:
    RationalFun() = default;
    RationalFun(std::vector<Rat> numerator, unsigned k);

    /// x^a / (1-x)^b
    static RationalFun monomial(unsigned a, unsigned b);

    const std::vector<Rat>& numerator() const noexcept { return num_; }
    unsigned denominator_exponent() const noexcept { return k_; }
    bool is_zero() const noexcept { return num_.empty(); }

    /// Numerator once the denominator is written as (1-x)^k. Requires k >= denominator_exponent().
    std::vector<Rat> numerator_over(unsigned k) const;

    /// Taylor coefficients of x^0..x^order.
    std::vector<Rat> expand(std::size_t order) const;

    RationalFun& operator+=(const RationalFun& o);
    RationalFun& operator-=(const RationalFun& o);
    friend RationalFun operator+(RationalFun a, const RationalFun& b) { return a += b; }
    friend RationalFun operator-(RationalFun a, const RationalFun& b) { return a -= b; }
    friend RationalFun operator*(const RationalFun& a, const RationalFun& b);

    /// e.g. "(x^3 + 2*x^4)/(1-x)^5"; "0" for zero; no denominator when k = 0.
    std::string to_string() const;

    bool operator==(const RationalFun&) const = default;

private:
    void canonicalize();

    std::vector<Rat> num_;
    unsigned k_ = 0;
};

}  // namespace ascseq::series
