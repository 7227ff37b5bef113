#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "ascseq/common.hpp"

namespace ascseq::series {

/// The formal variables carried by polynomial coefficients. x is the series variable
/// and lives in TruncSeries, not here.
enum class Var : unsigned { y = 0, u = 1, v = 2 };

inline constexpr std::size_t kVarCount = 3;

/// Exponents of (y, u, v).
using Exponents = std::array<unsigned, kVarCount>;

/// Sparse polynomial in y, u, v with exact rational coefficients. No zero coefficient is
/// ever stored, so structural equality is mathematical equality.
class MultiPoly {
public:
    using Terms = std::map<Exponents, Rat>;

    MultiPoly() = default;
    MultiPoly(const Rat& c);  // NOLINT: constants convert implicitly
    MultiPoly(long c) : MultiPoly(Rat(c)) {}  // NOLINT

    static MultiPoly monomial(const Rat& c, const Exponents& e);
    static MultiPoly var(Var x, unsigned power = 1);

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    Rat constant_term() const;
    Rat coeff(const Exponents& e) const;
    const Terms& terms() const noexcept { return terms_; }
    unsigned degree(Var x) const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    MultiPoly& operator*=(const Rat& c);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rat& c) { return a *= c; }
    MultiPoly operator-() const;

    /// Evaluates one variable at a rational value.
    MultiPoly substitute(Var x, const Rat& value) const;
    /// Replaces one variable by a polynomial.
    MultiPoly substitute(Var x, const MultiPoly& value) const;
    /// Moves variable `from` onto `to` (exponents add if `to` already occurs).
    MultiPoly rename(Var from, Var to) const;

    /// Exact quotient, or nullopt if the divisor does not divide this polynomial.
    std::optional<MultiPoly> try_divide(const MultiPoly& divisor) const;
    /// Exact quotient; throws InconsistencyError with `what` if the remainder is nonzero.
    MultiPoly divide_exact(const MultiPoly& divisor, const std::string& what = "polynomial division") const;

    /// e.g. "1 + 2*y - 3/2*y^2*u*v"; terms ascending in (y, u, v) exponent order; "0" if zero.
    std::string to_string() const;

    bool operator==(const MultiPoly&) const = default;

private:
    void add_term(const Exponents& e, const Rat& c);

    Terms terms_;
};

}  // namespace ascseq::series
