#include "ascseq/series.hpp"

#include <algorithm>
#include <sstream>

namespace ascseq::series {

TruncSeries::TruncSeries(std::size_t order) : coeffs_(order + 1) {}

TruncSeries::TruncSeries(std::size_t order, std::vector<MultiPoly> coeffs) : coeffs_(std::move(coeffs))
{
    coeffs_.resize(order + 1);
}

TruncSeries::TruncSeries(std::size_t order, std::initializer_list<MultiPoly> coeffs)
    : TruncSeries(order, std::vector<MultiPoly>(coeffs))
{
}

TruncSeries TruncSeries::constant(std::size_t order, const MultiPoly& c) { return monomial(order, 0, c); }

TruncSeries TruncSeries::monomial(std::size_t order, std::size_t power, const MultiPoly& c)
{
    TruncSeries s(order);
    if (power <= order)
        s.coeffs_[power] = c;
    return s;
}

bool TruncSeries::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const MultiPoly& p) { return p.is_zero(); });
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o)
{
    coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        coeffs_[k] += o.coeffs_[k];
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o)
{
    coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        coeffs_[k] -= o.coeffs_[k];
    return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b)
{
    const std::size_t order = std::min(a.order(), b.order());
    TruncSeries out(order);
    for (std::size_t i = 0; i <= order; ++i) {
        if (a.coeffs_[i].is_zero())
            continue;
        for (std::size_t j = 0; i + j <= order; ++j)
            if (!b.coeffs_[j].is_zero())
                out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
}

TruncSeries operator*(TruncSeries a, const MultiPoly& c)
{
    for (auto& p : a.coeffs_)
        p = p * c;
    return a;
}

TruncSeries TruncSeries::operator-() const
{
    TruncSeries out = *this;
    for (auto& p : out.coeffs_)
        p = -p;
    return out;
}

TruncSeries TruncSeries::invert() const
{
    const MultiPoly& c0 = coeffs_[0];
    if (!c0.is_constant() || c0.is_zero())
        throw DomainError("invert: constant term " + c0.to_string() + " is not a nonzero rational");
    const Rat inv0 = 1 / c0.constant_term();
    TruncSeries out(order());
    out.coeffs_[0] = MultiPoly(inv0);
    for (std::size_t k = 1; k <= order(); ++k) {
        MultiPoly acc;
        for (std::size_t j = 1; j <= k; ++j)
            if (!coeffs_[j].is_zero())
                acc += coeffs_[j] * out.coeffs_[k - j];
        out.coeffs_[k] = acc * (-inv0);
    }
    return out;
}

TruncSeries TruncSeries::sqrt() const
{
    if (coeffs_[0] != MultiPoly(1))
        throw DomainError("sqrt: constant term " + coeffs_[0].to_string() + " is not 1");
    TruncSeries out(order());
    out.coeffs_[0] = MultiPoly(1);
    const Rat half(1, 2);
    for (std::size_t k = 1; k <= order(); ++k) {
        MultiPoly acc = coeffs_[k];
        for (std::size_t j = 1; j < k; ++j)
            acc -= out.coeffs_[j] * out.coeffs_[k - j];
        out.coeffs_[k] = acc * half;
    }
    return out;
}

TruncSeries TruncSeries::divide_exact(const TruncSeries& divisor) const
{
    const std::size_t order = std::min(this->order(), divisor.order());
    const MultiPoly& d0 = divisor.coeffs_[0];
    if (d0.is_zero())
        throw DomainError("divide_exact: divisor has zero constant term");
    TruncSeries out(order);
    for (std::size_t k = 0; k <= order; ++k) {
        MultiPoly acc = coeffs_[k];
        for (std::size_t j = 1; j <= k; ++j)
            if (!divisor.coeffs_[j].is_zero())
                acc -= divisor.coeffs_[j] * out.coeffs_[k - j];
        out.coeffs_[k] = acc.divide_exact(d0, "series division at x^" + std::to_string(k));
    }
    return out;
}

TruncSeries TruncSeries::divide_exact_by_monomial(std::size_t x_power, const Exponents& e) const
{
    if (x_power > order())
        throw DomainError("divide_exact_by_monomial: x power exceeds the truncation order");
    const MultiPoly mono = MultiPoly::monomial(1, e);
    for (std::size_t k = 0; k < x_power; ++k)
        if (!coeffs_[k].is_zero())
            throw DomainError("divide_exact_by_monomial: coefficient of x^" + std::to_string(k) + " is " +
                              coeffs_[k].to_string() + ", not zero");
    TruncSeries out(order() - x_power);
    for (std::size_t k = x_power; k <= order(); ++k) {
        auto q = coeffs_[k].try_divide(mono);
        if (!q)
            throw DomainError("divide_exact_by_monomial: coefficient of x^" + std::to_string(k) + " (" +
                              coeffs_[k].to_string() + ") is not divisible by " + mono.to_string());
        out.coeffs_[k - x_power] = std::move(*q);
    }
    return out;
}

TruncSeries TruncSeries::shift(std::size_t k) const
{
    TruncSeries out(order());
    for (std::size_t i = 0; i + k <= order(); ++i)
        out.coeffs_[i + k] = coeffs_[i];
    return out;
}

TruncSeries TruncSeries::truncate(std::size_t order) const
{
    if (order > this->order())
        throw DomainError("truncate: cannot raise the order of a truncated series");
    return TruncSeries(order, std::vector<MultiPoly>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(order) + 1));
}

TruncSeries TruncSeries::substitute(Var x, const Rat& value) const
{
    TruncSeries out = *this;
    for (auto& p : out.coeffs_)
        p = p.substitute(x, value);
    return out;
}

TruncSeries TruncSeries::substitute(Var x, const MultiPoly& value) const
{
    TruncSeries out = *this;
    for (auto& p : out.coeffs_)
        p = p.substitute(x, value);
    return out;
}

TruncSeries TruncSeries::rename(Var from, Var to) const
{
    TruncSeries out = *this;
    for (auto& p : out.coeffs_)
        p = p.rename(from, to);
    return out;
}

std::string TruncSeries::to_string() const
{
    std::ostringstream os;
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        os << "x^" << k << ": " << coeffs_[k].to_string() << "\n";
    return os.str();
}

}  // namespace ascseq::series
