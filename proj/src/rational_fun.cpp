#include "ascseq/rational_fun.hpp"

#include <algorithm>
#include <sstream>

namespace ascseq::series {

namespace {

std::vector<Rat> times_one_minus_x_pow(std::vector<Rat> p, unsigned e)
{
    for (unsigned t = 0; t < e; ++t) {
        p.push_back(0);
        for (std::size_t i = p.size() - 1; i > 0; --i)
            p[i] -= p[i - 1];
    }
    return p;
}

std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b)
{
    if (a.empty() || b.empty())
        return {};
    std::vector<Rat> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

}  // namespace

RationalFun::RationalFun(std::vector<Rat> numerator, unsigned k) : num_(std::move(numerator)), k_(k)
{
    for (auto& c : num_)
        c.canonicalize();
    canonicalize();
}

RationalFun RationalFun::monomial(unsigned a, unsigned b)
{
    std::vector<Rat> p(a + 1);
    p[a] = 1;
    return RationalFun(std::move(p), b);
}

void RationalFun::canonicalize()
{
    while (!num_.empty() && num_.back() == 0)
        num_.pop_back();
    if (num_.empty()) {
        k_ = 0;
        return;
    }
    // Divide by (1-x) while p(1) = 0. With p = (1-x) q, q_i = sum_{j<=i} p_j.
    while (k_ > 0) {
        Rat at_one = 0;
        for (const auto& c : num_)
            at_one += c;
        if (at_one != 0)
            break;
        std::vector<Rat> q(num_.size() - 1);
        Rat run = 0;
        for (std::size_t i = 0; i < q.size(); ++i) {
            run += num_[i];
            q[i] = run;
        }
        num_ = std::move(q);
        --k_;
        while (!num_.empty() && num_.back() == 0)
            num_.pop_back();
    }
}

std::vector<Rat> RationalFun::numerator_over(unsigned k) const
{
    if (k < k_)
        throw DomainError("numerator_over: (1-x)^" + std::to_string(k) + " cannot hold denominator (1-x)^" +
                          std::to_string(k_));
    return times_one_minus_x_pow(num_, k - k_);
}

std::vector<Rat> RationalFun::expand(std::size_t order) const
{
    // 1/(1-x)^k has coefficients binom(j+k-1, k-1).
    std::vector<Rat> base(order + 1);
    for (std::size_t j = 0; j <= order; ++j)
        base[j] = k_ == 0 ? Rat(j == 0 ? 1 : 0)
                          : Rat(binomial(static_cast<long>(j + k_ - 1), static_cast<long>(k_ - 1)));
    std::vector<Rat> out(order + 1);
    for (std::size_t i = 0; i < num_.size() && i <= order; ++i)
        for (std::size_t j = 0; i + j <= order; ++j)
            out[i + j] += num_[i] * base[j];
    return out;
}

RationalFun& RationalFun::operator+=(const RationalFun& o)
{
    const unsigned k = std::max(k_, o.k_);
    std::vector<Rat> a = numerator_over(k), b = o.numerator_over(k);
    if (a.size() < b.size())
        a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] += b[i];
    num_ = std::move(a);
    k_ = k;
    canonicalize();
    return *this;
}

RationalFun& RationalFun::operator-=(const RationalFun& o)
{
    RationalFun neg = o;
    for (auto& c : neg.num_)
        c = -c;
    return *this += neg;
}

RationalFun operator*(const RationalFun& a, const RationalFun& b)
{
    return RationalFun(poly_mul(a.num_, b.num_), a.k_ + b.k_);
}

std::string RationalFun::to_string() const
{
    if (num_.empty())
        return "0";
    std::ostringstream os;
    int terms = 0;
    for (std::size_t i = 0; i < num_.size(); ++i) {
        if (num_[i] == 0)
            continue;
        Rat mag = abs(num_[i]);
        if (terms == 0)
            os << (num_[i] < 0 ? "-" : "");
        else
            os << (num_[i] < 0 ? " - " : " + ");
        const bool unit = mag == 1;
        if (!unit || i == 0)
            os << mag.get_str();
        if (i > 0) {
            if (!unit)
                os << "*";
            os << "x";
            if (i > 1)
                os << "^" << i;
        }
        ++terms;
    }
    std::string numer = os.str();
    if (k_ == 0)
        return numer;
    if (terms > 1)
        numer = "(" + numer + ")";
    return numer + "/(1-x)" + (k_ > 1 ? "^" + std::to_string(k_) : std::string());
}

}  // namespace ascseq::series
