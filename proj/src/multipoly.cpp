#include "ascseq/multipoly.hpp"

#include <sstream>

namespace ascseq::series {

namespace {

constexpr const char* kVarNames[kVarCount] = {"y", "u", "v"};

bool divides(const Exponents& d, const Exponents& e)
{
    for (std::size_t i = 0; i < kVarCount; ++i)
        if (d[i] > e[i])
            return false;
    return true;
}

Exponents add(const Exponents& a, const Exponents& b)
{
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

Exponents sub(const Exponents& a, const Exponents& b)
{
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

}  // namespace

MultiPoly::MultiPoly(const Rat& c)
{
    add_term(Exponents{0, 0, 0}, c);
}

MultiPoly MultiPoly::monomial(const Rat& c, const Exponents& e)
{
    MultiPoly p;
    p.add_term(e, c);
    return p;
}

MultiPoly MultiPoly::var(Var x, unsigned power)
{
    Exponents e{0, 0, 0};
    e[static_cast<unsigned>(x)] = power;
    return monomial(1, e);
}

bool MultiPoly::is_constant() const noexcept
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0, 0});
}

Rat MultiPoly::constant_term() const { return coeff({0, 0, 0}); }

Rat MultiPoly::coeff(const Exponents& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

unsigned MultiPoly::degree(Var x) const
{
    unsigned d = 0;
    for (const auto& [e, c] : terms_)
        d = std::max(d, e[static_cast<unsigned>(x)]);
    return d;
}

void MultiPoly::add_term(const Exponents& e, const Rat& c)
{
    if (c == 0)
        return;
    // mpq_class(2, 2) is not reduced on construction; equality needs canonical values
    Rat canon = c;
    canon.canonicalize();
    auto [it, inserted] = terms_.emplace(e, canon);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o)
{
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o)
{
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rat& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    Rat canon = c;
    canon.canonicalize();
    for (auto& [e, v] : terms_)
        v *= canon;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
{
    MultiPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            out.add_term(add(ea, eb), ca * cb);
    return out;
}

MultiPoly MultiPoly::operator-() const
{
    MultiPoly out = *this;
    for (auto& [e, c] : out.terms_)
        c = -c;
    return out;
}

MultiPoly MultiPoly::substitute(Var x, const Rat& value) const
{
    const unsigned i = static_cast<unsigned>(x);
    MultiPoly out;
    for (const auto& [e, c] : terms_) {
        Rat scale = 1;
        for (unsigned k = 0; k < e[i]; ++k)
            scale *= value;
        Exponents f = e;
        f[i] = 0;
        out.add_term(f, c * scale);
    }
    return out;
}

MultiPoly MultiPoly::substitute(Var x, const MultiPoly& value) const
{
    const unsigned i = static_cast<unsigned>(x);
    MultiPoly out;
    std::map<unsigned, MultiPoly> powers;
    powers[0] = MultiPoly(1);
    for (const auto& [e, c] : terms_) {
        auto it = powers.find(e[i]);
        if (it == powers.end()) {
            MultiPoly p = 1;
            for (unsigned k = 0; k < e[i]; ++k)
                p *= value;
            it = powers.emplace(e[i], std::move(p)).first;
        }
        Exponents f = e;
        f[i] = 0;
        out += monomial(c, f) * it->second;
    }
    return out;
}

MultiPoly MultiPoly::rename(Var from, Var to) const
{
    if (from == to)
        return *this;
    const unsigned a = static_cast<unsigned>(from), b = static_cast<unsigned>(to);
    MultiPoly out;
    for (const auto& [e, c] : terms_) {
        Exponents f = e;
        f[b] += f[a];
        f[a] = 0;
        out.add_term(f, c);
    }
    return out;
}

std::optional<MultiPoly> MultiPoly::try_divide(const MultiPoly& divisor) const
{
    if (divisor.is_zero())
        return std::nullopt;
    // Lexicographic long division. If the divisor divides exactly, the leading term of
    // every intermediate remainder is divisible by the divisor's leading term.
    const auto& [lead_e, lead_c] = *divisor.terms_.rbegin();
    MultiPoly rem = *this, quot;
    while (!rem.is_zero()) {
        const auto& [e, c] = *rem.terms_.rbegin();
        if (!divides(lead_e, e))
            return std::nullopt;
        MultiPoly t = monomial(c / lead_c, sub(e, lead_e));
        quot += t;
        rem -= t * divisor;
    }
    return quot;
}

MultiPoly MultiPoly::divide_exact(const MultiPoly& divisor, const std::string& what) const
{
    auto q = try_divide(divisor);
    if (!q)
        throw InconsistencyError(what + ": " + divisor.to_string() + " does not divide " + to_string());
    return *q;
}

std::string MultiPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool constant = e == Exponents{0, 0, 0};
        Rat mag = abs(c);
        if (first) {
            if (c < 0)
                os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool need_star = false;
        if (constant || mag != 1) {
            os << mag.get_str();
            need_star = true;
        }
        for (std::size_t i = 0; i < kVarCount; ++i) {
            if (e[i] == 0)
                continue;
            if (need_star)
                os << "*";
            os << kVarNames[i];
            if (e[i] > 1)
                os << "^" << e[i];
            need_star = true;
        }
    }
    return os.str();
}

}  // namespace ascseq::series
