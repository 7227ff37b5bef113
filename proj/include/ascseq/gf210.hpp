#pragma once

#include <cstddef>
#include <vector>

#include "ascseq/rational_fun.hpp"

namespace ascseq::series {

/// Which inner limit to use in the "second-to-last run is i <= s" term of the f_{m,r,s}
/// recurrence. `displayed` sums j = i..r; `proof_text` sums j = i..s. Only one of them
/// can reproduce the brute-force counts.
enum class Gf210Variant { displayed, proof_text };

/// f_{m,r,s}(x): generating function of 210-avoiding ascent sequences with m ascents,
/// largest letter r and last letter s, for 0 <= s <= r <= m <= mmax.
class Gf210Table {
public:
    Gf210Table() = default;
    explicit Gf210Table(std::size_t mmax);

    std::size_t mmax() const noexcept { return mmax_; }
    /// Zero outside 0 <= s <= r <= m <= mmax.
    const RationalFun& at(long m, long r, long s) const;
    RationalFun& ref(std::size_t m, std::size_t r, std::size_t s) { return f_[m][r][s]; }

    /// f_m = sum_{r,s} f_{m,r,s}
    RationalFun f_m(std::size_t m) const;
    /// 1 + sum_{m <= mmax} f_m, expanded to x^order. Exact for n <= mmax + 1.
    std::vector<Rat> total(std::size_t order) const;

private:
    std::size_t mmax_ = 0;
    std::vector<std::vector<std::vector<RationalFun>>> f_;
};

/// Builds the table bottom-up in m from f_{0,0,0} = x/(1-x). Every entry is expanded to
/// `order` and a negative or non-integral coefficient throws IntegrityError.
Gf210Table build_gf210_table(std::size_t mmax, std::size_t order,
                             Gf210Variant variant = Gf210Variant::displayed);

}  // namespace ascseq::series
