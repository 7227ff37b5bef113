#include "ascseq/enumerate.hpp"

namespace ascseq::core {

namespace detail {

void check_length(std::size_t n, std::size_t cap)
{
    if (n > cap)
        throw DomainError("length " + std::to_string(n) + " exceeds the configured cap " + std::to_string(cap));
}

}  // namespace detail

BigCount count_avoiders(const Pattern& pattern, std::size_t n, const SearchOptions& opts)
{
    return for_each_avoider(pattern, n, [](std::span<const Letter>) {}, opts);
}

std::vector<std::vector<Letter>> avoiding_prefixes(const Pattern* pattern, std::size_t depth,
                                                   const SearchOptions& opts)
{
    std::vector<std::vector<Letter>> out;
    auto keep = [&](std::span<const Letter> w) { out.emplace_back(w.begin(), w.end()); };
    if (pattern)
        for_each_avoider(*pattern, depth, keep, opts);
    else
        enumerate(depth, keep, opts);
    return out;
}

}  // namespace ascseq::core
