#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ascseq/common.hpp"
#include "ascseq/word.hpp"

namespace ascseq::core {

struct SearchOptions {
    /// Never extend a prefix that already contains the pattern. Off forces a full
    /// enumeration followed by a containment filter (for differential testing).
    bool prune = true;
    std::size_t max_length = kDefaultMaxLength;
};

namespace detail {

void check_length(std::size_t n, std::size_t cap);

template <class Visitor>
void descend(std::vector<Letter>& prefix, std::size_t asc, std::size_t n, const Pattern* pattern, bool prune,
             std::uint64_t& count, Visitor& visit)
{
    if (prefix.size() == n) {
        if (pattern && !prune && contains(prefix, *pattern))
            return;
        ++count;
        visit(std::span<const Letter>(prefix));
        return;
    }
    const Letter top = static_cast<Letter>(asc + 1);
    for (Letter x = 0; x <= top; ++x) {
        const std::size_t next_asc = asc + (x > prefix.back() ? 1 : 0);
        prefix.push_back(x);
        if (!(pattern && prune && contains_ending_at_last(prefix, *pattern)))
            descend(prefix, next_asc, n, pattern, prune, count, visit);
        prefix.pop_back();
    }
}

}  // namespace detail

/// Visits every ascent sequence of length n beginning with `prefix` (which must itself
/// be a valid ascent sequence avoiding `pattern` when pruning) in lexicographic order.
template <class Visitor>
BigCount for_each_extension(std::span<const Letter> prefix, std::size_t n, const Pattern* pattern,
                            Visitor&& visit, const SearchOptions& opts = {})
{
    detail::check_length(n, opts.max_length);
    if (n == 0 || prefix.empty() || prefix.size() > n)
        return 0;
    std::vector<Letter> buf(prefix.begin(), prefix.end());
    buf.reserve(n);
    std::uint64_t count = 0;
    detail::descend(buf, ascents(prefix), n, pattern, opts.prune, count, visit);
    static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
    return BigCount(static_cast<unsigned long>(count));
}

/// Visits every ascent sequence of length n exactly once in lexicographic order.
/// n = 0 visits nothing and returns 0.
template <class Visitor>
BigCount enumerate(std::size_t n, Visitor&& visit, const SearchOptions& opts = {})
{
    const Letter root[] = {0};
    return for_each_extension(root, n, nullptr, visit, opts);
}

/// Visits the members of S_pattern(n) in lexicographic order.
template <class Visitor>
BigCount for_each_avoider(const Pattern& pattern, std::size_t n, Visitor&& visit, const SearchOptions& opts = {})
{
    const Letter root[] = {0};
    if (opts.prune && n >= 1 && contains(std::span<const Letter>(root), pattern))
        return 0;
    return for_each_extension(root, n, &pattern, visit, opts);
}

BigCount count_avoiders(const Pattern& pattern, std::size_t n, const SearchOptions& opts = {});

/// All avoiding prefixes of the given length; the shard roots for parallel enumeration.
std::vector<std::vector<Letter>> avoiding_prefixes(const Pattern* pattern, std::size_t depth,
                                                   const SearchOptions& opts = {});

}  // namespace ascseq::core
