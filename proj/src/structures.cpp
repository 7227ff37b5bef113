#include "ascseq/structures.hpp"

#include <algorithm>
#include <functional>

namespace ascseq::structures {

using core::Pattern;

bool is_permutation(std::span<const Letter> p)
{
    std::vector<bool> seen(p.size() + 1, false);
    for (Letter v : p) {
        if (v < 1 || v > p.size() || seen[v])
            return false;
        seen[v] = true;
    }
    return true;
}

namespace {

const Pattern& pattern_132()
{
    static const Pattern p = Pattern::normalize(std::vector<Letter>{1, 3, 2});
    return p;
}

void extend_av132(std::vector<Letter>& prefix, std::vector<bool>& used, std::size_t n, std::uint64_t& count,
                  const std::function<void(std::span<const Letter>)>& visit)
{
    if (prefix.size() == n) {
        ++count;
        visit(prefix);
        return;
    }
    for (Letter v = 1; v <= n; ++v) {
        if (used[v])
            continue;
        prefix.push_back(v);
        if (!core::contains_ending_at_last(prefix, pattern_132())) {
            used[v] = true;
            extend_av132(prefix, used, n, count, visit);
            used[v] = false;
        }
        prefix.pop_back();
    }
}

void extend_rgf(std::vector<Letter>& prefix, Letter max, std::size_t n, const Pattern* avoid, std::uint64_t& count,
                const std::function<void(std::span<const Letter>)>& visit)
{
    if (prefix.size() == n) {
        ++count;
        visit(prefix);
        return;
    }
    for (Letter v = 1; v <= max + 1; ++v) {
        prefix.push_back(v);
        if (!(avoid && core::contains_ending_at_last(prefix, *avoid)))
            extend_rgf(prefix, std::max(max, v), n, avoid, count, visit);
        prefix.pop_back();
    }
}

BigCount rgf_search(std::size_t n, const Pattern* avoid, const std::function<void(std::span<const Letter>)>& visit)
{
    if (n == 0)
        return 0;
    std::vector<Letter> prefix{1};
    if (avoid && core::contains(prefix, *avoid))
        return 0;
    std::uint64_t count = 0;
    extend_rgf(prefix, 1, n, avoid, count, visit);
    return BigCount(static_cast<unsigned long>(count));
}

}  // namespace

BigCount enumerate_av132(std::size_t n, const std::function<void(std::span<const Letter>)>& visit)
{
    if (n == 0)
        return 0;
    std::vector<Letter> prefix;
    prefix.reserve(n);
    std::vector<bool> used(n + 1, false);
    std::uint64_t count = 0;
    extend_av132(prefix, used, n, count, visit);
    return BigCount(static_cast<unsigned long>(count));
}

std::size_t rlmax(std::span<const Letter> p)
{
    std::size_t count = 0;
    int best = -1;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        if (*it > best) {
            ++count;
            best = *it;
        }
    }
    return count;
}

core::DistributionTable av132_distribution(std::size_t n)
{
    core::DistributionTable table({"asc", "rlmax"}, n, "av132");
    enumerate_av132(n, [&](std::span<const Letter> p) { table.add({core::ascents(p), rlmax(p)}); });
    return table;
}

bool is_rgf(std::span<const Letter> letters)
{
    if (letters.empty() || letters[0] != 1)
        return false;
    Letter max = 1;
    for (Letter v : letters) {
        if (v < 1 || v > max + 1)
            return false;
        max = std::max(max, v);
    }
    return true;
}

RGFWord::RGFWord(std::vector<Letter> letters) : letters_(std::move(letters))
{
    if (!is_rgf(letters_))
        throw DomainError("not a restricted growth function: " + core::format_letters(letters_));
}

std::size_t RGFWord::blocks() const { return *std::max_element(letters_.begin(), letters_.end()); }

BigCount for_each_rgf(std::size_t n, const std::function<void(std::span<const Letter>)>& visit)
{
    return rgf_search(n, nullptr, visit);
}

BigCount count_rgf_avoiding(std::span<const Letter> pattern_rgf, std::size_t n)
{
    if (!is_rgf(pattern_rgf))
        throw DomainError("pattern must be written as a restricted growth function");
    const Pattern p = Pattern::normalize(pattern_rgf);
    return rgf_search(n, &p, [](std::span<const Letter>) {});
}

BigCount dyck_count_height_le(std::size_t h, std::size_t n)
{
    const std::size_t dim = h + 1;
    std::vector<std::vector<BigCount>> step(dim, std::vector<BigCount>(dim, 0));
    for (std::size_t i = 0; i < dim; ++i) {
        if (i + 1 < dim)
            step[i][i + 1] = 1;
        if (i > 0)
            step[i][i - 1] = 1;
    }
    std::vector<BigCount> state(dim, 0);
    state[0] = 1;
    for (std::size_t s = 0; s < 2 * n; ++s) {
        std::vector<BigCount> next(dim, 0);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                if (step[i][j] != 0)
                    next[j] += state[i] * step[i][j];
        state = std::move(next);
    }
    return state[0];
}

ArcDiagram arc_diagram(const RGFWord& partition)
{
    ArcDiagram d;
    d.points = partition.size();
    std::vector<std::size_t> last_seen(partition.blocks() + 1, 0);
    auto letters = partition.letters();
    for (std::size_t i = 0; i < letters.size(); ++i) {
        const std::size_t pos = i + 1;
        if (last_seen[letters[i]] != 0)
            d.arcs.emplace_back(last_seen[letters[i]], pos);
        last_seen[letters[i]] = pos;
    }
    std::sort(d.arcs.begin(), d.arcs.end());
    return d;
}

namespace {

bool pick_crossing(const ArcDiagram& d, std::size_t from, std::size_t need, std::size_t prev_b, std::size_t first_b)
{
    if (need == 0)
        return true;
    for (std::size_t i = from; i < d.arcs.size(); ++i) {
        const auto [a, b] = d.arcs[i];
        if (first_b != 0 && a >= first_b)
            break;  // arcs are sorted by left endpoint
        if (b <= prev_b)
            continue;
        if (pick_crossing(d, i + 1, need - 1, b, first_b == 0 ? b : first_b))
            return true;
    }
    return false;
}

}  // namespace

bool has_k_crossing(const ArcDiagram& diagram, std::size_t k)
{
    if (k < 2)
        throw DomainError("crossing order k must be at least 2");
    // left endpoints are distinct (one rightward arc per point), so sorted order is strictly increasing
    return pick_crossing(diagram, 0, k, 0, 0);
}

bool has_k_crossing(const RGFWord& partition, std::size_t k) { return has_k_crossing(arc_diagram(partition), k); }

BigCount count_non_k_crossing(std::size_t n, std::size_t k)
{
    if (k < 2)
        throw DomainError("crossing order k must be at least 2");
    std::uint64_t count = 0;
    for_each_rgf(n, [&](std::span<const Letter> w) {
        if (!has_k_crossing(RGFWord(std::vector<Letter>(w.begin(), w.end())), k))
            ++count;
    });
    return BigCount(static_cast<unsigned long>(count));
}

}  // namespace ascseq::structures
