#include "ascseq/distribution.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <thread>

namespace ascseq::core {

namespace {

constexpr std::array<std::pair<Stat, std::string_view>, 5> kStatNames{{
    {Stat::asc, "asc"},
    {Stat::zeros, "zeros"},
    {Stat::fwd, "fwd"},
    {Stat::last, "last"},
    {Stat::maxletter, "maxletter"},
}};

constexpr std::size_t kShardDepth = 6;

}  // namespace

std::string_view stat_name(Stat s)
{
    for (auto [stat, name] : kStatNames)
        if (stat == s)
            return name;
    return "?";
}

std::optional<Stat> parse_stat(std::string_view name)
{
    for (auto [stat, n] : kStatNames)
        if (n == name)
            return stat;
    if (name == "zero")
        return Stat::zeros;
    return std::nullopt;
}

std::vector<Stat> parse_stat_list(std::string_view list)
{
    std::vector<Stat> out;
    while (!list.empty()) {
        auto comma = list.find(',');
        auto item = list.substr(0, comma);
        auto stat = parse_stat(item);
        if (!stat)
            throw DomainError("unknown statistic '" + std::string(item) +
                              "' (known: asc, zeros, fwd, last, maxletter)");
        out.push_back(*stat);
        if (comma == std::string_view::npos)
            break;
        list.remove_prefix(comma + 1);
    }
    if (out.empty())
        throw DomainError("statistic selector is empty");
    return out;
}

std::size_t stat_value(const StatRecord& rec, Stat s)
{
    switch (s) {
    case Stat::asc:
        return rec.asc;
    case Stat::zeros:
        return rec.zeros;
    case Stat::fwd:
        return rec.fwd;
    case Stat::last:
        return rec.last;
    case Stat::maxletter:
        return rec.maxletter;
    }
    return 0;
}

DistributionTable::DistributionTable(std::vector<std::string> stat_names, std::size_t n, std::string label)
    : stat_names_(std::move(stat_names)), n_(n), label_(std::move(label))
{
}

void DistributionTable::add(const StatKey& key, const BigCount& count)
{
    if (count == 0)
        return;
    entries_[key] += count;
}

void DistributionTable::merge(const DistributionTable& other)
{
    if (stat_names_ != other.stat_names_)
        throw DomainError("cannot merge distribution tables over different statistics");
    for (const auto& [key, count] : other.entries_)
        entries_[key] += count;
}

BigCount DistributionTable::total() const
{
    BigCount t = 0;
    for (const auto& [key, count] : entries_)
        t += count;
    return t;
}

BigCount DistributionTable::at(const StatKey& key) const
{
    auto it = entries_.find(key);
    return it == entries_.end() ? BigCount(0) : it->second;
}

DistributionTable DistributionTable::marginal(std::size_t index) const
{
    if (index >= stat_names_.size())
        throw DomainError("marginal index out of range");
    DistributionTable out({stat_names_[index]}, n_, label_);
    for (const auto& [key, count] : entries_)
        out.add({key[index]}, count);
    return out;
}

namespace {

DistributionTable tabulate(const Pattern* pattern, std::size_t n, std::span<const Stat> selector,
                           const DistributionOptions& opts)
{
    if (selector.empty())
        throw DomainError("statistic selector is empty");
    detail::check_length(n, opts.search.max_length);

    std::vector<std::string> names;
    for (Stat s : selector)
        names.emplace_back(stat_name(s));
    std::string label = pattern ? pattern->to_string() : std::string("*");
    if (opts.not_ending_in_zero)
        label += "/nonzero-last";

    auto make_visitor = [&](DistributionTable& table) {
        return [&table, selector, &opts](std::span<const Letter> w) {
            if (opts.not_ending_in_zero && w.back() == 0)
                return;
            const StatRecord rec = stats(w);
            StatKey key;
            key.reserve(selector.size());
            for (Stat s : selector)
                key.push_back(stat_value(rec, s));
            table.add(key);
        };
    };

    DistributionTable result(names, n, label);
    if (n == 0)
        return result;

    if (opts.threads <= 1) {
        auto visit = make_visitor(result);
        if (pattern)
            for_each_avoider(*pattern, n, visit, opts.search);
        else
            enumerate(n, visit, opts.search);
        return result;
    }

    const auto roots = avoiding_prefixes(pattern, std::min(n, kShardDepth), opts.search);
    const unsigned workers = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(roots.size())));
    std::vector<DistributionTable> partial(workers, DistributionTable(names, n, label));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back([&, t] {
            auto visit = make_visitor(partial[t]);
            for (std::size_t i = t; i < roots.size(); i += workers)
                for_each_extension(roots[i], n, pattern, visit, opts.search);
        });
    }
    for (auto& th : pool)
        th.join();
    for (const auto& p : partial)
        result.merge(p);
    return result;
}

}  // namespace

DistributionTable distribution(const Pattern& pattern, std::size_t n, std::span<const Stat> selector,
                               const DistributionOptions& opts)
{
    return tabulate(&pattern, n, selector, opts);
}

DistributionTable distribution_all(std::size_t n, std::span<const Stat> selector, const DistributionOptions& opts)
{
    return tabulate(nullptr, n, selector, opts);
}

unsigned threads_from_env()
{
    if (const char* env = std::getenv("ASCSEQ_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1 && v <= 256)
            return static_cast<unsigned>(v);
    }
    return 1;
}

}  // namespace ascseq::core
