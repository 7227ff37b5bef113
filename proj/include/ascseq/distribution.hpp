#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ascseq/common.hpp"
#include "ascseq/enumerate.hpp"
#include "ascseq/word.hpp"

namespace ascseq::core {

enum class Stat { asc, zeros, fwd, last, maxletter };

std::string_view stat_name(Stat s);
std::optional<Stat> parse_stat(std::string_view name);

/// Parses "asc,fwd". Unknown names and an empty list throw DomainError.
std::vector<Stat> parse_stat_list(std::string_view list);

std::size_t stat_value(const StatRecord& rec, Stat s);

using StatKey = std::vector<std::size_t>;

/// Joint distribution of a tuple of statistics: key -> count. Absent keys are zero,
/// stored values are strictly positive. Merging is pointwise addition.
class DistributionTable {
public:
    DistributionTable() = default;
    DistributionTable(std::vector<std::string> stat_names, std::size_t n, std::string label);

    void add(const StatKey& key, const BigCount& count = 1);
    /// Pointwise sum. Throws DomainError if the statistic names differ.
    void merge(const DistributionTable& other);

    BigCount total() const;
    BigCount at(const StatKey& key) const;
    std::size_t size() const noexcept { return entries_.size(); }

    /// One-statistic marginal over column `index`.
    DistributionTable marginal(std::size_t index) const;

    const std::map<StatKey, BigCount>& entries() const noexcept { return entries_; }
    const std::vector<std::string>& stat_names() const noexcept { return stat_names_; }
    std::size_t n() const noexcept { return n_; }
    const std::string& label() const noexcept { return label_; }

    /// Entry-wise comparison, ignoring names and metadata.
    bool same_entries(const DistributionTable& other) const { return entries_ == other.entries_; }

    bool operator==(const DistributionTable&) const = default;

private:
    std::vector<std::string> stat_names_;
    std::size_t n_ = 0;
    std::string label_;
    std::map<StatKey, BigCount> entries_;
};

struct DistributionOptions {
    /// Restrict to words whose last letter is nonzero.
    bool not_ending_in_zero = false;
    SearchOptions search;
    /// Worker count; > 1 shards the search by fixed-depth prefix.
    unsigned threads = 1;
};

/// Joint distribution of `selector` over S_pattern(n). Throws DomainError on an empty selector.
DistributionTable distribution(const Pattern& pattern, std::size_t n, std::span<const Stat> selector,
                               const DistributionOptions& opts = {});

/// Same, over all ascent sequences of length n.
DistributionTable distribution_all(std::size_t n, std::span<const Stat> selector,
                                   const DistributionOptions& opts = {});

/// Worker count from ASCSEQ_THREADS, defaulting to 1.
unsigned threads_from_env();

}  // namespace ascseq::core
