#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ascseq/common.hpp"

namespace ascseq::verify {

enum class Relation { equal, residual_zero };
enum class Status { pass, fail, skipped };

std::string relation_name(Relation r);
std::string status_name(Status s);

/// Replacement engines for mutation testing. An empty function means "use the real one".
struct EngineOverrides {
    std::function<BigCount(std::size_t)> a1012;                 // DP count of 1012-avoiders
    std::function<BigCount(std::size_t)> a210;                  // c/d-array count of 210-avoiders
    std::function<std::vector<BigCount>(std::size_t)> a0123;    // recurrence a_0..a_n
    std::function<BigCount(std::size_t)> b0123;                 // quintuple sum
};

struct Bounds {
    std::size_t max_n = 9;
    bool heavy = false;       // lift the per-check caps
    unsigned threads = 1;     // checks run concurrently on this many workers
    EngineOverrides overrides;
};

struct CheckOutcome {
    Status status = Status::pass;
    std::string witness;      // smallest divergence, empty on pass
    std::string note;         // extra finding worth keeping in the report
};

struct CheckSpec {
    std::string id;
    std::string claim;
    std::vector<std::string> engines;
    /// Largest bound allowed without --heavy; larger requests are skipped, not truncated.
    std::size_t cap;
    Relation relation;
    /// Receives the effective bound (some checks use a fixed size and ignore it).
    std::function<CheckOutcome(std::size_t bound, const Bounds&)> run;
    /// Bound actually used for a given max_n.
    std::function<std::size_t(std::size_t max_n)> bound_for = [](std::size_t n) { return n; };
};

struct ReportEntry {
    std::string id, claim;
    std::vector<std::string> engines;
    std::size_t bound = 0;
    Relation relation = Relation::equal;
    CheckOutcome outcome;
    long long millis = 0;
};

struct Report {
    std::vector<ReportEntry> entries;   // sorted by id

    bool all_passed() const;
    /// One record per check; `with_timing = false` drops the millis line so reports from
    /// identical configurations compare byte for byte.
    std::string to_text(bool with_timing = true) const;
};

/// Every registered check, sorted by id.
const std::vector<CheckSpec>& registry();
std::vector<std::string> check_ids();

/// "all" selects everything, "" selects nothing, otherwise a comma-separated id list.
/// Unknown ids throw UsageError listing the known ones.
std::vector<std::string> parse_selector(const std::string& text);

/// Runs the selected checks. Exceptions inside a check become a failed entry.
Report run_suite(std::span<const std::string> ids, const Bounds& bounds);

}  // namespace ascseq::verify
