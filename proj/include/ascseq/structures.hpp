#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "ascseq/common.hpp"
#include "ascseq/distribution.hpp"
#include "ascseq/word.hpp"

namespace ascseq::structures {

using core::Letter;

/// One-line notation of a permutation of 1..n.
using Permutation = std::vector<Letter>;

bool is_permutation(std::span<const Letter> p);

/// Visits each 132-avoiding permutation of length n once, lexicographically.
/// Prefixes already containing 132 are never extended.
BigCount enumerate_av132(std::size_t n, const std::function<void(std::span<const Letter>)>& visit);

/// Number of entries larger than everything to their right.
std::size_t rlmax(std::span<const Letter> p);

/// Joint (asc, rlmax) table over Av132(n).
core::DistributionTable av132_distribution(std::size_t n);

/// Restricted growth function: letters[0] = 1, each letter at most one more than the
/// running maximum. The canonical sequential form of a set partition.
class RGFWord {
public:
    explicit RGFWord(std::vector<Letter> letters);  // throws DomainError if not an RGF

    std::span<const Letter> letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    std::size_t blocks() const;

private:
    std::vector<Letter> letters_;
};

bool is_rgf(std::span<const Letter> letters);

/// Visits every RGF of length n (equivalently every partition of [n]) lexicographically.
BigCount for_each_rgf(std::size_t n, const std::function<void(std::span<const Letter>)>& visit);

/// |P_n(pattern)|: RGFs of length n avoiding the pattern, which is itself written as an
/// RGF (e.g. 12123) and compared up to order isomorphism.
BigCount count_rgf_avoiding(std::span<const Letter> pattern_rgf, std::size_t n);

/// Number of height-bounded Dyck paths of semilength n, via an (h+1)x(h+1) transfer matrix.
BigCount dyck_count_height_le(std::size_t h, std::size_t n);

/// Arcs join consecutive elements of each block; points are 1-based.
struct ArcDiagram {
    std::size_t points = 0;
    std::vector<std::pair<std::size_t, std::size_t>> arcs;  // sorted by left endpoint
};

ArcDiagram arc_diagram(const RGFWord& partition);

/// True iff k arcs (a1,b1),...,(ak,bk) exist with a1 < ... < ak < b1 < ... < bk.
bool has_k_crossing(const ArcDiagram& diagram, std::size_t k);
bool has_k_crossing(const RGFWord& partition, std::size_t k);

/// Partitions of [n] with no k-crossing. Requires k >= 2.
BigCount count_non_k_crossing(std::size_t n, std::size_t k);

}  // namespace ascseq::structures
