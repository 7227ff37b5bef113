#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ascseq/common.hpp"

namespace ascseq::core {

using Letter = std::uint16_t;

/// A finite word over small non-negative integers.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
    Word(std::initializer_list<Letter> letters) : letters_(letters) {}

    /// Parses a digit string such as "01013212524". Letters >= 10 cannot be written this way.
    static Word parse(std::string_view digits);

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    std::span<const Letter> letters() const noexcept { return letters_; }

    /// Digit string when every letter is < 10, otherwise comma-separated.
    std::string to_string() const;

    auto operator<=>(const Word&) const = default;

private:
    std::vector<Letter> letters_;
};

std::string format_letters(std::span<const Letter> letters);

/// True iff the letters start with 0 and each later letter is at most one more than the
/// number of ascents before it. The empty word is not an ascent sequence.
bool validate(std::span<const Letter> letters);
inline bool validate(const Word& w) { return validate(w.letters()); }

/// Number of positions j with letters[j] < letters[j+1].
std::size_t ascents(std::span<const Letter> letters);

/// A pattern with repetitions allowed. Its distinct letters are exactly {0, ..., k-1}.
class Pattern {
public:
    /// Rejects empty or denormalized input (e.g. 132); use normalize() to rename explicitly.
    explicit Pattern(std::vector<Letter> letters);

    static Pattern parse(std::string_view digits);

    /// Renames letters order-preservingly onto {0, ..., k-1}.
    static Pattern normalize(std::span<const Letter> letters);

    std::size_t size() const noexcept { return letters_.size(); }
    /// Number of distinct letters.
    std::size_t alphabet() const noexcept { return alphabet_; }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    std::span<const Letter> letters() const noexcept { return letters_; }
    std::string to_string() const { return format_letters(letters_); }

    bool operator==(const Pattern&) const = default;

private:
    std::vector<Letter> letters_;
    std::size_t alphabet_ = 0;
};

struct StatRecord {
    std::size_t asc = 0;
    std::size_t zeros = 0;
    std::size_t fwd = 0;
    Letter last = 0;
    Letter maxletter = 0;

    bool operator==(const StatRecord&) const = default;
};

/// Throws DomainError on an empty word.
StatRecord stats(std::span<const Letter> letters);
inline StatRecord stats(const Word& w) { return stats(w.letters()); }

/// Number of index subsequences order-isomorphic to the pattern. Equal pattern letters
/// must be matched by equal word letters.
BigCount occurrences(std::span<const Letter> word, const Pattern& pattern);
inline BigCount occurrences(const Word& w, const Pattern& p) { return occurrences(w.letters(), p); }

bool contains(std::span<const Letter> word, const Pattern& pattern);
inline bool contains(const Word& w, const Pattern& p) { return contains(w.letters(), p); }
inline bool avoids(const Word& w, const Pattern& p) { return !contains(w.letters(), p); }

/// True iff some occurrence maps the last pattern letter onto the last word letter.
/// If the word minus its last letter avoids the pattern, this equals contains().
bool contains_ending_at_last(std::span<const Letter> word, const Pattern& pattern);

}  // namespace ascseq::core
