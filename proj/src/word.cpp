#include "ascseq/word.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace ascseq::core {

Word Word::parse(std::string_view digits)
{
    std::vector<Letter> letters;
    letters.reserve(digits.size());
    for (char c : digits) {
        if (c < '0' || c > '9')
            throw DomainError("word must be a string of decimal digits, got '" + std::string(digits) + "'");
        letters.push_back(static_cast<Letter>(c - '0'));
    }
    return Word(std::move(letters));
}

std::string format_letters(std::span<const Letter> letters)
{
    bool small = std::all_of(letters.begin(), letters.end(), [](Letter l) { return l < 10; });
    std::string out;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (small) {
            out.push_back(static_cast<char>('0' + letters[i]));
        } else {
            if (i)
                out.push_back(',');
            out += std::to_string(letters[i]);
        }
    }
    return out;
}

std::string Word::to_string() const { return format_letters(letters_); }

bool validate(std::span<const Letter> letters)
{
    if (letters.empty() || letters[0] != 0)
        return false;
    std::size_t asc = 0;
    for (std::size_t i = 1; i < letters.size(); ++i) {
        if (letters[i] > asc + 1)
            return false;
        if (letters[i - 1] < letters[i])
            ++asc;
    }
    return true;
}

std::size_t ascents(std::span<const Letter> letters)
{
    std::size_t asc = 0;
    for (std::size_t i = 1; i < letters.size(); ++i)
        if (letters[i - 1] < letters[i])
            ++asc;
    return asc;
}

Pattern::Pattern(std::vector<Letter> letters) : letters_(std::move(letters))
{
    if (letters_.empty())
        throw DomainError("pattern must be nonempty");
    std::set<Letter> distinct(letters_.begin(), letters_.end());
    alphabet_ = distinct.size();
    if (*distinct.rbegin() + 1u != alphabet_)
        throw DomainError("pattern " + format_letters(letters_) +
                          " is not normalized: its letters must be exactly 0..k-1");
}

Pattern Pattern::parse(std::string_view digits)
{
    auto w = Word::parse(digits);
    return Pattern(std::vector<Letter>(w.letters().begin(), w.letters().end()));
}

Pattern Pattern::normalize(std::span<const Letter> letters)
{
    std::vector<Letter> sorted(letters.begin(), letters.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<Letter> renamed;
    renamed.reserve(letters.size());
    for (Letter l : letters)
        renamed.push_back(static_cast<Letter>(std::lower_bound(sorted.begin(), sorted.end(), l) - sorted.begin()));
    return Pattern(std::move(renamed));
}

StatRecord stats(std::span<const Letter> letters)
{
    if (letters.empty())
        throw DomainError("stats of the empty word are undefined");
    StatRecord s;
    s.asc = ascents(letters);
    s.zeros = static_cast<std::size_t>(std::count(letters.begin(), letters.end(), Letter{0}));
    s.fwd = 1;
    for (std::size_t i = letters.size() - 1; i > 0 && letters[i - 1] >= letters[i]; --i)
        ++s.fwd;
    s.last = letters.back();
    s.maxletter = *std::max_element(letters.begin(), letters.end());
    return s;
}

namespace {

constexpr int kUnassigned = -1;

// Backtracking matcher. value[a] is the word letter bound to pattern letter a.
// Binding a new letter requires it to sit strictly between the bindings of its
// neighbours in pattern order; a bound letter must be matched by an equal letter.
class Matcher {
public:
    Matcher(std::span<const Letter> word, const Pattern& pattern, bool stop_at_first, bool end_at_last)
        : word_(word), pattern_(pattern), value_(pattern.alphabet(), kUnassigned),
          stop_at_first_(stop_at_first), end_at_last_(end_at_last)
    {
    }

    BigCount run()
    {
        if (pattern_.size() > word_.size())
            return 0;
        found_ = 0;
        extend(0, 0);
        return found_;
    }

private:
    bool fits(Letter a, int w) const
    {
        if (value_[a] != kUnassigned)
            return value_[a] == w;
        for (std::size_t b = 0; b < value_.size(); ++b) {
            if (value_[b] == kUnassigned)
                continue;
            if (b < a && !(value_[b] < w))
                return false;
            if (b > a && !(value_[b] > w))
                return false;
        }
        return true;
    }

    // Returns true to abort the search.
    bool extend(std::size_t p, std::size_t start)
    {
        if (p == pattern_.size()) {
            ++found_;
            return stop_at_first_;
        }
        const std::size_t remaining = pattern_.size() - p;
        std::size_t first = start;
        std::size_t last = word_.size() - remaining;  // inclusive
        if (end_at_last_ && p + 1 == pattern_.size())
            first = word_.size() - 1;
        const Letter a = pattern_[p];
        for (std::size_t i = first; i <= last; ++i) {
            const int w = word_[i];
            if (!fits(a, w))
                continue;
            const bool fresh = value_[a] == kUnassigned;
            value_[a] = w;
            const bool stop = extend(p + 1, i + 1);
            if (fresh)
                value_[a] = kUnassigned;
            if (stop)
                return true;
        }
        return false;
    }

    std::span<const Letter> word_;
    const Pattern& pattern_;
    std::vector<int> value_;
    bool stop_at_first_;
    bool end_at_last_;
    BigCount found_;
};

}  // namespace

BigCount occurrences(std::span<const Letter> word, const Pattern& pattern)
{
    return Matcher(word, pattern, false, false).run();
}

bool contains(std::span<const Letter> word, const Pattern& pattern)
{
    return Matcher(word, pattern, true, false).run() != 0;
}

bool contains_ending_at_last(std::span<const Letter> word, const Pattern& pattern)
{
    if (word.empty())
        return false;
    return Matcher(word, pattern, true, true).run() != 0;
}

}  // namespace ascseq::core
