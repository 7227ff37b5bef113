#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "ascseq/distribution.hpp"
#include "ascseq/enumerate.hpp"
#include "ascseq/word.hpp"
#include "oracles.hpp"

using namespace ascseq;
using namespace ascseq::core;

namespace {

std::vector<Letter> random_ascent_sequence(std::mt19937& rng, std::size_t n)
{
    std::vector<Letter> w{0};
    std::size_t asc = 0;
    while (w.size() < n) {
        std::uniform_int_distribution<int> d(0, static_cast<int>(asc) + 1);
        Letter x = static_cast<Letter>(d(rng));
        if (x > w.back())
            ++asc;
        w.push_back(x);
    }
    return w;
}

std::vector<Letter> random_word(std::mt19937& rng, std::size_t n, int alphabet)
{
    std::uniform_int_distribution<int> d(0, alphabet - 1);
    std::vector<Letter> w(n);
    for (auto& x : w)
        x = static_cast<Letter>(d(rng));
    return w;
}

}  // namespace

TEST_CASE("validate")
{
    CHECK(validate(Word::parse("01013212524")));
    CHECK_FALSE(validate(Word::parse("01003221")));
    CHECK(validate(Word::parse("0")));
    CHECK_FALSE(validate(Word::parse("1")));
    CHECK_FALSE(validate(Word{}));
}

TEST_CASE("stats")
{
    CHECK(stats(Word::parse("010013014364332")).fwd == 5);
    CHECK(stats(Word::parse("0100")).asc == 1);
    auto s = stats(Word::parse("012334004332"));
    CHECK(s.asc == 5);
    CHECK(s.zeros == 3);
    CHECK(s.fwd == 4);
    CHECK(s.last == 2);
    CHECK(s.maxletter == 4);
    CHECK_THROWS_AS(stats(Word{}), DomainError);
}

TEST_CASE("pattern normalization is explicit")
{
    CHECK_THROWS_AS(Pattern::parse("132"), DomainError);
    CHECK_THROWS_AS(Pattern::parse(""), DomainError);
    CHECK(Pattern::normalize(Word::parse("132").letters()) == Pattern::parse("021"));
    CHECK(Pattern::normalize(Word::parse("2213").letters()).to_string() == "1102");
    CHECK(Pattern::parse("0012").alphabet() == 3);
}

TEST_CASE("occurrences")
{
    auto w = Word::parse("0120311252");
    CHECK(occurrences(w, Pattern::parse("100")) == 3);
    CHECK(occurrences(w, Pattern::parse("210")) == 0);
    CHECK(avoids(w, Pattern::parse("210")));
    CHECK(occurrences(Word::parse("012"), Pattern::parse("012")) == 1);
}

TEST_CASE("occurrences agree with the definition on random words")
{
    std::mt19937 rng(7);
    const std::vector<std::string> patterns{"0", "01", "10", "00", "100", "0012", "1012", "210", "0123", "01012"};
    for (int trial = 0; trial < 300; ++trial) {
        auto w = random_word(rng, 1 + trial % 10, 1 + trial % 5);
        for (const auto& ps : patterns) {
            auto p = Pattern::parse(ps);
            std::vector<Letter> pl(p.letters().begin(), p.letters().end());
            CHECK(occurrences(w, p) == oracle::occurrences(w, pl));
            CHECK(contains(w, p) == (oracle::occurrences(w, pl) > 0));
        }
        // order isomorphism ignores letter values: any letter matches "0", any rise matches "01"
        std::size_t pairs = 0;
        for (std::size_t i = 0; i < w.size(); ++i)
            for (std::size_t j = i + 1; j < w.size(); ++j)
                pairs += w[i] < w[j];
        CHECK(occurrences(w, Pattern::parse("0")) == w.size());
        CHECK(occurrences(w, Pattern::parse("01")) == pairs);
    }
}

TEST_CASE("enumerate visits in lexicographic order")
{
    std::vector<std::string> seen;
    auto count = enumerate(3, [&](std::span<const Letter> w) { seen.push_back(format_letters(w)); });
    CHECK(count == 5);
    CHECK(seen == std::vector<std::string>{"000", "001", "010", "011", "012"});

    seen.clear();
    CHECK(enumerate(1, [&](std::span<const Letter> w) { seen.push_back(format_letters(w)); }) == 1);
    CHECK(seen == std::vector<std::string>{"0"});
    CHECK(enumerate(0, [](std::span<const Letter>) { FAIL("no visits expected"); }) == 0);
    CHECK(enumerate(5, [](std::span<const Letter>) {}) == 53);
}

TEST_CASE("enumerate matches exhaustive word filtering")
{
    for (std::size_t n = 1; n <= 7; ++n) {
        std::vector<std::vector<Letter>> seen;
        enumerate(n, [&](std::span<const Letter> w) {
            CHECK(validate(w));
            seen.emplace_back(w.begin(), w.end());
        });
        CHECK(seen == oracle::ascent_sequences(n));
    }
}

TEST_CASE("children recursion: a prefix with a ascents has a+2 extensions")
{
    // count(n) computed by summing (asc + 2) over sequences of length n-1
    for (std::size_t n = 2; n <= 11; ++n) {
        BigCount by_children = 0;
        enumerate(n - 1, [&](std::span<const Letter> w) { by_children += static_cast<unsigned long>(ascents(w) + 2); });
        CHECK(enumerate(n, [](std::span<const Letter>) {}) == by_children);
    }
}

TEST_CASE("length cap")
{
    SearchOptions opts;
    opts.max_length = 10;
    CHECK_THROWS_AS(enumerate(11, [](std::span<const Letter>) {}, opts), DomainError);
}

TEST_CASE("count_avoiders")
{
    CHECK(count_avoiders(Pattern::parse("0012"), 3) == 5);
    CHECK(count_avoiders(Pattern::parse("0012"), 8) == 1430);
    CHECK(count_avoiders(Pattern::parse("0123"), 4) == 14);
    CHECK(count_avoiders(Pattern::parse("0"), 3) == 0);
}

TEST_CASE("pruned and unpruned search agree")
{
    SearchOptions full;
    full.prune = false;
    for (const char* ps : {"0012", "1012", "0123", "210", "100", "0021"})
        for (std::size_t n = 1; n <= 8; ++n) {
            auto p = Pattern::parse(ps);
            CHECK(count_avoiders(p, n) == count_avoiders(p, n, full));
        }
}

TEST_CASE("containment is monotone under extension")
{
    std::mt19937 rng(11);
    const auto p = Pattern::parse("0012");
    for (int trial = 0; trial < 500; ++trial) {
        auto w = random_ascent_sequence(rng, 3 + trial % 9);
        const bool before = contains(w, p);
        auto ext = w;
        std::uniform_int_distribution<int> d(0, static_cast<int>(ascents(w)) + 1);
        ext.push_back(static_cast<Letter>(d(rng)));
        if (before)
            CHECK(contains(ext, p));
        if (!before)
            CHECK(contains(ext, p) == contains_ending_at_last(ext, p));
    }
}

TEST_CASE("distribution")
{
    const auto p0012 = Pattern::parse("0012");
    const Stat asc[] = {Stat::asc};
    auto t = distribution(p0012, 4, asc);
    CHECK(t.at({0}) == 1);
    CHECK(t.at({1}) == 6);
    CHECK(t.at({2}) == 6);
    CHECK(t.at({3}) == 1);
    CHECK(t.size() == 4);
    CHECK(t.total() == 14);

    DistributionOptions nz;
    nz.not_ending_in_zero = true;
    auto t2 = distribution(p0012, 2, asc, nz);
    CHECK(t2.size() == 1);
    CHECK(t2.at({1}) == 1);

    const Stat three[] = {Stat::asc, Stat::fwd, Stat::zeros};
    auto t3 = distribution(p0012, 1, three);
    CHECK(t3.size() == 1);
    CHECK(t3.at({0, 1, 1}) == 1);

    CHECK_THROWS_AS(distribution(p0012, 3, std::span<const Stat>{}), DomainError);
    CHECK_THROWS_AS(parse_stat_list("asc,bogus"), DomainError);
    CHECK(parse_stat_list("asc,fwd") == std::vector<Stat>{Stat::asc, Stat::fwd});
}

TEST_CASE("(asc,fwd) and (asc,zeros) are equidistributed on S_0012(n)")
{
    const auto p = Pattern::parse("0012");
    const Stat af[] = {Stat::asc, Stat::fwd};
    const Stat az[] = {Stat::asc, Stat::zeros};
    for (std::size_t n = 1; n <= 10; ++n) {
        auto a = distribution(p, n, af);
        auto b = distribution(p, n, az);
        CHECK(a.same_entries(b));
        CHECK_FALSE(a == b);  // the statistic names differ
    }
}

TEST_CASE("sharded distribution equals sequential")
{
    const Stat sel[] = {Stat::asc, Stat::zeros, Stat::fwd, Stat::last};
    for (const char* ps : {"0012", "210"}) {
        auto p = Pattern::parse(ps);
        DistributionOptions par;
        par.threads = 4;
        for (std::size_t n : {1u, 5u, 9u})
            CHECK(distribution(p, n, sel) == distribution(p, n, sel, par));
    }
    DistributionOptions par;
    par.threads = 3;
    CHECK(distribution_all(8, sel) == distribution_all(8, sel, par));
}

TEST_CASE("table merge is associative and commutative")
{
    std::mt19937 rng(5);
    auto shard = [&] {
        DistributionTable t({"asc", "fwd"}, 6, "x");
        std::uniform_int_distribution<int> d(0, 4);
        for (int i = 0; i < 20; ++i)
            t.add({static_cast<std::size_t>(d(rng)), static_cast<std::size_t>(d(rng))}, d(rng) + 1);
        return t;
    };
    for (int trial = 0; trial < 20; ++trial) {
        auto a = shard(), b = shard(), c = shard();
        auto ab_c = a;
        ab_c.merge(b);
        ab_c.merge(c);
        auto bc = b;
        bc.merge(c);
        auto a_bc = a;
        a_bc.merge(bc);
        auto cba = c;
        cba.merge(b);
        cba.merge(a);
        CHECK(ab_c == a_bc);
        CHECK(ab_c == cba);
        CHECK(ab_c.total() == a.total() + b.total() + c.total());
    }
    DistributionTable other({"asc"}, 6, "x");
    DistributionTable t({"asc", "fwd"}, 6, "x");
    CHECK_THROWS_AS(t.merge(other), DomainError);
}
