#include "ascseq/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "ascseq/distribution.hpp"
#include "ascseq/dp.hpp"
#include "ascseq/enumerate.hpp"
#include "ascseq/gf210.hpp"
#include "ascseq/identities.hpp"
#include "ascseq/structures.hpp"

namespace ascseq::verify {

using core::Letter;
using core::Pattern;
using core::Stat;
using series::MultiPoly;
using series::TruncSeries;
using series::Var;

namespace {

CheckOutcome fail(std::string witness) { return {Status::fail, std::move(witness), {}}; }

// "n=5: dp=50, brute=52"
template <typename A, typename B>
std::string mismatch(std::size_t n, const char* a_name, const A& a, const char* b_name, const B& b)
{
    std::ostringstream os;
    os << "n=" << n << ": " << a_name << "=" << a << ", " << b_name << "=" << b;
    return os.str();
}

std::string key_text(const core::StatKey& key)
{
    std::string s = "(";
    for (std::size_t i = 0; i < key.size(); ++i)
        s += (i ? "," : "") + std::to_string(key[i]);
    return s + ")";
}

// First key (in key order) where two tables disagree, or empty.
std::string table_divergence(const core::DistributionTable& a, const core::DistributionTable& b)
{
    std::map<core::StatKey, bool> keys;
    for (const auto& [k, c] : a.entries())
        keys[k] = true;
    for (const auto& [k, c] : b.entries())
        keys[k] = true;
    for (const auto& [k, unused] : keys)
        if (a.at(k) != b.at(k))
            return key_text(k) + ": " + a.at(k).get_str() + " vs " + b.at(k).get_str();
    return {};
}

// First nonzero coefficient of a residual, or empty.
std::string first_nonzero(const TruncSeries& s)
{
    for (std::size_t k = 0; k <= s.order(); ++k)
        if (!s[k].is_zero())
            return "x^" + std::to_string(k) + ": " + s[k].to_string();
    return {};
}

std::string first_difference(const TruncSeries& a, const TruncSeries& b)
{
    for (std::size_t k = 0; k <= std::min(a.order(), b.order()); ++k)
        if (a[k] != b[k])
            return "x^" + std::to_string(k) + ": " + a[k].to_string() + " vs " + b[k].to_string();
    return {};
}

std::array<Stat, 2> pair(Stat a, Stat b) { return {a, b}; }

BigCount a1012_engine(std::size_t n, const Bounds& b)
{
    return b.overrides.a1012 ? b.overrides.a1012(n) : dp::a1012(n);
}

BigCount a210_engine(std::size_t n, const Bounds& b)
{
    return b.overrides.a210 ? b.overrides.a210(n) : dp::a210_from_cd(n);
}

std::vector<BigCount> a0123_engine(std::size_t n, const Bounds& b)
{
    return b.overrides.a0123 ? b.overrides.a0123(n) : dp::a0123_sequence(n);
}

BigCount b0123_engine(std::size_t n, const Bounds& b)
{
    return b.overrides.b0123 ? b.overrides.b0123(n) : dp::b0123_direct(n);
}

// Checks ---------------------------------------------------------------------------

CheckOutcome check_cor1(std::size_t N, const Bounds&)
{
    const auto p = Pattern::parse("0012");
    const auto b = dp::build_b_array(std::max<std::size_t>(N, 2));
    for (std::size_t n = 1; n <= N; ++n) {
        const BigCount brute = core::count_avoiders(p, n), formula = dp::catalan(n), via_dp = b.count_0012(n);
        if (brute != formula)
            return fail(mismatch(n, "brute", brute, "catalan", formula));
        if (via_dp != formula)
            return fail(mismatch(n, "dp", via_dp, "catalan", formula));
    }
    return {};
}

CheckOutcome check_cor1_equidist(std::size_t N, const Bounds&)
{
    const auto p = Pattern::parse("0012");
    for (std::size_t n = 1; n <= N; ++n) {
        const auto fwd = core::distribution(p, n, pair(Stat::asc, Stat::fwd));
        const auto zeros = core::distribution(p, n, pair(Stat::asc, Stat::zeros));
        if (!fwd.same_entries(zeros))
            return fail("n=" + std::to_string(n) + " (asc,fwd) vs (asc,zeros) at " + table_divergence(fwd, zeros));
    }
    return {};
}

CheckOutcome check_thm2(std::size_t N, const Bounds&)
{
    const auto p = Pattern::parse("0012");
    for (std::size_t n = 1; n <= N; ++n) {
        const auto ours = core::distribution(p, n, pair(Stat::asc, Stat::fwd));
        const auto perms = structures::av132_distribution(n);
        if (!ours.same_entries(perms))
            return fail("n=" + std::to_string(n) + " (asc,fwd) vs av132 (asc,rlmax) at " +
                        table_divergence(ours, perms));
        const auto asc = ours.marginal(0);
        for (std::size_t k = 0; k < n; ++k)
            if (asc.at({k}) != dp::narayana(n, k + 1))
                return fail(mismatch(n, ("asc=" + std::to_string(k) + " count").c_str(), asc.at({k}), "narayana",
                                     dp::narayana(n, k + 1)));
    }
    return {};
}

CheckOutcome check_lemma1(std::size_t N, const Bounds&)
{
    const std::size_t top = std::max<std::size_t>(N, 2);
    const auto b = dp::build_b_array(top);
    const auto uncapped = dp::build_b_array_variant(top, false);
    const auto p = Pattern::parse("0012");
    const std::array<Stat, 3> sel{Stat::asc, Stat::zeros, Stat::fwd};
    core::DistributionOptions nz;
    nz.not_ending_in_zero = true;
    for (std::size_t n = 2; n <= N; ++n) {
        const auto table = core::distribution(p, n, sel, nz);
        const long nn = static_cast<long>(n);
        for (long m = 0; m <= nn; ++m)
            for (long r = 0; r <= nn; ++r)
                for (long l = 0; l <= nn; ++l) {
                    const BigCount want = table.at({static_cast<std::size_t>(m), static_cast<std::size_t>(r),
                                                    static_cast<std::size_t>(l)});
                    if (b.at(nn, m, r, l) != want)
                        return fail(mismatch(n, ("b[m,r,l]=" + key_text({std::size_t(m), std::size_t(r), std::size_t(l)})).c_str(),
                                             b.at(nn, m, r, l), "brute", want));
                    if (uncapped.at(nn, m, r, l) != want)
                        return fail(mismatch(n, "uncapped b", uncapped.at(nn, m, r, l), "brute", want));
                }
    }
    return {};
}

CheckOutcome check_lemma2(std::size_t N, const Bounds& b)
{
    const auto from_dp = series::g_from_b_polys(N);
    const auto brute = series::g_from_enumeration(N, b.threads);
    if (auto d = first_difference(from_dp, brute); !d.empty())
        return fail("B_n(y;u,v) polynomials vs brute force at " + d);
    return {};
}

CheckOutcome check_lemma3(std::size_t N, const Bounds& b)
{
    const auto g = series::g_from_enumeration(N, b.threads);
    if (g[2] != MultiPoly::var(Var::u) * MultiPoly::var(Var::v) * MultiPoly::var(Var::y) && N >= 2)
        return fail("x^2 seed is " + g[2].to_string() + ", expected y*u*v");
    const auto residual = series::functional_equation_residual(g);
    if (auto d = first_nonzero(residual); !d.empty())
        return fail("residual " + d);
    if (auto d = first_nonzero(residual.substitute(Var::u, Rat(0))); !d.empty())
        return fail("residual at u=0 " + d);
    return {};
}

CheckOutcome check_thm1(std::size_t N, const Bounds&)
{
    const auto sides = series::g_closed(N);  // throws on a mismatch
    for (std::size_t n = 2; n <= N; ++n) {
        const Rat total = sides.closed[n].substitute(Var::y, Rat(1)).substitute(Var::u, Rat(1)).constant_term();
        const BigCount want = dp::catalan(n) - dp::catalan(n - 1);
        if (total != Rat(want))
            return fail(mismatch(n, "g(x,1;1,1)", total, "C_n - C_{n-1}", want));
    }
    return {};
}

CheckOutcome check_kappa(std::size_t N, const Bounds&)
{
    const auto kappa = series::kappa_series(N);
    if (auto d = first_nonzero(series::kappa_quadratic_residual(kappa)); !d.empty())
        return fail("quadratic residual " + d);
    for (std::size_t n = 1; n <= N; ++n)
        for (std::size_t k = 0; k < n; ++k) {
            const Rat c = kappa[n].coeff({static_cast<unsigned>(k), 0, 0});
            if (c != Rat(dp::narayana(n, k + 1)))
                return fail(mismatch(n, ("kappa y^" + std::to_string(k)).c_str(), c, "narayana",
                                     dp::narayana(n, k + 1)));
        }
    return {};
}

CheckOutcome check_thm2_series(std::size_t N, const Bounds&)
{
    const auto f = series::f_closed(N);
    const auto h = series::h_series(N);
    if (auto d = first_difference(f, h); !d.empty())
        return fail("f vs h at " + d);
    const auto p = Pattern::parse("0012");
    for (std::size_t n = 1; n <= N; ++n) {
        const auto table = core::distribution(p, n, pair(Stat::asc, Stat::fwd));
        MultiPoly want;
        for (const auto& [key, count] : table.entries())
            want += MultiPoly::monomial(Rat(count), {static_cast<unsigned>(key[0]), static_cast<unsigned>(key[1]), 0});
        if (f[n] != want)
            return fail(mismatch(n, "f", f[n].to_string(), "brute (asc,fwd)", want.to_string()));
    }
    return {};
}

CheckOutcome check_thm3(std::size_t N, const Bounds& b)
{
    const auto p = Pattern::parse("1012");
    const std::vector<Letter> rgf_pattern{1, 2, 1, 2, 3};
    const auto gf = series::a1012_gf(N);
    for (std::size_t n = 1; n <= N; ++n) {
        const BigCount via_dp = a1012_engine(n, b), formula = dp::binomial_catalan_transform(n);
        const BigCount brute = core::count_avoiders(p, n), rgf = structures::count_rgf_avoiding(rgf_pattern, n);
        if (via_dp != formula)
            return fail(mismatch(n, "dp", via_dp, "formula", formula));
        if (brute != formula)
            return fail(mismatch(n, "brute", brute, "formula", formula));
        if (rgf != formula)
            return fail(mismatch(n, "rgf 12123", rgf, "formula", formula));
        if (gf[n] != MultiPoly(Rat(formula)))
            return fail(mismatch(n, "gf", gf[n].to_string(), "formula", formula));
    }
    return {};
}

CheckOutcome check_thm4(std::size_t N, const Bounds& b)
{
    const auto p = Pattern::parse("0123");
    const std::size_t dyck_n = std::max<std::size_t>(N, 20);
    const auto seq = a0123_engine(dyck_n, b);
    const auto gf = series::gf_0123(dyck_n);
    for (std::size_t n = 0; n <= dyck_n; ++n) {
        const BigCount dyck = structures::dyck_count_height_le(5, n);
        if (seq[n] != dyck)
            return fail(mismatch(n, "recurrence", seq[n], "dyck height<=5", dyck));
        if (gf.all[n] != MultiPoly(Rat(seq[n])))
            return fail(mismatch(n, "gf", gf.all[n].to_string(), "recurrence", seq[n]));
    }
    for (std::size_t n = 1; n <= N; ++n) {
        const BigCount brute = core::count_avoiders(p, n);
        if (brute != seq[n])
            return fail(mismatch(n, "brute", brute, "recurrence", seq[n]));
        const BigCount wide = b0123_engine(n, b), want = seq[n] - pow2(static_cast<unsigned>(n - 1));
        if (wide != want)
            return fail(mismatch(n, "quintuple sum", wide, "a_n - 2^(n-1)", want));
    }
    return {};
}

// Entry n of the 1 + sum f_m expansion for a variant, or the integrity error text.
std::string variant_verdict(std::size_t N, series::Gf210Variant variant, const std::vector<BigCount>& brute)
{
    try {
        const auto t = series::build_gf210_table(N - 1, N, variant);
        const auto total = t.total(N);
        for (std::size_t n = 1; n <= N; ++n)
            if (total[n] != Rat(brute[n]))
                return mismatch(n, "gf", total[n], "brute", brute[n]);
        return {};
    } catch (const IntegrityError& e) {
        return e.what();
    }
}

CheckOutcome check_prop1(std::size_t N, const Bounds&)
{
    using series::RationalFun;
    const std::size_t top = std::max<std::size_t>(N, 3);
    const auto t = series::build_gf210_table(top - 1, top);

    const std::array<std::pair<std::array<long, 3>, RationalFun>, 9> displayed{{
        {{1, 1, 0}, RationalFun::monomial(3, 3)},
        {{1, 1, 1}, RationalFun::monomial(2, 2)},
        {{2, 1, 0}, RationalFun::monomial(5, 5)},
        {{2, 1, 1}, RationalFun::monomial(4, 4)},
        {{2, 2, 0}, RationalFun::monomial(4, 5)},
        {{2, 2, 1}, RationalFun::monomial(4, 5)},
        {{2, 2, 2}, RationalFun::monomial(3, 4)},
        {{0, 0, 0}, RationalFun::monomial(1, 1)},
        {{1, 0, 0}, RationalFun()},
    }};
    for (const auto& [idx, want] : displayed) {
        const auto& got = t.at(idx[0], idx[1], idx[2]);
        if (got != want)
            return fail("f_{" + std::to_string(idx[0]) + "," + std::to_string(idx[1]) + "," + std::to_string(idx[2]) +
                        "} = " + got.to_string() + ", expected " + want.to_string());
    }
    if (t.f_m(1) != RationalFun::monomial(2, 3))
        return fail("f_1 = " + t.f_m(1).to_string());
    if (t.f_m(2) != RationalFun({0, 0, 0, 1, 2}, 5))
        return fail("f_2 = " + t.f_m(2).to_string());

    for (std::size_t m = 1; m <= t.mmax(); ++m) {
        const long mm = static_cast<long>(m);
        if (!t.at(mm, 0, 0).is_zero())
            return fail("f_{" + std::to_string(m) + ",0,0} = " + t.at(mm, 0, 0).to_string());
        for (long r = 0; r <= mm; ++r)
            for (long s = 0; s <= r; ++s)
                if (t.at(mm, r, s).numerator_over(static_cast<unsigned>(2 * m + 1)).size() > 2 * m + 2)
                    return fail("f_{" + std::to_string(m) + "," + std::to_string(r) + "," + std::to_string(s) +
                                "} numerator degree exceeds 2m+1");
    }

    const auto p = Pattern::parse("210");
    std::vector<BigCount> brute(N + 1);
    for (std::size_t n = 1; n <= N; ++n)
        brute[n] = core::count_avoiders(p, n);
    CheckOutcome out;
    if (N >= 1) {
        if (auto d = variant_verdict(N, series::Gf210Variant::displayed, brute); !d.empty())
            return fail("inner sum j=i..r: " + d);
        const auto alt = variant_verdict(N, series::Gf210Variant::proof_text, brute);
        out.note = alt.empty() ? "inner sum j=i..s also matches brute force up to n=" + std::to_string(N)
                               : "inner sum j=i..r matches brute force; j=i..s diverges first at " + alt;
    }
    return out;
}

CheckOutcome check_prop2(std::size_t N, const Bounds&)
{
    const auto cd = dp::build_cd_arrays(std::max<std::size_t>(N, 1));
    const auto p = Pattern::parse("210");
    for (long n = 1; n <= static_cast<long>(N); ++n) {
        std::map<std::array<long, 3>, std::pair<BigCount, BigCount>> brute;
        core::for_each_avoider(p, static_cast<std::size_t>(n), [&](std::span<const Letter> w) {
            const auto st = core::stats(w);
            auto& cell = brute[{static_cast<long>(st.asc), static_cast<long>(st.maxletter), static_cast<long>(st.last)}];
            cell.first += 1;
            if (w.size() >= 2 && w[w.size() - 2] == st.maxletter)
                cell.second += 1;
        });
        for (long m = 0; m < n; ++m)
            for (long r = 0; r <= m; ++r)
                for (long s = 0; s <= r; ++s) {
                    const auto it = brute.find({m, r, s});
                    const BigCount c = it == brute.end() ? BigCount(0) : it->second.first;
                    const BigCount d = it == brute.end() ? BigCount(0) : it->second.second;
                    const std::string at = key_text({std::size_t(m), std::size_t(r), std::size_t(s)});
                    if (cd.c(n, m, r, s) != c)
                        return fail(mismatch(static_cast<std::size_t>(n), ("c" + at).c_str(), cd.c(n, m, r, s), "brute", c));
                    if (cd.d(n, m, r, s) != d)
                        return fail(mismatch(static_cast<std::size_t>(n), ("d" + at).c_str(), cd.d(n, m, r, s), "brute", d));
                }
    }
    return {};
}

CheckOutcome check_conj33(std::size_t N, const Bounds& b)
{
    const auto p = Pattern::parse("210");
    for (std::size_t n = 1; n <= N; ++n) {
        const BigCount via_cd = a210_engine(n, b), brute = core::count_avoiders(p, n);
        const BigCount partitions = structures::count_non_k_crossing(n, 3);
        if (via_cd != brute)
            return fail(mismatch(n, "cd", via_cd, "brute", brute));
        if (partitions != brute)
            return fail(mismatch(n, "non-3-crossing", partitions, "brute", brute));
    }
    return {};
}

CheckOutcome check_narayana(std::size_t N, const Bounds&)
{
    for (std::size_t n = 1; n <= N; ++n) {
        BigCount sum = 0;
        for (std::size_t k = 1; k <= n; ++k) {
            sum += dp::narayana(n, k);
            if (dp::narayana(n, k) != dp::narayana(n, n + 1 - k))
                return fail(mismatch(n, ("N(n," + std::to_string(k) + ")").c_str(), dp::narayana(n, k), "mirror",
                                     dp::narayana(n, n + 1 - k)));
        }
        if (sum != dp::catalan(n))
            return fail(mismatch(n, "row sum", sum, "catalan", dp::catalan(n)));
    }
    return {};
}

CheckOutcome check_series_roundtrip(std::size_t N, const Bounds&)
{
    std::mt19937 rng(20);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<unsigned> deg(0, 1);
    const TruncSeries one = TruncSeries::constant(N, MultiPoly(1));
    for (int trial = 0; trial < 4; ++trial) {
        TruncSeries s(N);
        s.coeff(0) = MultiPoly(1);
        for (std::size_t k = 1; k <= N; ++k)
            s.coeff(k) = MultiPoly::monomial(Rat(coef(rng)), {deg(rng), deg(rng), 0});
        if (auto d = first_difference(s * s.invert(), one); !d.empty())
            return fail("trial " + std::to_string(trial) + " s * s^-1 at " + d);
        const auto r = s.sqrt();
        if (auto d = first_difference(r * r, s); !d.empty())
            return fail("trial " + std::to_string(trial) + " sqrt(s)^2 at " + d);
    }
    return {};
}

CheckOutcome check_parallel_determinism(std::size_t N, const Bounds&)
{
    const std::array<Stat, 3> sel{Stat::asc, Stat::zeros, Stat::last};
    for (const char* text : {"0012", "210"}) {
        const auto p = Pattern::parse(text);
        core::DistributionOptions seq, par;
        par.threads = 4;
        const auto a = core::distribution(p, N, sel, seq);
        const auto b = core::distribution(p, N, sel, par);
        if (!(a == b))
            return fail(std::string(text) + " n=" + std::to_string(N) + " sequential vs sharded at " +
                        table_divergence(a, b));
    }
    return {};
}

CheckOutcome check_merge_associativity(std::size_t N, const Bounds&)
{
    const std::array<Stat, 2> sel{Stat::asc, Stat::fwd};
    const auto p = Pattern::parse("0012");
    const auto names = std::vector<std::string>{"asc", "fwd"};
    std::mt19937 rng(static_cast<unsigned>(N));
    std::uniform_int_distribution<int> pick(0, 2);
    std::array<core::DistributionTable, 3> shard{core::DistributionTable(names, N, "0012"),
                                                 core::DistributionTable(names, N, "0012"),
                                                 core::DistributionTable(names, N, "0012")};
    core::for_each_avoider(p, N, [&](std::span<const Letter> w) {
        const auto st = core::stats(w);
        shard[static_cast<std::size_t>(pick(rng))].add({st.asc, st.fwd});
    });
    auto left = shard[0];
    left.merge(shard[1]);
    left.merge(shard[2]);
    auto right = shard[1];
    right.merge(shard[2]);
    auto outer = shard[0];
    outer.merge(right);
    auto swapped = shard[2];
    swapped.merge(shard[0]);
    swapped.merge(shard[1]);
    const auto whole = core::distribution(p, N, sel);
    if (!left.same_entries(outer))
        return fail("(a+b)+c vs a+(b+c) at " + table_divergence(left, outer));
    if (!left.same_entries(swapped))
        return fail("a+b+c vs c+a+b at " + table_divergence(left, swapped));
    if (!left.same_entries(whole))
        return fail("merged shards vs direct table at " + table_divergence(left, whole));
    return {};
}

std::vector<CheckSpec> build_registry()
{
    auto fixed = [](std::size_t v) { return [v](std::size_t) { return v; }; };
    auto at_least = [](std::size_t v) { return [v](std::size_t n) { return std::max(n, v); }; };
    std::vector<CheckSpec> r{
        {"cor1", "0012-avoiding ascent sequences are counted by the Catalan numbers",
         {"brute", "formula", "dp"}, 13, Relation::equal, check_cor1},
        {"cor1-equidist", "(asc,fwd) and (asc,zeros) are equidistributed on 0012-avoiders",
         {"brute"}, 12, Relation::equal, check_cor1_equidist},
        {"thm2", "(asc,fwd) on 0012-avoiders equals (asc,rlmax) on 132-avoiding permutations; asc is Narayana",
         {"brute", "av132", "formula"}, 11, Relation::equal, check_thm2},
        {"lemma1", "b-array recurrence reproduces (asc,zeros,fwd) counts of 0012-avoiders not ending in 0",
         {"dp", "brute"}, 12, Relation::equal, check_lemma1},
        {"lemma2", "B_n(y;u,v) polynomial recurrence matches brute-force refined counts",
         {"dp-poly", "brute"}, 12, Relation::equal, check_lemma2},
        {"lemma3", "kernel functional equation for g(x,y;u,v) holds in cleared form",
         {"brute", "series"}, 12, Relation::residual_zero, check_lemma3},
        {"thm1", "closed form of g(x,y;u,1) = g(x,y;1,u) agrees with both recurrence specialisations",
         {"series", "dp-poly"}, 30, Relation::equal, check_thm1},
        {"kappa", "kappa satisfies x y k^2 = (1 - x(y+1)) k - x and has Narayana coefficients",
         {"series", "formula"}, 40, Relation::residual_zero, check_kappa, at_least(20)},
        {"thm2-series", "f(x,y;u) closed forms equal h(x,y;u) and the brute-force (asc,fwd) table",
         {"series", "brute"}, 12, Relation::equal, check_thm2_series},
        {"thm3", "1012-avoiders: a-array = binomial-Catalan transform = brute = 12123-avoiding RGFs = GF",
         {"dp", "formula", "brute", "rgf", "series"}, 12, Relation::equal, check_thm3},
        {"thm4", "0123-avoiders: recurrence = rational GF = brute = height<=5 Dyck paths; quintuple sum",
         {"dp", "series", "brute", "dyck", "formula"}, 13, Relation::equal, check_thm4},
        {"prop1", "f_{m,r,s} recurrence gives the displayed closed forms and the 210-avoider counts",
         {"series", "brute"}, 11, Relation::equal, check_prop1},
        {"prop2", "c/d-array recurrences match brute-force refined 210-avoider counts",
         {"dp", "brute"}, 11, Relation::equal, check_prop2},
        {"conj33", "210-avoiders are equinumerous with partitions having no 3-crossing",
         {"dp", "brute", "partitions"}, 11, Relation::equal, check_conj33},
        {"narayana", "Narayana rows are symmetric and sum to the Catalan numbers",
         {"formula"}, 200, Relation::equal, check_narayana, at_least(30)},
        {"series-roundtrip", "series invert and sqrt round-trip exactly",
         {"series"}, 40, Relation::equal, check_series_roundtrip, fixed(20)},
        {"parallel-determinism", "sharded enumeration produces the sequential distribution table",
         {"brute", "brute-sharded"}, 12, Relation::equal, check_parallel_determinism, at_least(10)},
        {"merge-associativity", "distribution table merge is associative and commutative on random shards",
         {"brute"}, 12, Relation::equal, check_merge_associativity},
    };
    std::sort(r.begin(), r.end(), [](const CheckSpec& a, const CheckSpec& b) { return a.id < b.id; });
    return r;
}

}  // namespace

std::string relation_name(Relation r) { return r == Relation::equal ? "equal" : "residual-zero"; }

std::string status_name(Status s)
{
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
    }
    return "?";
}

bool Report::all_passed() const
{
    return std::all_of(entries.begin(), entries.end(),
                       [](const ReportEntry& e) { return e.outcome.status == Status::pass; });
}

std::string Report::to_text(bool with_timing) const
{
    std::ostringstream os;
    std::size_t counts[3] = {0, 0, 0};
    for (const auto& e : entries) {
        ++counts[static_cast<int>(e.outcome.status)];
        os << "check " << e.id << "\n";
        os << "  claim: " << e.claim << "\n";
        os << "  engines:";
        for (std::size_t i = 0; i < e.engines.size(); ++i)
            os << (i ? ", " : " ") << e.engines[i];
        os << "\n";
        os << "  bound: " << e.bound << "\n";
        os << "  relation: " << relation_name(e.relation) << "\n";
        os << "  status: " << status_name(e.outcome.status) << "\n";
        os << "  witness: " << (e.outcome.witness.empty() ? "-" : e.outcome.witness) << "\n";
        if (!e.outcome.note.empty())
            os << "  note: " << e.outcome.note << "\n";
        if (with_timing)
            os << "  millis: " << e.millis << "\n";
    }
    os << "summary: " << entries.size() << " checks, " << counts[0] << " pass, " << counts[1] << " fail, "
       << counts[2] << " skipped\n";
    return os.str();
}

const std::vector<CheckSpec>& registry()
{
    static const std::vector<CheckSpec> r = build_registry();
    return r;
}

std::vector<std::string> check_ids()
{
    std::vector<std::string> ids;
    for (const auto& c : registry())
        ids.push_back(c.id);
    return ids;
}

std::vector<std::string> parse_selector(const std::string& text)
{
    if (text == "all")
        return check_ids();
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    const auto known = check_ids();
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        if (std::find(known.begin(), known.end(), item) == known.end()) {
            std::string list;
            for (const auto& k : known)
                list += (list.empty() ? "" : ", ") + k;
            throw UsageError("unknown check id '" + item + "'; known ids: " + list);
        }
        if (std::find(out.begin(), out.end(), item) == out.end())
            out.push_back(item);
    }
    return out;
}

Report run_suite(std::span<const std::string> ids, const Bounds& bounds)
{
    std::vector<const CheckSpec*> selected;
    for (const auto& id : ids) {
        auto it = std::find_if(registry().begin(), registry().end(), [&](const CheckSpec& c) { return c.id == id; });
        if (it == registry().end())
            throw UsageError("unknown check id '" + id + "'");
        if (std::find(selected.begin(), selected.end(), &*it) == selected.end())
            selected.push_back(&*it);
    }

    Report report;
    report.entries.resize(selected.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < selected.size(); i = next++) {
            const CheckSpec& spec = *selected[i];
            ReportEntry& e = report.entries[i];
            e.id = spec.id;
            e.claim = spec.claim;
            e.engines = spec.engines;
            e.relation = spec.relation;
            e.bound = spec.bound_for(bounds.max_n);
            if (e.bound > spec.cap && !bounds.heavy) {
                e.outcome = {Status::skipped,
                             "bound " + std::to_string(e.bound) + " exceeds cap " + std::to_string(spec.cap) +
                                 "; rerun with --heavy",
                             {}};
                continue;
            }
            const auto start = std::chrono::steady_clock::now();
            try {
                e.outcome = spec.run(e.bound, bounds);
            } catch (const std::exception& ex) {
                e.outcome = {Status::fail, std::string("exception: ") + ex.what(), {}};
            }
            e.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                           .count();
        }
    };
    const unsigned workers = std::max(1u, std::min<unsigned>(bounds.threads, static_cast<unsigned>(selected.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < workers; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();

    std::sort(report.entries.begin(), report.entries.end(),
              [](const ReportEntry& a, const ReportEntry& b) { return a.id < b.id; });
    return report;
}

}  // namespace ascseq::verify
