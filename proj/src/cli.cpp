#include "ascseq/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "ascseq/dp.hpp"
#include "ascseq/enumerate.hpp"
#include "ascseq/gf210.hpp"
#include "ascseq/identities.hpp"
#include "ascseq/verify.hpp"

namespace ascseq::cli {

using core::Pattern;
using series::TruncSeries;

namespace {

// Largest n each dp engine accepts; the four-index arrays grow like n^4.
const std::map<std::string, std::size_t> kDpCap{{"0012", 40}, {"1012", 300}, {"0123", 2000}, {"210", 40}};
const std::map<std::string, std::size_t> kFormulaCap{{"0012", 5000}, {"1012", 2000}, {"0123", 200}};
constexpr std::size_t kSeriesOrderCap = 30;

std::string supported_pairs()
{
    std::string s = "brute: any pattern; dp:";
    for (const auto& [p, cap] : kDpCap)
        s += " " + p;
    s += "; formula:";
    for (const auto& [p, cap] : kFormulaCap)
        s += " " + p;
    return s;
}

Pattern parse_pattern(const std::string& text)
{
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw UsageError("pattern must be a digit string such as 0012, got '" + text + "'");
    try {
        return Pattern::parse(text);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
}

BigCount count_with(const std::string& engine, const Pattern& p, std::size_t n, bool prune)
{
    const std::string key = p.to_string();
    if (engine == "brute") {
        core::SearchOptions opts;
        opts.prune = prune;
        return core::count_avoiders(p, n, opts);
    }
    if (engine == "dp") {
        if (key == "0012")
            return dp::build_b_array(std::max<std::size_t>(n, 2)).count_0012(n);
        if (key == "1012")
            return dp::a1012(n);
        if (key == "0123")
            return dp::a0123_sequence(n)[n];
        return dp::a210_from_cd(n);
    }
    if (key == "0012")
        return dp::catalan(n);
    if (key == "1012")
        return dp::binomial_catalan_transform(n);
    return dp::b0123_direct(n) + pow2(static_cast<unsigned>(n - 1));
}

void validate_engine(const std::string& engine, const Pattern& p, std::size_t n)
{
    const std::string key = p.to_string();
    if (engine == "brute") {
        if (n > kDefaultMaxLength)
            throw UsageError("brute force supports n <= " + std::to_string(kDefaultMaxLength));
        return;
    }
    const auto& caps = engine == "dp" ? kDpCap : kFormulaCap;
    auto it = caps.find(key);
    if (it == caps.end())
        throw UsageError("no " + engine + " engine for pattern " + key + "; supported: " + supported_pairs());
    if (n > it->second)
        throw UsageError(engine + " engine for " + key + " supports n <= " + std::to_string(it->second));
}

std::vector<std::string> engines_for(const Pattern& p)
{
    std::vector<std::string> out{"brute"};
    if (kDpCap.count(p.to_string()))
        out.push_back("dp");
    if (kFormulaCap.count(p.to_string()))
        out.push_back("formula");
    return out;
}

std::vector<core::Stat> parse_stats(const std::string& text)
{
    try {
        return core::parse_stat_list(text);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
}

std::string distribution_text(const core::DistributionTable& t)
{
    std::ostringstream os;
    for (const auto& name : t.stat_names())
        os << name << " ";
    os << "count\n";
    for (const auto& [key, count] : t.entries()) {
        for (auto k : key)
            os << k << " ";
        os << count.get_str() << "\n";
    }
    os << "total " << t.total().get_str() << "\n";
    return os.str();
}

std::string distribution_csv(const core::DistributionTable& t)
{
    std::ostringstream os;
    for (const auto& name : t.stat_names())
        os << name << ",";
    os << "count\n";
    for (const auto& [key, count] : t.entries()) {
        for (auto k : key)
            os << k << ",";
        os << count.get_str() << "\n";
    }
    return os.str();
}

// "y=1,u=1/2" -> substitutions
std::vector<std::pair<series::Var, Rat>> parse_subs(const std::string& text)
{
    std::vector<std::pair<series::Var, Rat>> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw UsageError("substitution '" + item + "' must look like y=1");
        const std::string var = item.substr(0, eq), value = item.substr(eq + 1);
        series::Var v;
        if (var == "y")
            v = series::Var::y;
        else if (var == "u")
            v = series::Var::u;
        else if (var == "v")
            v = series::Var::v;
        else
            throw UsageError("unknown variable '" + var + "'; use y, u or v");
        Rat r;
        if (value.empty() || r.set_str(value, 10) != 0)
            throw UsageError("substitution value '" + value + "' is not a rational number");
        r.canonicalize();
        out.emplace_back(v, r);
    }
    return out;
}

TruncSeries constants_series(const std::vector<Rat>& coeffs)
{
    std::vector<series::MultiPoly> polys(coeffs.begin(), coeffs.end());
    return TruncSeries(coeffs.size() - 1, std::move(polys));
}

std::string gf210_rational_text(const series::Gf210Table& t)
{
    std::ostringstream os;
    for (std::size_t m = 0; m <= t.mmax(); ++m) {
        const long mm = static_cast<long>(m);
        for (long r = 0; r <= mm; ++r)
            for (long s = 0; s <= r; ++s)
                os << "f_{" << m << "," << r << "," << s << "} = " << t.at(mm, r, s).to_string() << "\n";
        os << "f_" << m << " = " << t.f_m(m).to_string() << "\n";
    }
    return os.str();
}

}  // namespace

std::string distribution_to_json(const core::DistributionTable& table)
{
    nlohmann::ordered_json j;
    j["pattern"] = table.label();
    j["n"] = table.n();
    j["stats"] = table.stat_names();
    j["total"] = table.total().get_str();
    auto entries = nlohmann::ordered_json::array();
    for (const auto& [key, count] : table.entries())
        entries.push_back(nlohmann::ordered_json::array({key, count.get_str()}));
    j["entries"] = std::move(entries);
    return j.dump();
}

core::DistributionTable distribution_from_json(const std::string& text)
{
    try {
        const auto j = nlohmann::json::parse(text);
        core::DistributionTable t(j.at("stats").get<std::vector<std::string>>(), j.at("n").get<std::size_t>(),
                                  j.at("pattern").get<std::string>());
        for (const auto& e : j.at("entries")) {
            BigCount c;
            if (c.set_str(e.at(1).get<std::string>(), 10) != 0)
                throw UsageError("count is not a decimal string");
            t.add(e.at(0).get<core::StatKey>(), c);
        }
        if (t.total().get_str() != j.at("total").get<std::string>())
            throw UsageError("entries do not add up to the stated total");
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("malformed distribution JSON: ") + e.what());
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Pattern-avoiding ascent sequences: counts, distributions, series and checks", "ascseq"};
    app.require_subcommand(1);

    // count
    auto* count = app.add_subcommand("count", "Count ascent sequences of length n avoiding a pattern");
    std::string c_pattern, c_engine = "brute";
    std::size_t c_n = 0;
    bool c_all = false, c_no_prune = false;
    count->add_option("--pattern", c_pattern, "Pattern as a digit string")->required();
    count->add_option("--n", c_n, "Sequence length")->required();
    count->add_option("--engine", c_engine, "brute, dp or formula")->check(CLI::IsMember({"brute", "dp", "formula"}));
    count->add_flag("--all-engines", c_all, "Run every engine available for the pattern");
    count->add_flag("--no-prune", c_no_prune, "Filter complete words instead of pruning prefixes");

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "List ascent sequences of length n, optionally avoiding a pattern");
    std::string e_pattern;
    std::size_t e_n = 0, e_limit = 0;
    bool e_no_prune = false;
    enumerate->add_option("--pattern", e_pattern, "Pattern as a digit string");
    enumerate->add_option("--n", e_n, "Sequence length")->required();
    enumerate->add_option("--limit", e_limit, "Stop after this many words (0 = no limit)");
    enumerate->add_flag("--no-prune", e_no_prune, "Filter complete words instead of pruning prefixes");

    // distribution
    auto* distribution = app.add_subcommand("distribution", "Joint distribution of statistics");
    std::string d_pattern, d_stats, d_format = "text";
    std::size_t d_n = 0;
    unsigned d_threads = 0;
    bool d_nonzero_last = false;
    distribution->add_option("--pattern", d_pattern, "Pattern as a digit string (omit for all ascent sequences)");
    distribution->add_option("--n", d_n, "Sequence length")->required();
    distribution->add_option("--stats", d_stats, "Comma-separated: asc, zeros, fwd, last, maxletter")->required();
    distribution->add_option("--format", d_format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    distribution->add_flag("--not-ending-in-zero", d_nonzero_last, "Only sequences whose last letter is nonzero");
    distribution->add_option("--threads", d_threads, "Worker threads (default: ASCSEQ_THREADS or 1)");

    // series
    auto* series_cmd = app.add_subcommand("series", "Expand a generating function");
    std::string s_name, s_subs, s_variant = "displayed";
    std::size_t s_order = 0;
    bool s_rational = false;
    series_cmd->add_option("--name", s_name, "kappa, g, f, h, a1012, thm4 or prop1")
        ->required()
        ->check(CLI::IsMember({"kappa", "g", "f", "h", "a1012", "thm4", "prop1"}));
    series_cmd->add_option("--order", s_order, "Truncation order")->required();
    series_cmd->add_option("--subs", s_subs, "Substitutions such as y=1,u=1");
    series_cmd->add_option("--variant", s_variant, "prop1 inner limit: displayed or proof-text")
        ->check(CLI::IsMember({"displayed", "proof-text"}));
    series_cmd->add_flag("--rational", s_rational, "prop1: print the f_{m,r,s} table as rational functions");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Run cross-checks and print the report");
    std::string v_suite = "all";
    std::size_t v_max_n = 9;
    unsigned v_threads = 0;
    bool v_heavy = false, v_no_timing = false;
    verify_cmd->add_option("--suite", v_suite, "all, or comma-separated check ids");
    verify_cmd->add_option("--max-n", v_max_n, "Size bound for every check");
    verify_cmd->add_flag("--heavy", v_heavy, "Lift the per-check size caps");
    verify_cmd->add_option("--threads", v_threads, "Checks run concurrently (default: ASCSEQ_THREADS or 1)");
    verify_cmd->add_flag("--no-timing", v_no_timing, "Omit the millis field");
    verify_cmd->add_flag("--list", "Print the check ids and exit");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (count->parsed()) {
            const Pattern p = parse_pattern(c_pattern);
            if (c_n < 1)
                throw UsageError("--n must be at least 1");
            const auto engines = c_all ? engines_for(p) : std::vector<std::string>{c_engine};
            for (const auto& e : engines)
                validate_engine(e, p, c_n);
            if (!c_all) {
                out << count_with(c_engine, p, c_n, !c_no_prune).get_str() << "\n";
                return kExitOk;
            }
            std::optional<BigCount> first;
            bool agree = true;
            for (const auto& e : engines) {
                const BigCount v = count_with(e, p, c_n, !c_no_prune);
                out << e << ": " << v.get_str() << "\n";
                if (first && *first != v)
                    agree = false;
                first = v;
            }
            if (!agree)
                err << "engines disagree\n";
            return agree ? kExitOk : kExitCheckFailed;
        }

        if (enumerate->parsed()) {
            std::optional<Pattern> p;
            if (!e_pattern.empty())
                p = parse_pattern(e_pattern);
            if (e_n < 1 || e_n > kDefaultMaxLength)
                throw UsageError("--n must be in 1.." + std::to_string(kDefaultMaxLength));
            core::SearchOptions opts;
            opts.prune = !e_no_prune;
            std::size_t written = 0;
            // The visitor cannot stop the search early, so the limit only suppresses output.
            auto visit = [&](std::span<const core::Letter> w) {
                if (e_limit == 0 || written < e_limit) {
                    out << core::format_letters(w) << "\n";
                    ++written;
                }
            };
            if (p)
                core::for_each_avoider(*p, e_n, visit, opts);
            else
                core::enumerate(e_n, visit, opts);
            return kExitOk;
        }

        if (distribution->parsed()) {
            const auto stats = parse_stats(d_stats);
            std::optional<Pattern> p;
            if (!d_pattern.empty())
                p = parse_pattern(d_pattern);
            if (d_n < 1 || d_n > kDefaultMaxLength)
                throw UsageError("--n must be in 1.." + std::to_string(kDefaultMaxLength));
            core::DistributionOptions opts;
            opts.not_ending_in_zero = d_nonzero_last;
            opts.threads = d_threads ? d_threads : core::threads_from_env();
            const auto table = p ? core::distribution(*p, d_n, stats, opts) : core::distribution_all(d_n, stats, opts);
            if (d_format == "json")
                out << distribution_to_json(table) << "\n";
            else if (d_format == "csv")
                out << distribution_csv(table);
            else
                out << distribution_text(table);
            return kExitOk;
        }

        if (series_cmd->parsed()) {
            if (s_order < 1 || s_order > kSeriesOrderCap)
                throw UsageError("--order must be in 1.." + std::to_string(kSeriesOrderCap));
            const auto subs = parse_subs(s_subs);
            if (s_rational && s_name != "prop1")
                throw UsageError("--rational applies only to --name prop1");
            const auto variant =
                s_variant == "displayed" ? series::Gf210Variant::displayed : series::Gf210Variant::proof_text;
            TruncSeries s;
            if (s_name == "kappa")
                s = series::kappa_series(s_order);
            else if (s_name == "g")
                s = series::g_from_b_polys(s_order);
            else if (s_name == "f")
                s = series::f_closed(s_order);
            else if (s_name == "h")
                s = series::h_series(s_order);
            else if (s_name == "a1012")
                s = series::a1012_gf(s_order);
            else if (s_name == "thm4")
                s = series::gf_0123(s_order).all;
            else {
                const auto t = series::build_gf210_table(s_order - 1, s_order, variant);
                if (s_rational) {
                    out << gf210_rational_text(t);
                    return kExitOk;
                }
                s = constants_series(t.total(s_order));
            }
            for (const auto& [var, value] : subs)
                s = s.substitute(var, value);
            out << s.to_string();
            return kExitOk;
        }

        if (verify_cmd->parsed()) {
            if (verify_cmd->count("--list") > 0) {
                for (const auto& spec : verify::registry())
                    out << spec.id << "  " << spec.claim << "\n";
                return kExitOk;
            }
            const auto ids = verify::parse_selector(v_suite);
            verify::Bounds bounds;
            bounds.max_n = v_max_n;
            bounds.heavy = v_heavy;
            bounds.threads = v_threads ? v_threads : core::threads_from_env();
            const auto report = verify::run_suite(ids, bounds);
            out << report.to_text(!v_no_timing);
            return report.all_passed() ? kExitOk : kExitCheckFailed;
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}

}  // namespace ascseq::cli
