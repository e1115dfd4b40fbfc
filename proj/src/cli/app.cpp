#include "padicsum/app.hpp"

#include <algorithm>
#include <exception>

#include <CLI11.hpp>

#include "padicsum/commands.hpp"
#include "padicsum/errors.hpp"
#include "padicsum/padic_approx.hpp"

namespace padicsum {

namespace {

// Flags shared by every subcommand, stored as text and converted afterwards
// so that exact-literal errors carry our own messages.
struct RawFlags {
    std::optional<std::size_t> kmax;
    std::string eps;
    std::string x;
    std::string primes;
    std::optional<std::uint64_t> n_max;
    std::size_t precision = kDefaultPadicPrecision;
    std::string format;
    std::string cache_dir;
    bool no_cache = false;
    std::optional<std::uint64_t> seed;
    std::string claim;
    std::optional<std::size_t> k;
    std::string coeffs;
    std::string bfile;
    std::int64_t offset = 0;
    std::string out;
};

void add_common(CLI::App* cmd, RawFlags& f) {
    cmd->add_option("--kmax", f.kmax, "largest k to generate or check");
    cmd->add_option("--eps", f.eps, "+1 or -1 (default: both)");
    cmd->add_option("--x", f.x, "exact rational argument, p or p/q");
    cmd->add_option("--primes", f.primes, "comma separated primes");
    cmd->add_option("--N", f.n_max, "number of terms / truncation order");
    cmd->add_option("--precision", f.precision, "p-adic digits");
    cmd->add_option("--format", f.format, "json, csv, text or bfile");
    cmd->add_option("--cache-dir", f.cache_dir, "table cache directory");
    cmd->add_flag("--no-cache", f.no_cache, "always regenerate tables");
    cmd->add_option("--seed", f.seed, "seed for randomized grids");
    cmd->add_option("--out", f.out, "write output to this file");
}

RunConfig to_config(const RawFlags& f) {
    RunConfig cfg;
    cfg.kmax = f.kmax;
    if (!f.eps.empty()) cfg.eps = parse_sign(f.eps);
    if (!f.x.empty()) cfg.x = parse_rational_literal(f.x);
    if (!f.primes.empty()) cfg.primes = parse_primes(f.primes);
    cfg.n_max = f.n_max;
    cfg.precision = f.precision;
    if (!f.format.empty()) cfg.format = parse_format(f.format);
    cfg.cache_dir = f.cache_dir;
    cfg.no_cache = f.no_cache;
    if (f.seed) cfg.seed = *f.seed;
    if (!f.claim.empty()) cfg.claim = parse_rational_literal(f.claim);
    cfg.k = f.k;
    if (!f.coeffs.empty()) cfg.coeffs = parse_rational_list(f.coeffs);
    cfg.bfile = f.bfile;
    cfg.offset = f.offset;
    cfg.out = f.out;
    return cfg;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact generating polynomials and p-adic summation checks", "padicsum"};
    app.require_subcommand(1);
    RawFlags flags;
    std::string target;
    std::vector<std::string> values;

    auto* tables = app.add_subcommand("tables", "generate A, U/V and (u, v) tables");
    add_common(tables, flags);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    add_common(verify, flags);
    verify->add_option("suite", target, "finite, telescope, padic, ode or all")
        ->required()
        ->check(CLI::IsMember({"finite", "telescope", "padic", "ode", "all"}));
    verify->add_option("--claim", flags.claim, "claimed sum for a single p-adic check");
    verify->add_option("--k", flags.k, "power k for a single p-adic check");
    verify->add_option("--coeffs", flags.coeffs, "C_1,...,C_k for a single p-adic check");

    auto* seq = app.add_subcommand("seq", "emit a named sequence");
    add_common(seq, flags);
    seq->add_option("id", target, "A+0,1 ... A-1,-1, U+1 ... U--1")->required();

    auto* cmp = app.add_subcommand("seq-compare", "compare a sequence with a local b-file");
    add_common(cmp, flags);
    cmp->add_option("id", target, "sequence id")->required();
    cmp->add_option("--bfile", flags.bfile, "reference b-file")->required();
    cmp->add_option("--offset", flags.offset, "reference index = local index + offset");

    auto* cache = app.add_subcommand("cache", "inspect or clear the table cache");
    add_common(cache, flags);
    cache->add_option("action", target, "clear or info")
        ->required()
        ->check(CLI::IsMember({"clear", "info"}));

    auto* expand = app.add_subcommand("expand", "p-adic digits of rationals");
    add_common(expand, flags);
    expand->add_option("values", values, "rationals p/q")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        RunConfig cfg = to_config(flags);
        cfg.subcommand = target;
        cfg.values = values;
        if (tables->parsed()) return cmd_tables(cfg, out, err);
        if (verify->parsed()) return cmd_verify(cfg, out, err);
        if (seq->parsed()) return cmd_seq(cfg, out, err);
        if (cmp->parsed()) return cmd_seq_compare(cfg, out, err);
        if (cache->parsed()) return cmd_cache(cfg, out, err);
        if (expand->parsed()) return cmd_expand(cfg, out, err);
    } catch (const CrossCheckError& e) {
        err << "cross-check failed: " << e.what() << '\n';
        return kExitFail;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFail;
    }
    return kExitUsage;
}

}  // namespace padicsum
