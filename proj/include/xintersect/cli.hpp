// Command-line driver. Every command writes one JSON document to `out`.
//
// Exit codes: 0 success / consistent, 1 usage or resource-limit error,
// 2 a verification found a counterexample (the report carries it).
#pragma once

#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "balls.hpp"
#include "bounds.hpp"
#include "commgame.hpp"
#include "compress.hpp"
#include "core.hpp"
#include "families.hpp"
#include "report.hpp"
#include "search.hpp"
#include "verify.hpp"

#ifndef XINTERSECT_VERSION
#define XINTERSECT_VERSION "0.1.0"
#endif

namespace xintersect::cli {

using nlohmann::json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitCounterexample = 2;

/// Above this |S_p| monotone witnesses are reported by support system only.
inline constexpr std::uint64_t kPointListCap = 4096;

struct Arguments {
    std::vector<std::uint32_t> p;
    int r = 1;
    std::string mode = "monotone";
    bool enumerate_optima = false;
    bool no_pruning = false;
    std::vector<std::size_t> coords;
    std::string suite;
    std::size_t trials = 1000;
    std::uint64_t seed = 20140101;
    std::size_t max_n = 0;
    std::uint64_t max_domain = 0;
    bool pretty = false;
    std::string dump_matrix;
};

struct Outcome {
    json result;
    int exit_code = kExitOk;
};

namespace detail {

inline SearchOptions search_options(const Arguments& args)
{
    SearchOptions options;
    if (args.max_n != 0) options.limits.max_monotone_n = args.max_n;
    if (args.max_domain != 0) {
        options.limits.max_full_domain = args.max_domain;
        options.limits.max_comm_domain = args.max_domain;
    }
    options.theorem6_pruning = !args.no_pruning;
    return options;
}

/// Re-checks witnesses before they are echoed: cross-intersection and
/// mutual duality, at support level and explicitly on small domains.
inline void validate(const SearchResult& res)
{
    const bool small = domain_size(res.p) <= kPointListCap;
    for (const auto& w : res.support_witnesses) {
        bool ok = supports_cross_intersect(w.a, w.b, res.r) && support_dual(w.a, res.r) == w.b &&
                  support_dual(w.b, res.r) == w.a && w.size_a * w.size_b == res.max_product;
        if (ok && small) {
            const Family a = family_from_support(res.p, w.a);
            const Family b = family_from_support(res.p, w.b);
            ok = are_r_cross_intersecting(a, b, res.r) && check_mutual_duality(a, b, res.r);
        }
        if (!ok) throw std::logic_error("witness failed re-validation");
    }
    for (const auto& w : res.family_witnesses) {
        const bool ok = are_r_cross_intersecting(w.a, w.b, res.r) && check_mutual_duality(w.a, w.b, res.r) &&
                        BigInt(w.a.size()) * w.b.size() == res.max_product;
        if (!ok) throw std::logic_error("witness failed re-validation");
    }
}

inline json search_json(const SearchResult& res, bool all_witnesses)
{
    validate(res);
    const bool points = domain_size(res.p) <= kPointListCap;
    json witnesses = json::array();
    const std::size_t total = res.mode == SearchMode::Monotone ? res.support_witnesses.size()
                                                               : res.family_witnesses.size();
    const std::size_t shown = all_witnesses ? total : std::min<std::size_t>(total, 1);
    for (std::size_t k = 0; k < shown; ++k) {
        if (res.mode == SearchMode::Monotone) {
            witnesses.push_back(report::support_witness_json(res.p, res.support_witnesses[k], points));
        } else {
            witnesses.push_back(report::family_witness_json(res.family_witnesses[k]));
        }
    }
    return json{{"mode", to_string(res.mode)},
                {"max_product", to_string(res.max_product)},
                {"trivial_product", to_string(trivial_product(res.p, res.r))},
                {"witness_count", total},
                {"witnesses_truncated", res.witnesses_truncated},
                {"witnesses", witnesses},
                {"validated", true},
                {"stats", json{{"nodes", res.stats.nodes},
                               {"candidates", res.stats.candidates},
                               {"pruned", res.stats.pruned}}}};
}

inline Outcome run_search(const Arguments& args, const Normalized& norm)
{
    SearchMode mode;
    if (args.mode == "monotone") {
        mode = SearchMode::Monotone;
    } else if (args.mode == "full") {
        mode = SearchMode::Full;
    } else {
        throw InputError("--mode must be monotone or full");
    }
    const auto options = search_options(args);
    const SearchResult res = args.enumerate_optima ? enumerate_optimal_pairs(norm.p, norm.r, mode, options)
                                                   : search(norm.p, norm.r, mode, options);
    return {search_json(res, args.enumerate_optima), kExitOk};
}

inline Outcome run_balls(const Normalized& norm)
{
    const auto best = best_ball_pair(norm.p, norm.r);
    json optima = json::array();
    for (const auto& spec : best.optima) optima.push_back(report::ball_pair_json(norm.p, spec));
    const auto t = static_cast<long long>(best.best.coords.size());
    const long long balance = t - 2 * static_cast<long long>(best.best.radius_a) - norm.r;
    return {json{{"product", to_string(best.product)},
                 {"best", report::ball_pair_json(norm.p, best.best)},
                 {"optima", optima},
                 {"radii_balanced", balance >= -1 && balance <= 1},
                 {"trivial_product", to_string(trivial_product(norm.p, norm.r))}},
            kExitOk};
}

/// --T indices refer to the size vector as given; unit coordinates cannot
/// be selected since they were normalized away.
inline CoordList map_coords(const Arguments& args, const Normalized& norm)
{
    if (args.coords.empty()) {
        CoordList all(norm.p.length());
        for (Coord i = 0; i < all.size(); ++i) all[i] = i;
        return all;
    }
    CoordList out;
    for (auto c : args.coords) {
        if (c < 1 || c > args.p.size()) throw InputError("--T index " + std::to_string(c) + " outside [1,n]");
        auto it = std::find(norm.kept.begin(), norm.kept.end(), c - 1);
        if (it == norm.kept.end()) {
            throw InputError("--T index " + std::to_string(c) + " names a coordinate with p_i = 1");
        }
        out.push_back(static_cast<Coord>(it - norm.kept.begin()));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline Outcome run_bounds(const Arguments& args, const Normalized& norm)
{
    const CoordList coords = map_coords(args, norm);
    const BoundReport b = theorem7_classify(norm.p, norm.r);
    json result = report::bound_report_json(b);
    result["T"] = report::coords_json(coords);
    result["theorem5"] = to_string(theorem5_bound(norm.p, coords));
    result["theorem6"] = report::theorem6_json(theorem6_filter(norm.p, norm.r, coords));
    return {result, kExitOk};
}

inline Outcome run_verify(const Arguments& args, const Normalized& norm)
{
    SuiteConfig config;
    config.trials = args.trials;
    config.seed = args.seed;
    config.search = search_options(args);
    const SuiteOutcome outcome = run_suite(args.suite, norm.p, norm.r, config);
    json result{{"suite", outcome.suite},
                {"trials", args.trials},
                {"seed", args.seed},
                {"checks", outcome.checks},
                {"failures", outcome.failures},
                {"details", outcome.details}};
    result["counterexample"] = outcome.counterexample ? *outcome.counterexample : json(nullptr);
    if (args.suite == "conjecture3") {
        result["verdict"] = outcome.failures == 0 ? "consistent" : "counterexample";
    }
    return {result, outcome.failures == 0 ? kExitOk : kExitCounterexample};
}

inline Outcome run_commgame(const Arguments& args, const Normalized& norm)
{
    const auto options = search_options(args);
    const CommMatrix m = build_matrix(norm.p, norm.r, options.limits);
    if (!args.dump_matrix.empty()) {
        std::ofstream file(args.dump_matrix);
        if (!file) throw InputError("cannot open " + args.dump_matrix + " for writing");
        write_pbm(file, m);
    }
    const Rectangle rect = max_all_ones_rectangle(m);
    return {json{{"dimension", m.dimension()},
                 {"ones", m.ones()},
                 {"area", std::to_string(rect.area)},
                 {"rows", rect.rows},
                 {"cols", rect.cols},
                 {"closed_column_sets", rect.closed_sets}},
            kExitOk};
}

inline void print_pretty(std::ostream& out, const json& envelope)
{
    auto scalar = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    out << std::left;
    for (const auto& key : {"command", "p", "r", "normalized_p", "normalized_r"}) {
        out << std::setw(24) << key << scalar(envelope[key]) << '\n';
    }
    for (const auto& [key, value] : envelope["result"].items()) {
        if (value.is_array() && value.size() > 8) {
            out << std::setw(24) << key << "[" << value.size() << " entries]\n";
        } else if (value.is_object()) {
            for (const auto& [sub, v] : value.items()) {
                out << std::setw(24) << (key + "." + sub) << scalar(v) << '\n';
            }
        } else {
            out << std::setw(24) << key << scalar(value) << '\n';
        }
    }
}

}  // namespace detail

/// Runs one command. `argv[0]` is the program name.
inline int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact search and verification for r-cross-intersecting families over S_p", "xintersect"};
    app.require_subcommand(1);
    Arguments args;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--p", args.p, "size vector, comma separated")->delimiter(',')->required();
        cmd->add_option("--r", args.r, "intersection parameter r >= 1")->required();
        cmd->add_option("--max-n", args.max_n, "cap on n for monotone search");
        cmd->add_option("--max-domain", args.max_domain, "cap on |S_p| for full search and commgame");
        cmd->add_flag("--pretty", args.pretty, "human-readable table instead of JSON");
    };

    auto* search_cmd = app.add_subcommand("search", "maximum |A|·|B| and optimal pairs");
    add_common(search_cmd);
    search_cmd->add_option("--mode", args.mode, "monotone|full")->check(CLI::IsMember({"monotone", "full"}));
    search_cmd->add_flag("--enumerate-optima", args.enumerate_optima, "report every optimal pair");
    search_cmd->add_flag("--no-pruning", args.no_pruning, "disable the relevant-set filter");

    auto* balls_cmd = app.add_subcommand("balls", "best pair of Hamming balls");
    add_common(balls_cmd);

    auto* bounds_cmd = app.add_subcommand("bounds", "closed-form bounds and regime");
    add_common(bounds_cmd);
    bounds_cmd->add_option("--T", args.coords, "coordinate set, 1-based, comma separated")->delimiter(',');

    auto* verify_cmd = app.add_subcommand("verify", "property suites");
    add_common(verify_cmd);
    verify_cmd->add_option("--suite", args.suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
    verify_cmd->add_option("--trials", args.trials, "randomised trials");
    verify_cmd->add_option("--seed", args.seed, "random seed");
    verify_cmd->add_flag("--no-pruning", args.no_pruning, "disable the relevant-set filter");

    auto* comm_cmd = app.add_subcommand("commgame", "largest all-1 rectangle of the communication matrix");
    add_common(comm_cmd);
    comm_cmd->add_option("--dump-matrix", args.dump_matrix, "write the matrix as plain PBM");

    std::vector<const char*> raw;
    raw.reserve(argv.size());
    for (const auto& a : argv) raw.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(raw.size()), raw.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitError;
    }

    const auto start = std::chrono::steady_clock::now();
    const std::string command = app.get_subcommands().front()->get_name();
    try {
        const Normalized norm = normalize(args.p, args.r);
        Outcome outcome;
        if (command == "search") {
            outcome = detail::run_search(args, norm);
        } else if (command == "balls") {
            outcome = detail::run_balls(norm);
        } else if (command == "bounds") {
            outcome = detail::run_bounds(args, norm);
        } else if (command == "verify") {
            outcome = detail::run_verify(args, norm);
        } else {
            outcome = detail::run_commgame(args, norm);
        }
        json kept = json::array();
        for (auto c : norm.kept) kept.push_back(c + 1);
        const auto elapsed =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        json envelope{{"command", command},
                      {"p", args.p},
                      {"r", args.r},
                      {"normalized_p", norm.p.entries()},
                      {"normalized_r", norm.r},
                      {"normalized_coordinates", kept},
                      {"result", outcome.result},
                      {"elapsed_ms", elapsed},
                      {"version", XINTERSECT_VERSION}};
        if (args.pretty) {
            detail::print_pretty(out, envelope);
        } else {
            out << envelope.dump() << '\n';
        }
        return outcome.exit_code;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const ResourceLimitError& e) {
        err << "resource limit: " << e.what() << '\n';
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
    }
    return kExitError;
}

}  // namespace xintersect::cli
