#include "wcount/cli.hpp"

#include "wcount/bounds.hpp"
#include "wcount/code.hpp"
#include "wcount/constructions.hpp"
#include "wcount/errors.hpp"
#include "wcount/nonlinear.hpp"
#include "wcount/search.hpp"
#include "wcount/serialize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace wcount::cli {

namespace {

std::optional<std::uint64_t> budget_from_env() {
    const char* raw = std::getenv(kBudgetEnv);
    if (!raw || !*raw) return std::nullopt;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(raw, &end, 10);
    if (*end != '\0' || v == 0) throw PreconditionViolated(std::string(kBudgetEnv) + " must be a positive integer");
    return v;
}

Json read_json_file(const std::string& path) {
    try {
        if (path == "-") return Json::parse(std::cin);
        std::ifstream in(path);
        if (!in) throw PreconditionViolated("cannot open " + path);
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw PreconditionViolated("invalid JSON in " + path + ": " + e.what());
    }
}

// Accepts a bare code or the full output of another construct command.
Json unwrap_code(const Json& j) {
    if (j.is_object() && j.contains("result") && j["result"].is_object() && j["result"].contains("code"))
        return j["result"]["code"];
    return j;
}

Json bound_flag(const char* name, const BigInt& value, bool met) {
    return {{"name", name}, {"value", big_to_json(value)}, {"met", met}};
}

Json linear_payload(const LinearCode& code, const SpectrumOptions& opts) {
    const WeightSpectrum spectrum = weight_spectrum(code, opts);
    return {{"code", to_json(code)},
            {"spectrum", to_json(spectrum)},
            {"num_weights", spectrum.size()},
            {"rank", rank(code)}};
}

Json nonlinear_payload(const UnrestrictedCode& code) {
    const auto distances = distance_spectrum(code);
    return {{"code", to_json(code)}, {"distances", to_json(distances)}, {"num_distances", distances.size()}};
}

struct Options {
    // construct
    std::uint64_t k = 0, q = 0, s = 0, M = 0, max_k = kDefaultMaxBinaryDimension;
    std::optional<std::uint64_t> a, b, t;
    std::string code_path, strategy = "greedy";
    std::uint32_t alphabet = 2;
    // bounds / curve
    std::optional<std::uint64_t> n_opt;
    std::uint64_t points = 100;
    std::string format;
    // search / oracle
    std::uint64_t n = 0, trials = 1, seed = 0, target = 0;
    std::optional<std::uint64_t> budget;
    std::string preset = "table2", scale = "desk";
};

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
    CommandResult result;
    Options o;
    CLI::App app{"Distinct weights and distances of codes: constructions, bounds and exhaustive oracles", "wcount"};
    app.require_subcommand(1);

    auto* construct = app.add_subcommand("construct", "Build an explicit code and report its spectrum");
    construct->require_subcommand(1);
    auto* c_binary = construct->add_subcommand("binary-full", "Binary code whose weights are exactly 1..2^k-1");
    c_binary->add_option("--k", o.k, "dimension")->required()->check(CLI::PositiveNumber);
    c_binary->add_option("--max-k", o.max_k, "largest dimension accepted");
    auto* c_two = construct->add_subcommand("two-dim", "Two-dimensional code with q+1 weights");
    c_two->add_option("--q", o.q, "field order")->required();
    c_two->add_option("--a", o.a, "private ones of the first row (default q)");
    c_two->add_option("--b", o.b, "private ones of the second row (default a+1)");
    auto* c_double = construct->add_subcommand("doubling", "One doubling step applied to a code read from JSON");
    c_double->add_option("--code", o.code_path, "code JSON file, - for stdin")->required();
    c_double->add_option("--t", o.t, "length of the appended block (default max weight + 1)");
    auto* c_iter = construct->add_subcommand("iterated", "two-dim followed by k-2 doubling steps");
    c_iter->add_option("--k", o.k, "dimension")->required();
    c_iter->add_option("--q", o.q, "field order")->required();
    auto* c_ambient = construct->add_subcommand("ambient", "The full space F_q^k");
    c_ambient->add_option("--k", o.k, "dimension")->required();
    c_ambient->add_option("--q", o.q, "field order")->required();
    auto* c_sidon = construct->add_subcommand("sidon", "Nested run-of-ones code with C(M,2) distances");
    c_sidon->add_option("--M", o.M, "number of words")->required();
    c_sidon->add_option("--q", o.alphabet, "alphabet size");
    c_sidon->add_option("--strategy", o.strategy, "greedy or doubling")->check(CLI::IsMember({"greedy", "doubling"}));
    auto* c_singer = construct->add_subcommand("singer", "Run-of-ones code from a Singer difference set");
    c_singer->add_option("--s", o.s, "prime power")->required();
    c_singer->add_option("--q", o.alphabet, "alphabet size");
    for (auto* sub : {c_binary, c_two, c_double, c_iter, c_ambient})
        sub->add_option("--budget", o.budget, "projective points enumerated per spectrum");

    auto* bounds = app.add_subcommand("bounds", "Closed-form bounds for (k, q) and optionally n");
    bounds->add_option("--k", o.k, "dimension")->required();
    bounds->add_option("--q", o.q, "field order")->required();
    bounds->add_option("--n", o.n_opt, "length");

    auto* curve = app.add_subcommand("curve", "Boundary polyline of the (R, L) domain");
    curve->add_option("--q", o.q, "alphabet size")->required();
    curve->add_option("--points", o.points, "points per segment");
    curve->add_option("--format", o.format, "csv (default) or json")->check(CLI::IsMember({"csv", "json"}));

    auto* search = app.add_subcommand("search", "Random long-code experiments");
    search->require_subcommand(1);
    auto* s_random = search->add_subcommand("random", "Best of uniformly random full-rank codes");
    s_random->add_option("--n", o.n, "length")->required();
    s_random->add_option("--k", o.k, "dimension")->required();
    s_random->add_option("--q", o.q, "field order")->required();
    s_random->add_option("--trials", o.trials, "number of random codes");
    s_random->add_option("--seed", o.seed, "master seed");
    s_random->add_option("--budget", o.budget, "projective points enumerated per spectrum");
    auto* s_table = search->add_subcommand("table", "Re-run a published table of random-code experiments");
    s_table->add_option("--preset", o.preset, "table1 or table2")->check(CLI::IsMember({"table1", "table2"}));
    s_table->add_option("--scale", o.scale, "desk or full")->check(CLI::IsMember({"desk", "full"}));
    s_table->add_option("--trials", o.trials, "random codes per row");
    s_table->add_option("--seed", o.seed, "master seed");
    s_table->add_option("--budget", o.budget, "projective points enumerated per spectrum");
    s_table->add_option("--format", o.format, "json (default) or csv")->check(CLI::IsMember({"csv", "json"}));

    auto* oracle = app.add_subcommand("oracle", "Exact values by exhaustive search");
    oracle->require_subcommand(1);
    auto* o_L = oracle->add_subcommand("L", "L(n,k,q)");
    o_L->add_option("--n", o.n, "length")->required();
    o_L->add_option("--k", o.k, "dimension")->required();
    o_L->add_option("--q", o.q, "field order")->required();
    auto* o_N = oracle->add_subcommand("N", "N(n,M,q)");
    o_N->add_option("--n", o.n, "length")->required();
    o_N->add_option("--M", o.M, "number of words")->required();
    o_N->add_option("--q", o.q, "alphabet size")->required();
    auto* o_n0 = oracle->add_subcommand("n0", "smallest n with L(n,k,q) >= target");
    o_n0->add_option("--k", o.k, "dimension")->required();
    o_n0->add_option("--q", o.q, "field order")->required();
    o_n0->add_option("--target", o.target, "weight count to reach")->required();
    auto* o_N0 = oracle->add_subcommand("N0", "smallest n with N(n,M,q) = C(M,2)");
    o_N0->add_option("--M", o.M, "number of words")->required();
    o_N0->add_option("--q", o.q, "alphabet size")->required();
    for (auto* sub : {o_L, o_N, o_n0, o_N0}) sub->add_option("--budget", o.budget, "subspaces or search nodes");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        result.command = "help";
        result.is_csv = true;
        result.csv_payload = app.help();
        return result;
    } catch (const CLI::ParseError& e) {
        result.error = e.what();
        result.exit_code = kUsage;
        return result;
    }

    try {
        const std::optional<std::uint64_t> env_budget = budget_from_env();
        auto budget_or = [&](std::uint64_t fallback) { return o.budget.value_or(env_budget.value_or(fallback)); };
        SpectrumOptions spec_opts;
        spec_opts.budget = budget_or(kDefaultEnumerationBudget);

        if (construct->parsed()) {
            Json& p = result.params;
            Json payload;
            if (c_binary->parsed()) {
                result.command = "construct binary-full";
                p = {{"k", o.k}};
                const LinearCode code = binary_full_spectrum(o.k, o.max_k);
                payload = linear_payload(code, spec_opts);
                const BigInt upper = upper_prop2(o.k, 2);
                payload["bound"] = bound_flag("upper_prop2", upper, BigInt(payload["num_weights"].get<std::uint64_t>()) == upper);
            } else if (c_two->parsed()) {
                result.command = "construct two-dim";
                p = {{"q", o.q}};
                if (o.a) p["a"] = *o.a;
                if (o.b) p["b"] = *o.b;
                const LinearCode code = two_dim_full(o.q, o.a, o.b);
                payload = linear_payload(code, spec_opts);
                const BigInt upper = upper_prop2(2, o.q);
                payload["bound"] = bound_flag("upper_prop2", upper, BigInt(payload["num_weights"].get<std::uint64_t>()) == upper);
            } else if (c_double->parsed()) {
                result.command = "construct doubling";
                p = {{"code", o.code_path}};
                if (o.t) p["t"] = *o.t;
                const LinearCode input = linear_code_from_json(unwrap_code(read_json_file(o.code_path)));
                const std::size_t before = num_distinct_weights(input, spec_opts);
                const LinearCode code = doubling_step(input, o.t, spec_opts);
                payload = linear_payload(code, spec_opts);
                const std::uint64_t expected = 2 * before + 1;
                payload["bound"] =
                    bound_flag("doubling_law", BigInt(expected), payload["num_weights"].get<std::uint64_t>() == expected);
            } else if (c_iter->parsed()) {
                result.command = "construct iterated";
                p = {{"k", o.k}, {"q", o.q}};
                const LinearCode code = iterated_doubling(o.k, o.q, spec_opts);
                payload = linear_payload(code, spec_opts);
                const BigInt floor = prop4_formula(o.k, o.q);
                payload["bound"] = bound_flag("prop4_formula", floor, BigInt(payload["num_weights"].get<std::uint64_t>()) >= floor);
            } else if (c_ambient->parsed()) {
                result.command = "construct ambient";
                p = {{"k", o.k}, {"q", o.q}};
                const LinearCode code = ambient_code(o.k, o.q);
                payload = linear_payload(code, spec_opts);
                payload["bound"] = bound_flag("lower_prop3", BigInt(o.k), payload["num_weights"].get<std::uint64_t>() >= o.k);
            } else if (c_sidon->parsed()) {
                result.command = "construct sidon";
                p = {{"M", o.M}, {"q", o.alphabet}, {"strategy", o.strategy}};
                const StepCode sc =
                    sidon_chain(o.M, o.strategy == "doubling" ? SidonStrategy::doubling : SidonStrategy::greedy);
                payload = nonlinear_payload(step_to_code(sc, o.alphabet));
                payload["weights"] = sc.weights();
                payload["bound"] =
                    bound_flag("n_upper", BigInt(n_upper(o.M)), payload["num_distances"].get<std::uint64_t>() == n_upper(o.M));
            } else if (c_singer->parsed()) {
                result.command = "construct singer";
                p = {{"s", o.s}, {"q", o.alphabet}};
                const DifferenceSet ds = singer_difference_set(o.s);
                const UnrestrictedCode code = singer_code(o.s, o.alphabet);
                payload = nonlinear_payload(code);
                payload["difference_set"] = to_json(ds);
                const std::uint64_t pairs = n_upper(o.s + 1);
                payload["bound"] = bound_flag("n0_singer", BigInt(2 * pairs + 1),
                                              code.length() == 2 * pairs + 1 &&
                                                  payload["num_distances"].get<std::uint64_t>() == pairs);
            }
            result.json_payload = std::move(payload);
        } else if (bounds->parsed()) {
            result.command = "bounds";
            result.params = {{"k", o.k}, {"q", o.q}};
            if (o.n_opt) result.params["n"] = *o.n_opt;
            const auto reports = bound_reports(o.k, o.q, o.n_opt);
            Json payload = Json::object();
            Json list = Json::array();
            for (const auto& r : reports) {
                payload[to_string(r.kind)] = big_to_json(r.value);
                list.push_back(to_json(r));
            }
            payload["lower_best"] = big_to_json(lower_best(o.k, o.q));
            payload["reports"] = list;
            result.json_payload = std::move(payload);
        } else if (curve->parsed()) {
            result.command = "curve";
            result.params = {{"q", o.q}, {"points", o.points}};
            const CurvePolyline poly = domain_boundary(o.q, o.points);
            if (o.format == "json") {
                Json segs = Json::array();
                for (const auto& seg : poly.segments) {
                    Json pts = Json::array();
                    for (const auto& pt : seg.points) pts.push_back({pt.R, pt.L});
                    segs.push_back({{"label", seg.label}, {"points", pts}});
                }
                result.json_payload = {{"q", poly.q}, {"t", poly.t}, {"segments", segs}};
            } else {
                result.is_csv = true;
                result.csv_payload = poly.to_csv();
            }
        } else if (search->parsed()) {
            SearchOptions sopts;
            sopts.enumeration_budget = budget_or(kDefaultEnumerationBudget);
            if (s_random->parsed()) {
                result.command = "search random";
                result.params = {{"n", o.n}, {"k", o.k}, {"q", o.q}, {"trials", o.trials}, {"seed", o.seed}};
                const SearchReport r = random_linear_search(o.n, o.k, o.q, o.trials, o.seed, sopts);
                Json payload = to_json(r);
                payload["upper_prop2"] = big_to_json(upper_prop2(o.k, o.q));
                result.json_payload = std::move(payload);
            } else {
                result.command = "search table";
                result.params = {{"preset", o.preset}, {"scale", o.scale}, {"trials", o.trials}, {"seed", o.seed}};
                const auto rows = run_table(o.preset == "table1" ? TablePreset::table1 : TablePreset::table2,
                                            o.scale == "full" ? TableScale::full : TableScale::desk, o.trials, o.seed,
                                            sopts);
                if (o.format == "csv") {
                    std::ostringstream os;
                    os << "k,q,n,published,relation,upper_prop2,trials,best_count,skipped\n";
                    for (const auto& r : rows)
                        os << r.k << ',' << r.q << ',' << r.n << ',' << r.published << ','
                           << (r.published_is_exact ? "=" : ">=") << ',' << r.upper << ',' << r.trials << ','
                           << (r.skipped ? std::string() : std::to_string(r.best_count)) << ','
                           << (r.skipped ? "true" : "false") << '\n';
                    result.is_csv = true;
                    result.csv_payload = os.str();
                } else {
                    Json list = Json::array();
                    for (const auto& r : rows) list.push_back(to_json(r));
                    result.json_payload = {{"rows", list}};
                }
            }
        } else if (oracle->parsed()) {
            SearchOptions sopts;
            sopts.exhaustive_budget = budget_or(kDefaultExhaustiveBudget);
            if (o_L->parsed()) {
                result.command = "oracle L";
                result.params = {{"n", o.n}, {"k", o.k}, {"q", o.q}};
                const SearchReport r = exhaustive_L(o.n, o.k, o.q, sopts);
                result.json_payload = to_json(r);
                result.json_payload["value"] = r.best_count;
            } else if (o_N->parsed()) {
                result.command = "oracle N";
                result.params = {{"n", o.n}, {"M", o.M}, {"q", o.q}};
                const SearchReport r = exhaustive_N(o.n, o.M, o.q, sopts);
                result.json_payload = to_json(r);
                result.json_payload["value"] = r.best_count;
            } else if (o_n0->parsed()) {
                result.command = "oracle n0";
                result.params = {{"k", o.k}, {"q", o.q}, {"target", o.target}};
                result.json_payload = {{"value", smallest_n0_linear(o.k, o.q, o.target, sopts)}};
            } else {
                result.command = "oracle N0";
                result.params = {{"M", o.M}, {"q", o.q}};
                result.json_payload = {{"value", smallest_N0(o.M, o.q, sopts)},
                                       {"upper", n0_upper(o.M, static_cast<std::uint32_t>(o.q))},
                                       {"lower", n_upper(o.M)}};
            }
        }
    } catch (const ResourceLimit& e) {
        result.error = e.what();
        result.exit_code = kResourceLimit;
    } catch (const Error& e) {
        result.error = e.what();
        result.exit_code = kUsage;
    }
    return result;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    const CommandResult r = run_command(args);
    if (r.exit_code != kOk) {
        err << "error: " << r.error << '\n';
        return r.exit_code;
    }
    if (r.is_csv) {
        out << r.csv_payload;
    } else {
        const Json doc = {{"command", r.command}, {"params", r.params}, {"result", r.json_payload}};
        out << doc.dump(2) << '\n';
    }
    return r.exit_code;
}

}  // namespace wcount::cli
