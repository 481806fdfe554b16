// Batch experiment runner: validates a config, fans the grid out over a
// worker pool, and writes deterministic CSV/JSON reports named by the
// config digest. Exit codes: 0 pass, 1 assertion failure, 2 config error.

#include "CLI11.hpp"
#include "json.hpp"

#include "recq/algorithm.hpp"
#include "recq/bounds.hpp"
#include "recq/emulate.hpp"
#include "recq/format.hpp"
#include "recq/random.hpp"
#include "recq/reduction.hpp"
#include "recq/verify.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CommonOpts {
    std::string config_path;
    uint64_t seed = 1;
    std::string out_dir = ".";
    std::string format = "csv";
    unsigned jobs = 1;
};

json load_config(const CommonOpts& opts) {
    json cfg = json::object();
    if (!opts.config_path.empty()) {
        std::ifstream in(opts.config_path);
        if (!in) throw std::invalid_argument("cannot open config file " + opts.config_path);
        in >> cfg;
    }
    return cfg;
}

std::string effective_digest(const json& cfg, const CommonOpts& opts, const std::string& cmd) {
    json eff = cfg;
    eff["__cmd"] = cmd;
    eff["__seed"] = opts.seed;
    eff["__format"] = opts.format;
    return recq::config_digest(eff.dump());
}

std::ofstream open_output(const CommonOpts& opts, const std::string& cmd,
                          const std::string& digest, const std::string& suffix,
                          const std::string& ext) {
    fs::create_directories(opts.out_dir);
    const fs::path path = fs::path(opts.out_dir) / (cmd + "-" + digest + suffix + "." + ext);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    std::cout << "wrote " << path.string() << "\n";
    return out;
}

void write_meta(const CommonOpts& opts, const std::string& cmd, const std::string& digest) {
    auto out = open_output(opts, cmd, digest, "-meta", "json");
    out << "{\"command\":\"" << cmd << "\",\"config_hash\":\"" << digest << "\",\"version\":\""
        << recq::kToolVersion << "\"}\n";
}

/// Runs fn(i) for i in [0, n) on `jobs` threads; callers index into
/// preallocated result slots so aggregation order never depends on
/// scheduling.
void parallel_for(uint64_t n, unsigned jobs, const std::function<void(uint64_t)>& fn) {
    if (jobs <= 1 || n <= 1) {
        for (uint64_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<uint64_t> next{0};
    std::vector<std::thread> pool;
    const unsigned workers = std::min<uint64_t>(jobs, n);
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&]() {
            for (uint64_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
        });
    for (auto& t : pool) t.join();
}

int cmd_verify(const CommonOpts& opts, const std::string& suite) {
    const json cfg = load_config(opts);
    recq::VerifyOptions vopt;
    vopt.seed = opts.seed;
    vopt.algorithm_count = cfg.value("algorithm_count", 12u);

    std::vector<std::string> suites =
        suite == "all" ? recq::verify_suite_names() : std::vector<std::string>{suite};
    bool all_pass = true;
    for (const auto& name : suites) {
        const recq::SuiteReport rep = recq::run_verify_suite(name, vopt);
        json eff = cfg;
        eff["suite"] = name;
        const std::string digest = effective_digest(eff, opts, "verify");
        auto out = open_output(opts, "verify", digest, "", "json");
        out << rep.to_json(digest) << "\n";
        std::size_t failed = 0;
        for (const auto& a : rep.assertions)
            if (!a.pass) ++failed;
        std::cout << "suite " << name << ": " << (rep.pass() ? "pass" : "FAIL") << " ("
                  << rep.assertions.size() - failed << "/" << rep.assertions.size()
                  << " assertions, " << recq::format_double(rep.seconds) << " s)\n";
        for (const auto& a : rep.assertions)
            if (!a.pass)
                std::cout << "  FAIL " << a.name << " value=" << recq::format_double(a.value)
                          << " tolerance=" << recq::format_double(a.tolerance) << "\n";
        all_pass = all_pass && rep.pass();
    }
    return all_pass ? 0 : 1;
}

int cmd_progress(const CommonOpts& opts) {
    const json cfg = load_config(opts);
    const std::string mode_name = cfg.value("mode", "collision");
    const uint32_t m = cfg.value("M", 3u);
    const uint32_t n = cfg.value("N", 3u);
    const uint32_t queries = cfg.value("T", 3u);
    const uint32_t k_dist = cfg.value("K", 1u);
    const std::string kind = cfg.value("algorithm", "random");

    if (mode_name != "collision" && mode_name != "search")
        throw std::invalid_argument("progress: mode must be collision or search");
    if (m < 1 || n < 1 || (mode_name == "search" && k_dist > n))
        throw std::invalid_argument("progress: bad grid point (need M,N >= 1 and K <= N)");

    recq::Rng rng(opts.seed);
    recq::QueryAlgorithm alg;
    recq::SamplingFamily fam = recq::SamplingFamily::uniform(1);
    recq::ProgressMode mode;
    double dist_n, dist_k;
    if (mode_name == "collision") {
        fam = recq::SamplingFamily::uniform(n);
        mode = recq::ProgressMode::DisjointCollisions;
        dist_n = n;
        dist_k = 1;
        if (cfg.contains("algorithm_file")) {
            std::ifstream in(cfg["algorithm_file"].get<std::string>());
            std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
            alg = recq::QueryAlgorithm::from_json(text);
        } else if (kind == "reader") {
            alg = recq::build_collision_reader(m, n, {{0, 1 % m}});
        } else {
            alg = recq::random_algorithm(rng, recq::RegisterLayout::collision_output(m, n, 1),
                                         queries);
        }
    } else {
        fam = recq::SamplingFamily::bernoulli(k_dist, n);
        mode = recq::ProgressMode::Ones;
        dist_n = n;
        dist_k = k_dist;
        if (kind == "grover")
            alg = recq::build_grover_ksearch(m, 1, queries);
        else
            alg = recq::random_algorithm(rng, recq::RegisterLayout::ksearch_output(m, k_dist),
                                         queries);
    }

    std::vector<recq::QueryState> caps;
    recq::run_recording(alg, fam, &caps);
    const uint32_t k_max =
        recq::default_k_max(alg.layout, static_cast<uint32_t>(caps.size() - 1), mode);
    const recq::ProgressTable table =
        recq::progress_table_from_run(caps, mode, dist_n, dist_k, k_max);

    const std::string digest = effective_digest(cfg, opts, "progress");
    {
        auto out = open_output(opts, "progress", digest, "", "csv");
        recq::write_progress_csv(table, out);
    }
    write_meta(opts, "progress", digest);

    const recq::RecurrenceReport rec = recq::check_recurrence(table);
    std::cout << "progress table " << table.queries << " queries, k_max " << table.k_max
              << ", min growth slack " << recq::format_double(rec.min_growth_slack)
              << ", min envelope slack " << recq::format_double(rec.min_envelope_slack) << "\n";
    return rec.pass() ? 0 : 1;
}

int cmd_bounds(const CommonOpts& opts) {
    const json cfg = load_config(opts);
    const std::string kind = cfg.value("kind", "collision-lower");
    const double k = cfg.value("K", 16.0);
    const double n = cfg.value("N", 4096.0);
    std::vector<double> s_values;
    if (cfg.contains("S"))
        for (const auto& v : cfg["S"]) s_values.push_back(v.get<double>());
    if (s_values.empty())
        for (double s = 4.0; s <= 1024.0; s *= 2.0) s_values.push_back(s);
    for (double s : s_values)
        if (s <= 0.0) throw std::invalid_argument("bounds: memory sizes must be positive");

    recq::TradeoffCurve curve;
    if (kind == "collision-lower")
        curve = recq::collision_lower_curve(k, n, s_values);
    else if (kind == "collision-upper")
        curve = recq::collision_upper_curve(k, n, s_values);
    else if (kind == "sorting-lower")
        curve = recq::sorting_lower_curve(n, s_values);
    else
        throw std::invalid_argument("bounds: unknown curve kind '" + kind + "'");

    const std::string digest = effective_digest(cfg, opts, "bounds");
    auto out = open_output(opts, "bounds", digest, "", "csv");
    recq::write_curve_csv(curve, out);
    auto meta = open_output(opts, "bounds", digest, "-meta", "json");
    meta << recq::curve_metadata_json(curve, digest) << "\n";
    return 0;
}

int cmd_reduction(const CommonOpts& opts) {
    const json cfg = load_config(opts);
    const uint32_t n = cfg.value("N", 10000u);
    const uint32_t d = cfg.value("D", 10u * n);
    const uint64_t rounds = cfg.value("rounds", uint64_t{100000});
    const std::string mode = cfg.value("mode", "events");
    if (n < 2 || d < 2) throw std::invalid_argument("reduction: need N, D >= 2");
    if (mode != "events" && mode != "run")
        throw std::invalid_argument("reduction: mode must be events or run");

    recq::Rng rng(recq::mix_seed(opts.seed, 0xF));
    const std::vector<uint32_t> f = recq::random_function(rng, d, n);
    const std::string digest = effective_digest(cfg, opts, "reduction");

    if (mode == "events") {
        const recq::EventTally tally = recq::monte_carlo_events(f, n, rounds, opts.seed);
        auto out = open_output(opts, "reduction", digest, "", "json");
        out << recq::event_report_json(tally, digest) << "\n";
        const bool pass = tally.hash_collision_free.pass && tally.history_clear.pass &&
                          tally.composed_collision.pass && tally.conjunction.pass;
        std::cout << "events A/B/C/conj freq: " << recq::format_double(tally.hash_collision_free.freq)
                  << " " << recq::format_double(tally.history_clear.freq) << " "
                  << recq::format_double(tally.composed_collision.freq) << " "
                  << recq::format_double(tally.conjunction.freq) << (pass ? " (pass)" : " (FAIL)")
                  << "\n";
        return pass ? 0 : 1;
    }

    const recq::ReductionRunResult res = recq::run_collision_reduction(f, n, opts.seed);
    {
        auto out = open_output(opts, "reduction", digest, "", "csv");
        out << "a,b,f_value\n";
        for (const auto& c : res.outputs) out << c.a << ',' << c.b << ',' << c.value << '\n';
    }
    write_meta(opts, "reduction", digest);
    std::cout << "rounds " << res.rounds_executed << ", outputs " << res.outputs.size()
              << ", distinct " << res.distinct
              << (res.precondition_warning ? " (input below the pair threshold)" : "") << "\n";
    return 0;
}

int cmd_emulate2(const CommonOpts& opts) {
    const json cfg = load_config(opts);
    std::vector<uint32_t> ns, ks, ss;
    if (cfg.contains("N"))
        for (const auto& v : cfg["N"]) ns.push_back(v.get<uint32_t>());
    if (cfg.contains("K"))
        for (const auto& v : cfg["K"]) ks.push_back(v.get<uint32_t>());
    if (cfg.contains("S"))
        for (const auto& v : cfg["S"]) ss.push_back(v.get<uint32_t>());
    if (ns.empty()) ns = {1024};
    if (ks.empty()) ks = {4};
    const uint32_t seeds = cfg.value("seeds", 20u);

    struct Point {
        recq::EmulationConfig cfg;
    };
    std::vector<Point> grid;
    for (uint32_t n : ns)
        for (uint32_t k : ks) {
            std::vector<uint32_t> s_list = ss;
            if (s_list.empty()) {
                const uint32_t lo =
                    static_cast<uint32_t>(std::ceil(std::log2(static_cast<double>(n))));
                const uint32_t hi = static_cast<uint32_t>(
                    std::ceil(std::pow(static_cast<double>(k), 2.0 / 3.0) *
                              std::cbrt(static_cast<double>(n))));
                s_list = {lo, std::max(lo, (lo + hi) / 2), std::max(lo, hi)};
            }
            for (uint32_t s : s_list)
                for (uint32_t i = 0; i < seeds; ++i)
                    grid.push_back({{n, k, s, recq::mix_seed(opts.seed, grid.size())}});
        }
    for (const auto& pt : grid)
        if (pt.cfg.n < 4 || pt.cfg.memory < 1 || pt.cfg.target_pairs < 1)
            throw std::invalid_argument("emulate2: bad grid point (need N >= 4, K, S >= 1)");

    std::vector<recq::EmulationResult> results(grid.size());
    parallel_for(grid.size(), opts.jobs,
                 [&](uint64_t i) { results[i] = emulate_collision_table_search(grid[i].cfg); });

    const std::string digest = effective_digest(cfg, opts, "emulate2");
    {
        auto out = open_output(opts, "emulate2", digest, "", "csv");
        recq::write_emulation_csv_header(out);
        for (std::size_t i = 0; i < grid.size(); ++i)
            recq::write_emulation_csv_row(out, grid[i].cfg, results[i]);
    }
    write_meta(opts, "emulate2", digest);

    uint64_t reached = 0;
    for (const auto& r : results) reached += r.reached_target ? 1 : 0;
    std::cout << "emulation grid " << grid.size() << " points, target reached in " << reached
              << "\n";
    return 0;
}

int cmd_sort_instance(const CommonOpts& opts) {
    const json cfg = load_config(opts);
    const uint32_t n = cfg.value("N", 8u);
    const uint32_t rank = cfg.value("r", 1u);
    std::vector<uint32_t> g;
    if (cfg.contains("g"))
        for (const auto& v : cfg["g"]) g.push_back(v.get<uint32_t>());
    else {
        recq::Rng rng(opts.seed);
        for (uint32_t i = 0; i < n / 2; ++i) g.push_back(static_cast<uint32_t>(rng.below(2)));
    }
    const std::vector<uint32_t> f = recq::build_sorting_instance(g, rank, n);

    const std::string digest = effective_digest(cfg, opts, "sort-instance");
    if (opts.format == "json") {
        auto out = open_output(opts, "sort-instance", digest, "", "json");
        out << "[";
        for (std::size_t i = 0; i < f.size(); ++i) out << (i ? "," : "") << f[i];
        out << "]\n";
    } else {
        auto out = open_output(opts, "sort-instance", digest, "", "csv");
        out << "x,f\n";
        for (std::size_t i = 0; i < f.size(); ++i) out << (i + 1) << ',' << f[i] << '\n';
    }
    write_meta(opts, "sort-instance", digest);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"desk-scale recording-oracle simulation and bound lab"};
    app.require_subcommand(1);
    app.fallthrough();

    CommonOpts opts;
    app.add_option("--config", opts.config_path, "JSON config file");
    app.add_option("--seed", opts.seed, "root seed");
    app.add_option("--out", opts.out_dir, "output directory");
    app.add_option("--format", opts.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--jobs", opts.jobs, "worker threads");

    std::string suite = "all";
    CLI::App* verify = app.add_subcommand("verify", "run an invariant suite");
    verify->add_option("--suite", suite, "suite name or 'all'");

    CLI::App* progress = app.add_subcommand("progress", "progress tables of a recorded run");
    CLI::App* bounds = app.add_subcommand("bounds", "tradeoff curve tables");
    CLI::App* reduction = app.add_subcommand("reduction", "collision-reduction event reports");
    CLI::App* emulate2 = app.add_subcommand("emulate2", "table-search emulation scaling grid");
    CLI::App* sort_instance = app.add_subcommand("sort-instance", "three-valued rank instance");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return cmd_verify(opts, suite);
        if (progress->parsed()) return cmd_progress(opts);
        if (bounds->parsed()) return cmd_bounds(opts);
        if (reduction->parsed()) return cmd_reduction(opts);
        if (emulate2->parsed()) return cmd_emulate2(opts);
        if (sort_instance->parsed()) return cmd_sort_instance(opts);
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
