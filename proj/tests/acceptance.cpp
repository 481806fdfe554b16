// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Criterion 11 exercises the command-line tool, whose path is passed via
// --cli (defaults to tools/recq next to the build's test directory).

#include "recq/algorithm.hpp"
#include "recq/bounds.hpp"
#include "recq/emulate.hpp"
#include "recq/format.hpp"
#include "recq/oracles.hpp"
#include "recq/progress.hpp"
#include "recq/random.hpp"
#include "recq/reduction.hpp"
#include "recq/verify.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace fs = std::filesystem;
using namespace recq;

namespace {

int failures = 0;

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

void report(int criterion, const std::string& what, bool pass, const std::string& detail,
            double seconds) {
    if (!pass) ++failures;
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << what << " ("
              << detail << ", " << format_double(seconds) << " s)\n";
}

// independent grid points on a worker pool; results land in indexed slots
void parallel_for(uint64_t n, const std::function<void(uint64_t)>& fn) {
    const unsigned workers =
        std::min<uint64_t>(std::max(1u, std::thread::hardware_concurrency()), n);
    if (workers <= 1) {
        for (uint64_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<uint64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&]() {
            for (uint64_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
        });
    for (auto& t : pool) t.join();
}

// criteria 1, 3, 4: one pass over the shared randomized run set
void criteria_1_3_4(uint64_t seed) {
    Timer timer;
    const auto runs = generate_verification_runs(seed, 50);
    double max_distance = 0.0;
    uint64_t support_violations = 0;
    double min_growth = 0.0, min_envelope = 0.0;
    double max_sigma_gap = 0.0;

    for (const auto& run : runs) {
        std::vector<DenseState> psi_caps;
        const DenseState psi = run_standard(run.algorithm, run.family, &psi_caps);
        std::vector<QueryState> phi_caps;
        const QueryState phi = run_recording(run.algorithm, run.family, &phi_caps);

        max_distance = std::max(max_distance, distance(psi, translated(phi, run.family)));
        for (std::size_t t = 1; t < phi_caps.size(); ++t)
            max_distance = std::max(
                max_distance, distance(psi_caps[t - 1], translated(phi_caps[t], run.family)));

        const uint32_t bottom = run.algorithm.layout.bottom();
        for (std::size_t t = 0; t < phi_caps.size(); ++t)
            for (const auto& [c, a] : phi_caps[t].amplitudes()) {
                uint32_t recorded = 0;
                for (uint32_t v : c.f) recorded += (v != bottom) ? 1 : 0;
                if (recorded > t) ++support_violations;
            }

        const uint32_t k_max =
            default_k_max(run.algorithm.layout, static_cast<uint32_t>(phi_caps.size() - 1),
                          run.mode);
        const ProgressTable table =
            progress_table_from_run(phi_caps, run.mode, run.dist_n, run.dist_k, k_max);
        const RecurrenceReport rec = check_recurrence(table);
        min_growth = std::min(min_growth, rec.min_growth_slack);
        min_envelope = std::min(min_envelope, rec.min_envelope_slack);

        max_sigma_gap =
            std::max(max_sigma_gap, std::abs(success_probability(psi, run.relation) -
                                             success_probability(phi, run.relation, run.family)));
    }
    const double elapsed = timer.seconds();

    report(1, "dual-model indistinguishability over 50 randomized runs",
           max_distance <= 1e-9 && max_sigma_gap <= 1e-9,
           "max state distance " + format_double(max_distance) + ", max success gap " +
               format_double(max_sigma_gap) + ", limit 1e-9",
           elapsed);
    report(3, "recorded support never exceeds the query count", support_violations == 0,
           std::to_string(support_violations) + " violations", elapsed);
    report(4, "growth recurrences and binomial envelopes on all runs",
           min_growth >= -1e-8 && min_envelope >= -1e-8,
           "min growth slack " + format_double(min_growth) + ", min envelope slack " +
               format_double(min_envelope) + ", limit -1e-8",
           elapsed);
}

void criterion_2(uint64_t seed) {
    Timer timer;
    const SuiteReport rep = verify_oracle_equivalence({seed, 12});
    double max_route_gap = 0.0;
    bool variant_shown = false;
    for (const auto& a : rep.assertions) {
        if (a.name.find("vs-matrix-route") != std::string::npos)
            max_route_gap = std::max(max_route_gap, a.value);
        if (a.name == "sentinel-coefficient-inverse-n-breaks-unitarity" && a.pass)
            variant_shown = true;
    }
    report(2, "closed forms match the matrix route; sentinel coefficient is 1/sqrt(N)",
           rep.pass() && variant_shown,
           "max per-amplitude gap " + format_double(max_route_gap) +
               " (limit 1e-12), 1/N variant unitarity defect demonstrated",
           timer.seconds());
}

void criterion_5(uint64_t seed) {
    Timer timer;
    const SuiteReport rep = verify_bounds_domination({seed, 50});
    double worst_margin = 1.0;
    for (const auto& a : rep.assertions)
        if (a.name.find("-bound") != std::string::npos) worst_margin = std::min(worst_margin, a.value);
    report(5, "measured success never exceeds the proof-constant bounds", rep.pass(),
           "readers, guessers, search runs and 50 randomized runs; worst bound margin " +
               format_double(worst_margin),
           timer.seconds());
}

void criterion_6() {
    Timer timer;
    const QueryState one = run_fixed_input(build_grover_ksearch(4, 1, 1), {0, 0, 1, 0});
    const double sigma1 = success_probability_diagonal(one, OutputRelation::ksearch(1));
    const QueryState zero = run_fixed_input(build_grover_ksearch(4, 1, 0), {0, 0, 1, 0});
    const double sigma0 = success_probability_diagonal(zero, OutputRelation::ksearch(1));
    report(6, "search sanity at four points with one marked",
           std::abs(sigma1 - 1.0) <= 1e-9 && std::abs(sigma0 - 0.25) <= 1e-9,
           "sigma(T=1) = " + format_double(sigma1) + ", sigma(T=0) = " + format_double(sigma0),
           timer.seconds());
}

void criterion_7(uint64_t seed) {
    Timer timer;
    const RegisterLayout layout = RegisterLayout::collision_output(4, 4, 1);
    const SamplingFamily fam = SamplingFamily::uniform(4);
    const OutputRelation rel = OutputRelation::collisions(1);
    std::vector<double> gaps(1000, 0.0);
    parallel_for(gaps.size(), [&](uint64_t i) {
        Rng rng(mix_seed(seed, 0x500u + i));
        const QueryState s = random_sparse_state(rng, layout, 40);
        const double fast = success_projection_recording(s, rel, fam);
        const DenseState t = translated(s, fam);
        const DenseState kept =
            project(t, [&](const BasisComponent& c) { return rel.satisfied_by(layout, c); });
        gaps[i] = std::abs(fast - norm(kept) * norm(kept));
    });
    double max_gap = 0.0;
    for (double g : gaps) max_gap = std::max(max_gap, g);
    report(7, "grouped success projection matches the dense translation route", max_gap <= 1e-9,
           "1000 random states, max gap " + format_double(max_gap) + ", limit 1e-9",
           timer.seconds());
}

void criterion_8(uint64_t seed) {
    Timer timer;
    // band constants pinned from the checked-in measurement run
    const double ratio_lo = 0.25, ratio_hi = 5.0;
    const uint32_t seeds = 100;
    double worst_lo = 1e9, worst_hi = 0.0;
    uint64_t ok_runs = 0, total_runs = 0, reached = 0;
    for (uint32_t log_n : {10u, 12u, 14u, 16u}) {
        const uint32_t n = 1u << log_n;
        for (uint32_t k : {4u, 16u, 64u}) {
            const uint32_t s_lo = log_n;
            const uint32_t s_hi = static_cast<uint32_t>(
                std::ceil(std::pow(static_cast<double>(k), 2.0 / 3.0) * std::cbrt(n)));
            for (uint32_t s : {s_lo, (s_lo + s_hi) / 2, s_hi}) {
                for (uint32_t i = 0; i < seeds; ++i) {
                    const EmulationConfig cfg{n, k, s, mix_seed(seed, total_runs)};
                    const EmulationResult res = emulate_collision_table_search(cfg);
                    ++total_runs;
                    reached += res.reached_target ? 1 : 0;
                    if (!res.reached_target) continue;
                    const double ratio = static_cast<double>(res.queries) /
                                         (k * std::sqrt(static_cast<double>(n) / s));
                    worst_lo = std::min(worst_lo, ratio);
                    worst_hi = std::max(worst_hi, ratio);
                    ok_runs += (ratio >= ratio_lo && ratio <= ratio_hi) ? 1 : 0;
                }
            }
        }
    }
    const bool pass = ok_runs == reached && reached * 3 >= total_runs * 2;
    report(8, "emulated query counts track K*sqrt(N/S) within the pinned band", pass,
           "ratios in [" + format_double(worst_lo) + ", " + format_double(worst_hi) + "] vs band [" +
               format_double(ratio_lo) + ", " + format_double(ratio_hi) + "], " +
               std::to_string(reached) + "/" + std::to_string(total_runs) + " runs reached the target",
           timer.seconds());
}

void criterion_9(uint64_t seed) {
    Timer timer;
    const uint32_t n = 10000;
    const uint32_t d = 10 * n;

    Rng rng(mix_seed(seed, 0x9u));
    const std::vector<uint32_t> f = random_function(rng, d, n);
    const EventTally tally = monte_carlo_events(f, n, 100000, seed);

    auto clears = [](const EventStats& e) {
        const double se =
            std::sqrt(std::max(e.freq * (1.0 - e.freq), 1e-12) / static_cast<double>(e.total));
        return e.freq + 3.0 * se >= e.bound;
    };
    const bool events_ok =
        clears(tally.hash_collision_free) && clears(tally.history_clear) && clears(tally.conjunction);

    const uint32_t trials = 30;
    std::vector<uint8_t> reached_flags(trials, 0);
    parallel_for(trials, [&](uint64_t i) {
        Rng frng(mix_seed(seed, 1000 + i));
        const std::vector<uint32_t> fi = random_function(frng, d, n);
        const ReductionRunResult res = run_collision_reduction(fi, n, mix_seed(seed, 2000 + i));
        reached_flags[i] = res.target_reached ? 1 : 0;
    });
    uint32_t successes = 0;
    for (uint8_t flag : reached_flags) successes += flag;
    const bool run_ok = successes * 3 >= trials * 2;

    report(9, "round-event frequencies and the full reduction run clear their bounds",
           events_ok && run_ok,
           "A " + format_double(tally.hash_collision_free.freq) + " (>=0.5), B " +
               format_double(tally.history_clear.freq) + " (>=1-1e-4), conjunction " +
               format_double(tally.conjunction.freq) + " (>=1/250); reduction target reached in " +
               std::to_string(successes) + "/" + std::to_string(trials) + " seeds",
           timer.seconds());
}

void criterion_10(uint64_t seed) {
    Timer timer;
    const SuiteReport rep = verify_hash_exactness({seed, 12});
    double enum_dev = -1.0;
    for (const auto& a : rep.assertions)
        if (a.name == "enumeration-tuple-deviation") enum_dev = a.value;
    report(10, "exhaustive tiny-field enumeration shows exact four-wise uniformity",
           rep.pass() && enum_dev == 0.0, "tuple count deviation " + format_double(enum_dev),
           timer.seconds());
}

std::map<std::string, std::string> read_dir_files(const fs::path& dir) {
    std::map<std::string, std::string> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        std::ifstream in(entry.path(), std::ios::binary);
        std::ostringstream body;
        body << in.rdbuf();
        files[entry.path().filename().string()] = body.str();
    }
    return files;
}

void criterion_11(const std::string& cli) {
    Timer timer;
    const fs::path base = fs::temp_directory_path() / "recq-acceptance-determinism";
    std::error_code ec;
    fs::remove_all(base, ec);
    fs::create_directories(base);

    const std::string cfg_path = (base / "emulate.json").string();
    {
        std::ofstream cfg(cfg_path);
        cfg << "{\"N\":[1024],\"K\":[4,8],\"seeds\":5}";
    }

    bool commands_ok = true;
    for (const char* dir : {"a", "b"}) {
        const std::string out = (base / dir).string();
        const std::string redirect = " >/dev/null 2>&1";
        commands_ok = commands_ok &&
                      std::system((cli + " --out " + out + " --seed 9 verify --suite unitarity" +
                                   redirect).c_str()) == 0;
        commands_ok = commands_ok &&
                      std::system((cli + " --out " + out + " --seed 9 --config " + cfg_path +
                                   " --jobs 4 emulate2" + redirect).c_str()) == 0;
        commands_ok = commands_ok &&
                      std::system((cli + " --out " + out + " --seed 9 progress" + redirect).c_str()) == 0;
        commands_ok = commands_ok &&
                      std::system((cli + " --out " + out + " --seed 9 bounds" + redirect).c_str()) == 0;
    }

    bool identical = commands_ok;
    std::size_t compared = 0;
    if (commands_ok) {
        const auto a = read_dir_files(base / "a");
        const auto b = read_dir_files(base / "b");
        identical = a == b && !a.empty();
        compared = a.size();
    }
    report(11, "repeated tool invocations are byte-identical", identical,
           std::to_string(compared) + " files compared across verify/emulate2/progress/bounds",
           timer.seconds());
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli = "tools/recq";
    uint64_t seed = 20260811;
    for (int i = 1; i + 1 < argc; i += 2) {
        const std::string flag = argv[i];
        if (flag == "--cli") cli = argv[i + 1];
        if (flag == "--seed") seed = std::strtoull(argv[i + 1], nullptr, 10);
    }

    criteria_1_3_4(seed);
    criterion_2(seed);
    criterion_5(seed);
    criterion_6();
    criterion_7(seed);
    criterion_8(seed);
    criterion_9(seed);
    criterion_10(seed);
    criterion_11(cli);

    std::cout << (failures == 0 ? "all criteria passed\n"
                                : std::to_string(failures) + " criteria failed\n");
    return failures;
}
