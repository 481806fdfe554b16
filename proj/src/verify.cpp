#include "recq/verify.hpp"

#include "recq/bounds.hpp"
#include "recq/format.hpp"
#include "recq/hashing.hpp"
#include "recq/random.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

namespace recq {

bool SuiteReport::pass() const {
    return std::all_of(assertions.begin(), assertions.end(), [](const Assertion& a) { return a.pass; });
}

std::string SuiteReport::to_json(const std::string& digest) const {
    std::string out = "{\"suite\":\"" + suite + "\",\"assertions\":[";
    for (std::size_t i = 0; i < assertions.size(); ++i) {
        const Assertion& a = assertions[i];
        if (i) out += ",";
        out += "{\"name\":\"" + a.name + "\",\"value\":" + format_double(a.value) +
               ",\"tolerance\":" + format_double(a.tolerance) +
               ",\"pass\":" + (a.pass ? "true" : "false");
        if (!a.note.empty()) out += ",\"note\":\"" + a.note + "\"";
        out += "}";
    }
    out += "],\"pass\":";
    out += pass() ? "true" : "false";
    out += ",\"config_hash\":\"" + digest + "\",\"version\":\"" + std::string(kToolVersion) + "\"}";
    return out;
}

namespace {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

void push_upper(SuiteReport& rep, const std::string& name, double value, double tol,
                std::string note = {}) {
    rep.assertions.push_back({name, value, tol, value <= tol, std::move(note)});
}

void push_lower(SuiteReport& rep, const std::string& name, double value, double bound,
                std::string note = {}) {
    rep.assertions.push_back({name, value, bound, value >= bound, std::move(note)});
}

void push_flag(SuiteReport& rep, const std::string& name, bool ok, std::string note = {}) {
    rep.assertions.push_back({name, ok ? 1.0 : 0.0, 1.0, ok, std::move(note)});
}

}  // namespace

std::vector<VerificationRun> generate_verification_runs(uint64_t seed, uint32_t count) {
    std::vector<VerificationRun> runs;
    runs.reserve(count);
    for (uint32_t i = 0; i < count; ++i) {
        Rng rng(mix_seed(seed, i));
        const uint32_t m = 2 + static_cast<uint32_t>(rng.below(3));
        const uint32_t queries = 1 + static_cast<uint32_t>(rng.below(4));
        VerificationRun run;
        if (i % 2 == 0) {
            const uint32_t n = 2 + static_cast<uint32_t>(rng.below(3));
            run.family = SamplingFamily::uniform(n);
            run.relation = OutputRelation::collisions(1);
            run.mode = ProgressMode::DisjointCollisions;
            run.dist_n = n;
            run.dist_k = 1;
            run.algorithm =
                random_algorithm(rng, RegisterLayout::collision_output(m, n, 1), queries);
            run.name = "uniform-m" + std::to_string(m) + "-n" + std::to_string(n) + "-t" +
                       std::to_string(queries) + "-i" + std::to_string(i);
        } else {
            const uint32_t dist_n = 2 + static_cast<uint32_t>(rng.below(3));
            const uint32_t dist_k = 1 + static_cast<uint32_t>(rng.below(2));
            run.family = SamplingFamily::bernoulli(dist_k, dist_n);
            run.relation = OutputRelation::ksearch(dist_k);
            run.mode = ProgressMode::Ones;
            run.dist_n = dist_n;
            run.dist_k = dist_k;
            run.algorithm =
                random_algorithm(rng, RegisterLayout::ksearch_output(m, dist_k), queries);
            run.name = "bernoulli-m" + std::to_string(m) + "-k" + std::to_string(dist_k) + "-n" +
                       std::to_string(dist_n) + "-t" + std::to_string(queries) + "-i" +
                       std::to_string(i);
        }
        runs.push_back(std::move(run));
    }
    return runs;
}

SuiteReport verify_unitarity(const VerifyOptions& opt) {
    Stopwatch clock;
    SuiteReport rep;
    rep.suite = "unitarity";

    for (uint32_t n = 2; n <= 8; ++n) {
        const PhaseTable phases(n);
        double dev = 0.0;
        for (uint32_t j = 0; j < n; ++j) {
            dev = std::max(dev, std::abs(std::abs(phases.root(j)) - 1.0));
            dev = std::max(dev, std::abs(phases.root(j) * phases.root(n - j) - cplx{1.0}));
        }
        push_upper(rep, "phase-roots-n" + std::to_string(n), dev, 1e-12);
    }

    for (uint32_t n = 1; n <= 8; ++n) {
        const SamplingFamily fam = SamplingFamily::uniform(n);
        push_upper(rep, "uniform-defect-n" + std::to_string(n), fam.matrix(0).unitarity_defect(),
                   1e-10);
        push_upper(rep, "uniform-involution-n" + std::to_string(n),
                   (fam.matrix(0) * fam.matrix(0)).max_abs_diff(CMatrix::identity(n + 1)), 1e-12);
        double rec_dev = 0.0;
        for (uint32_t p = 0; p < n; ++p)
            rec_dev = std::max(rec_dev, fam.recording_matrix(0, p).unitarity_defect());
        push_upper(rep, "uniform-recording-defect-n" + std::to_string(n), rec_dev, 1e-10);
    }

    double bern_dev = 0.0, bern_rec_dev = 0.0;
    for (uint32_t n = 1; n <= 8; ++n)
        for (uint32_t k = 1; k <= n; ++k) {
            const SamplingFamily fam = SamplingFamily::bernoulli(k, n);
            bern_dev = std::max(bern_dev, fam.matrix(0).unitarity_defect());
            for (uint32_t p = 0; p < 2; ++p)
                bern_rec_dev = std::max(bern_rec_dev, fam.recording_matrix(0, p).unitarity_defect());
        }
    push_upper(rep, "bernoulli-defect-k<=n<=8", bern_dev, 1e-10);
    push_upper(rep, "bernoulli-recording-defect-k<=n<=8", bern_rec_dev, 1e-10);

    {
        // product family from per-position unitaries: rotate the value block,
        // then swap the sentinel with value 0
        Rng rng(mix_seed(opt.seed, 101));
        const uint32_t n = 3, m = 3;
        std::vector<CMatrix> mats;
        for (uint32_t x = 0; x < m; ++x) {
            CMatrix u = random_unitary(rng, n);
            CMatrix s(n + 1);
            for (uint32_t r = 0; r < n; ++r)
                for (uint32_t c = 0; c < n; ++c) s(r, c) = u(r, c);
            s(n, n) = 1.0;
            std::vector<uint32_t> swap_perm(n + 1);
            for (uint32_t v = 0; v < n + 1; ++v) swap_perm[v] = v;
            std::swap(swap_perm[0], swap_perm[n]);
            mats.push_back(s * permutation_matrix(swap_perm));
        }
        const SamplingFamily fam = SamplingFamily::general(n, std::move(mats));
        double dev = 0.0;
        for (uint32_t x = 0; x < m; ++x) {
            dev = std::max(dev, fam.matrix(x).unitarity_defect());
            dev = std::max(dev, std::abs(fam.matrix(x)(n, n)));
            for (uint32_t p = 0; p < n; ++p)
                dev = std::max(dev, fam.recording_matrix(x, p).unitarity_defect());
        }
        push_upper(rep, "general-family-defect", dev, 1e-10);

        const RegisterLayout layout(m, n, {});
        double norm_dev = 0.0;
        for (uint32_t i = 0; i < 8; ++i) {
            QueryState s = random_sparse_state(rng, layout, 24);
            norm_dev = std::max(norm_dev, std::abs(norm(apply_recording_oracle(s, fam)) - 1.0));
            norm_dev = std::max(norm_dev, std::abs(norm(apply_standard_oracle(s)) - 1.0));
        }
        push_upper(rep, "oracle-norm-preservation", norm_dev, 1e-9);
    }

    {
        bool rejected = false;
        try {
            CMatrix bad(2);
            bad(0, 0) = 1.0;
            bad(0, 1) = 1.0;
            bad(1, 0) = 0.0;
            bad(1, 1) = 1.0;
            const RegisterLayout layout(2, 2, {});
            apply_unitary(QueryState::initial_recording(layout), {RegisterRef::p()}, bad);
        } catch (const std::invalid_argument&) {
            rejected = true;
        }
        push_flag(rep, "non-unitary-operator-rejected", rejected);
    }

    rep.seconds = clock.seconds();
    return rep;
}

SuiteReport verify_oracle_equivalence(const VerifyOptions& opt) {
    Stopwatch clock;
    SuiteReport rep;
    rep.suite = "oracle-equivalence";

    for (uint32_t n = 2; n <= 8; ++n) {
        const SamplingFamily fam = SamplingFamily::uniform(n);
        double dev = 0.0;
        for (uint32_t p = 0; p < n; ++p)
            dev = std::max(dev, closed_form_uniform_matrix(n, p).max_abs_diff(fam.recording_matrix(0, p)));
        push_upper(rep, "uniform-closed-vs-matrix-route-n" + std::to_string(n), dev, 1e-12);
    }

    {
        // the closed form is only unitary with the 1/sqrt(N) coefficient on
        // the sentinel row; the 1/N variant leaves the value columns at
        // squared norm 3/4 when N = 2
        const CMatrix good = closed_form_uniform_matrix(2, 1, BottomCoefficient::InverseSqrtN);
        const CMatrix bad = closed_form_uniform_matrix(2, 1, BottomCoefficient::InverseN);
        push_upper(rep, "sentinel-coefficient-sqrt-unitary", good.unitarity_defect(), 1e-10);
        push_lower(rep, "sentinel-coefficient-inverse-n-breaks-unitarity", bad.unitarity_defect(),
                   0.2, "printed 1/N variant is not a unitary map");
        double col_norm2 = 0.0;
        for (uint32_t r = 0; r < 3; ++r) col_norm2 += std::norm(bad(r, 0));
        push_upper(rep, "sentinel-coefficient-inverse-n-column-norm", std::abs(col_norm2 - 0.75),
                   1e-12, "value-column squared norm is 3/4 with the 1/N coefficient");
    }

    {
        // frozen single-cell actions for N = 2, p = 1
        const CMatrix r = closed_form_uniform_matrix(2, 1);
        const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
        double dev = 0.0;
        // fresh cell -> (|0> - |1>)/sqrt(2)
        dev = std::max(dev, std::abs(r(0, 2) - cplx{inv_sqrt2}));
        dev = std::max(dev, std::abs(r(1, 2) - cplx{-inv_sqrt2}));
        dev = std::max(dev, std::abs(r(2, 2)));
        // cell holding 0 -> (1/sqrt(2))|sentinel> + (1/2)|0> + (1/2)|1>
        dev = std::max(dev, std::abs(r(2, 0) - cplx{inv_sqrt2}));
        dev = std::max(dev, std::abs(r(0, 0) - cplx{0.5}));
        dev = std::max(dev, std::abs(r(1, 0) - cplx{0.5}));
        push_upper(rep, "uniform-closed-form-frozen-n2-p1", dev, 1e-12);
    }

    {
        double dev = 0.0, row_norm_dev = 0.0;
        for (uint32_t n = 2; n <= 8; ++n)
            for (uint32_t k = 1; k <= n; ++k) {
                const SamplingFamily fam = SamplingFamily::bernoulli(k, n);
                for (uint32_t p = 0; p < 2; ++p) {
                    const CMatrix closed = closed_form_bernoulli_matrix(fam.alpha(), fam.beta(), p);
                    dev = std::max(dev, closed.max_abs_diff(fam.recording_matrix(0, p)));
                    for (uint32_t col = 0; col < 3; ++col) {
                        double n2 = 0.0;
                        for (uint32_t row = 0; row < 3; ++row) n2 += std::norm(closed(row, col));
                        row_norm_dev = std::max(row_norm_dev, std::abs(n2 - 1.0));
                    }
                }
            }
        push_upper(rep, "bernoulli-closed-vs-matrix-route", dev, 1e-12);
        push_upper(rep, "bernoulli-closed-form-columns-normalized", row_norm_dev, 1e-12);
    }

    {
        // whole-state agreement between the two appliers on random states
        Rng rng(mix_seed(opt.seed, 7));
        double dev = 0.0;
        for (uint32_t i = 0; i < 20; ++i) {
            const uint32_t m = 2 + static_cast<uint32_t>(rng.below(2));
            const uint32_t n = 2 + static_cast<uint32_t>(rng.below(5));
            const RegisterLayout layout(m, n, {});
            const QueryState s = random_sparse_state(rng, layout, 50);
            const QueryState via_matrix = apply_recording_oracle(s, SamplingFamily::uniform(n));
            const QueryState via_formula = apply_recording_oracle_uniform(s);
            for (const auto& [c, a] : via_matrix.amplitudes())
                dev = std::max(dev, std::abs(a - via_formula.amplitude(c)));
            for (const auto& [c, a] : via_formula.amplitudes())
                dev = std::max(dev, std::abs(a - via_matrix.amplitude(c)));
        }
        for (uint32_t i = 0; i < 20; ++i) {
            const uint32_t m = 2 + static_cast<uint32_t>(rng.below(2));
            const uint32_t n_dist = 2 + static_cast<uint32_t>(rng.below(7));
            const uint32_t k_dist = 1 + static_cast<uint32_t>(rng.below(n_dist));
            const RegisterLayout layout(m, 2, {});
            const SamplingFamily fam = SamplingFamily::bernoulli(k_dist, n_dist);
            const QueryState s = random_sparse_state(rng, layout, 50);
            const QueryState via_matrix = apply_recording_oracle(s, fam);
            const QueryState via_formula = apply_recording_oracle_bernoulli(s, fam);
            for (const auto& [c, a] : via_matrix.amplitudes())
                dev = std::max(dev, std::abs(a - via_formula.amplitude(c)));
            for (const auto& [c, a] : via_formula.amplitudes())
                dev = std::max(dev, std::abs(a - via_matrix.amplitude(c)));
        }
        push_upper(rep, "closed-vs-matrix-route-random-states", dev, 1e-12);
    }

    rep.seconds = clock.seconds();
    return rep;
}

SuiteReport verify_indistinguishability(const VerifyOptions& opt) {
    Stopwatch clock;
    SuiteReport rep;
    rep.suite = "indistinguishability";

    std::vector<VerificationRun> runs;
    {
        // the deterministic builders first, then the randomized runs
        VerificationRun grover;
        grover.algorithm = build_grover_ksearch(4, 1, 2);
        grover.family = SamplingFamily::bernoulli(1, 4);
        grover.relation = OutputRelation::ksearch(1);
        grover.mode = ProgressMode::Ones;
        grover.dist_n = 4;
        grover.dist_k = 1;
        grover.name = "grover-m4-t2";
        runs.push_back(std::move(grover));

        VerificationRun reader;
        reader.algorithm = build_collision_reader(4, 3, {{0, 1}});
        reader.family = SamplingFamily::uniform(3);
        reader.relation = OutputRelation::collisions(1);
        reader.mode = ProgressMode::DisjointCollisions;
        reader.dist_n = 3;
        reader.dist_k = 1;
        reader.name = "reader-m4-n3-k1";
        runs.push_back(std::move(reader));
    }
    for (auto& run : generate_verification_runs(opt.seed, opt.algorithm_count))
        runs.push_back(std::move(run));

    for (const auto& run : runs) {
        std::vector<DenseState> psi_caps;
        const DenseState psi = run_standard(run.algorithm, run.family, &psi_caps);
        std::vector<QueryState> phi_caps;
        const QueryState phi = run_recording(run.algorithm, run.family, &phi_caps);

        double dev = distance(psi, translated(phi, run.family));
        for (std::size_t t = 1; t < phi_caps.size(); ++t)
            dev = std::max(dev, distance(psi_caps[t - 1], translated(phi_caps[t], run.family)));
        push_upper(rep, "dual-model-distance-" + run.name, dev, 1e-9);

        uint64_t support_violations = 0;
        for (std::size_t t = 0; t < phi_caps.size(); ++t) {
            const uint32_t bottom = run.algorithm.layout.bottom();
            for (const auto& [c, a] : phi_caps[t].amplitudes()) {
                uint32_t recorded = 0;
                for (uint32_t v : c.f) recorded += (v != bottom) ? 1 : 0;
                if (recorded > t) ++support_violations;
            }
        }
        push_upper(rep, "support-violations-" + run.name, static_cast<double>(support_violations),
                   0.0);

        // fan-out of the query operator alone: counted around each query,
        // with the algorithm's own gates excluded
        {
            double fanout_excess = 0.0;
            const double cap = static_cast<double>(run.algorithm.layout.range_size()) + 2.0;
            QueryState walker = QueryState::initial_recording(run.algorithm.layout);
            for (const auto& step : run.algorithm.steps) {
                if (step.op == AlgorithmStep::Op::Unitary) {
                    walker = apply_unitary(walker, step.target, step.matrix);
                } else if (step.op == AlgorithmStep::Op::Query) {
                    const double before = static_cast<double>(walker.component_count());
                    walker = apply_recording_oracle(walker, run.family);
                    const double after = static_cast<double>(walker.component_count());
                    if (before > 0) fanout_excess = std::max(fanout_excess, after / before - cap);
                }
            }
            push_upper(rep, "per-query-fanout-" + run.name, fanout_excess, 0.0);
        }

        const double sigma_standard = success_probability(psi, run.relation);
        const double sigma_recording = success_probability(phi, run.relation, run.family);
        push_upper(rep, "success-agreement-" + run.name, std::abs(sigma_standard - sigma_recording),
                   1e-9);

        const double norm_dev = std::abs(norm(phi) - 1.0);
        push_upper(rep, "recording-norm-" + run.name, norm_dev, 1e-9);
    }

    rep.seconds = clock.seconds();
    return rep;
}

SuiteReport verify_support(const VerifyOptions& opt) {
    Stopwatch clock;
    SuiteReport rep;
    rep.suite = "support";

    auto check_run = [&rep](const QueryAlgorithm& alg, const SamplingFamily& fam,
                            const std::string& name) {
        std::vector<QueryState> caps;
        run_recording(alg, fam, &caps);
        uint64_t violations = 0;
        const uint32_t bottom = alg.layout.bottom();
        for (std::size_t t = 0; t < caps.size(); ++t)
            for (const auto& [c, a] : caps[t].amplitudes()) {
                uint32_t recorded = 0;
                for (uint32_t v : c.f) recorded += (v != bottom) ? 1 : 0;
                if (recorded > t) ++violations;
            }
        push_upper(rep, "support-" + name, static_cast<double>(violations), 0.0);
    };

    check_run(build_grover_ksearch(4, 1, 2), SamplingFamily::bernoulli(1, 8), "grover-m4-t2");
    check_run(build_collision_reader(4, 3, {{0, 1}}), SamplingFamily::uniform(3), "reader-k1");
    check_run(build_collision_reader(5, 2, {{0, 1}, {2, 3}}), SamplingFamily::uniform(2),
              "reader-k2");
    const auto runs = generate_verification_runs(mix_seed(opt.seed, 5), 6);
    for (const auto& run : runs) check_run(run.algorithm, run.family, run.name);

    rep.seconds = clock.seconds();
    return rep;
}

SuiteReport verify_recurrences(const VerifyOptions& opt) {
    Stopwatch clock;
    SuiteReport rep;
    rep.suite = "recurrences";

    const auto runs = generate_verification_runs(opt.seed, opt.algorithm_count);
    for (const auto& run : runs) {
        std::vector<QueryState> caps;
        run_recording(run.algorithm, run.family, &caps);
        const uint32_t k_max = default_k_max(run.algorithm.layout,
                                             static_cast<uint32_t>(caps.size() - 1), run.mode) +
                               1;  // one shell beyond the reachable statistic
        const ProgressTable table =
            progress_table_from_run(caps, run.mode, run.dist_n, run.dist_k, k_max);
        const RecurrenceReport rec = check_recurrence(table);
        push_lower(rep, "growth-slack-" + run.name, rec.min_growth_slack, -1e-8);
        push_lower(rep, "envelope-slack-" + run.name, rec.min_envelope_slack, -1e-8);

        // shells beyond the reachable statistic stay empty, and the exact-k
        // shells telescope back to the squared norm
        double shell_dev = 0.0;
        for (uint32_t t = 0; t <= table.queries; ++t) {
            shell_dev = std::max(shell_dev, table.at(t, k_max));
            double total = 0.0;
            for (uint32_t k = 0; k < k_max; ++k)
                total += table.at(t, k) * table.at(t, k) - table.at(t, k + 1) * table.at(t, k + 1);
            total += table.at(t, k_max) * table.at(t, k_max);
            const double n = norm(caps[t]);
            shell_dev = std::max(shell_dev, std::abs(total - n * n));
        }
        push_upper(rep, "shell-telescoping-" + run.name, shell_dev, 1e-8);
    }

    {
        // fresh start: full measure at zero statistic, none beyond
        const RegisterLayout layout = RegisterLayout::collision_output(4, 4, 1);
        const QueryState initial = QueryState::initial_recording(layout);
        push_upper(rep, "initial-q00-is-one",
                   std::abs(progress_measure(initial, 0, ProgressMode::DisjointCollisions) - 1.0),
                   1e-12);
        push_upper(rep, "initial-q0k-is-zero",
                   progress_measure(initial, 1, ProgressMode::DisjointCollisions), 1e-12);
        // one query records at most one cell, which cannot collide
        QueryState one = apply_recording_oracle(
            apply_unitary(initial, {RegisterRef::p()}, fourier_matrix(4)),
            SamplingFamily::uniform(4));
        push_upper(rep, "one-query-no-collision",
                   progress_measure(one, 1, ProgressMode::DisjointCollisions), 1e-12);
    }

    rep.seconds = clock.seconds();
    return rep;
}

SuiteReport verify_bounds_domination(const VerifyOptions& opt) {
    Stopwatch clock;
    SuiteReport rep;
    rep.suite = "bounds-domination";
    const double tol = 1e-8;

    // classical readers: claimed pair images match with probability 1/N^K
    for (uint32_t n = 2; n <= 4; ++n) {
        for (uint32_t m = 2; m <= 4; ++m) {
            const QueryAlgorithm alg = build_collision_reader(m, n, {{0, 1}});
            const SamplingFamily fam = SamplingFamily::uniform(n);
            const QueryState phi = run_recording(alg, fam);
            const double sigma = success_probability(phi, OutputRelation::collisions(1), fam);
            push_upper(rep,
                       "reader-k1-m" + std::to_string(m) + "-n" + std::to_string(n) + "-exact",
                       std::abs(sigma - 1.0 / n), 1e-9);
            const BoundValue bound = collision_success_bound(alg.declared_queries, 1, n);
            push_lower(rep, "reader-k1-m" + std::to_string(m) + "-n" + std::to_string(n) + "-bound",
                       bound.clamped + tol - sigma, 0.0);
        }
    }
    for (uint32_t n = 2; n <= 4; ++n) {
        for (uint32_t m = 4; m <= 6; ++m) {
            const QueryAlgorithm alg = build_collision_reader(m, n, {{0, 1}, {2, 3}});
            const SamplingFamily fam = SamplingFamily::uniform(n);
            const QueryState phi = run_recording(alg, fam);
            const double sigma = success_probability(phi, OutputRelation::collisions(2), fam);
            push_upper(rep,
                       "reader-k2-m" + std::to_string(m) + "-n" + std::to_string(n) + "-exact",
                       std::abs(sigma - 1.0 / (static_cast<double>(n) * n)), 1e-9);
            const BoundValue bound = collision_success_bound(alg.declared_queries, 2, n);
            push_lower(rep, "reader-k2-m" + std::to_string(m) + "-n" + std::to_string(n) + "-bound",
                       bound.clamped + tol - sigma, 0.0);
        }
    }

    // blind guessers against the non-vacuous tail of the search bound
    for (uint32_t k = 1; k <= 2; ++k) {
        for (uint32_t n_dist : {8u, 16u, 100u}) {
            const QueryAlgorithm alg = build_ksearch_guesser(4, k);
            const SamplingFamily fam = SamplingFamily::bernoulli(k, n_dist);
            const QueryState phi = run_recording(alg, fam);
            const double sigma = success_probability(phi, OutputRelation::ksearch(k), fam);
            const double expected = std::pow(static_cast<double>(k) / n_dist, k);
            push_upper(rep, "guesser-k" + std::to_string(k) + "-n" + std::to_string(n_dist) + "-exact",
                       std::abs(sigma - expected), 1e-9);
            const BoundValue bound = ksearch_success_bound(0, k, n_dist);
            push_lower(rep,
                       "guesser-k" + std::to_string(k) + "-n" + std::to_string(n_dist) + "-bound",
                       bound.clamped + tol - sigma, 0.0);
        }
    }
    {
        // the zero-query bound is genuinely below one here
        const BoundValue b = ksearch_success_bound(0, 1, 100);
        push_upper(rep, "guesser-bound-nonvacuous", b.clamped, 0.5);
    }

    // search with queries, judged against the bernoulli input
    for (uint32_t iters : {0u, 1u, 2u, 6u}) {
        const QueryAlgorithm alg = build_grover_ksearch(4, 1, iters);
        const SamplingFamily fam = SamplingFamily::bernoulli(1, 8);
        const DenseState psi = run_standard(alg, fam);
        const double sigma = success_probability(psi, OutputRelation::ksearch(1));
        const BoundValue bound = ksearch_success_bound(iters, 1, 8);
        push_lower(rep, "grover-t" + std::to_string(iters) + "-bound",
                   bound.clamped + tol - sigma, 0.0);
    }

    // longer runs up to six queries at domain and range six
    {
        Rng rng(mix_seed(opt.seed, 23));
        const QueryAlgorithm alg =
            random_algorithm(rng, RegisterLayout::collision_output(6, 6, 1), 6);
        const SamplingFamily fam = SamplingFamily::uniform(6);
        const double sigma =
            success_probability(run_recording(alg, fam), OutputRelation::collisions(1), fam);
        push_lower(rep, "random-m6-n6-t6-bound",
                   collision_success_bound(6, 1, 6).clamped + tol - sigma, 0.0);

        const QueryAlgorithm alg2 =
            random_algorithm(rng, RegisterLayout::ksearch_output(6, 2), 6);
        const SamplingFamily fam2 = SamplingFamily::bernoulli(2, 6);
        const double sigma2 =
            success_probability(run_recording(alg2, fam2), OutputRelation::ksearch(2), fam2);
        push_lower(rep, "random-search-m6-k2-t6-bound",
                   ksearch_success_bound(6, 2, 6).clamped + tol - sigma2, 0.0);
    }

    // randomized runs from the shared generator
    const auto runs = generate_verification_runs(mix_seed(opt.seed, 17), opt.algorithm_count);
    for (const auto& run : runs) {
        const QueryState phi = run_recording(run.algorithm, run.family);
        const double sigma = success_probability(phi, run.relation, run.family);
        const uint32_t queries = run.algorithm.declared_queries;
        const BoundValue bound =
            run.mode == ProgressMode::DisjointCollisions
                ? collision_success_bound(queries, run.relation.target_count, run.dist_n)
                : ksearch_success_bound(queries, run.relation.target_count, run.dist_n);
        push_lower(rep, "random-" + run.name + "-bound", bound.clamped + tol - sigma, 0.0);
    }

    rep.seconds = clock.seconds();
    return rep;
}

SuiteReport verify_hash_exactness(const VerifyOptions& opt) {
    Stopwatch clock;
    SuiteReport rep;
    rep.suite = "hash-exactness";

    {
        // all 5^4 coefficient vectors at q=5, d=4, R=4: the accepted
        // functions hit every output tuple exactly once
        const uint64_t q = 5;
        std::vector<uint64_t> tuple_counts(256, 0);
        uint64_t accepted = 0;
        for (uint64_t a0 = 0; a0 < q; ++a0)
            for (uint64_t a1 = 0; a1 < q; ++a1)
                for (uint64_t a2 = 0; a2 < q; ++a2)
                    for (uint64_t a3 = 0; a3 < q; ++a3) {
                        const FourWiseHash h =
                            FourWiseHash::from_coefficients(q, {a0, a1, a2, a3}, 4, 4);
                        if (!h.in_window()) continue;
                        ++accepted;
                        uint64_t idx = 0;
                        for (uint32_t i = 0; i < 4; ++i) idx = idx * 4 + h(i);
                        ++tuple_counts[idx];
                    }
        uint64_t lo = UINT64_MAX, hi = 0;
        for (uint64_t c : tuple_counts) {
            lo = std::min(lo, c);
            hi = std::max(hi, c);
        }
        push_upper(rep, "enumeration-accepted-count",
                   std::abs(static_cast<double>(accepted) - 256.0), 0.0);
        push_upper(rep, "enumeration-tuple-deviation", static_cast<double>(hi - lo), 0.0,
                   "every 4-tuple of outputs appears exactly once");

        std::vector<uint64_t> pair_counts(16, 0);
        for (uint64_t idx = 0; idx < 256; ++idx) pair_counts[idx / 16] += tuple_counts[idx];
        uint64_t plo = UINT64_MAX, phi = 0;
        for (uint64_t c : pair_counts) {
            plo = std::min(plo, c);
            phi = std::max(phi, c);
        }
        push_upper(rep, "enumeration-pair-deviation", static_cast<double>(phi - plo), 0.0);
    }

    {
        // pairwise collision rate at a large field, three standard errors
        const uint64_t trials = 100000;
        uint64_t collisions = 0;
        for (uint64_t t = 0; t < trials; ++t) {
            const FourWiseHash h = FourWiseHash::sample(8, 16, mix_seed(opt.seed, t), 1009);
            collisions += (h(0) == h(1)) ? 1 : 0;
        }
        const double p = 1.0 / 16.0;
        const double se = std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
        const double freq = static_cast<double>(collisions) / static_cast<double>(trials);
        push_upper(rep, "pairwise-collision-rate", std::abs(freq - p), 3.0 * se);
    }

    rep.seconds = clock.seconds();
    return rep;
}

std::vector<std::string> verify_suite_names() {
    return {"unitarity",   "oracle-equivalence", "indistinguishability", "support",
            "recurrences", "bounds-domination",  "hash-exactness"};
}

SuiteReport run_verify_suite(const std::string& name, const VerifyOptions& opt) {
    if (name == "unitarity") return verify_unitarity(opt);
    if (name == "oracle-equivalence") return verify_oracle_equivalence(opt);
    if (name == "indistinguishability") return verify_indistinguishability(opt);
    if (name == "support") return verify_support(opt);
    if (name == "recurrences") return verify_recurrences(opt);
    if (name == "bounds-domination") return verify_bounds_domination(opt);
    if (name == "hash-exactness") return verify_hash_exactness(opt);
    throw std::invalid_argument("unknown verify suite '" + name + "'");
}

}  // namespace recq
