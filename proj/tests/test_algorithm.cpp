#include "doctest.h"

#include "recq/algorithm.hpp"
#include "recq/emulate.hpp"
#include "recq/random.hpp"

#include <cmath>

using namespace recq;

TEST_CASE("zero-step algorithm leaves the recording state blank") {
    QueryAlgorithm alg{RegisterLayout(3, 3, {}), 0, {}};
    const QueryState phi = run_recording(alg, SamplingFamily::uniform(3));
    const QueryState initial = QueryState::initial_recording(alg.layout);
    CHECK(phi.amplitudes() == initial.amplitudes());
}

TEST_CASE("runs preserve the norm in both models") {
    Rng rng(71);
    const RegisterLayout layout = RegisterLayout::collision_output(3, 3, 1);
    const QueryAlgorithm alg = random_algorithm(rng, layout, 3);
    const SamplingFamily fam = SamplingFamily::uniform(3);
    CHECK(std::abs(norm(run_recording(alg, fam)) - 1.0) < 1e-9);
    CHECK(std::abs(norm(run_standard(alg, fam)) - 1.0) < 1e-9);
}

TEST_CASE("one random query step looks identical through the translation") {
    Rng rng(73);
    const RegisterLayout layout(2, 2, {});
    QueryAlgorithm alg{layout, 1, {}};
    alg.steps.push_back(AlgorithmStep::unitary({RegisterRef::q()}, random_unitary(rng, 2)));
    alg.steps.push_back(AlgorithmStep::unitary({RegisterRef::p()}, random_unitary(rng, 2)));
    alg.steps.push_back(AlgorithmStep::query());
    alg.steps.push_back(AlgorithmStep::unitary({RegisterRef::q()}, random_unitary(rng, 2)));
    const SamplingFamily fam = SamplingFamily::uniform(2);
    const DenseState psi = run_standard(alg, fam);
    const QueryState phi = run_recording(alg, fam);
    CHECK(distance(psi, translated(phi, fam)) < 1e-9);
}

TEST_CASE("declared query count is enforced") {
    QueryAlgorithm alg{RegisterLayout(2, 2, {}), 2, {AlgorithmStep::query()}};
    CHECK_THROWS_AS(alg.validate(), std::invalid_argument);
}

TEST_CASE("algorithm unitaries may not touch oracle cells") {
    QueryAlgorithm alg{RegisterLayout(2, 2, {}), 0, {}};
    alg.steps.push_back(AlgorithmStep::unitary({RegisterRef::f(0)}, CMatrix::identity(3)));
    CHECK_THROWS_AS(alg.validate(), std::invalid_argument);
}

TEST_CASE("unsatisfiable relations give zero success") {
    // two disjoint pairs cannot fit into a two-point domain
    const RegisterLayout layout = RegisterLayout::collision_output(2, 2, 2);
    const QueryState s = QueryState::initial_recording(layout);
    CHECK(success_probability(s, OutputRelation::collisions(2), SamplingFamily::uniform(2)) == 0.0);
}

TEST_CASE("classical reader succeeds with probability 1/N in both models") {
    const uint32_t n = 3;
    const QueryAlgorithm alg = build_collision_reader(4, n, {{0, 1}});
    const SamplingFamily fam = SamplingFamily::uniform(n);
    const OutputRelation rel = OutputRelation::collisions(1);
    const double sigma_rec = success_probability(run_recording(alg, fam), rel, fam);
    const double sigma_std = success_probability(run_standard(alg, fam), rel);
    CHECK(sigma_rec == doctest::Approx(1.0 / n).epsilon(1e-9));
    CHECK(std::abs(sigma_rec - sigma_std) < 1e-9);
}

TEST_CASE("read gadget leaves the image in the phase register on a fixed input") {
    const uint32_t m = 3, n = 5;
    const RegisterLayout layout(m, n, {});
    QueryAlgorithm alg{layout, 1, {}};
    alg.steps.push_back(AlgorithmStep::unitary({RegisterRef::q()}, add_constant_gate(m, 2)));
    auto gadget = read_gadget(layout);
    alg.steps.insert(alg.steps.end(), gadget.begin(), gadget.end());
    const std::vector<uint32_t> input{4, 1, 3};
    const QueryState out = run_fixed_input(alg, input);
    REQUIRE(out.component_count() == 1);
    const auto& c = out.amplitudes().begin()->first;
    CHECK(c.x == 2);
    CHECK(c.p == input[2]);
    CHECK(std::abs(out.amplitudes().begin()->second - cplx{1.0}) < 1e-9);
}

TEST_CASE("read gadget on a unary range is the identity") {
    const RegisterLayout layout(2, 1, {});
    QueryAlgorithm alg{layout, 1, read_gadget(layout)};
    const QueryState out = run_fixed_input(alg, {0, 0});
    REQUIRE(out.component_count() == 1);
    CHECK(out.amplitudes().begin()->first.p == 0);
}

TEST_CASE("two-query read restores the phase register and fills the slot") {
    const uint32_t m = 3, n = 4;
    const RegisterLayout layout(m, n, {SlotSpec{n, 0}});
    QueryAlgorithm alg{layout, 2, {}};
    alg.steps.push_back(AlgorithmStep::unitary({RegisterRef::q()}, add_constant_gate(m, 1)));
    auto gadget = read_gadget_into_slot(layout, 0, 0);
    alg.steps.insert(alg.steps.end(), gadget.begin(), gadget.end());
    const std::vector<uint32_t> input{2, 3, 1};
    const QueryState out = run_fixed_input(alg, input);
    REQUIRE(out.component_count() == 1);
    const auto& c = out.amplitudes().begin()->first;
    CHECK(c.p == 0);
    CHECK(c.w[0] == input[1]);
}

TEST_CASE("search iterations hit the rotation formula on fixed inputs") {
    // independent oracle: sin^2((2T+1) asin(sqrt(m/M)))
    const uint32_t domain = 4;
    for (uint32_t marked : {1u, 2u}) {
        std::vector<uint32_t> input(domain, 0);
        for (uint32_t i = 0; i < marked; ++i) input[i + 1] = 1;
        for (uint32_t iters = 0; iters <= 3; ++iters) {
            const QueryAlgorithm alg = build_grover_ksearch(domain, marked, iters);
            const QueryState out = run_fixed_input(alg, input);
            const double sigma = success_probability_diagonal(out, OutputRelation::ksearch(1));
            const double theta = std::asin(std::sqrt(static_cast<double>(marked) / domain));
            const double expect = std::pow(std::sin((2.0 * iters + 1.0) * theta), 2);
            CHECK(sigma == doctest::Approx(expect).epsilon(1e-9));
        }
    }
}

TEST_CASE("single marked point is found exactly after one iteration") {
    const QueryAlgorithm alg = build_grover_ksearch(4, 1, 1);
    const QueryState out = run_fixed_input(alg, {0, 0, 1, 0});
    CHECK(success_probability_diagonal(out, OutputRelation::ksearch(1)) ==
          doctest::Approx(1.0).epsilon(1e-9));
    CHECK(grover_optimal_iterations(4, 1) == 1);
}

TEST_CASE("zero iterations measure the uniform distribution") {
    const QueryAlgorithm alg = build_grover_ksearch(4, 1, 0);
    const QueryState out = run_fixed_input(alg, {0, 1, 0, 0});
    CHECK(success_probability_diagonal(out, OutputRelation::ksearch(1)) ==
          doctest::Approx(0.25).epsilon(1e-9));
}

TEST_CASE("the translation identity holds for arbitrary product families") {
    Rng rng(109);
    const uint32_t m = 3, n = 3;
    std::vector<CMatrix> mats;
    for (uint32_t x = 0; x < m; ++x) {
        CMatrix u = random_unitary(rng, n);
        CMatrix s(n + 1);
        for (uint32_t r = 0; r < n; ++r)
            for (uint32_t c = 0; c < n; ++c) s(r, c) = u(r, c);
        s(n, n) = 1.0;
        std::vector<uint32_t> perm(n + 1);
        for (uint32_t v = 0; v <= n; ++v) perm[v] = v;
        std::swap(perm[0], perm[n]);
        mats.push_back(s * permutation_matrix(perm));
    }
    const SamplingFamily fam = SamplingFamily::general(n, std::move(mats));
    const QueryAlgorithm alg = random_algorithm(rng, RegisterLayout(m, n, {SlotSpec{n, 0}}), 3);
    const DenseState psi = run_standard(alg, fam);
    const QueryState phi = run_recording(alg, fam);
    CHECK(distance(psi, translated(phi, fam)) < 1e-9);
}

TEST_CASE("a point-distribution family reproduces the fixed-input run") {
    const uint32_t m = 3, n = 3;
    const std::vector<uint32_t> input{2, 0, 1};
    std::vector<CMatrix> mats;
    for (uint32_t x = 0; x < m; ++x) {
        std::vector<uint32_t> perm(n + 1);
        for (uint32_t v = 0; v <= n; ++v) perm[v] = v;
        std::swap(perm[n], perm[input[x]]);
        mats.push_back(permutation_matrix(perm));
    }
    const SamplingFamily point = SamplingFamily::general(n, std::move(mats));

    Rng rng(113);
    const QueryAlgorithm alg = random_algorithm(rng, RegisterLayout(m, n, {SlotSpec{n, 0}}), 2);
    const QueryState via_family = run_standard(alg, point).to_sparse();
    const QueryState via_fixed = run_fixed_input(alg, input);
    for (const auto& [c, a] : via_fixed.amplitudes())
        CHECK(std::abs(via_family.amplitude(c) - a) < 1e-9);
    CHECK(via_family.component_count() == via_fixed.component_count());
}

TEST_CASE("algorithm json round trip reproduces the run") {
    Rng rng(79);
    const QueryAlgorithm alg =
        random_algorithm(rng, RegisterLayout::collision_output(3, 2, 1), 2);
    const QueryAlgorithm back = QueryAlgorithm::from_json(alg.to_json());
    REQUIRE(back.steps.size() == alg.steps.size());
    const SamplingFamily fam = SamplingFamily::uniform(2);
    const QueryState a = run_recording(alg, fam);
    const QueryState b = run_recording(back, fam);
    for (const auto& [c, v] : a.amplitudes()) CHECK(std::abs(v - b.amplitude(c)) < 1e-12);
}

TEST_CASE("disjoint pair counting") {
    CHECK(max_disjoint_pairs({}) == 0);
    CHECK(max_disjoint_pairs({{0, 1}, {1, 2}}) == 1);
    CHECK(max_disjoint_pairs({{0, 1}, {2, 3}}) == 2);
    CHECK(max_disjoint_pairs({{0, 1}, {1, 2}, {2, 3}}) == 2);
}

TEST_CASE("sliced run attributes outputs to their slices") {
    const uint32_t n = 2;
    const std::vector<uint32_t> input{0, 0, 1, 1};
    SUBCASE("two-slice reader matches the hand trace") {
        const QueryAlgorithm alg = build_collision_reader(4, n, {{0, 1}, {2, 3}});
        // readers emit one mark at the end; split it into per-pair marks
        QueryAlgorithm marked{alg.layout, alg.declared_queries, {}};
        uint32_t queries_seen = 0;
        for (const auto& step : alg.steps) {
            if (step.op == AlgorithmStep::Op::OutputMark) continue;
            marked.steps.push_back(step);
            if (step.op == AlgorithmStep::Op::Query && (++queries_seen % 2) == 0)
                marked.steps.push_back(AlgorithmStep::output_mark());
        }
        const SlicedReport rep =
            sliced_run(marked, OutputRelation::collisions(2), input, 2);
        REQUIRE(rep.counts.size() == 2);
        CHECK(rep.counts[0] == 1);
        CHECK(rep.counts[1] == 1);
        CHECK_FALSE(rep.ragged);

        SUBCASE("a single slice reproduces the unsliced total") {
            const SlicedReport whole =
                sliced_run(marked, OutputRelation::collisions(2), input, 4);
            REQUIRE(whole.counts.size() == 1);
            CHECK(whole.counts[0] == 2);
        }
    }
    SUBCASE("an algorithm without output marks reports zeros") {
        QueryAlgorithm alg{RegisterLayout::collision_output(4, n, 1), 2,
                           {AlgorithmStep::query(), AlgorithmStep::query()}};
        const SlicedReport rep = sliced_run(alg, OutputRelation::collisions(1), input, 1);
        for (uint32_t c : rep.counts) CHECK(c == 0);
    }
    SUBCASE("slice length not dividing the query count is flagged") {
        const QueryAlgorithm alg = build_collision_reader(4, n, {{0, 1}, {2, 3}});
        const SlicedReport rep = sliced_run(alg, OutputRelation::collisions(2), input, 3);
        CHECK(rep.ragged);
        REQUIRE(rep.counts.size() == 2);
        CHECK(rep.counts[0] + rep.counts[1] == 2);
    }
}

TEST_CASE("table-search emulation finds a collision fast at small memory") {
    uint32_t hits = 0;
    for (uint64_t seed = 0; seed < 100; ++seed) {
        EmulationConfig cfg{1u << 10, 1, 10, mix_seed(83, seed)};
        const EmulationResult res = emulate_collision_table_search(cfg);
        hits += res.reached_target ? 1 : 0;
        for (const auto& [a, b] : res.pairs) CHECK(a != b);
    }
    CHECK(hits >= 67);
}

TEST_CASE("emulation flags memory outside the guard range") {
    EmulationConfig cfg{1u << 10, 4, 2, 1};
    CHECK(emulate_collision_table_search(cfg).memory_outside_guard);
    cfg.memory = 512;
    CHECK(emulate_collision_table_search(cfg).memory_outside_guard);
    cfg.memory = 16;
    CHECK_FALSE(emulate_collision_table_search(cfg).memory_outside_guard);
}

TEST_CASE("emulation is deterministic in the seed") {
    EmulationConfig cfg{1u << 12, 8, 12, 12345};
    const EmulationResult a = emulate_collision_table_search(cfg);
    const EmulationResult b = emulate_collision_table_search(cfg);
    CHECK(a.queries == b.queries);
    CHECK(a.pairs == b.pairs);
}
