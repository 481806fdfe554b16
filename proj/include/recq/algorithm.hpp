#pragma once

#include "recq/dense.hpp"
#include "recq/oracles.hpp"
#include "recq/relation.hpp"

#include <string>
#include <vector>

namespace recq {

struct AlgorithmStep {
    enum class Op { Unitary, Query, OutputMark };

    Op op = Op::Query;
    RegisterTarget target;  // Unitary only
    CMatrix matrix;         // Unitary only

    static AlgorithmStep query() { return {Op::Query, {}, {}}; }
    static AlgorithmStep unitary(RegisterTarget t, CMatrix m) {
        return {Op::Unitary, std::move(t), std::move(m)};
    }
    static AlgorithmStep output_mark() { return {Op::OutputMark, {}, {}}; }
};

/// A query algorithm as data: an interleaving of register-local unitaries
/// and oracle queries, plus marks on the steps where the output slots have
/// just been updated. Unitaries may touch Q, P and workspace slots only;
/// the oracle cells are reached through queries alone.
struct QueryAlgorithm {
    RegisterLayout layout{1, 1};
    uint32_t declared_queries = 0;
    std::vector<AlgorithmStep> steps;

    uint32_t count_queries() const;
    void validate() const;

    std::string to_json() const;
    static QueryAlgorithm from_json(const std::string& text);
};

/// Standard-side run: the oracle cells start in the family's product
/// initial state and queries are phase queries. Dense only. When
/// `after_queries` is given it receives the state right after each query.
DenseState run_standard(const QueryAlgorithm& alg, const SamplingFamily& family,
                        std::vector<DenseState>* after_queries = nullptr);

/// Recording-side run from the all-sentinel oracle state. Queries use the
/// matrix route by default, or the closed forms for the built-in families.
/// `after_queries` receives the initial state and the state right after
/// each query, i.e. one entry per query count 0..T.
QueryState run_recording(const QueryAlgorithm& alg, const SamplingFamily& family,
                         std::vector<QueryState>* after_queries = nullptr,
                         bool closed_form = false);

/// Run against one fixed classical input; the oracle cells hold the input
/// throughout and queries are plain phase queries.
QueryState run_fixed_input(const QueryAlgorithm& alg, const std::vector<uint32_t>& input,
                           std::vector<QueryState>* after_queries = nullptr);

double success_probability(const DenseState& final_state, const OutputRelation& rel);
double success_probability(const QueryState& final_state, const OutputRelation& rel,
                           const SamplingFamily& family);

// ---- gates -------------------------------------------------------------

CMatrix fourier_matrix(uint32_t n);
CMatrix permutation_matrix(const std::vector<uint32_t>& perm);
CMatrix add_constant_gate(uint32_t card, uint32_t c);
CMatrix negate_gate(uint32_t card);
CMatrix grover_diffusion(uint32_t n);
/// On (source, dest): dest += source + shift (mod dest card).
CMatrix pair_add_gate(uint32_t src_card, uint32_t dst_card, uint32_t shift);

// ---- builders ----------------------------------------------------------

/// One query; conjugating the query by the Fourier transform on the phase
/// register turns the phase kick into "P += f(x) mod N".
std::vector<AlgorithmStep> read_gadget(const RegisterLayout& layout);

/// Two queries; copies f(x) into the slot (shifted) and restores P to 0.
std::vector<AlgorithmStep> read_gadget_into_slot(const RegisterLayout& layout, uint32_t slot,
                                                 uint32_t shift);

/// Uniform preparation on Q, `iterations` rounds of (phase query at p=1,
/// diffusion), then Q copied into the output slot. expected_marked is a
/// sanity parameter for iteration tuning only.
QueryAlgorithm build_grover_ksearch(uint32_t domain, uint32_t expected_marked, uint32_t iterations);

uint32_t grover_optimal_iterations(uint32_t domain, uint32_t marked);

/// Classical-style reader: for each requested pair (a, b) it stores the
/// pair and reads f(a) into the claimed-image slot. Two queries per pair.
QueryAlgorithm build_collision_reader(uint32_t domain, uint32_t range,
                                      const std::vector<std::pair<uint32_t, uint32_t>>& pairs);

/// Zero queries: claims positions 0..k-1 blindly.
QueryAlgorithm build_ksearch_guesser(uint32_t domain, uint32_t k);

// ---- sliced experiment ---------------------------------------------------

struct SlicedReport {
    std::vector<uint32_t> counts;  // per slice: new distinct disjoint outputs
    bool ragged = false;           // last slice shorter than slice_length
};

/// Runs on a fixed input, decoding the output slots from the dominant
/// component at every output mark. Collision relations count, per slice,
/// the maximum disjoint subset of the correct pairs first emitted there;
/// search relations count new correct positions.
SlicedReport sliced_run(const QueryAlgorithm& alg, const OutputRelation& rel,
                        const std::vector<uint32_t>& input, uint32_t slice_length);

/// Size of a maximum disjoint (vertex-disjoint) subset of the given pairs.
uint32_t max_disjoint_pairs(const std::vector<std::pair<uint32_t, uint32_t>>& pairs);

}  // namespace recq
