#pragma once

#include "recq/dense.hpp"
#include "recq/relation.hpp"
#include "recq/sampling.hpp"
#include "recq/state.hpp"

namespace recq {

/// Phase query: multiplies each component by omega_N^{p f(x)}; components
/// whose queried cell is still the sentinel pass through unchanged.
QueryState apply_standard_oracle(const QueryState& s);
DenseState apply_standard_oracle(const DenseState& s);

/// Recording query via the matrix route: applies the precomputed
/// conjugation S† D_p S on the queried cell, controlled on the query
/// register. This is the ground truth the closed forms are checked against.
QueryState apply_recording_oracle(const QueryState& s, const SamplingFamily& family);

/// Which coefficient the closed form puts on the sentinel when the queried
/// cell already holds a value. Only the 1/sqrt(N) variant is unitary; the
/// 1/N variant is kept so tests can exhibit its failure.
enum class BottomCoefficient { InverseSqrtN, InverseN };

/// The uniform family's recording action written out entrywise, as one
/// matrix over the cell alphabet for a given phase value.
CMatrix closed_form_uniform_matrix(uint32_t range, uint32_t p,
                                   BottomCoefficient variant = BottomCoefficient::InverseSqrtN);

/// The two-valued family's recording action written out entrywise
/// (identity at p = 0, the three closed-form rows at p = 1).
CMatrix closed_form_bernoulli_matrix(double alpha, double beta, uint32_t p);

/// Recording query via the closed-form coefficients; must agree with the
/// matrix route to 1e-12 per amplitude.
QueryState apply_recording_oracle_uniform(const QueryState& s);
QueryState apply_recording_oracle_bernoulli(const QueryState& s, const SamplingFamily& family);

/// Applies the sampling unitary of every position (or its adjoint),
/// mapping recording-side states onto standard-side states. Dense only.
DenseState apply_translation(const DenseState& s, const SamplingFamily& family, bool adjoint = false);

/// from_sparse followed by apply_translation, with the dense size guard.
DenseState translated(const QueryState& s, const SamplingFamily& family);

/// ||Pi_succ T |state>||^2 computed without materializing the translated
/// state: components are grouped on everything outside the claimed
/// positions and each member contributes its amplitude times the product
/// of single-cell matrix elements <required|S|current>, summed coherently
/// within the group. Signs interfere, so they are carried exactly.
double success_projection_recording(const QueryState& s, const OutputRelation& rel,
                                    const SamplingFamily& family);

}  // namespace recq
