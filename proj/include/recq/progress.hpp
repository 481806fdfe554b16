#pragma once

#include "recq/state.hpp"

#include <iosfwd>
#include <vector>

namespace recq {

/// Which structure in the recorded oracle content counts as progress:
/// disjoint collision pairs, or cells equal to one.
enum class ProgressMode { DisjointCollisions, Ones };

/// DisjointCollisions: sum over values y of floor(multiplicity(y)/2),
/// sentinel cells excluded. This equals the maximum number of mutually
/// disjoint collision pairs because the collision graph is a disjoint
/// union of cliques. Ones: number of cells equal to 1.
uint32_t count_statistic(const std::vector<uint32_t>& f, uint32_t bottom, ProgressMode mode);

/// ||projection of s onto components with statistic >= k||.
double progress_measure(const QueryState& s, uint32_t k, ProgressMode mode);

/// Cell classes for the refined projectors. Bottom keeps components whose
/// queried cell is the sentinel; Value keeps cell == y (collision mode);
/// One/Zero keep cell == 1 / == 0 (ones mode).
enum class CellClass { Bottom, Value, One, Zero };

/// Keeps components with exactly k statistic, an active phase (p != 0 in
/// collision mode, p == 1 in ones mode), and the queried cell in the class.
QueryState project_classified(const QueryState& s, uint32_t k, CellClass cls, uint32_t value,
                              ProgressMode mode);

uint32_t default_k_max(const RegisterLayout& layout, uint32_t queries, ProgressMode mode);

/// The measure q[t][k] over a whole run, plus the distribution parameters
/// the growth inequalities are evaluated with (collision mode uses dist_n;
/// ones mode uses dist_k/dist_n).
struct ProgressTable {
    ProgressMode mode = ProgressMode::DisjointCollisions;
    uint32_t queries = 0;
    uint32_t k_max = 0;
    double dist_n = 1.0;
    double dist_k = 1.0;
    std::vector<double> q;  // (queries+1) x (k_max+1), row-major in t

    double at(uint32_t t, uint32_t k) const { return q[std::size_t{t} * (k_max + 1) + k]; }
    double& at(uint32_t t, uint32_t k) { return q[std::size_t{t} * (k_max + 1) + k]; }
};

/// states[t] is the recording-side state after t queries, t = 0..T.
ProgressTable progress_table_from_run(const std::vector<QueryState>& states, ProgressMode mode,
                                      double dist_n, double dist_k, uint32_t k_max);

struct ProgressCell {
    uint32_t t = 0;
    uint32_t k = 0;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;  // rhs - lhs; nonnegative up to float noise when the inequality holds
};

struct RecurrenceReport {
    std::vector<ProgressCell> growth;    // q(t+1,k+1) <= q(t,k+1) + step * q(t,k)
    std::vector<ProgressCell> envelope;  // q(t,k) <= binom(t,k) * step(t)^k
    double min_growth_slack = 0.0;
    double min_envelope_slack = 0.0;

    bool pass(double tol = 1e-8) const {
        return min_growth_slack >= -tol && min_envelope_slack >= -tol;
    }
};

RecurrenceReport check_recurrence(const ProgressTable& table);

/// header t,k,q,bound,slack; bound is the binomial envelope at the cell.
void write_progress_csv(const ProgressTable& table, std::ostream& os);

}  // namespace recq
