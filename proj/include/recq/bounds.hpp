#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace recq {

/// log of binomial(n, k); -inf when k > n.
double log_binomial(uint64_t n, uint64_t k);

/// binom(t,k) * (4 sqrt(t) / sqrt(n))^k, evaluated in the log domain.
double collision_progress_bound(uint64_t t, uint64_t k, double n);

/// binom(t,k) * (4 sqrt(k_dist / n))^k.
double ksearch_progress_bound(uint64_t t, uint64_t k, double k_dist, double n);

struct BoundValue {
    double raw = 0.0;      // the proof expression, can exceed 1 at desk scale
    double clamped = 0.0;  // min(1, raw), for comparisons against probabilities
    bool range_warning = false;
};

/// Success bound 2u^2 + 2v^2 with kk = ceil(k/2):
///   u = binom(T,kk) (4 sqrt(T/n))^kk,  v = n (2k/n)^kk.
/// Warns outside 1 <= k <= n/8.
BoundValue collision_success_bound(uint64_t queries, uint32_t k, double n);

/// Success bound 2u^2 + 2v^2 with kk = ceil(k/2):
///   u = binom(T,kk) (4 sqrt(k/n))^kk,  v = 3^{k/2} (sqrt(k/n))^kk.
BoundValue ksearch_success_bound(uint64_t queries, uint32_t k, double n);

/// One tradeoff curve: named columns, one row per memory size, and the
/// constant set the curve was emitted with.
struct TradeoffCurve {
    std::string kind;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::pair<std::string, double>> constants;
};

/// Lower curve for finding k disjoint collisions: slices of
/// slice_const * s^{2/3} n^{1/3} queries, at most output_rate * s outputs
/// per slice, so at least k/(output_rate*s) slices. Also carries the
/// query-count floor floor_const * k^{2/3} n^{1/3}.
TradeoffCurve collision_lower_curve(double k, double n, const std::vector<double>& s_values,
                                    double output_rate = 3.0, double slice_const = 1.0,
                                    double floor_const = 1.0);

/// Upper curve: upper_const * k * sqrt(n/s) queries.
TradeoffCurve collision_upper_curve(double k, double n, const std::vector<double>& s_values,
                                    double upper_const = 1.0);

/// Sorting lower curve: slices of sqrt(s n)/4 queries covering 2s output
/// ranks each, so at least n/(2s) slices.
TradeoffCurve sorting_lower_curve(double n, const std::vector<double>& s_values,
                                  double ranks_per_slice = 2.0, double slice_query_factor = 0.25);

void write_curve_csv(const TradeoffCurve& curve, std::ostream& os);
std::string curve_metadata_json(const TradeoffCurve& curve,
                                const std::string& config_hash = "");

/// Three-valued instance exposing a binary function g at a chosen rank:
/// positions below `rank` (1-indexed) map to 2, the next n/2 positions
/// carry g, the tail maps to 0. Requires n even and rank <= n/2.
std::vector<uint32_t> build_sorting_instance(const std::vector<uint32_t>& g, uint32_t rank,
                                             uint32_t n);

}  // namespace recq
