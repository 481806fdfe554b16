#include "recq/bounds.hpp"

#include "recq/format.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace recq {

double log_binomial(uint64_t n, uint64_t k) {
    if (k > n) return -std::numeric_limits<double>::infinity();
    if (k == 0 || k == n) return 0.0;
    return std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
           std::lgamma(static_cast<double>(n - k) + 1.0);
}

double collision_progress_bound(uint64_t t, uint64_t k, double n) {
    if (n < 1.0) throw std::invalid_argument("collision progress bound: n must be positive");
    if (k == 0) return 1.0;
    if (k > t) return 0.0;
    const double step = std::log(4.0) + 0.5 * (std::log(static_cast<double>(t)) - std::log(n));
    return std::exp(log_binomial(t, k) + static_cast<double>(k) * step);
}

double ksearch_progress_bound(uint64_t t, uint64_t k, double k_dist, double n) {
    if (n < 1.0 || k_dist < 1.0) throw std::invalid_argument("search progress bound: bad parameters");
    if (k == 0) return 1.0;
    if (k > t) return 0.0;
    const double step = std::log(4.0) + 0.5 * (std::log(k_dist) - std::log(n));
    return std::exp(log_binomial(t, k) + static_cast<double>(k) * step);
}

namespace {

BoundValue pack(double raw, bool warn) {
    BoundValue b;
    b.raw = raw;
    b.clamped = std::min(1.0, raw);
    b.range_warning = warn;
    return b;
}

}  // namespace

BoundValue collision_success_bound(uint64_t queries, uint32_t k, double n) {
    if (k < 1 || n < 1.0) throw std::invalid_argument("collision success bound: bad parameters");
    const bool warn = !(8.0 * static_cast<double>(k) <= n);
    const uint64_t kk = (k + 1) / 2;
    double u = 0.0;
    if (kk <= queries && queries > 0) {
        const double step =
            std::log(4.0) + 0.5 * (std::log(static_cast<double>(queries)) - std::log(n));
        u = std::exp(log_binomial(queries, kk) + static_cast<double>(kk) * step);
    }
    const double v = std::exp(std::log(n) + static_cast<double>(kk) * std::log(2.0 * k / n));
    return pack(2.0 * u * u + 2.0 * v * v, warn);
}

BoundValue ksearch_success_bound(uint64_t queries, uint32_t k, double n) {
    if (k < 1 || n < 1.0) throw std::invalid_argument("search success bound: bad parameters");
    const bool warn = !(8.0 * static_cast<double>(k) <= n);
    const uint64_t kk = (k + 1) / 2;
    double u = 0.0;
    if (kk <= queries && queries > 0) {
        const double step = std::log(4.0) + 0.5 * (std::log(static_cast<double>(k)) - std::log(n));
        u = std::exp(log_binomial(queries, kk) + static_cast<double>(kk) * step);
    }
    const double v = std::exp(0.5 * k * std::log(3.0) +
                              0.5 * static_cast<double>(kk) * (std::log(static_cast<double>(k)) - std::log(n)));
    return pack(2.0 * u * u + 2.0 * v * v, warn);
}

TradeoffCurve collision_lower_curve(double k, double n, const std::vector<double>& s_values,
                                    double output_rate, double slice_const, double floor_const) {
    TradeoffCurve c;
    c.kind = "collision-lower";
    c.columns = {"K", "N", "S", "T_tradeoff", "T_floor"};
    c.constants = {{"output_rate", output_rate}, {"slice_const", slice_const}, {"floor_const", floor_const}};
    for (double s : s_values) {
        const double slices = k / (output_rate * s);
        const double per_slice = slice_const * std::pow(s, 2.0 / 3.0) * std::cbrt(n);
        const double t_floor = floor_const * std::pow(k, 2.0 / 3.0) * std::cbrt(n);
        c.rows.push_back({k, n, s, slices * per_slice, t_floor});
    }
    return c;
}

TradeoffCurve collision_upper_curve(double k, double n, const std::vector<double>& s_values,
                                    double upper_const) {
    TradeoffCurve c;
    c.kind = "collision-upper";
    c.columns = {"K", "N", "S", "T_upper"};
    c.constants = {{"upper_const", upper_const}};
    for (double s : s_values) c.rows.push_back({k, n, s, upper_const * k * std::sqrt(n / s)});
    return c;
}

TradeoffCurve sorting_lower_curve(double n, const std::vector<double>& s_values,
                                  double ranks_per_slice, double slice_query_factor) {
    TradeoffCurve c;
    c.kind = "sorting-lower";
    c.columns = {"N", "S", "T_lower"};
    c.constants = {{"ranks_per_slice", ranks_per_slice}, {"slice_query_factor", slice_query_factor}};
    for (double s : s_values) {
        const double slices = n / (ranks_per_slice * s);
        const double per_slice = slice_query_factor * std::sqrt(s * n);
        c.rows.push_back({n, s, slices * per_slice});
    }
    return c;
}

void write_curve_csv(const TradeoffCurve& curve, std::ostream& os) {
    for (std::size_t i = 0; i < curve.columns.size(); ++i)
        os << (i ? "," : "") << curve.columns[i];
    os << '\n';
    for (const auto& row : curve.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_double(row[i]);
        os << '\n';
    }
}

std::string curve_metadata_json(const TradeoffCurve& curve, const std::string& config_hash) {
    std::string out = "{\"kind\":\"" + curve.kind + "\",\"constants\":{";
    for (std::size_t i = 0; i < curve.constants.size(); ++i) {
        if (i) out += ",";
        out += "\"" + curve.constants[i].first + "\":" + format_double(curve.constants[i].second);
    }
    out += "}";
    if (!config_hash.empty()) out += ",\"config_hash\":\"" + config_hash + "\"";
    out += ",\"version\":\"" + std::string(kToolVersion) + "\"}";
    return out;
}

std::vector<uint32_t> build_sorting_instance(const std::vector<uint32_t>& g, uint32_t rank,
                                             uint32_t n) {
    if (n % 2 != 0) throw std::invalid_argument("sorting instance: n must be even");
    if (rank > n / 2) throw std::invalid_argument("sorting instance: rank must be at most n/2");
    if (g.size() != n / 2) throw std::invalid_argument("sorting instance: g must cover n/2 positions");
    for (uint32_t v : g)
        if (v > 1) throw std::invalid_argument("sorting instance: g must be binary");

    // positions are 1-indexed: x < rank -> 2, next n/2 -> g, tail -> 0
    std::vector<uint32_t> f(n, 0);
    for (uint32_t i = 0; i < n; ++i) {
        const uint32_t x = i + 1;
        if (x < rank)
            f[i] = 2;
        else if (x < rank + n / 2)
            f[i] = g[x - rank];
        else
            f[i] = 0;
    }
    return f;
}

}  // namespace recq
