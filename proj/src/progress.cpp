#include "recq/progress.hpp"

#include "recq/bounds.hpp"
#include "recq/format.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace recq {

uint32_t count_statistic(const std::vector<uint32_t>& f, uint32_t bottom, ProgressMode mode) {
    if (mode == ProgressMode::Ones) {
        uint32_t ones = 0;
        for (uint32_t v : f) ones += (v == 1) ? 1 : 0;
        return ones;
    }
    std::vector<uint32_t> mult(bottom, 0);
    for (uint32_t v : f) {
        if (v == bottom) continue;
        if (v > bottom) throw std::invalid_argument("count_statistic: cell value out of range");
        ++mult[v];
    }
    uint32_t pairs = 0;
    for (uint32_t m : mult) pairs += m / 2;
    return pairs;
}

double progress_measure(const QueryState& s, uint32_t k, ProgressMode mode) {
    const uint32_t bottom = s.layout().bottom();
    double n2 = 0.0;
    for (const auto& [c, a] : s.amplitudes())
        if (count_statistic(c.f, bottom, mode) >= k) n2 += std::norm(a);
    return std::sqrt(n2);
}

QueryState project_classified(const QueryState& s, uint32_t k, CellClass cls, uint32_t value,
                              ProgressMode mode) {
    const RegisterLayout& layout = s.layout();
    if (mode == ProgressMode::Ones && cls == CellClass::Value)
        throw std::invalid_argument("project_classified: value class is collision-mode only");
    if (mode == ProgressMode::DisjointCollisions && (cls == CellClass::One || cls == CellClass::Zero))
        throw std::invalid_argument("project_classified: one/zero classes are ones-mode only");
    if (cls == CellClass::Value && value >= layout.range_size())
        throw std::invalid_argument("project_classified: class value out of range");

    const uint32_t bottom = layout.bottom();
    return project(s, [&, k, cls, value, mode](const BasisComponent& c) {
        if (mode == ProgressMode::DisjointCollisions ? (c.p == 0) : (c.p != 1)) return false;
        if (count_statistic(c.f, bottom, mode) != k) return false;
        const uint32_t cell = c.f[c.x];
        switch (cls) {
            case CellClass::Bottom: return cell == bottom;
            case CellClass::Value: return cell == value;
            case CellClass::One: return cell == 1;
            case CellClass::Zero: return cell == 0;
        }
        return false;
    });
}

uint32_t default_k_max(const RegisterLayout& layout, uint32_t queries, ProgressMode mode) {
    const uint32_t cap =
        mode == ProgressMode::DisjointCollisions ? layout.domain_size() / 2 : layout.domain_size();
    return std::min(queries, cap);
}

ProgressTable progress_table_from_run(const std::vector<QueryState>& states, ProgressMode mode,
                                      double dist_n, double dist_k, uint32_t k_max) {
    if (states.empty()) throw std::invalid_argument("progress table: no states");
    ProgressTable table;
    table.mode = mode;
    table.queries = static_cast<uint32_t>(states.size() - 1);
    table.k_max = k_max;
    table.dist_n = dist_n;
    table.dist_k = dist_k;
    table.q.assign(std::size_t{table.queries + 1} * (k_max + 1), 0.0);
    for (uint32_t t = 0; t <= table.queries; ++t)
        for (uint32_t k = 0; k <= k_max; ++k) table.at(t, k) = progress_measure(states[t], k, mode);
    return table;
}

namespace {

double growth_step(const ProgressTable& table, uint32_t t) {
    if (table.mode == ProgressMode::DisjointCollisions)
        return 4.0 * std::sqrt(static_cast<double>(t) / table.dist_n);
    return 4.0 * std::sqrt(table.dist_k / table.dist_n);
}

double envelope_bound(const ProgressTable& table, uint32_t t, uint32_t k) {
    if (table.mode == ProgressMode::DisjointCollisions)
        return collision_progress_bound(t, k, table.dist_n);
    return ksearch_progress_bound(t, k, table.dist_k, table.dist_n);
}

}  // namespace

RecurrenceReport check_recurrence(const ProgressTable& table) {
    RecurrenceReport rep;
    rep.min_growth_slack = 0.0;
    rep.min_envelope_slack = 0.0;
    for (uint32_t t = 0; t + 1 <= table.queries; ++t) {
        for (uint32_t k = 0; k + 1 <= table.k_max; ++k) {
            ProgressCell cell;
            cell.t = t;
            cell.k = k;
            cell.lhs = table.at(t + 1, k + 1);
            cell.rhs = table.at(t, k + 1) + growth_step(table, t) * table.at(t, k);
            cell.slack = cell.rhs - cell.lhs;
            rep.min_growth_slack = std::min(rep.min_growth_slack, cell.slack);
            rep.growth.push_back(cell);
        }
    }
    for (uint32_t t = 0; t <= table.queries; ++t) {
        for (uint32_t k = 0; k <= table.k_max; ++k) {
            ProgressCell cell;
            cell.t = t;
            cell.k = k;
            cell.lhs = table.at(t, k);
            cell.rhs = envelope_bound(table, t, k);
            cell.slack = cell.rhs - cell.lhs;
            rep.min_envelope_slack = std::min(rep.min_envelope_slack, cell.slack);
            rep.envelope.push_back(cell);
        }
    }
    return rep;
}

void write_progress_csv(const ProgressTable& table, std::ostream& os) {
    os << "t,k,q,bound,slack\n";
    for (uint32_t t = 0; t <= table.queries; ++t) {
        for (uint32_t k = 0; k <= table.k_max; ++k) {
            const double q = table.at(t, k);
            const double bound = envelope_bound(table, t, k);
            os << t << ',' << k << ',' << format_double(q) << ',' << format_double(bound) << ','
               << format_double(bound - q) << '\n';
        }
    }
}

}  // namespace recq
