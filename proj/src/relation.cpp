#include "recq/relation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace recq {

OutputRelation::Constraints OutputRelation::parse(const RegisterLayout& layout,
                                                  const std::vector<uint32_t>& w) const {
    Constraints out;
    const uint32_t k = target_count;
    if (kind == Kind::CollisionPairs) {
        if (w.size() < std::size_t{3} * k) return out;
        out.positions.reserve(2 * k);
        out.required.reserve(2 * k);
        for (uint32_t i = 0; i < k; ++i) {
            const uint32_t x1 = w[3 * i];
            const uint32_t x2 = w[3 * i + 1];
            const uint32_t y = w[3 * i + 2];
            if (x1 >= layout.domain_size() || x2 >= layout.domain_size()) return out;
            if (y >= layout.range_size()) return out;  // sentinel or out of range
            out.positions.push_back(x1);
            out.positions.push_back(x2);
            out.required.push_back(y);
            out.required.push_back(y);
        }
    } else {
        if (w.size() < k) return out;
        if (layout.range_size() < 2) return out;
        out.positions.reserve(k);
        out.required.reserve(k);
        for (uint32_t i = 0; i < k; ++i) {
            const uint32_t x = w[i];
            if (x >= layout.domain_size()) return out;
            out.positions.push_back(x);
            out.required.push_back(1);
        }
    }
    // all claimed positions must be distinct
    std::vector<uint32_t> sorted = out.positions;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        out.positions.clear();
        out.required.clear();
        return out;
    }
    out.well_formed = true;
    return out;
}

bool OutputRelation::satisfied_by(const RegisterLayout& layout, const BasisComponent& c) const {
    const Constraints z = parse(layout, c.w);
    if (!z.well_formed) return false;
    for (std::size_t i = 0; i < z.positions.size(); ++i)
        if (c.f[z.positions[i]] != z.required[i]) return false;
    return true;
}

double success_probability_diagonal(const QueryState& s, const OutputRelation& rel) {
    double p = 0.0;
    for (const auto& [c, a] : s.amplitudes())
        if (rel.satisfied_by(s.layout(), c)) p += std::norm(a);
    return p;
}

double success_probability_diagonal(const DenseState& s, const OutputRelation& rel) {
    double p = 0.0;
    for (uint64_t i = 0; i < s.dimension(); ++i) {
        if (s.data()[i] == 0.0) continue;
        if (rel.satisfied_by(s.layout(), s.decode(i))) p += std::norm(s.data()[i]);
    }
    return p;
}

}  // namespace recq
