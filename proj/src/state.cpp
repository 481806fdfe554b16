#include "recq/state.hpp"

#include "recq/format.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace recq {

uint32_t register_value(const BasisComponent& c, const RegisterRef& ref) {
    switch (ref.kind) {
        case RegisterRef::Kind::Query: return c.x;
        case RegisterRef::Kind::Phase: return c.p;
        case RegisterRef::Kind::Work: return c.w[ref.index];
        case RegisterRef::Kind::OraclePos: return c.f[ref.index];
    }
    throw std::invalid_argument("bad register kind");
}

void set_register_value(BasisComponent& c, const RegisterRef& ref, uint32_t value) {
    switch (ref.kind) {
        case RegisterRef::Kind::Query: c.x = value; return;
        case RegisterRef::Kind::Phase: c.p = value; return;
        case RegisterRef::Kind::Work: c.w[ref.index] = value; return;
        case RegisterRef::Kind::OraclePos: c.f[ref.index] = value; return;
    }
    throw std::invalid_argument("bad register kind");
}

QueryState QueryState::initial_recording(const RegisterLayout& layout) {
    QueryState s(layout);
    BasisComponent c;
    c.x = 0;
    c.p = 0;
    c.w = layout.initial_workspace();
    c.f.assign(layout.domain_size(), layout.bottom());
    s.set(c, 1.0);
    return s;
}

cplx QueryState::amplitude(const BasisComponent& c) const {
    auto it = amps_.find(c);
    return it == amps_.end() ? cplx{0.0} : it->second;
}

void QueryState::check_component(const BasisComponent& c) const {
    if (c.x >= layout_.domain_size() || c.p >= layout_.range_size())
        throw std::invalid_argument("component: query/phase value out of range");
    if (c.w.size() != layout_.slots().size() || c.f.size() != layout_.domain_size())
        throw std::invalid_argument("component: register count mismatch");
    for (std::size_t i = 0; i < c.w.size(); ++i)
        if (c.w[i] >= layout_.slots()[i].cardinality)
            throw std::invalid_argument("component: workspace value out of range");
    for (uint32_t v : c.f)
        if (v > layout_.bottom()) throw std::invalid_argument("component: oracle cell out of range");
}

void QueryState::set(const BasisComponent& c, cplx a) {
    check_component(c);
    if (a == 0.0)
        amps_.erase(c);
    else
        amps_[c] = a;
}

void QueryState::add(const BasisComponent& c, cplx a) {
    check_component(c);
    amps_[c] += a;
}

void QueryState::prune(double eps) {
    for (auto it = amps_.begin(); it != amps_.end();) {
        if (std::abs(it->second) < eps)
            it = amps_.erase(it);
        else
            ++it;
    }
}

void QueryState::scale(double s) {
    for (auto& [c, a] : amps_) a *= s;
}

void QueryState::dump_jsonl(std::ostream& os) const {
    for (const auto& [c, a] : amps_) {
        os << "{\"x\":" << c.x << ",\"p\":" << c.p << ",\"w\":[";
        for (std::size_t i = 0; i < c.w.size(); ++i) os << (i ? "," : "") << c.w[i];
        os << "],\"f\":[";
        for (std::size_t i = 0; i < c.f.size(); ++i) os << (i ? "," : "") << c.f[i];
        os << "],\"re\":" << format_double(a.real()) << ",\"im\":" << format_double(a.imag()) << "}\n";
    }
}

double norm(const QueryState& s) {
    double n2 = 0.0;
    for (const auto& [c, a] : s.amplitudes()) n2 += std::norm(a);
    return std::sqrt(n2);
}

cplx inner_product(const QueryState& a, const QueryState& b) {
    if (!(a.layout() == b.layout())) throw std::invalid_argument("inner product: layout mismatch");
    const auto& small = a.component_count() <= b.component_count() ? a : b;
    const auto& large = a.component_count() <= b.component_count() ? b : a;
    cplx r = 0.0;
    const bool small_is_a = &small == &a;
    for (const auto& [c, v] : small.amplitudes()) {
        cplx other = large.amplitude(c);
        if (other == 0.0) continue;
        r += small_is_a ? std::conj(v) * other : std::conj(other) * v;
    }
    return r;
}

QueryState project(const QueryState& s, const std::function<bool(const BasisComponent&)>& keep) {
    QueryState out(s.layout());
    for (const auto& [c, a] : s.amplitudes())
        if (keep(c)) out.set(c, a);
    return out;
}

void validate_target(const RegisterLayout& layout, const RegisterTarget& target) {
    if (target.empty()) throw std::invalid_argument("operator target: empty register list");
    for (std::size_t i = 0; i < target.size(); ++i) {
        layout.register_cardinality(target[i]);  // throws if out of range
        for (std::size_t j = i + 1; j < target.size(); ++j)
            if (target[i] == target[j])
                throw std::invalid_argument("operator target: duplicate register");
    }
}

QueryState apply_unitary(const QueryState& s, const RegisterTarget& target, const CMatrix& u) {
    const RegisterLayout& layout = s.layout();
    validate_target(layout, target);

    std::vector<uint32_t> cards(target.size());
    std::size_t dim = 1;
    for (std::size_t i = 0; i < target.size(); ++i) {
        cards[i] = layout.register_cardinality(target[i]);
        dim *= cards[i];
    }
    if (u.size() != dim) throw std::invalid_argument("operator: dimension mismatch with target registers");
    if (!u.is_unitary(kUnitaryTol)) throw std::invalid_argument("operator: matrix is not unitary");

    // digit decomposition of every row index, first register most significant
    std::vector<uint32_t> digits(dim * target.size());
    for (std::size_t row = 0; row < dim; ++row) {
        std::size_t rest = row;
        for (std::size_t i = target.size(); i-- > 0;) {
            digits[row * target.size() + i] = static_cast<uint32_t>(rest % cards[i]);
            rest /= cards[i];
        }
    }

    QueryState out(layout);
    for (const auto& [c, a] : s.amplitudes()) {
        std::size_t col = 0;
        for (std::size_t i = 0; i < target.size(); ++i)
            col = col * cards[i] + register_value(c, target[i]);
        BasisComponent nc = c;
        for (std::size_t row = 0; row < dim; ++row) {
            const cplx v = u(row, col);
            if (v == 0.0) continue;
            for (std::size_t i = 0; i < target.size(); ++i)
                set_register_value(nc, target[i], digits[row * target.size() + i]);
            out.add(nc, v * a);
        }
    }
    out.prune();
    return out;
}

}  // namespace recq
