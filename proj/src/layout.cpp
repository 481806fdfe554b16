#include "recq/layout.hpp"

#include <limits>
#include <stdexcept>

namespace recq {

namespace {

uint64_t checked_mul(uint64_t a, uint64_t b) {
    if (a != 0 && b > std::numeric_limits<uint64_t>::max() / a / 2)
        throw std::invalid_argument("register layout: basis-space cardinality overflows");
    return a * b;
}

}  // namespace

std::string to_string(const RegisterRef& ref) {
    switch (ref.kind) {
        case RegisterRef::Kind::Query: return "Q";
        case RegisterRef::Kind::Phase: return "P";
        case RegisterRef::Kind::Work: return "W" + std::to_string(ref.index);
        case RegisterRef::Kind::OraclePos: return "F" + std::to_string(ref.index);
    }
    return "?";
}

RegisterLayout::RegisterLayout(uint32_t domain, uint32_t range, std::vector<SlotSpec> slots)
    : domain_(domain), range_(range), slots_(std::move(slots)) {
    if (domain_ < 1 || range_ < 1) throw std::invalid_argument("register layout: sizes must be positive");
    wdim_ = 1;
    for (const auto& s : slots_) {
        if (s.cardinality < 1) throw std::invalid_argument("register layout: empty slot alphabet");
        if (s.initial >= s.cardinality) throw std::invalid_argument("register layout: slot initial out of range");
        wdim_ = checked_mul(wdim_, s.cardinality);
    }
    total_ = checked_mul(checked_mul(uint64_t{domain_}, uint64_t{range_}), wdim_);
    for (uint32_t x = 0; x < domain_; ++x) total_ = checked_mul(total_, uint64_t{range_} + 1);
}

RegisterLayout RegisterLayout::collision_output(uint32_t domain, uint32_t range, uint32_t pairs) {
    std::vector<SlotSpec> slots;
    slots.reserve(3 * pairs);
    for (uint32_t i = 0; i < pairs; ++i) {
        slots.push_back({domain, 0});
        slots.push_back({domain, 0});
        slots.push_back({range + 1, range});  // claimed image, starts unset
    }
    return RegisterLayout(domain, range, std::move(slots));
}

RegisterLayout RegisterLayout::ksearch_output(uint32_t domain, uint32_t positions) {
    std::vector<SlotSpec> slots(positions, SlotSpec{domain, 0});
    return RegisterLayout(domain, 2, std::move(slots));
}

uint32_t RegisterLayout::register_cardinality(const RegisterRef& ref) const {
    switch (ref.kind) {
        case RegisterRef::Kind::Query: return domain_;
        case RegisterRef::Kind::Phase: return range_;
        case RegisterRef::Kind::Work:
            if (ref.index >= slots_.size()) throw std::invalid_argument("register layout: no such slot");
            return slots_[ref.index].cardinality;
        case RegisterRef::Kind::OraclePos:
            if (ref.index >= domain_) throw std::invalid_argument("register layout: oracle position out of range");
            return range_ + 1;
    }
    throw std::invalid_argument("register layout: bad register kind");
}

std::vector<uint32_t> RegisterLayout::initial_workspace() const {
    std::vector<uint32_t> w(slots_.size());
    for (std::size_t i = 0; i < slots_.size(); ++i) w[i] = slots_[i].initial;
    return w;
}

}  // namespace recq
