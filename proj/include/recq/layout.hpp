#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace recq {

/// One workspace slot: values 0..cardinality-1, prepared in `initial`.
struct SlotSpec {
    uint32_t cardinality = 1;
    uint32_t initial = 0;
    bool operator==(const SlotSpec&) const = default;
};

/// Addresses one register of the joint state: the query register, the
/// phase register, a workspace slot, or the oracle cell of one position.
struct RegisterRef {
    enum class Kind : uint8_t { Query, Phase, Work, OraclePos };
    Kind kind = Kind::Query;
    uint32_t index = 0;

    static RegisterRef q() { return {Kind::Query, 0}; }
    static RegisterRef p() { return {Kind::Phase, 0}; }
    static RegisterRef w(uint32_t slot) { return {Kind::Work, slot}; }
    static RegisterRef f(uint32_t pos) { return {Kind::OraclePos, pos}; }

    bool operator==(const RegisterRef&) const = default;
};

using RegisterTarget = std::vector<RegisterRef>;

std::string to_string(const RegisterRef& ref);

/// Shape of the joint algorithm/oracle state space: a query register over
/// [M], a phase register over [N], a list of workspace slots and M oracle
/// cells over [N] plus the "unknown" sentinel. The sentinel is stored as
/// the value N.
class RegisterLayout {
public:
    RegisterLayout(uint32_t domain, uint32_t range, std::vector<SlotSpec> slots = {});

    /// Workspace for reporting `pairs` collision pairs: per pair two
    /// positions in [M] and one claimed image in [N] plus the sentinel.
    /// The image slot starts at the sentinel.
    static RegisterLayout collision_output(uint32_t domain, uint32_t range, uint32_t pairs);

    /// Workspace for reporting `positions` marked points of a binary
    /// function; the range is fixed to {0,1}.
    static RegisterLayout ksearch_output(uint32_t domain, uint32_t positions);

    uint32_t domain_size() const { return domain_; }
    uint32_t range_size() const { return range_; }
    /// Sentinel value used in oracle cells for "nothing recorded yet".
    uint32_t bottom() const { return range_; }

    const std::vector<SlotSpec>& slots() const { return slots_; }
    uint64_t workspace_dim() const { return wdim_; }
    uint64_t total_dimension() const { return total_; }

    static constexpr uint64_t kDenseLimit = uint64_t{1} << 24;
    bool dense_feasible() const { return total_ <= kDenseLimit; }

    uint32_t register_cardinality(const RegisterRef& ref) const;
    std::vector<uint32_t> initial_workspace() const;

    bool operator==(const RegisterLayout&) const = default;

private:
    uint32_t domain_ = 1;
    uint32_t range_ = 1;
    std::vector<SlotSpec> slots_;
    uint64_t wdim_ = 1;
    uint64_t total_ = 1;
};

}  // namespace recq
