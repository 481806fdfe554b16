#pragma once

#include "recq/layout.hpp"
#include "recq/matrix.hpp"

#include <functional>
#include <iosfwd>
#include <map>

namespace recq {

/// Amplitudes smaller than this are dropped after each operator
/// application. Closed-form recording operators produce exact zeros
/// polluted by rounding; pruning keeps the sparse maps honest without
/// touching anything at the 1e-9 assertion level.
inline constexpr double kPruneEps = 1e-14;

/// Operators must satisfy max|(U†U - I)| below this to be accepted.
inline constexpr double kUnitaryTol = 1e-10;

/// One computational basis state of the joint space: query value x,
/// phase value p, workspace assignment w and the oracle content f.
/// Oracle cells hold values in [N] or the sentinel N.
struct BasisComponent {
    uint32_t x = 0;
    uint32_t p = 0;
    std::vector<uint32_t> w;
    std::vector<uint32_t> f;

    // lexicographic over (x, p, w, f); this is the canonical key order
    friend auto operator<=>(const BasisComponent&, const BasisComponent&) = default;
};

uint32_t register_value(const BasisComponent& c, const RegisterRef& ref);
void set_register_value(BasisComponent& c, const RegisterRef& ref, uint32_t value);

/// Sparse superposition over basis components. Pure-value semantics:
/// every operation returns a fresh state and never mutates its input,
/// so states can move freely between threads.
class QueryState {
public:
    explicit QueryState(RegisterLayout layout) : layout_(std::move(layout)) {}

    /// |0>_Q |0>_P |w_init>_W |sentinel^M>_F with amplitude one.
    static QueryState initial_recording(const RegisterLayout& layout);

    const RegisterLayout& layout() const { return layout_; }
    const std::map<BasisComponent, cplx>& amplitudes() const { return amps_; }
    std::size_t component_count() const { return amps_.size(); }

    cplx amplitude(const BasisComponent& c) const;
    void set(const BasisComponent& c, cplx a);
    void add(const BasisComponent& c, cplx a);
    void prune(double eps = kPruneEps);
    void scale(double s);

    /// One component per line, canonical order:
    /// {"x":..,"p":..,"w":[..],"f":[..],"re":..,"im":..}
    void dump_jsonl(std::ostream& os) const;

private:
    void check_component(const BasisComponent& c) const;

    RegisterLayout layout_;
    std::map<BasisComponent, cplx> amps_;
};

double norm(const QueryState& s);
cplx inner_product(const QueryState& a, const QueryState& b);

/// Zeroes every component failing the predicate; no renormalization.
QueryState project(const QueryState& s, const std::function<bool(const BasisComponent&)>& keep);

/// Applies U on the listed registers (identity elsewhere). The first
/// target register is the most significant digit of the operator index.
QueryState apply_unitary(const QueryState& s, const RegisterTarget& target, const CMatrix& u);

void validate_target(const RegisterLayout& layout, const RegisterTarget& target);

}  // namespace recq
