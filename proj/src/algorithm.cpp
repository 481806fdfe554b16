#include "recq/algorithm.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace recq {

uint32_t QueryAlgorithm::count_queries() const {
    uint32_t n = 0;
    for (const auto& s : steps) n += (s.op == AlgorithmStep::Op::Query) ? 1 : 0;
    return n;
}

void QueryAlgorithm::validate() const {
    if (count_queries() != declared_queries)
        throw std::invalid_argument("algorithm: declared query count does not match the steps");
    for (const auto& s : steps) {
        if (s.op != AlgorithmStep::Op::Unitary) continue;
        validate_target(layout, s.target);
        for (const auto& ref : s.target)
            if (ref.kind == RegisterRef::Kind::OraclePos)
                throw std::invalid_argument("algorithm: unitaries may not touch the oracle cells");
        std::size_t dim = 1;
        for (const auto& ref : s.target) dim *= layout.register_cardinality(ref);
        if (s.matrix.size() != dim)
            throw std::invalid_argument("algorithm: step matrix dimension mismatch");
        if (!s.matrix.is_unitary(kUnitaryTol))
            throw std::invalid_argument("algorithm: step matrix is not unitary");
    }
}

namespace {

nlohmann::json matrix_to_json(const CMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.size(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < m.size(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
        rows.push_back(std::move(row));
    }
    return rows;
}

CMatrix matrix_from_json(const nlohmann::json& rows) {
    CMatrix m(rows.size());
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < m.size(); ++c) {
            const auto& e = rows.at(r).at(c);
            m(r, c) = cplx{e.at(0).get<double>(), e.at(1).get<double>()};
        }
    return m;
}

std::string target_to_string(const RegisterRef& ref) { return to_string(ref); }

RegisterRef target_from_string(const std::string& s) {
    if (s == "Q") return RegisterRef::q();
    if (s == "P") return RegisterRef::p();
    if (s.size() >= 2 && s[0] == 'W') return RegisterRef::w(std::stoul(s.substr(1)));
    if (s.size() >= 2 && s[0] == 'F') return RegisterRef::f(std::stoul(s.substr(1)));
    throw std::invalid_argument("algorithm: bad register name '" + s + "'");
}

}  // namespace

std::string QueryAlgorithm::to_json() const {
    nlohmann::json j;
    j["layout"]["M"] = layout.domain_size();
    j["layout"]["N"] = layout.range_size();
    nlohmann::json slots = nlohmann::json::array();
    for (const auto& s : layout.slots()) slots.push_back({{"card", s.cardinality}, {"init", s.initial}});
    j["layout"]["slots"] = std::move(slots);
    j["declared_queries"] = declared_queries;
    nlohmann::json steps_json = nlohmann::json::array();
    for (const auto& s : steps) {
        nlohmann::json step;
        switch (s.op) {
            case AlgorithmStep::Op::Query: step["op"] = "query"; break;
            case AlgorithmStep::Op::OutputMark: step["op"] = "output_mark"; break;
            case AlgorithmStep::Op::Unitary: {
                step["op"] = "unitary";
                nlohmann::json t = nlohmann::json::array();
                for (const auto& ref : s.target) t.push_back(target_to_string(ref));
                step["target"] = std::move(t);
                step["matrix"] = matrix_to_json(s.matrix);
                break;
            }
        }
        steps_json.push_back(std::move(step));
    }
    j["steps"] = std::move(steps_json);
    return j.dump();
}

QueryAlgorithm QueryAlgorithm::from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    std::vector<SlotSpec> slots;
    for (const auto& s : j.at("layout").at("slots"))
        slots.push_back({s.at("card").get<uint32_t>(), s.at("init").get<uint32_t>()});
    QueryAlgorithm alg{RegisterLayout(j.at("layout").at("M").get<uint32_t>(),
                                      j.at("layout").at("N").get<uint32_t>(), std::move(slots)),
                       j.at("declared_queries").get<uint32_t>(),
                       {}};
    for (const auto& step : j.at("steps")) {
        const std::string op = step.at("op").get<std::string>();
        if (op == "query") {
            alg.steps.push_back(AlgorithmStep::query());
        } else if (op == "output_mark") {
            alg.steps.push_back(AlgorithmStep::output_mark());
        } else if (op == "unitary") {
            RegisterTarget target;
            for (const auto& t : step.at("target")) target.push_back(target_from_string(t.get<std::string>()));
            alg.steps.push_back(AlgorithmStep::unitary(std::move(target), matrix_from_json(step.at("matrix"))));
        } else {
            throw std::invalid_argument("algorithm: unknown step op '" + op + "'");
        }
    }
    alg.validate();
    return alg;
}

DenseState run_standard(const QueryAlgorithm& alg, const SamplingFamily& family,
                        std::vector<DenseState>* after_queries) {
    alg.validate();
    if (family.range() != alg.layout.range_size())
        throw std::invalid_argument("run: family range does not match layout");
    DenseState psi = apply_translation(
        DenseState::from_sparse(QueryState::initial_recording(alg.layout)), family);
    for (const auto& step : alg.steps) {
        switch (step.op) {
            case AlgorithmStep::Op::Unitary: psi = apply_unitary(psi, step.target, step.matrix); break;
            case AlgorithmStep::Op::Query:
                psi = apply_standard_oracle(psi);
                if (after_queries) after_queries->push_back(psi);
                break;
            case AlgorithmStep::Op::OutputMark: break;
        }
    }
    return psi;
}

QueryState run_recording(const QueryAlgorithm& alg, const SamplingFamily& family,
                         std::vector<QueryState>* after_queries, bool closed_form) {
    alg.validate();
    if (family.range() != alg.layout.range_size())
        throw std::invalid_argument("run: family range does not match layout");
    QueryState phi = QueryState::initial_recording(alg.layout);
    if (after_queries) after_queries->push_back(phi);
    for (const auto& step : alg.steps) {
        switch (step.op) {
            case AlgorithmStep::Op::Unitary: phi = apply_unitary(phi, step.target, step.matrix); break;
            case AlgorithmStep::Op::Query:
                if (!closed_form) {
                    phi = apply_recording_oracle(phi, family);
                } else if (family.kind() == SamplingFamily::Kind::Uniform) {
                    phi = apply_recording_oracle_uniform(phi);
                } else if (family.kind() == SamplingFamily::Kind::Bernoulli) {
                    phi = apply_recording_oracle_bernoulli(phi, family);
                } else {
                    phi = apply_recording_oracle(phi, family);
                }
                if (after_queries) after_queries->push_back(phi);
                break;
            case AlgorithmStep::Op::OutputMark: break;
        }
    }
    return phi;
}

QueryState run_fixed_input(const QueryAlgorithm& alg, const std::vector<uint32_t>& input,
                           std::vector<QueryState>* after_queries) {
    alg.validate();
    if (input.size() != alg.layout.domain_size())
        throw std::invalid_argument("run: input length does not match domain");
    for (uint32_t v : input)
        if (v >= alg.layout.range_size())
            throw std::invalid_argument("run: input value out of range");
    QueryState psi(alg.layout);
    BasisComponent c;
    c.w = alg.layout.initial_workspace();
    c.f = input;
    psi.set(c, 1.0);
    if (after_queries) after_queries->push_back(psi);
    for (const auto& step : alg.steps) {
        switch (step.op) {
            case AlgorithmStep::Op::Unitary: psi = apply_unitary(psi, step.target, step.matrix); break;
            case AlgorithmStep::Op::Query:
                psi = apply_standard_oracle(psi);
                if (after_queries) after_queries->push_back(psi);
                break;
            case AlgorithmStep::Op::OutputMark: break;
        }
    }
    return psi;
}

double success_probability(const DenseState& final_state, const OutputRelation& rel) {
    return success_probability_diagonal(final_state, rel);
}

double success_probability(const QueryState& final_state, const OutputRelation& rel,
                           const SamplingFamily& family) {
    return success_projection_recording(final_state, rel, family);
}

// ---- gates -------------------------------------------------------------

CMatrix fourier_matrix(uint32_t n) {
    CMatrix m(n);
    const double inv = 1.0 / std::sqrt(static_cast<double>(n));
    for (uint32_t r = 0; r < n; ++r)
        for (uint32_t c = 0; c < n; ++c) {
            const double angle =
                2.0 * std::numbers::pi * static_cast<double>((uint64_t{r} * c) % n) / n;
            m(r, c) = cplx{std::cos(angle), std::sin(angle)} * inv;
        }
    return m;
}

CMatrix permutation_matrix(const std::vector<uint32_t>& perm) {
    CMatrix m(perm.size());
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t c = 0; c < perm.size(); ++c) {
        if (perm[c] >= perm.size() || seen[perm[c]])
            throw std::invalid_argument("permutation gate: not a permutation");
        seen[perm[c]] = true;
        m(perm[c], c) = 1.0;
    }
    return m;
}

CMatrix add_constant_gate(uint32_t card, uint32_t c) {
    std::vector<uint32_t> perm(card);
    for (uint32_t v = 0; v < card; ++v) perm[v] = (v + c) % card;
    return permutation_matrix(perm);
}

CMatrix negate_gate(uint32_t card) {
    std::vector<uint32_t> perm(card);
    for (uint32_t v = 0; v < card; ++v) perm[v] = (card - v) % card;
    return permutation_matrix(perm);
}

CMatrix grover_diffusion(uint32_t n) {
    CMatrix m(n);
    const double off = 2.0 / static_cast<double>(n);
    for (uint32_t r = 0; r < n; ++r)
        for (uint32_t c = 0; c < n; ++c) m(r, c) = off - (r == c ? 1.0 : 0.0);
    return m;
}

CMatrix pair_add_gate(uint32_t src_card, uint32_t dst_card, uint32_t shift) {
    const uint32_t dim = src_card * dst_card;
    CMatrix m(dim);
    for (uint32_t s = 0; s < src_card; ++s)
        for (uint32_t t = 0; t < dst_card; ++t) {
            const uint32_t col = s * dst_card + t;
            const uint32_t row = s * dst_card + (t + s + shift) % dst_card;
            m(row, col) = 1.0;
        }
    return m;
}

// ---- builders ----------------------------------------------------------

std::vector<AlgorithmStep> read_gadget(const RegisterLayout& layout) {
    const uint32_t n = layout.range_size();
    std::vector<AlgorithmStep> steps;
    steps.push_back(AlgorithmStep::unitary({RegisterRef::p()}, fourier_matrix(n)));
    steps.push_back(AlgorithmStep::query());
    steps.push_back(AlgorithmStep::unitary({RegisterRef::p()}, fourier_matrix(n).adjoint()));
    return steps;
}

std::vector<AlgorithmStep> read_gadget_into_slot(const RegisterLayout& layout, uint32_t slot,
                                                 uint32_t shift) {
    const uint32_t n = layout.range_size();
    const uint32_t dst = layout.slots().at(slot).cardinality;
    std::vector<AlgorithmStep> steps = read_gadget(layout);
    steps.push_back(AlgorithmStep::unitary({RegisterRef::p(), RegisterRef::w(slot)},
                                           pair_add_gate(n, dst, shift)));
    steps.push_back(AlgorithmStep::unitary({RegisterRef::p()}, negate_gate(n)));
    auto second = read_gadget(layout);
    steps.insert(steps.end(), second.begin(), second.end());
    return steps;
}

uint32_t grover_optimal_iterations(uint32_t domain, uint32_t marked) {
    if (marked == 0 || marked > domain) throw std::invalid_argument("grover: bad marked count");
    const double theta = std::asin(std::sqrt(static_cast<double>(marked) / domain));
    return static_cast<uint32_t>(std::floor(std::numbers::pi / (4.0 * theta)));
}

QueryAlgorithm build_grover_ksearch(uint32_t domain, uint32_t expected_marked, uint32_t iterations) {
    if (expected_marked == 0 || expected_marked > domain)
        throw std::invalid_argument("grover: expected marked count out of range");
    QueryAlgorithm alg{RegisterLayout::ksearch_output(domain, 1), 0, {}};
    alg.steps.push_back(AlgorithmStep::unitary({RegisterRef::q()}, fourier_matrix(domain)));
    alg.steps.push_back(AlgorithmStep::unitary({RegisterRef::p()}, add_constant_gate(2, 1)));
    for (uint32_t i = 0; i < iterations; ++i) {
        alg.steps.push_back(AlgorithmStep::query());
        alg.steps.push_back(AlgorithmStep::unitary({RegisterRef::q()}, grover_diffusion(domain)));
    }
    alg.steps.push_back(AlgorithmStep::unitary({RegisterRef::p()}, add_constant_gate(2, 1)));
    alg.steps.push_back(
        AlgorithmStep::unitary({RegisterRef::q(), RegisterRef::w(0)}, pair_add_gate(domain, domain, 0)));
    alg.steps.push_back(AlgorithmStep::output_mark());
    alg.declared_queries = iterations;
    return alg;
}

QueryAlgorithm build_collision_reader(uint32_t domain, uint32_t range,
                                      const std::vector<std::pair<uint32_t, uint32_t>>& pairs) {
    const uint32_t k = static_cast<uint32_t>(pairs.size());
    QueryAlgorithm alg{RegisterLayout::collision_output(domain, range, k), 0, {}};
    for (uint32_t i = 0; i < k; ++i) {
        const auto [a, b] = pairs[i];
        if (a >= domain || b >= domain) throw std::invalid_argument("reader: position out of range");
        alg.steps.push_back(
            AlgorithmStep::unitary({RegisterRef::w(3 * i)}, add_constant_gate(domain, a)));
        alg.steps.push_back(
            AlgorithmStep::unitary({RegisterRef::w(3 * i + 1)}, add_constant_gate(domain, b)));
        alg.steps.push_back(AlgorithmStep::unitary({RegisterRef::q()}, add_constant_gate(domain, a)));
        // claimed-image slot starts at the sentinel; shift 1 lands f(a) on itself
        auto gadget = read_gadget_into_slot(alg.layout, 3 * i + 2, 1);
        alg.steps.insert(alg.steps.end(), gadget.begin(), gadget.end());
        alg.steps.push_back(AlgorithmStep::unitary(
            {RegisterRef::q()}, add_constant_gate(domain, (domain - a % domain) % domain)));
    }
    alg.steps.push_back(AlgorithmStep::output_mark());
    alg.declared_queries = 2 * k;
    return alg;
}

QueryAlgorithm build_ksearch_guesser(uint32_t domain, uint32_t k) {
    QueryAlgorithm alg{RegisterLayout::ksearch_output(domain, k), 0, {}};
    for (uint32_t i = 0; i < k; ++i)
        alg.steps.push_back(AlgorithmStep::unitary({RegisterRef::w(i)}, add_constant_gate(domain, i)));
    alg.steps.push_back(AlgorithmStep::output_mark());
    return alg;
}

// ---- sliced experiment ---------------------------------------------------

uint32_t max_disjoint_pairs(const std::vector<std::pair<uint32_t, uint32_t>>& pairs) {
    // exact search; slice outputs are small
    std::vector<std::pair<uint32_t, uint32_t>> ps = pairs;
    std::function<uint32_t(std::size_t, std::set<uint32_t>&)> go =
        [&](std::size_t i, std::set<uint32_t>& used) -> uint32_t {
        if (i == ps.size()) return 0;
        uint32_t best = go(i + 1, used);
        const auto [a, b] = ps[i];
        if (a != b && !used.count(a) && !used.count(b)) {
            used.insert(a);
            used.insert(b);
            best = std::max(best, 1 + go(i + 1, used));
            used.erase(a);
            used.erase(b);
        }
        return best;
    };
    std::set<uint32_t> used;
    return go(0, used);
}

SlicedReport sliced_run(const QueryAlgorithm& alg, const OutputRelation& rel,
                        const std::vector<uint32_t>& input, uint32_t slice_length) {
    alg.validate();
    if (slice_length == 0) throw std::invalid_argument("sliced run: slice length must be positive");
    const uint32_t total_queries = alg.count_queries();
    const uint32_t slices = std::max<uint32_t>(1, (total_queries + slice_length - 1) / slice_length);

    SlicedReport rep;
    rep.ragged = total_queries % slice_length != 0 && total_queries > slice_length;
    rep.counts.assign(slices, 0);

    QueryState psi(alg.layout);
    BasisComponent init;
    init.w = alg.layout.initial_workspace();
    init.f = input;
    psi.set(init, 1.0);

    // first-emission slice per correct collision pair / marked position
    std::vector<std::vector<std::pair<uint32_t, uint32_t>>> new_pairs(slices);
    std::set<std::pair<uint32_t, uint32_t>> seen_pairs;
    std::set<uint32_t> seen_positions;

    uint32_t queries_done = 0;
    auto current_slice = [&]() -> uint32_t {
        return queries_done == 0 ? 0 : std::min(slices - 1, (queries_done - 1) / slice_length);
    };

    auto harvest = [&]() {
        // dominant component; canonical order breaks ties deterministically
        const BasisComponent* best = nullptr;
        double best_mag = -1.0;
        for (const auto& [c, a] : psi.amplitudes()) {
            const double m = std::norm(a);
            if (m > best_mag + 1e-15) {
                best_mag = m;
                best = &c;
            }
        }
        if (!best) return;
        const uint32_t slice = current_slice();
        if (rel.kind == OutputRelation::Kind::CollisionPairs) {
            for (uint32_t i = 0; i < rel.target_count; ++i) {
                const uint32_t a = best->w[3 * i];
                const uint32_t b = best->w[3 * i + 1];
                const uint32_t y = best->w[3 * i + 2];
                if (a == b || y >= alg.layout.range_size()) continue;
                if (input[a] != y || input[b] != y) continue;
                const auto pr = std::minmax(a, b);
                if (seen_pairs.insert({pr.first, pr.second}).second)
                    new_pairs[slice].push_back({pr.first, pr.second});
            }
        } else {
            for (uint32_t i = 0; i < rel.target_count; ++i) {
                const uint32_t pos = best->w[i];
                if (pos >= input.size() || input[pos] != 1) continue;
                if (seen_positions.insert(pos).second) rep.counts[slice] += 1;
            }
        }
    };

    for (const auto& step : alg.steps) {
        switch (step.op) {
            case AlgorithmStep::Op::Unitary: psi = apply_unitary(psi, step.target, step.matrix); break;
            case AlgorithmStep::Op::Query:
                psi = apply_standard_oracle(psi);
                ++queries_done;
                break;
            case AlgorithmStep::Op::OutputMark: harvest(); break;
        }
    }

    if (rel.kind == OutputRelation::Kind::CollisionPairs)
        for (uint32_t s = 0; s < slices; ++s) rep.counts[s] = max_disjoint_pairs(new_pairs[s]);
    return rep;
}

}  // namespace recq
