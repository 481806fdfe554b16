#include "recq/random.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace recq {

uint64_t mix_seed(uint64_t root, uint64_t stream) {
    uint64_t z = root + 0x9e3779b97f4a7c15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

uint64_t Rng::below(uint64_t n) {
    if (n == 0) throw std::invalid_argument("rng: empty range");
    const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t r;
    do {
        r = next();
    } while (r >= limit);
    return r % n;
}

double Rng::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    const double u1 = 1.0 - unit();  // (0, 1]
    const double u2 = unit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
}

std::vector<uint32_t> Rng::sample_distinct(uint32_t n, uint32_t count) {
    if (count > n) throw std::invalid_argument("rng: cannot sample more values than the range holds");
    // Floyd's algorithm
    std::vector<uint32_t> out;
    std::vector<bool> in(n, false);
    for (uint32_t j = n - count; j < n; ++j) {
        const uint32_t t = static_cast<uint32_t>(below(j + 1));
        if (in[t]) {
            in[j] = true;
            out.push_back(j);
        } else {
            in[t] = true;
            out.push_back(t);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

CMatrix random_unitary(Rng& rng, uint32_t n) {
    CMatrix m(n);
    for (uint32_t r = 0; r < n; ++r)
        for (uint32_t c = 0; c < n; ++c) m(r, c) = cplx{rng.gaussian(), rng.gaussian()};
    // Gram-Schmidt on columns, repeated once for numerical headroom
    for (int pass = 0; pass < 2; ++pass) {
        for (uint32_t c = 0; c < n; ++c) {
            for (uint32_t prev = 0; prev < c; ++prev) {
                cplx dot = 0.0;
                for (uint32_t r = 0; r < n; ++r) dot += std::conj(m(r, prev)) * m(r, c);
                for (uint32_t r = 0; r < n; ++r) m(r, c) -= dot * m(r, prev);
            }
            double nrm = 0.0;
            for (uint32_t r = 0; r < n; ++r) nrm += std::norm(m(r, c));
            nrm = std::sqrt(nrm);
            if (nrm < 1e-8) return random_unitary(rng, n);  // degenerate draw, retry
            for (uint32_t r = 0; r < n; ++r) m(r, c) /= nrm;
        }
    }
    return m;
}

CMatrix random_permutation_gate(Rng& rng, uint32_t n) {
    std::vector<uint32_t> perm(n);
    for (uint32_t i = 0; i < n; ++i) perm[i] = i;
    rng.shuffle(perm);
    return permutation_matrix(perm);
}

std::vector<uint32_t> random_function(Rng& rng, uint32_t domain, uint32_t range) {
    std::vector<uint32_t> f(domain);
    for (auto& v : f) v = static_cast<uint32_t>(rng.below(range));
    return f;
}

QueryState random_sparse_state(Rng& rng, const RegisterLayout& layout, uint32_t components) {
    QueryState s(layout);
    const auto& slots = layout.slots();
    uint32_t placed = 0;
    uint32_t guard = 0;
    while (placed < components && guard < 100 * components + 100) {
        ++guard;
        BasisComponent c;
        c.x = static_cast<uint32_t>(rng.below(layout.domain_size()));
        c.p = static_cast<uint32_t>(rng.below(layout.range_size()));
        c.w.resize(slots.size());
        for (std::size_t j = 0; j < slots.size(); ++j)
            c.w[j] = static_cast<uint32_t>(rng.below(slots[j].cardinality));
        c.f.resize(layout.domain_size());
        for (auto& v : c.f) v = static_cast<uint32_t>(rng.below(layout.bottom() + 1));
        if (s.amplitude(c) != 0.0) continue;
        s.set(c, cplx{rng.gaussian(), rng.gaussian()});
        ++placed;
    }
    const double n = norm(s);
    if (n == 0.0) throw std::runtime_error("random state: all draws degenerate");
    s.scale(1.0 / n);
    return s;
}

QueryAlgorithm random_algorithm(Rng& rng, const RegisterLayout& layout, uint32_t queries,
                                uint32_t dense_cap) {
    QueryAlgorithm alg{layout, queries, {}};
    std::vector<RegisterRef> pool{RegisterRef::q(), RegisterRef::p()};
    for (uint32_t j = 0; j < layout.slots().size(); ++j) pool.push_back(RegisterRef::w(j));

    uint32_t dense_used = 0;
    auto add_gates = [&]() {
        const uint32_t count = 1 + static_cast<uint32_t>(rng.below(2));
        for (uint32_t g = 0; g < count; ++g) {
            const RegisterRef ref = pool[rng.below(pool.size())];
            const uint32_t card = layout.register_cardinality(ref);
            const bool haar = dense_used < dense_cap && card <= 4 && rng.below(10) < 4;
            if (haar) {
                ++dense_used;
                alg.steps.push_back(AlgorithmStep::unitary({ref}, random_unitary(rng, card)));
            } else {
                alg.steps.push_back(AlgorithmStep::unitary({ref}, random_permutation_gate(rng, card)));
            }
        }
    };

    for (uint32_t t = 0; t < queries; ++t) {
        add_gates();
        alg.steps.push_back(AlgorithmStep::query());
    }
    add_gates();
    if (!layout.slots().empty()) {
        const uint32_t dst = layout.slots()[0].cardinality;
        alg.steps.push_back(AlgorithmStep::unitary({RegisterRef::q(), RegisterRef::w(0)},
                                                   pair_add_gate(layout.domain_size(), dst, 0)));
        alg.steps.push_back(AlgorithmStep::output_mark());
    }
    return alg;
}

}  // namespace recq
