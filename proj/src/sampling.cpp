#include "recq/sampling.hpp"

#include "recq/state.hpp"

#include "json.hpp"

#include <cmath>
#include <stdexcept>

namespace recq {

namespace {

CMatrix conjugated_query_matrix(const CMatrix& s, const PhaseTable& phases, uint32_t p) {
    const std::size_t dim = s.size();
    const std::size_t sentinel = dim - 1;
    CMatrix d(dim);
    for (std::size_t v = 0; v < dim; ++v)
        d(v, v) = (v == sentinel) ? cplx{1.0} : phases.root(uint64_t{p} * v);
    return s.adjoint() * d * s;
}

}  // namespace

void SamplingFamily::finish_construction() {
    const PhaseTable phases(range_);
    rec_.resize(matrices_.size());
    for (std::size_t x = 0; x < matrices_.size(); ++x) {
        const CMatrix& s = matrices_[x];
        if (s.size() != std::size_t{range_} + 1)
            throw std::invalid_argument("sampling unitary: wrong alphabet size");
        if (!s.is_unitary(kUnitaryTol))
            throw std::invalid_argument("sampling unitary: matrix is not unitary");
        if (std::abs(s(range_, range_)) > kUnitaryTol)
            throw std::invalid_argument(
                "sampling unitary: sentinel column must lie in the value span");
        rec_[x].reserve(range_);
        for (uint32_t p = 0; p < range_; ++p) rec_[x].push_back(conjugated_query_matrix(s, phases, p));
    }
}

SamplingFamily SamplingFamily::uniform(uint32_t range) {
    if (range < 1) throw std::invalid_argument("uniform sampling unitary: range must be positive");
    SamplingFamily f;
    f.kind_ = Kind::Uniform;
    f.range_ = range;
    const double n = static_cast<double>(range);
    CMatrix s(range + 1);
    const double inv_sqrt = 1.0 / std::sqrt(n);
    for (uint32_t y = 0; y < range; ++y) {
        for (uint32_t yp = 0; yp < range; ++yp) s(y, yp) = (y == yp ? 1.0 : 0.0) - 1.0 / n;
        s(y, range) = inv_sqrt;
        s(range, y) = inv_sqrt;
    }
    s(range, range) = 0.0;
    f.matrices_.push_back(std::move(s));
    f.finish_construction();
    return f;
}

SamplingFamily SamplingFamily::bernoulli(uint32_t k, uint32_t n) {
    if (k < 1 || k > n) throw std::invalid_argument("bernoulli sampling unitary: need 1 <= k <= n");
    SamplingFamily f;
    f.kind_ = Kind::Bernoulli;
    f.range_ = 2;
    f.dist_k_ = k;
    f.dist_n_ = n;
    const double beta = std::sqrt(static_cast<double>(k) / static_cast<double>(n));
    const double alpha = std::sqrt(1.0 - static_cast<double>(k) / static_cast<double>(n));
    // alphabet order (0, 1, sentinel)
    CMatrix s(3);
    s(0, 0) = beta * beta;
    s(1, 0) = -alpha * beta;
    s(2, 0) = alpha;
    s(0, 1) = -alpha * beta;
    s(1, 1) = alpha * alpha;
    s(2, 1) = beta;
    s(0, 2) = alpha;
    s(1, 2) = beta;
    s(2, 2) = 0.0;
    f.matrices_.push_back(std::move(s));
    f.finish_construction();
    return f;
}

SamplingFamily SamplingFamily::general(uint32_t range, std::vector<CMatrix> per_position) {
    if (per_position.empty())
        throw std::invalid_argument("general sampling family: need at least one matrix");
    SamplingFamily f;
    f.kind_ = Kind::General;
    f.range_ = range;
    f.matrices_ = std::move(per_position);
    f.finish_construction();
    return f;
}

uint32_t SamplingFamily::positions() const {
    return matrices_.size() == 1 ? 0 : static_cast<uint32_t>(matrices_.size());
}

const CMatrix& SamplingFamily::matrix(uint32_t position) const {
    if (matrices_.size() == 1) return matrices_[0];
    if (position >= matrices_.size())
        throw std::invalid_argument("sampling family: position out of range");
    return matrices_[position];
}

const CMatrix& SamplingFamily::recording_matrix(uint32_t position, uint32_t p) const {
    const auto& per_p = matrices_.size() == 1 ? rec_[0] : rec_.at(position);
    if (p >= per_p.size()) throw std::invalid_argument("sampling family: phase value out of range");
    return per_p[p];
}

double SamplingFamily::alpha() const {
    if (kind_ != Kind::Bernoulli) throw std::invalid_argument("alpha: not a bernoulli family");
    return std::sqrt(1.0 - static_cast<double>(dist_k_) / static_cast<double>(dist_n_));
}

double SamplingFamily::beta() const {
    if (kind_ != Kind::Bernoulli) throw std::invalid_argument("beta: not a bernoulli family");
    return std::sqrt(static_cast<double>(dist_k_) / static_cast<double>(dist_n_));
}

uint32_t SamplingFamily::dist_k() const {
    if (kind_ != Kind::Bernoulli) throw std::invalid_argument("dist_k: not a bernoulli family");
    return dist_k_;
}

uint32_t SamplingFamily::dist_n() const {
    if (kind_ != Kind::Bernoulli) throw std::invalid_argument("dist_n: not a bernoulli family");
    return dist_n_;
}

std::string SamplingFamily::to_json() const {
    nlohmann::json j;
    j["range"] = range_;
    switch (kind_) {
        case Kind::Uniform: j["kind"] = "uniform"; break;
        case Kind::Bernoulli:
            j["kind"] = "bernoulli";
            j["k"] = dist_k_;
            j["n"] = dist_n_;
            break;
        case Kind::General: j["kind"] = "general"; break;
    }
    nlohmann::json mats = nlohmann::json::array();
    for (const auto& m : matrices_) {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t r = 0; r < m.size(); ++r) {
            nlohmann::json row = nlohmann::json::array();
            for (std::size_t c = 0; c < m.size(); ++c)
                row.push_back({m(r, c).real(), m(r, c).imag()});
            rows.push_back(std::move(row));
        }
        mats.push_back(std::move(rows));
    }
    j["matrices"] = std::move(mats);
    return j.dump();
}

SamplingFamily SamplingFamily::from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    const uint32_t range = j.at("range").get<uint32_t>();
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "uniform") return uniform(range);
    if (kind == "bernoulli") return bernoulli(j.at("k").get<uint32_t>(), j.at("n").get<uint32_t>());
    std::vector<CMatrix> mats;
    for (const auto& rows : j.at("matrices")) {
        CMatrix m(rows.size());
        for (std::size_t r = 0; r < m.size(); ++r)
            for (std::size_t c = 0; c < m.size(); ++c) {
                const auto& e = rows.at(r).at(c);
                m(r, c) = cplx{e.at(0).get<double>(), e.at(1).get<double>()};
            }
        mats.push_back(std::move(m));
    }
    return general(range, std::move(mats));
}

}  // namespace recq
