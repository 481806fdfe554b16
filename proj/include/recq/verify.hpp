#pragma once

#include "recq/algorithm.hpp"
#include "recq/progress.hpp"

#include <string>
#include <vector>

namespace recq {

struct Assertion {
    std::string name;
    double value = 0.0;      // measured quantity (deviation, slack, ...)
    double tolerance = 0.0;  // the limit it is held against
    bool pass = false;
    std::string note;
};

struct SuiteReport {
    std::string suite;
    std::vector<Assertion> assertions;
    double seconds = 0.0;

    bool pass() const;
    /// Deterministic given the same assertions; timing is kept out of it.
    std::string to_json(const std::string& config_digest) const;
};

struct VerifyOptions {
    uint64_t seed = 1;
    uint32_t algorithm_count = 12;
};

/// One randomized run of the dual-model comparison: an algorithm, the
/// input family it runs against, the relation its output is judged by and
/// the progress mode with the matching distribution parameters.
struct VerificationRun {
    QueryAlgorithm algorithm;
    SamplingFamily family = SamplingFamily::uniform(1);
    OutputRelation relation;
    ProgressMode mode = ProgressMode::DisjointCollisions;
    double dist_n = 1.0;
    double dist_k = 1.0;
    std::string name;
};

std::vector<VerificationRun> generate_verification_runs(uint64_t seed, uint32_t count);

SuiteReport verify_unitarity(const VerifyOptions& opt);
SuiteReport verify_oracle_equivalence(const VerifyOptions& opt);
SuiteReport verify_indistinguishability(const VerifyOptions& opt);
SuiteReport verify_support(const VerifyOptions& opt);
SuiteReport verify_recurrences(const VerifyOptions& opt);
SuiteReport verify_bounds_domination(const VerifyOptions& opt);
SuiteReport verify_hash_exactness(const VerifyOptions& opt);

/// Dispatch by suite name; throws on unknown names.
SuiteReport run_verify_suite(const std::string& name, const VerifyOptions& opt);
std::vector<std::string> verify_suite_names();

}  // namespace recq
