#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace recq {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// Shortest decimal that round-trips the double (std::to_chars).
std::string format_double(double v);

uint64_t fnv1a64(std::string_view data);

/// Hex digest used to name report files: hash of the effective config.
std::string config_digest(std::string_view canonical_config);

struct WilsonInterval {
    double lo = 0.0;
    double hi = 1.0;
};

/// 95% score interval by default (z = Phi^{-1}(0.975)).
WilsonInterval wilson(uint64_t successes, uint64_t total, double z = 1.959963984540054);

}  // namespace recq
