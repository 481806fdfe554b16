#include "recq/format.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace recq {

std::string format_double(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc{}) {
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        return buf;
    }
    return std::string(buf, end);
}

uint64_t fnv1a64(std::string_view data) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : data) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string config_digest(std::string_view canonical_config) {
    uint64_t h = fnv1a64(canonical_config);
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

WilsonInterval wilson(uint64_t successes, uint64_t total, double z) {
    if (total == 0) return {0.0, 1.0};
    const double n = static_cast<double>(total);
    const double p = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

}  // namespace recq
