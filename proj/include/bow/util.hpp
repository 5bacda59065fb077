#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace bow {

using i64 = std::int64_t;

// Overflow-checked integer ops. Series coefficients and K-class
// multiplicities stay well inside 64 bits at desk scale; if they ever
// don't, we want a loud failure, not wraparound.
inline i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in addition");
    return r;
}

inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in multiplication");
    return r;
}

// xorshift64* generator. Used instead of <random> distributions so that
// seeded runs are bit-identical across platforms and standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : state_(seed * 0x9E3779B97F4A7C15ULL + 1) {}

    std::uint64_t next() {
        std::uint64_t x = state_;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        state_ = x;
        return x * 0x2545F4914F6CDD1DULL;
    }

    // uniform in [lo, hi], inclusive
    i64 uniform(i64 lo, i64 hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<i64>(next() % span);
    }

private:
    std::uint64_t state_;
};

inline std::string join_ints(const std::vector<i64>& v, char sep = ',') {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

}  // namespace bow
