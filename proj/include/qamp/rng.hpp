#pragma once

#include <cstdint>
#include <random>

namespace qamp {

// The one generator used anywhere this library needs randomness.
//
// std::mt19937_64 output is pinned bit-for-bit by the C++ standard, so a
// seeded run reproduces identically across platforms and compilers. Doubles
// take the top 53 bits of one draw, giving a uniform value in [0, 1).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    double next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double next_in(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

private:
    std::mt19937_64 engine_;
};

} // namespace qamp
