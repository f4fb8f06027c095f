#pragma once

#include <cstdint>
#include <random>

namespace resnet {

// Deterministic RNG with platform-independent uniform doubles (the standard
// distributions are implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // uniform in [0, 1)
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // uniform integer in [0, bound)
    std::uint64_t below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(uniform01() * static_cast<double>(bound)) % bound;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace resnet
