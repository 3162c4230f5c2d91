#pragma once

#include <cstdint>

namespace ambirir {

// Counter-based RNG: every draw is a pure function of (key, counter), so
// parallel consumers can pull independent streams without shared state and
// results do not depend on scheduling order.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t key) : key_(key) {}

    // Derive a child stream, e.g. one per ray or per placement slot.
    CounterRng substream(std::uint64_t index) const {
        return CounterRng(mix(key_ ^ 0x9e3779b97f4a7c15ULL, index));
    }

    // Stateful convenience: successive draws advance an internal counter.
    double next_double() { return uniform(counter_++); }

    // Uniform in [0, 1).
    double uniform(std::uint64_t counter) const {
        return double(mix(key_, counter) >> 11) * 0x1.0p-53;
    }

    std::uint64_t next_u64() { return mix(key_, counter_++); }

private:
    // splitmix64 finalizer over the xor-combined inputs.
    static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
        std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

} // namespace ambirir
