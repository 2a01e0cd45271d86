#pragma once

#include <cstdint>

namespace freeconv {

// Counter-based generator: draw i of a stream is a pure function of (seed, i),
// so sample sets are reproducible regardless of call order or threading.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    // (0,1); never returns exactly 0 or 1, so quantile transforms stay finite.
    double uniform(std::uint64_t index) const;

    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
};

// SplitMix64 finalizer; the core mixing primitive behind CounterRng.
std::uint64_t splitmix64(std::uint64_t x);

} // namespace freeconv
