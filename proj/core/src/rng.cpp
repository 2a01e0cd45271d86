#include "freeconv/rng.hpp"

namespace freeconv {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

double CounterRng::uniform(std::uint64_t index) const {
    // Two rounds: decorrelates consecutive counters beyond what one finalizer gives.
    std::uint64_t z = splitmix64(seed_ ^ splitmix64(index));
    double u = static_cast<double>(z >> 11) * 0x1.0p-53;
    // Push the endpoints strictly inside (0,1).
    if (u <= 0.0) u = 0x1.0p-53;
    if (u >= 1.0) u = 1.0 - 0x1.0p-53;
    return u;
}

} // namespace freeconv
