#include "evoseq/rng.hpp"

namespace evoseq {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

std::uint64_t Rng::uniform_int(std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t range = hi - lo; // inclusive span - 1
    if (range == UINT64_MAX) {
        return next_u64();
    }
    const std::uint64_t n = range + 1;
    // Largest multiple of n that fits in 64 bits; reject above it.
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % n + 1) % n;
    std::uint64_t x;
    do {
        x = next_u64();
    } while (x > limit);
    return lo + x % n;
}

double Rng::normal(double mean, double sd) {
    // u1 in (0,1] so the log is finite.
    double u1 = 1.0 - uniform01();
    double u2 = uniform01();
    double mag = std::sqrt(-2.0 * std::log(u1));
    constexpr double two_pi = 6.283185307179586476925286766559;
    return mean + sd * mag * std::cos(two_pi * u2);
}

std::uint64_t Rng::derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
    std::uint64_t h = splitmix64(base);
    h = splitmix64(h ^ (a + 0x9e3779b97f4a7c15ULL));
    h = splitmix64(h ^ (b + 0x7f4a7c159e3779b9ULL));
    return h;
}

} // namespace evoseq
