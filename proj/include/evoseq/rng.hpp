#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace evoseq {

/// Seeded random stream with portable sampling.
///
/// The mt19937_64 engine output is fully specified by the standard, but the
/// standard distributions are not; campaigns must produce byte-identical
/// trajectories across toolchains, so the bounded-int, unit-uniform and
/// normal samplers are implemented here instead of via <random> adaptors.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : base_seed_(seed), engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform integer in [lo, hi], inclusive. Rejection-sampled, unbiased.
    std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi);

    /// Uniform index in [0, n). n must be positive.
    std::size_t uniform_index(std::size_t n) {
        return static_cast<std::size_t>(uniform_int(0, static_cast<std::uint64_t>(n) - 1));
    }

    /// Uniform double in [0, 1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform01() < p; }

    /// Normal(mean, sd) via Box-Muller. Two engine draws per sample.
    double normal(double mean = 0.0, double sd = 1.0);

    /// In-place Fisher-Yates shuffle.
    template <typename T> void shuffle(T& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = uniform_index(i);
            std::swap(v[i - 1], v[j]);
        }
    }

    std::uint64_t base_seed() const { return base_seed_; }

    /// Derive the seed for an independent substream, e.g. one per
    /// (iteration, slot). Stable across runs and platforms.
    static std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b);

    /// Substream owned by a proposal slot: (campaign seed, iteration, slot).
    Rng substream(std::uint64_t a, std::uint64_t b) const {
        return Rng(derive_seed(base_seed_, a, b));
    }

  private:
    std::uint64_t base_seed_;
    std::mt19937_64 engine_;
};

} // namespace evoseq
