#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "gnbd/atomic_measure.hpp"

namespace gnbd {

/// Seedable, streamable generator: (seed, stream) fully determines the draw
/// sequence, and distinct streams are independent for practical purposes.
/// All variates are derived from raw engine output only, so results are
/// bit-identical across platforms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on (0, 1] (safe under log).
    double uniform01();

    /// Exponential variate with the given rate.
    double exponential(double rate);

  private:
    std::mt19937_64 engine_;
};

/// Sampler for a nonnegative finite atomic measure (need not be normalized).
/// Inversion by cumulative table for small supports, Walker alias method
/// above 1024 atoms.
class DiscreteSampler {
  public:
    explicit DiscreteSampler(const SignedAtomicMeasure& weights);

    std::int64_t sample(Rng& rng) const;

    bool uses_alias() const { return use_alias_; }

  private:
    std::vector<std::int64_t> support_;
    std::vector<double> cdf_;          // inversion path
    std::vector<double> alias_prob_;   // alias path
    std::vector<std::uint32_t> alias_idx_;
    bool use_alias_ = false;
};

}  // namespace gnbd
