#pragma once

#include <cstdint>

#include "curvkit/linalg.hpp"

namespace curvkit {

/// SplitMix64 substream generator. Each sample of a sweep gets its own
/// stream, seeded by mixing (seed, sample_index), so results do not depend on
/// evaluation order or thread count. Uniform doubles come straight from the
/// high bits; no platform-defined distributions are involved.
class SampleRng {
public:
    SampleRng(std::uint64_t seed, std::uint64_t sample_index);

    std::uint64_t next_u64();

    /// Uniform in [0, 1).
    double uniform01();
    /// Uniform in [lo, hi).
    double uniform(double lo, double hi);
    /// Uniform integer in [0, bound).
    std::uint64_t uniform_index(std::uint64_t bound);

    /// Standard normal deviate (Box-Muller from raw bits).
    double gaussian();

    /// Uniform direction on the unit sphere of R^dim (Euclidean norm 1).
    Vec unit_vector(int dim);

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace curvkit
