#include "curvkit/rng.hpp"

#include <cmath>

namespace curvkit {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

SampleRng::SampleRng(std::uint64_t seed, std::uint64_t sample_index)
    : state_(mix64(mix64(seed + kGolden) ^ (sample_index * 0xd6e8feb86659fd93ULL + 1))) {}

std::uint64_t SampleRng::next_u64() {
    state_ += kGolden;
    return mix64(state_);
}

double SampleRng::uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double SampleRng::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
}

std::uint64_t SampleRng::uniform_index(std::uint64_t bound) {
    return bound == 0 ? 0 : next_u64() % bound;
}

double SampleRng::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
}

Vec SampleRng::unit_vector(int dim) {
    Vec v(dim);
    double norm = 0.0;
    while (norm < 1e-6) {
        for (int i = 0; i < dim; ++i) v[i] = gaussian();
        norm = v.norm();
    }
    return v / norm;
}

}  // namespace curvkit
