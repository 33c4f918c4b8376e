#pragma once

#include <cstdint>
#include <random>

namespace ecodyn {

/// Deterministic uniform generator: one stream per run.
/// The bits-to-double mapping is spelled out (rather than delegated to
/// std::uniform_real_distribution, which is implementation-defined) so that
/// identical (seed, params, scenario) gives bit-identical output everywhere.
class UniformRng {
public:
    explicit UniformRng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform draw over the half-open interval [lo, hi).
    double uniform(double lo, double hi) {
        const double u = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

private:
    std::mt19937_64 gen_;
};

} // namespace ecodyn
