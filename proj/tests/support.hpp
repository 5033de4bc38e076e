#ifndef GENHANKEL_TEST_SUPPORT_HPP
#define GENHANKEL_TEST_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace testing {

inline double rel_diff(double a, double b)
{
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

inline double rel_diff(std::complex<double> a, std::complex<double> b)
{
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

/// |a - b| / max(1, |a|, |b|)
inline double mixed_diff(std::complex<double> a, std::complex<double> b)
{
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1.0});
}

/// Seeded draws for property tests; a fixed seed per test keeps failures
/// reproducible.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    /// Uniform in [lo, hi] with a random sign.
    double signed_uniform(double lo, double hi) { return (integer(0, 1) ? 1.0 : -1.0) * uniform(lo, hi); }

private:
    std::mt19937_64 rng_;
};

} // namespace testing

#endif
