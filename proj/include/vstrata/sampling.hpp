#ifndef VSTRATA_SAMPLING_HPP
#define VSTRATA_SAMPLING_HPP

#include "vstrata/rational.hpp"

#include <cstdint>
#include <random>

namespace vstrata {

// Seeded source of small random integers in [-bound, bound].
// Uses rejection on raw mt19937_64 output, so the stream is the same on every platform.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed, unsigned bound = 50);

    std::uint64_t seed() const { return seed_; }
    unsigned bound() const { return bound_; }

    // Uniform in [lo, hi].
    long long uniform(long long lo, long long hi);

    Integer next_int() { return Integer(static_cast<long>(uniform(-static_cast<long long>(bound_), bound_))); }
    Integer next_nonzero();

    // Vector of n entries in [-bound, bound], resampled until nonzero.
    QVector point(std::size_t n);
    // n entries, each nonzero.
    QVector nonzero_coefficients(std::size_t n);

private:
    std::uint64_t seed_;
    unsigned bound_;
    std::mt19937_64 engine_;
};

// How many times constructions resample a degenerate configuration before giving up.
inline constexpr int kMaxResamples = 40;

} // namespace vstrata

#endif // VSTRATA_SAMPLING_HPP
