#include "vstrata/sampling.hpp"

#include "vstrata/errors.hpp"

#include <limits>

namespace vstrata {

Sampler::Sampler(std::uint64_t seed, unsigned bound) : seed_(seed), bound_(bound), engine_(seed)
{
    if (bound == 0) throw InputError("sampling bound must be positive");
}

long long Sampler::uniform(long long lo, long long hi)
{
    if (lo > hi) throw InputError("empty sampling range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    // Largest multiple of span that fits; draws above it would bias the low residues.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return lo + static_cast<long long>(x % span);
}

Integer Sampler::next_nonzero()
{
    Integer v;
    do {
        v = next_int();
    } while (v == 0);
    return v;
}

QVector Sampler::point(std::size_t n)
{
    QVector v(n);
    do {
        for (auto& x : v) x = Rational(next_int());
    } while (is_zero_vector(v));
    return v;
}

QVector Sampler::nonzero_coefficients(std::size_t n)
{
    QVector v(n);
    for (auto& x : v) x = Rational(next_nonzero());
    return v;
}

} // namespace vstrata
