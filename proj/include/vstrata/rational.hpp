#ifndef VSTRATA_RATIONAL_HPP
#define VSTRATA_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace vstrata {

using Rational = mpq_class;
using Integer = mpz_class;
using QVector = std::vector<Rational>;

// Canonical serialization: "p/q" in lowest terms with q > 0, always including the denominator.
std::string to_canonical_string(const Rational& value);

// Accepts "p", "p/q" (any sign placement on p, q != 0). Result is canonicalized.
Rational parse_rational(std::string_view text);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

bool is_zero_vector(const QVector& v);

} // namespace vstrata

#endif // VSTRATA_RATIONAL_HPP
