#pragma once

#include <gmpxx.h>
#include <string>
#include <vector>

namespace witt {

// Exact arbitrary-precision rational, always stored in lowest terms with a
// positive denominator (GMP canonical form).
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Renders as "p" or "p/q"; no decimal forms anywhere in the artifact.
inline std::string rat_str(const Rational& q) {
    return q.get_str();
}

inline Rational rat_parse(const std::string& s) {
    Rational q(s);
    q.canonicalize();
    return q;
}

using RatVector = std::vector<Rational>;

} // namespace witt
