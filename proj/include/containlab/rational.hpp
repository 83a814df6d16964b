#pragma once

#include <gmpxx.h>

#include <string>

namespace containlab {

// Exact rational scalar.  Canonical form: reduced, positive denominator
// (mpq canonicalization guarantees both).
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rational& q);

// Accepts "n", "-n", "n/d" with optional sign; rejects everything else.
Rational rat_parse(const std::string& text);

}  // namespace containlab
