// Exact rational scalars (GMP-backed) and conversions to floating point.
#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

namespace polycrit {

using Rat = mpq_class;
using CD = std::complex<double>;

// Nearest double to q. mpq_get_d truncates toward zero, so the raw value is
// polished by comparing q against the neighbouring doubles exactly.
double to_double(const Rat& q);

inline CD to_cd(const Rat& q) { return CD(to_double(q), 0.0); }

// Accepts "p" or "p/q" with optional sign; throws std::invalid_argument on
// malformed input or a zero denominator.
Rat rat_from_string(const std::string& s);

// Canonical "p" or "p/q" form (denominator omitted when it is 1).
std::string rat_to_string(const Rat& q);

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }
inline bool is_zero(const CD& z) { return z.real() == 0.0 && z.imag() == 0.0; }

}  // namespace polycrit
