#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace moldsched {

/// Exact rational used for every time, workload and threshold in the
/// library. Class boundaries compare with >= / < and must not be subject
/// to floating-point rounding.
using Rat = mpq_class;

Rat rat(long num, long den = 1);

/// Parses "num/den", plain integers, and decimal literals ("0.25" -> 1/4).
/// Throws std::invalid_argument on malformed input.
Rat parse_rational(std::string_view text);

/// Canonical text form: "num" when the denominator is 1, else "num/den".
std::string to_string(const Rat& value);

double to_double(const Rat& value);

} // namespace moldsched
