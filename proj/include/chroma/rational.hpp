#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace chroma {

/// Exact rational scalar. All geometric predicates are computed on these;
/// there is no floating-point path anywhere in the library.
using Rat = mpq_class;

inline int sign_of(const Rat& q) { return sgn(q); }

/// Parses "42", "-7", "3.25", "-0.125" or "p/q". Throws std::invalid_argument
/// on anything else (floating-point syntax like "1e-3" is rejected).
Rat parse_rational(std::string_view text);

/// Canonical text form: plain integer when the denominator is 1, exact
/// decimal when the denominator is of the form 2^a*5^b, "p/q" otherwise.
/// parse_rational(format_rational(q)) == q for all q.
std::string format_rational(const Rat& value);

/// Signed 64-bit view when the value is an integer that fits, else nullopt.
std::optional<long long> rational_to_int64(const Rat& value);

} // namespace chroma
