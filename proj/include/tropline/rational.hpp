#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace tropline {

/// Exact rational number, always kept in canonical reduced form.
using Rat = mpq_class;
/// Arbitrary precision integer.
using BigInt = mpz_class;

Rat make_rat(std::int64_t num, std::int64_t den = 1);

/// Serializes as "p/q"; integers are written "n/1".
std::string to_string(const Rat& r);

/// Accepts "p/q", "n" and decimals such as "-1.25". Throws ParseError.
Rat parse_rational(std::string_view text);

/// Floor and ceiling of a rational.
BigInt floor(const Rat& r);
BigInt ceil(const Rat& r);

/// Conversion used only for output (OFF export, timing reports).
double to_double(const Rat& r);

}  // namespace tropline
