#pragma once

#include <optional>
#include <string>

#include "ruin/rational.hpp"

namespace ruin {

/// floor(sqrt(n)); n must be non-negative.
BigInt isqrt(const BigInt& n);

/// The exact rational square root, when one exists.
std::optional<BigRational> exact_sqrt(const BigRational& value);

/// Renders a positive rational to `sig_digits` significant digits,
/// rounding half away from zero. Trailing zeros are kept, so the digit
/// count is exact: render_decimal(309/35, 20) = "8.8285714285714285714".
std::string render_decimal(const BigRational& value, int sig_digits);

/// Renders sqrt(square) to `sig_digits` significant digits. A perfect
/// square takes the exact long-division path; otherwise the digits come
/// from an integer square root carrying five guard digits, rounded half
/// away from zero.
std::string render_sqrt_decimal(const BigRational& square, int sig_digits);

/// render_decimal with trailing fractional zeros trimmed (at least one
/// fractional digit kept): 1 -> "1.0". Used for simulation statistics.
std::string render_decimal_trimmed(const BigRational& value, int sig_digits);

}  // namespace ruin
