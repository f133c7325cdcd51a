#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace pellcf {

// Arbitrary-precision rational; GMP keeps it canonical (gcd 1, positive
// denominator, zero is 0/1).
using Rat = mpq_class;

// Canonical form used by the polynomial printer and by reports: "5", "-3/4".
std::string rat_str(const Rat& r);

// Accepts "a", "a/b" and the power shorthand "2^-64" used for tolerances.
std::optional<Rat> rat_parse(const std::string& text);

// 2^k, k of either sign.
Rat rat_pow2(long k);

// True iff r is the square of a rational; writes the nonnegative root.
bool rat_is_square(const Rat& r, Rat* root = nullptr);

}  // namespace pellcf
