#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace smp {

using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p", "-p" and "p/q" with q != 0; the result is in lowest terms.
// Decimal notation is rejected.
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

Rational abs(const Rational& value);

Integer gcd_of(const std::vector<Integer>& values);

}  // namespace smp
