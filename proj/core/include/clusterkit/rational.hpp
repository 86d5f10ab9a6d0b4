#pragma once

#include <gmpxx.h>

#include <string>

namespace clusterkit {

/* Exact arbitrary-precision rational, canonical (reduced, positive
   denominator) after every operation. */
using Rational = mpq_class;

/* num/den from decimal strings, canonicalized. Throws divide_by_zero_error
   on zero denominator and std::invalid_argument on malformed digits. */
Rational rational_from_strings(const std::string& num, const std::string& den);

/* Parses "n" or "n/d". */
Rational rational_from_string(const std::string& text);

/* base^exp with integer exp of either sign; 0^negative raises
   zero_to_negative_power_error. */
Rational rational_pow(const Rational& base, long exp);

std::string rational_to_string(const Rational& value);

std::string numerator_string(const Rational& value);
std::string denominator_string(const Rational& value);

} // namespace clusterkit
