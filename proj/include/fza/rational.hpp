#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fza {

// Arbitrary-precision rational; every weight, price and revenue uses it.
using Rational = mpq_class;

// Parses "p", "p/q" (optionally with a leading '-') into lowest terms.
// Throws invalid_input on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

// Canonical lowest-terms text: "p" for integers, "p/q" otherwise.
std::string to_string(Rational const& r);

double to_double(Rational const& r);

}  // namespace fza
