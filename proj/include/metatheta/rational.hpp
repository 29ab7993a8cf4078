// Exact rationals backed by GMP, plus the error types shared by every module.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace metatheta {

using Rational = mpq_class;

/// Thrown for inputs that violate an operation's preconditions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Canonical text form: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Parses "p", "-p" or "p/q". Throws InputError on malformed text or q = 0.
Rational parse_rational(std::string_view text);

Rational make_rational(long num, long den = 1);

}  // namespace metatheta
