#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace coulomb {

using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical "p/q" text ("3" for integers, "-1/2" otherwise).
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "p", "-p" or "p/q"; throws ValidationError on garbage or q = 0.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace coulomb
