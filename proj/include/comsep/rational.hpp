#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "comsep/sign_vector.hpp"

namespace comsep {

/// Exact rational in lowest terms with positive denominator.
using Rational = mpq_class;

/// Accepts "p" or "p/q" with optional leading '-'; rejects decimals,
/// exponents, zero denominators and surrounding whitespace.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

Sign sign_of(const Rational& q);

using RationalVector = std::vector<Rational>;

Rational dot(const RationalVector& a, const RationalVector& b);

}  // namespace comsep
