#ifndef NLK_SCALAR_HPP
#define NLK_SCALAR_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace nlk {

/// Exact rational scalar. GMP keeps every value reduced with a positive
/// denominator once arithmetic has touched it; parse_scalar canonicalizes
/// on entry so the invariant also holds for parsed values.
using Scalar = mpq_class;

/// "p/q", or "p" when q == 1. Negative values carry a leading '-'.
std::string to_string(const Scalar& s);

/// Strict parser for the interchange format. Accepts an optional sign
/// ('-' or U+2212), decimal digits, and an optional "/q" with q > 0.
/// Rejects non-reduced fractions ("2/4"), zero denominators, and
/// anything else (whitespace, '+', exponents).
Scalar parse_scalar(std::string_view text);

}  // namespace nlk

#endif  // NLK_SCALAR_HPP
