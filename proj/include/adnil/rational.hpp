#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

// Boost 1.74's mixed rational/integer equality recurses forever under C++20
// rewritten comparisons; exact non-template overloads take precedence.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, int b) { return a.denominator() == 1 && a.numerator() == b; }
inline bool operator==(const rational<std::int64_t>& a, long b) { return a.denominator() == 1 && a.numerator() == b; }
inline bool operator==(int b, const rational<std::int64_t>& a) { return a == b; }
inline bool operator==(long b, const rational<std::int64_t>& a) { return a == b; }
inline bool operator!=(const rational<std::int64_t>& a, int b) { return !(a == b); }
inline bool operator!=(const rational<std::int64_t>& a, long b) { return !(a == b); }
inline bool operator!=(int b, const rational<std::int64_t>& a) { return !(a == b); }
inline bool operator!=(long b, const rational<std::int64_t>& a) { return !(a == b); }
}  // namespace boost

namespace adnil {

using Rational = boost::rational<std::int64_t>;
using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

/// Renders as "num/den", always with an explicit denominator.
std::string to_string(const Rational& q);

/// Accepts "n" or "n/d".
Rational parse_rational(std::string_view text);

/// The integer value if the denominator is 1.
std::optional<std::int64_t> as_integer(const Rational& q);

/// Exact inverse by Gauss-Jordan elimination; throws on a singular matrix.
RationalMatrix invert(const RationalMatrix& m);

Rational dot(const RationalVector& a, const RationalVector& b);

}  // namespace adnil
