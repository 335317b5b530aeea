#ifndef BIVALENCE_RATIONAL_HPP
#define BIVALENCE_RATIONAL_HPP

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace bivalence {

/// Arbitrary-precision exact rational. All truth values and probabilities
/// are carried in this type so equality checks never see rounding.
using Rational = boost::multiprecision::cpp_rational;

/// Accepts `p`, `p/q`, and base-10 decimals such as `0.25` or `-1.5e-1`
/// (converted exactly). Throws `Error{Errc::MalformedInput}` otherwise.
Rational parse_rational(std::string_view text);

/// Lowest-terms rendering: `p/q`, or plain `p` when the denominator is 1.
std::string to_string(const Rational& value);

inline Rational half() { return Rational(1, 2); }

} // namespace bivalence

#endif // BIVALENCE_RATIONAL_HPP
