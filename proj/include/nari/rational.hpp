#ifndef NARI_RATIONAL_HPP
#define NARI_RATIONAL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace nari {

/// Exact rational used for every support, confidence and threshold value.
using Rational = boost::rational<std::int64_t>;

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Parses "0.07", ".5", "1", or "3/10" into an exact rational.
/// Decimal input is taken digit-for-digit, so "0.07" is exactly 7/100.
Rational parse_rational(std::string_view text);

/// "9/50" style rendering; integers render without a denominator.
std::string to_fraction_string(const Rational& r);

/// Decimal rendering rounded half away from zero to at most `digits`
/// fractional digits, trailing zeros removed ("0.18", "0.857143", "1").
std::string to_decimal_string(const Rational& r, int digits = 6);

inline Rational abs(const Rational& r) { return r < 0 ? -r : r; }

} // namespace nari

#endif
