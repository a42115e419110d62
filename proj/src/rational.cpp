#include "nari/rational.hpp"

#include <cctype>
#include <limits>

namespace nari {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::int64_t parse_digits(std::string_view digits, std::string_view whole) {
    if (digits.empty()) throw ParseError("malformed number: '" + std::string(whole) + "'");
    std::int64_t value = 0;
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("malformed number: '" + std::string(whole) + "'");
        if (value > (std::numeric_limits<std::int64_t>::max() - 9) / 10)
            throw ParseError("number too large: '" + std::string(whole) + "'");
        value = value * 10 + (c - '0');
    }
    return value;
}

} // namespace

Rational parse_rational(std::string_view text) {
    const std::string_view s = trim(text);
    if (s.empty()) throw ParseError("empty number");

    if (const auto slash = s.find('/'); slash != std::string_view::npos) {
        const std::int64_t num = parse_digits(trim(s.substr(0, slash)), s);
        const std::int64_t den = parse_digits(trim(s.substr(slash + 1)), s);
        if (den == 0) throw ParseError("zero denominator: '" + std::string(s) + "'");
        return Rational(num, den);
    }

    const auto dot = s.find('.');
    if (dot == std::string_view::npos) return Rational(parse_digits(s, s));

    const std::string_view int_part = s.substr(0, dot);
    const std::string_view frac_part = s.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) throw ParseError("malformed number: '" + std::string(s) + "'");
    if (frac_part.size() > 18) throw ParseError("too many decimal places: '" + std::string(s) + "'");

    const std::int64_t whole = int_part.empty() ? 0 : parse_digits(int_part, s);
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    const std::int64_t frac = frac_part.empty() ? 0 : parse_digits(frac_part, s);
    return Rational(whole) + Rational(frac, scale);
}

std::string to_fraction_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string to_decimal_string(const Rational& r, int digits) {
    const bool negative = r < Rational(0);
    // Work in unsigned 128-bit to keep num * 10^digits exact.
    using u128 = unsigned __int128;
    const u128 num = static_cast<u128>(negative ? -static_cast<__int128>(r.numerator()) : r.numerator());
    const u128 den = static_cast<u128>(r.denominator());

    u128 scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    u128 scaled = (num * scale * 2 + den) / (den * 2);

    const u128 int_part = scaled / scale;
    u128 frac = scaled % scale;

    auto u128_to_string = [](u128 v) {
        if (v == 0) return std::string("0");
        std::string out;
        while (v > 0) {
            out.insert(out.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
            v /= 10;
        }
        return out;
    };

    std::string out = (negative && scaled != 0) ? "-" : "";
    out += u128_to_string(int_part);
    if (frac != 0) {
        std::string f = u128_to_string(frac);
        f.insert(f.begin(), static_cast<std::size_t>(digits) - f.size(), '0');
        while (!f.empty() && f.back() == '0') f.pop_back();
        out += "." + f;
    }
    return out;
}

} // namespace nari
