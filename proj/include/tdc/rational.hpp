#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "tdc/errors.hpp"

namespace tdc {

// Exact arithmetic everywhere: densities, potentials and charges are compared
// with strict inequalities, so floating point is never an option.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numer(const Rational& q) { return numerator(q); }
inline BigInt denom(const Rational& q) { return denominator(q); }

// cpp_rational rejects negative denominators outright; normalize the sign
// here so callers can be sloppy.
inline Rational make_rational(BigInt num, BigInt den) {
    if (den == 0) throw parse_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

inline std::string to_string(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

// Accepts "p/q" or a bare integer "p".
inline Rational parse_rational(std::string_view text) {
    auto fail = [&] { throw parse_error("bad rational literal: '" + std::string(text) + "'"); };
    if (text.empty()) fail();
    std::string num, den = "1";
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        num = std::string(text);
    } else {
        num = std::string(text.substr(0, slash));
        den = std::string(text.substr(slash + 1));
        if (num.empty() || den.empty()) fail();
    }
    auto digits_ok = [](const std::string& s) {
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    if (!digits_ok(num) || !digits_ok(den)) fail();
    return make_rational(BigInt(num), BigInt(den));
}

// Ceiling of a nonnegative rational, as a big integer.
inline BigInt ceil_rational(const Rational& q) {
    BigInt n = numerator(q), d = denominator(q);
    BigInt quo = n / d;
    if (quo * d != n && n > 0) ++quo;
    return quo;
}

}  // namespace tdc
