#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace ordmatch {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "3", "-7", "5/2" and decimal forms like "1.29" (= 129/100).
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator: " + text);
        return Rational(num, den);
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(BigInt(text));
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    if (digits.empty() || digits == "-" || digits == "+")
        throw std::invalid_argument("bad rational literal: " + text);
    BigInt num(digits);
    BigInt den = 1;
    for (size_t i = dot + 1; i < text.size(); ++i) den *= 10;
    return Rational(num, den);
}

inline std::string rational_to_string(const Rational& q) {
    if (boost::multiprecision::denominator(q) == 1)
        return boost::multiprecision::numerator(q).str();
    return boost::multiprecision::numerator(q).str() + "/" +
           boost::multiprecision::denominator(q).str();
}

inline Rational pow2(int e) {
    BigInt p = BigInt(1) << (e >= 0 ? e : -e);
    return e >= 0 ? Rational(p) : Rational(1, p);
}

}  // namespace ordmatch
