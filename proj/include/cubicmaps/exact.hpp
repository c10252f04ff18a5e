// Exact arithmetic used by every counting routine: arbitrary-precision
// integers and rationals. All counts are exact; nothing here ever rounds.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace cubicmaps {

using ExactInt = boost::multiprecision::cpp_int;
using ExactRat = boost::multiprecision::cpp_rational;

// Thrown when a quantity that must be a whole count fails an exact-division
// check. Signals an implementation or transcription bug, never expected data.
struct NonIntegerCount : std::runtime_error {
    explicit NonIntegerCount(const std::string& what) : std::runtime_error(what) {}
};

// a / b asserting that b divides a exactly.
inline ExactInt exact_div(const ExactInt& a, const ExactInt& b, const char* context) {
    ExactInt q, r;
    divide_qr(a, b, q, r);
    if (r != 0)
        throw NonIntegerCount(std::string(context) + ": " + a.str() + " not divisible by " + b.str());
    return q;
}

// Converts a rational that must be integral; throws NonIntegerCount otherwise.
inline ExactInt rat_to_int(const ExactRat& r, const char* context) {
    if (denominator(r) != 1)
        throw NonIntegerCount(std::string(context) + ": " + numerator(r).str() + "/" +
                              denominator(r).str() + " is not an integer");
    return numerator(r);
}

} // namespace cubicmaps
