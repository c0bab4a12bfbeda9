#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace mzv {

// Exact arbitrary-precision rational scalar. Always stored in lowest terms
// with positive denominator; all symbolic modules stay in this type.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// "p/q" with q > 0, also for integers ("3/1").
std::string rational_to_fraction_string(const Rational& q);

// Human form: "p" for integers, "p/q" otherwise.
std::string rational_to_text(const Rational& q);

// Accepts "p" and "p/q" with q > 0. Throws std::invalid_argument otherwise.
Rational rational_from_string(std::string_view s);

Rational factorial(int n);
Rational binomial(int n, int k);

}  // namespace mzv
