#include "mzv/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace mzv {

std::string rational_to_fraction_string(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

std::string rational_to_text(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return rational_to_fraction_string(q);
}

Rational rational_from_string(std::string_view s) {
    auto bad = [&] { throw std::invalid_argument("invalid rational '" + std::string(s) + "'"); };
    if (s.empty()) bad();
    std::size_t slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    auto check_int = [&](std::string_view t, bool allow_sign) {
        if (t.empty()) bad();
        std::size_t i = 0;
        if (allow_sign && (t[0] == '+' || t[0] == '-')) i = 1;
        if (i == t.size()) bad();
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) bad();
    };
    check_int(num, true);
    check_int(den, false);
    Integer n(std::string(num));
    Integer d(std::string(den));
    if (d <= 0) bad();
    return Rational(n, d);
}

Rational factorial(int n) {
    Rational r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

Rational binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Rational r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

}  // namespace mzv
