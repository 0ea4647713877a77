#ifndef ZAGREB_RATIONAL_HPP
#define ZAGREB_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>

namespace zagreb {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// d^e for integer e; d = 0 handled with the 0^0 = 1 convention,
// negative e on d = 0 is the caller's error.
inline Rational ipow(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    if (base == 0 && exp < 0)
        throw std::domain_error("zero base with negative exponent");
    Rational acc(1);
    Rational b = base;
    unsigned long e = exp < 0 ? static_cast<unsigned long>(-exp)
                              : static_cast<unsigned long>(exp);
    while (e) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    if (exp < 0) acc = Rational(1) / acc;
    return acc;
}

inline std::string to_fraction_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += '/';
        s += denominator(r).str();
    }
    return s;
}

inline double to_double(const Rational& r) {
    return r.template convert_to<double>();
}

// Shortest decimal that round-trips.
inline std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

// Exact value of the form a + sqrt(b), b >= 0. Plain rationals have b = 0.
// Covers every bound in the catalog (only one baseline carries a radical)
// while keeping comparisons exact.
struct ExactVal {
    Rational a;
    Rational b;

    ExactVal() : a(0), b(0) {}
    ExactVal(Rational r) : a(std::move(r)), b(0) {}  // NOLINT(google-explicit-constructor)
    ExactVal(Rational ra, Rational rb) : a(std::move(ra)), b(std::move(rb)) {
        if (b < 0) throw std::domain_error("negative radicand");
    }

    bool is_rational() const { return b == 0; }

    double approx() const {
        double x = to_double(a);
        if (b != 0) x += std::sqrt(to_double(b));
        return x;
    }

    // this <= r, exactly: a + sqrt(b) <= r  <=>  r - a >= 0 and b <= (r-a)^2.
    bool leq(const Rational& r) const {
        Rational d = r - a;
        if (d < 0) return false;
        return b <= d * d;
    }

    bool eq(const Rational& r) const {
        if (b == 0) return a == r;
        Rational d = r - a;
        return d >= 0 && b == d * d;
    }
};

inline std::string to_string(const ExactVal& v) {
    if (v.is_rational()) return to_fraction_string(v.a);
    return to_fraction_string(v.a) + "+sqrt(" + to_fraction_string(v.b) + ")";
}

}  // namespace zagreb

#endif
