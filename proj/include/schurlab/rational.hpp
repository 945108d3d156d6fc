#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <utility>

namespace schurlab {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// boost's two-argument constructor rejects negative denominators.
inline Rational make_rational(Int num, Int den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(std::move(num), std::move(den));
}

inline Rational make_rational(long num, long den) { return make_rational(Int(num), Int(den)); }

// Canonical "p/q" with q > 0, in lowest terms. Exact round trip with parse_rational.
inline std::string rational_to_string(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

// Accepts "p/q" or a bare integer "p".
inline Rational parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Int(s));
    return make_rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

inline double to_double(const Rational& q) { return static_cast<double>(q); }

inline int sign_of(const Rational& q) {
    if (q > 0) return 1;
    if (q < 0) return -1;
    return 0;
}

inline Rational abs_of(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// Largest denominator-bounded continued-fraction approximation of x.
// Used to lift floating-point witness candidates back into exact arithmetic.
inline Rational rationalize(double x, const Int& max_den = Int(1) << 32) {
    if (!(x == x)) throw std::invalid_argument("rationalize: NaN");
    bool neg = x < 0;
    if (neg) x = -x;
    Int p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double t = x;
    for (int iter = 0; iter < 64; ++iter) {
        double fl = std::floor(t);
        if (fl > 9.2e18) break;
        Int a(static_cast<long long>(fl));
        Int p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        double frac = t - fl;
        if (frac < 1e-15) break;
        t = 1.0 / frac;
    }
    if (q1 == 0) return Rational(p0);
    Rational r = make_rational(p1, q1);
    return neg ? Rational(-r) : r;
}

}  // namespace schurlab
