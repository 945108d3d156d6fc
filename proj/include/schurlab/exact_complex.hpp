#pragma once

#include <complex>
#include <ostream>

#include "schurlab/rational.hpp"

namespace schurlab {

// Gaussian rational: the exact scalar for all symbolic form algebra.
// Both components are kept in lowest terms with positive denominator
// (boost's cpp_rational canonicalizes on every operation).
struct ExactComplex {
    Rational re;
    Rational im;

    ExactComplex() = default;
    ExactComplex(Rational r) : re(std::move(r)) {}
    ExactComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    ExactComplex(long r) : re(r) {}
    ExactComplex(long r, long i) : re(r), im(i) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    // std::complex-style accessors; Eigen's generic complex paths use them.
    const Rational& real() const { return re; }
    const Rational& imag() const { return im; }

    ExactComplex conj() const { return ExactComplex(re, -im); }
    Rational norm_sq() const { return re * re + im * im; }
    // max(|re|, |im|): exact sup-norm used for witness normalization.
    Rational sup_norm() const {
        Rational a = abs_of(re), b = abs_of(im);
        return a > b ? a : b;
    }

    ExactComplex operator-() const { return ExactComplex(-re, -im); }

    ExactComplex& operator+=(const ExactComplex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    ExactComplex& operator-=(const ExactComplex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    ExactComplex& operator*=(const ExactComplex& o) {
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    ExactComplex& operator/=(const ExactComplex& o) {
        Rational n = o.norm_sq();
        if (n == 0) throw std::domain_error("ExactComplex: division by zero");
        Rational r = (re * o.re + im * o.im) / n;
        im = (im * o.re - re * o.im) / n;
        re = std::move(r);
        return *this;
    }

    friend ExactComplex operator+(ExactComplex a, const ExactComplex& b) { return a += b; }
    friend ExactComplex operator-(ExactComplex a, const ExactComplex& b) { return a -= b; }
    friend ExactComplex operator*(ExactComplex a, const ExactComplex& b) { return a *= b; }
    friend ExactComplex operator/(ExactComplex a, const ExactComplex& b) { return a /= b; }

    friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const ExactComplex& a, const ExactComplex& b) { return !(a == b); }
    // Lexicographic; gives map keys and canonical pivot choices a total order.
    friend bool operator<(const ExactComplex& a, const ExactComplex& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    }

    friend std::ostream& operator<<(std::ostream& os, const ExactComplex& z) {
        return os << "(" << z.re << (z.im < 0 ? "" : "+") << z.im << "i)";
    }
};

inline ExactComplex conj(const ExactComplex& z) { return z.conj(); }
inline Rational real(const ExactComplex& z) { return z.re; }
inline Rational imag(const ExactComplex& z) { return z.im; }
inline Rational abs2(const ExactComplex& z) { return z.norm_sq(); }

inline ExactComplex ec_i() { return ExactComplex(Rational(0), Rational(1)); }

// i^m for any integer m (period 4).
inline ExactComplex i_pow(long m) {
    switch (((m % 4) + 4) % 4) {
        case 0: return ExactComplex(1);
        case 1: return ExactComplex(0, 1);
        case 2: return ExactComplex(-1);
        default: return ExactComplex(0, -1);
    }
}

inline std::complex<double> to_cd(const ExactComplex& z) {
    return {to_double(z.re), to_double(z.im)};
}

inline ExactComplex rationalize(const std::complex<double>& z, const Int& max_den = Int(1) << 32) {
    return ExactComplex(rationalize(z.real(), max_den), rationalize(z.imag(), max_den));
}

}  // namespace schurlab
