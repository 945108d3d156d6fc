#pragma once

#include <array>
#include <boost/multiprecision/miller_rabin.hpp>
#include <random>

#include "schurlab/rational.hpp"

namespace schurlab {

// Lagrange four-square decompositions, used to turn weighted exact rank-one
// decompositions d·ℓℓ^H (d a positive rational) into unit-weight ones: with
// d = Σ q_i² the two Gaussian scalars q1+iq2, q3+iq4 carry the weight.

namespace detail {

inline Int isqrt(const Int& n) { return boost::multiprecision::sqrt(n); }

inline bool is_square(const Int& n, Int& root) {
    if (n < 0) return false;
    root = isqrt(n);
    return root * root == n;
}

inline bool is_probable_prime(const Int& n) {
    if (n < 2) return false;
    // Deterministic witness stream; a false positive is caught downstream by
    // the exact a²+b² check, so correctness does not rest on this test.
    std::mt19937_64 gen(0x5eed5eedULL ^ static_cast<uint64_t>(n % 0x7fffffff));
    return boost::multiprecision::miller_rabin_test(n, 40, gen);
}

// p == 2 or a prime with p ≡ 1 (mod 4): returns (a,b) with a²+b² = p, or
// false if p was in fact composite.
inline bool two_square_prime(const Int& p, Int& a, Int& b) {
    if (p == 2) {
        a = 1;
        b = 1;
        return true;
    }
    Int exp = (p - 1) / 4;
    Int z = 0;
    for (Int base = 2; base < 1000; ++base) {
        Int cand = boost::multiprecision::powm(base, exp, p);
        if ((cand * cand) % p == p - 1) {
            z = cand;
            break;
        }
    }
    if (z == 0) return false;
    // Hermite-Serret descent: first remainder below sqrt(p).
    Int u = p, v = z;
    while (v * v > p) {
        Int t = u % v;
        u = v;
        v = t;
    }
    a = v;
    Int rem = p - a * a;
    Int r;
    if (!is_square(rem, r)) return false;
    b = r;
    return true;
}

// m ≡ 1,2,3,5,6 (mod 8): three squares by descending search on the largest leg.
inline std::array<Int, 3> three_square(const Int& m) {
    Int root;
    if (m == 0) return {0, 0, 0};
    if (is_square(m, root)) return {root, 0, 0};
    const long mod8 = static_cast<long>(m % 8);
    Int x = isqrt(m);
    if (mod8 == 3) {
        if (x % 2 == 0) --x;
        for (; x >= 1; x -= 2) {
            Int p = (m - x * x) / 2;  // ≡ 1 (mod 4)
            if (p == 1) return {x, 1, 1};
            Int a, b;
            if (is_probable_prime(p) && two_square_prime(p, a, b)) return {x, a + b, a - b < 0 ? b - a : a - b};
        }
    } else {
        // arrange m - x² ≡ 1 (mod 4)
        const bool x_even = (m % 2 == 1);
        if ((x % 2 == 0) != x_even) --x;
        for (; x >= 0; x -= 2) {
            Int p = m - x * x;
            if (p == 1) return {x, 1, 0};
            Int r;
            if (is_square(p, r)) return {x, r, 0};
            Int a, b;
            if (is_probable_prime(p) && two_square_prime(p, a, b)) return {x, a, b};
            if (x == 0) break;
        }
    }
    throw std::logic_error("three_square: search exhausted");
}

}  // namespace detail

inline std::array<Int, 4> four_square_int(const Int& n) {
    if (n < 0) throw std::invalid_argument("four_square_int: negative input");
    if (n == 0) return {0, 0, 0, 0};
    if (n % 4 == 0) {
        auto h = four_square_int(n / 4);
        for (auto& x : h) x *= 2;
        return h;
    }
    std::array<Int, 4> out;
    if (n % 8 == 7) {
        auto t = detail::three_square(n - 4);
        out = {2, t[0], t[1], t[2]};
    } else {
        auto t = detail::three_square(n);
        out = {t[0], t[1], t[2], 0};
    }
    if (out[0] * out[0] + out[1] * out[1] + out[2] * out[2] + out[3] * out[3] != n)
        throw std::logic_error("four_square_int: verification failed");
    return out;
}

// d >= 0 rational as a sum of four rational squares: d = u/v = (uv)/v².
inline std::array<Rational, 4> four_square_rational(const Rational& d) {
    if (d < 0) throw std::invalid_argument("four_square_rational: negative input");
    Int u = numerator(d), v = denominator(d);
    auto sq = four_square_int(u * v);
    std::array<Rational, 4> out;
    for (int i = 0; i < 4; ++i) out[i] = make_rational(sq[i], v);
    return out;
}

}  // namespace schurlab
