#pragma once

#include <cstdint>
#include <string_view>

#include "schurlab/eigen_support.hpp"

namespace schurlab {

// splitmix64; self-contained so that streams are bit-identical across
// platforms and standard libraries.
struct RngStream {
    uint64_t state;

    explicit RngStream(uint64_t seed) : state(seed) {}

    uint64_t next_u64() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [lo, hi], rejection sampled
    long uniform_int(long lo, long hi) {
        const uint64_t range = static_cast<uint64_t>(hi - lo) + 1;
        const uint64_t limit = UINT64_MAX - UINT64_MAX % range;
        uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return lo + static_cast<long>(x % range);
    }

    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Independent named stream; mixing is order-sensitive by construction.
    RngStream substream(uint64_t label) const {
        RngStream mix(state ^ (0xa0761d6478bd642fULL * (label + 1)));
        mix.next_u64();
        return mix;
    }
    RngStream substream(std::string_view label) const {
        uint64_t h = 0xcbf29ce484222325ULL;
        for (char ch : label) {
            h ^= static_cast<unsigned char>(ch);
            h *= 0x100000001b3ULL;
        }
        return substream(h);
    }

    Rational rational(long max_num = 4, long max_den = 3) {
        return make_rational(uniform_int(-max_num, max_num), uniform_int(1, max_den));
    }
    Rational rational_nonzero(long max_num = 4, long max_den = 3) {
        while (true) {
            Rational q = rational(max_num, max_den);
            if (q != 0) return q;
        }
    }
    ExactComplex gaussian_rational(long max_num = 4, long max_den = 3) {
        Rational re = rational(max_num, max_den);
        Rational im = rational(max_num, max_den);
        return ExactComplex(std::move(re), std::move(im));
    }
};

// Exact unitary matrix from Givens-like rotations with rational parameters:
// cos = (1-t²)/(1+t²), sin = 2t/(1+t²) and unit phases (1-t²+2ti)/(1+t²).
inline MatrixXec random_exact_unitary(int r, RngStream& rng) {
    MatrixXec a = MatrixXec::Identity(r, r);
    auto unit_phase = [&]() {
        Rational t = rng.rational(3, 2);
        Rational den = 1 + t * t;
        return ExactComplex((1 - t * t) / den, (2 * t) / den);
    };
    const int steps = std::max(1, r * (r - 1));
    for (int s = 0; s < steps; ++s) {
        int i = static_cast<int>(rng.uniform_int(0, r - 1));
        int j = static_cast<int>(rng.uniform_int(0, r - 1));
        if (i == j) {
            const ExactComplex u = unit_phase();
            for (int c = 0; c < r; ++c) a(i, c) *= u;
            continue;
        }
        Rational t = rng.rational(3, 2);
        Rational den = 1 + t * t;
        const ExactComplex cos((1 - t * t) / den);
        const ExactComplex sin((2 * t) / den);
        for (int c = 0; c < r; ++c) {
            ExactComplex ri = a(i, c), rj = a(j, c);
            a(i, c) = cos * ri - sin * rj;
            a(j, c) = sin * ri + cos * rj;
        }
    }
    return a;
}

}  // namespace schurlab
