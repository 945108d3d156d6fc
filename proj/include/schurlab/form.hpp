#pragma once

#include <complex>
#include <map>
#include <stdexcept>
#include <utility>

#include "schurlab/exact_complex.hpp"
#include "schurlab/multi_index.hpp"

namespace schurlab {

inline bool scalar_is_zero(const ExactComplex& z) { return z.is_zero(); }
inline bool scalar_is_zero(const std::complex<double>& z) { return z == 0.0; }
inline ExactComplex scalar_conj(const ExactComplex& z) { return z.conj(); }
inline std::complex<double> scalar_conj(const std::complex<double>& z) { return std::conj(z); }

template <class Scalar>
Scalar scalar_i_pow(long m);
template <>
inline ExactComplex scalar_i_pow<ExactComplex>(long m) {
    return i_pow(m);
}
template <>
inline std::complex<double> scalar_i_pow<std::complex<double>>(long m) {
    switch (((m % 4) + 4) % 4) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

// Sparse (p,q)-form on an n-dimensional complex vector space.
//
// A coefficient c at key (I, J) stands for c * e^I ∧ ē^J with I, J strictly
// increasing; keys are kept in lexicographic order and zero coefficients are
// never stored, so structural equality is semantic equality.
template <class Scalar>
struct FormT {
    using Key = std::pair<MultiIndex, MultiIndex>;

    int n = 0;
    int p = 0;
    int q = 0;
    std::map<Key, Scalar> coeffs;

    FormT() = default;
    FormT(int n_, int p_, int q_) : n(n_), p(p_), q(q_) {
        if (n < 0 || p < 0 || q < 0) throw std::invalid_argument("form: negative degree");
    }

    static FormT zero(int n, int p = 0, int q = 0) { return FormT(n, p, q); }
    static FormT one(int n) {
        FormT f(n, 0, 0);
        f.coeffs.emplace(Key{{}, {}}, Scalar(1));
        return f;
    }

    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return p + q; }

    void add_term(const MultiIndex& I, const MultiIndex& J, const Scalar& c) {
        if (scalar_is_zero(c)) return;
        if (static_cast<int>(I.size()) != p || static_cast<int>(J.size()) != q)
            throw std::invalid_argument("form: key length does not match bidegree");
        if (!is_strictly_increasing(I) || !is_strictly_increasing(J))
            throw std::invalid_argument("form: multi-index not strictly increasing");
        if ((!I.empty() && (I.front() < 0 || I.back() >= n)) ||
            (!J.empty() && (J.front() < 0 || J.back() >= n)))
            throw std::invalid_argument("form: axis out of range");
        auto it = coeffs.find({I, J});
        if (it == coeffs.end()) {
            coeffs.emplace(Key{I, J}, c);
        } else {
            it->second += c;
            if (scalar_is_zero(it->second)) coeffs.erase(it);
        }
    }

    Scalar coeff(const MultiIndex& I, const MultiIndex& J) const {
        auto it = coeffs.find({I, J});
        return it == coeffs.end() ? Scalar(0) : it->second;
    }

    FormT operator-() const {
        FormT out(n, p, q);
        for (const auto& [k, c] : coeffs) out.coeffs.emplace(k, -c);
        return out;
    }

    FormT& operator*=(const Scalar& s) {
        if (scalar_is_zero(s)) {
            coeffs.clear();
            return *this;
        }
        for (auto& [k, c] : coeffs) c *= s;
        return *this;
    }

    friend FormT operator*(FormT f, const Scalar& s) { return f *= s; }
    friend FormT operator*(const Scalar& s, FormT f) { return f *= s; }

    // Addition is defined for matching bidegrees; an identically zero form is
    // degree-polymorphic so that ring identities over forms stay total.
    FormT& operator+=(const FormT& o) {
        if (n != o.n) throw std::invalid_argument("form: dimension mismatch");
        if (o.is_zero()) return *this;
        if (is_zero()) {
            p = o.p;
            q = o.q;
        }
        if (p != o.p || q != o.q) throw std::invalid_argument("form: bidegree mismatch in sum");
        for (const auto& [k, c] : o.coeffs) add_term(k.first, k.second, c);
        return *this;
    }
    FormT& operator-=(const FormT& o) { return *this += -o; }
    friend FormT operator+(FormT a, const FormT& b) { return a += b; }
    friend FormT operator-(FormT a, const FormT& b) { return a -= b; }

    friend bool operator==(const FormT& a, const FormT& b) {
        if (a.n != b.n) return false;
        if (a.is_zero() && b.is_zero()) return true;
        return a.p == b.p && a.q == b.q && a.coeffs == b.coeffs;
    }
    friend bool operator!=(const FormT& a, const FormT& b) { return !(a == b); }
};

using Form = FormT<ExactComplex>;
using FormD = FormT<std::complex<double>>;

// Exterior product.  Sign convention: generators anticommute pairwise; moving a
// (0,1)-generator past a (1,0)-generator contributes -1.
template <class Scalar>
FormT<Scalar> wedge(const FormT<Scalar>& f, const FormT<Scalar>& g) {
    if (f.n != g.n) throw std::invalid_argument("wedge: dimension mismatch");
    const int n = f.n;
    const int rp = std::min(f.p + g.p, n);
    const int rq = std::min(f.q + g.q, n);
    FormT<Scalar> out(n, rp, rq);
    if (f.p + g.p > n || f.q + g.q > n) return out;  // vanishes for degree reasons
    // e^{I1} ē^{J1} e^{I2} ē^{J2} -> e^{I1} e^{I2} ē^{J1} ē^{J2}
    const int cross_sign = (g.p * f.q) % 2 == 0 ? 1 : -1;
    for (const auto& [kf, cf] : f.coeffs) {
        for (const auto& [kg, cg] : g.coeffs) {
            auto mi = merge_disjoint(kf.first, kg.first);
            if (!mi) continue;
            auto mj = merge_disjoint(kf.second, kg.second);
            if (!mj) continue;
            int sign = cross_sign * mi->second * mj->second;
            Scalar c = cf * cg;
            if (sign < 0) c = -c;
            out.add_term(mi->first, mj->first, c);
        }
    }
    return out;
}

// Complex conjugation: (p,q) -> (q,p), coeff'(J,I) = (-1)^{pq} conj(coeff(I,J)).
// Involution, and a homomorphism for wedge: conj(f∧g) = conj(f)∧conj(g).
template <class Scalar>
FormT<Scalar> conjugate(const FormT<Scalar>& f) {
    FormT<Scalar> out(f.n, f.q, f.p);
    const bool flip = (f.p * f.q) % 2 != 0;
    for (const auto& [k, c] : f.coeffs) {
        Scalar v = scalar_conj(c);
        if (flip) v = -v;
        out.coeffs.emplace(typename FormT<Scalar>::Key{k.second, k.first}, std::move(v));
    }
    return out;
}

// coeff(J,I) == (-1)^{pq} conj(coeff(I,J)) for every key.
inline bool is_real_form(const Form& f) { return conjugate(f) == f; }

struct VolumeCoefficient {
    Rational tau;  // f = tau * (i e^1 ∧ ē^1) ∧ ... ∧ (i e^n ∧ ē^n)
    int sign() const { return sign_of(tau); }
};

// Top coefficient relative to the reference volume, complex in general.
inline ExactComplex volume_coefficient_complex(const Form& f) {
    if (f.p != f.n || f.q != f.n)
        throw std::invalid_argument("volume_coefficient: form is not of top bidegree");
    ExactComplex c = f.coeff(full_index(f.n), full_index(f.n));
    return c / i_pow(static_cast<long>(f.n) * f.n);
}

// The reference volume (i e^1∧ē^1)∧...∧(i e^n∧ē^n) equals i^{n²} e^{1..n}∧ē^{1..n}.
inline VolumeCoefficient volume_coefficient(const Form& f) {
    ExactComplex tau = volume_coefficient_complex(f);
    if (tau.im != 0) throw std::invalid_argument("volume_coefficient: form is not real");
    return VolumeCoefficient{tau.re};
}

inline double volume_coefficient_d(const FormD& f) {
    if (f.p != f.n || f.q != f.n)
        throw std::invalid_argument("volume_coefficient_d: form is not of top bidegree");
    std::complex<double> c = f.coeff(full_index(f.n), full_index(f.n));
    auto tau = c / scalar_i_pow<std::complex<double>>(static_cast<long>(f.n) * f.n);
    return tau.real();
}

inline FormD to_double(const Form& f) {
    FormD out(f.n, f.p, f.q);
    for (const auto& [k, c] : f.coeffs) out.coeffs.emplace(k, to_cd(c));
    return out;
}

// Sup distance over the union of keys; the metric for float identity checks.
inline double sup_distance(const FormD& a, const FormD& b) {
    double d = 0;
    for (const auto& [k, c] : a.coeffs) d = std::max(d, std::abs(c - b.coeff(k.first, k.second)));
    for (const auto& [k, c] : b.coeffs) d = std::max(d, std::abs(c - a.coeff(k.first, k.second)));
    return d;
}

inline Rational sup_norm(const Form& f) {
    Rational m(0);
    for (const auto& [k, c] : f.coeffs) {
        Rational s = c.sup_norm();
        if (s > m) m = s;
    }
    return m;
}

}  // namespace schurlab
