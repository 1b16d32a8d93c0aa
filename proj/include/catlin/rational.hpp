#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace catlin {

using Rational = mpq_class;

// mpq_class does not canonicalize on construction; every entry point that
// builds a rational from raw integers or text must go through these helpers.
inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "a", "-a", "a/b".
inline Rational rational_from_string(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + text);
    if (q.get_den() == 0) throw std::invalid_argument("rational with zero denominator: " + text);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Exact p-th root of a positive rational, if it is rational.
inline std::optional<Rational> rational_root(const Rational& x, unsigned long p) {
    if (p == 0) throw std::invalid_argument("zeroth root");
    if (sgn(x) <= 0) return std::nullopt;
    mpz_class num_root, den_root;
    int num_exact = mpz_root(num_root.get_mpz_t(), x.get_num().get_mpz_t(), p);
    int den_exact = mpz_root(den_root.get_mpz_t(), x.get_den().get_mpz_t(), p);
    if (!num_exact || !den_exact) return std::nullopt;
    Rational r(num_root, den_root);
    r.canonicalize();
    return r;
}

// Element of Q(i): exact complex rational coefficient.
struct GaussRational {
    Rational re;
    Rational im;

    GaussRational() : re(0), im(0) {}
    GaussRational(Rational r) : re(std::move(r)), im(0) {}
    GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussRational(long r) : re(make_rational(r)), im(0) {}

    static GaussRational unit_i() { return GaussRational(Rational(0), Rational(1)); }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }
    bool is_one() const { return re == 1 && sgn(im) == 0; }

    GaussRational conj() const { return GaussRational(re, -im); }

    // |z|^2, exact.
    Rational norm() const { return re * re + im * im; }

    GaussRational operator-() const { return GaussRational(-re, -im); }

    GaussRational& operator+=(const GaussRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussRational& operator-=(const GaussRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussRational& operator*=(const GaussRational& o) {
        Rational r = re * o.re - im * o.im;
        Rational i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }

    friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
    friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }

    friend GaussRational operator/(const GaussRational& a, const GaussRational& b) {
        if (b.is_zero()) throw std::domain_error("division by zero Gaussian rational");
        Rational n = b.norm();
        return GaussRational((a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n);
    }

    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

    // Deterministic total order, used only for canonical containers.
    friend bool operator<(const GaussRational& a, const GaussRational& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    }
};

GaussRational pow(const GaussRational& base, unsigned long e);

// Canonical text form: "0", "3/2", "i", "-2*i", "(1/2+2/3*i)".
std::string to_string(const GaussRational& c);

}  // namespace catlin
