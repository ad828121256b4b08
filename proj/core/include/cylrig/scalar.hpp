#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace cylrig {

// Exact rational scalar, arbitrary precision, always canonical
// (gcd(num, den) = 1, den > 0). GMP keeps results of arithmetic canonical;
// construction from raw parts must go through rat_make.
using Rat = mpq_class;

inline Rat rat_make(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline int sign(const Rat& r) { return sgn(r); }

// Parse "p", "-p", or "p/q" (q > 0 after canonicalization). Throws
// std::invalid_argument on malformed input.
Rat rat_parse(std::string text);
std::string rat_format(const Rat& r);
double rat_to_double(const Rat& r);

// Element of the quadratic extension Q(sqrt(d)): value a + b*sqrt(d) with
// a, b rational and d a fixed square-free integer >= 2. Purely rational
// values are normalized to b = 0, d = 0, so rationals from different
// contexts mix freely; two values with distinct nonzero d never combine
// (mixed-field arithmetic throws instead of coercing).
struct Quad {
    Rat a;
    Rat b;
    long d = 0;

    Quad() : a(0), b(0), d(0) {}
    Quad(long v) : a(v, 1), b(0), d(0) {} // NOLINT: implicit by design
    Quad(Rat v) : a(std::move(v)), b(0), d(0) {} // NOLINT
    Quad(Rat a_, Rat b_, long d_);

    bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }
    bool is_rational() const { return d == 0; }

    Quad operator-() const;
    Quad& operator+=(const Quad& o);
    Quad& operator-=(const Quad& o);
    Quad& operator*=(const Quad& o);
    Quad& operator/=(const Quad& o);

    friend Quad operator+(Quad l, const Quad& r) { return l += r; }
    friend Quad operator-(Quad l, const Quad& r) { return l -= r; }
    friend Quad operator*(Quad l, const Quad& r) { return l *= r; }
    friend Quad operator/(Quad l, const Quad& r) { return l /= r; }
    friend bool operator==(const Quad& l, const Quad& r) {
        return l.a == r.a && l.b == r.b && l.d == r.d;
    }
    friend bool operator!=(const Quad& l, const Quad& r) { return !(l == r); }
};

// Sign of a + b*sqrt(d), decided exactly (compares a^2 against b^2 d when
// the two terms have opposite signs).
int sign(const Quad& q);

double quad_to_double(const Quad& q);

// Rational part of a value known to be rational; throws if b != 0.
Rat quad_to_rat(const Quad& q);

// Literal forms: "p/q" (rational) or "p/q+r/s*s" / "p/q-r/s*s" where the
// trailing symbol s stands for sqrt(d); d comes from context.
Quad quad_parse(const std::string& text, long d);
std::string quad_format(const Quad& q);

bool is_square_free(long d);

} // namespace cylrig
