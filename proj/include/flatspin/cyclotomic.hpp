#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flatspin/errors.hpp"
#include "flatspin/rational.hpp"

namespace flatspin {

unsigned euler_phi(unsigned m);

// M-th cyclotomic polynomial, monic with integer coefficients, little-endian,
// size phi(M)+1. Computed once per M by dividing t^M - 1 by the lower-order
// cyclotomic polynomials; cached per thread.
const std::vector<mpz_class>& cyclotomic_poly(unsigned m);

/// Closed interval with rational (dyadic in practice) endpoints.
struct RatInterval {
    Rational lo, hi;

    Rational width() const { return hi - lo; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool contains(const RatInterval& other) const { return lo <= other.lo && other.hi <= hi; }
    bool excludes_zero() const { return lo > 0 || hi < 0; }
};

/// Certified enclosure of a complex number; always contains the true value.
struct ComplexInterval {
    RatInterval re, im;
    long precision_bits = 0;

    double re_mid() const { return (Rational((re.lo + re.hi) / 2)).get_d(); }
    double im_mid() const { return (Rational((im.lo + im.hi) / 2)).get_d(); }
};

// Element of Q(zeta_M) in the power basis 1, zeta, ..., zeta^{phi(M)-1} of
// Q[t]/(Phi_M). Coordinates are unique, so equality is coefficient-wise
// (after lifting to a common order). Immutable in spirit: all operations
// return new values.
class Cyclo {
public:
    Cyclo() : order_(1), coeffs_(1, Rational(0)) {}
    explicit Cyclo(const Rational& r, unsigned order = 1);
    Cyclo(unsigned order, std::vector<Rational> coeffs); // coeffs.size() == phi(order)

    static Cyclo zero(unsigned order) { return Cyclo(Rational(0), order); }
    static Cyclo one(unsigned order) { return Cyclo(Rational(1), order); }
    // zeta_M^j, any integer j (reduced mod M)
    static Cyclo root_of_unity(unsigned m, long j);

    unsigned order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;

    Cyclo lifted(unsigned new_order) const; // requires order() | new_order

    Cyclo operator-() const;
    friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator-(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator/(const Cyclo& a, const Cyclo& b); // DivisionByZero on b == 0
    Cyclo inverse() const;
    Cyclo conj() const;          // zeta -> zeta^{-1}
    Cyclo galois(unsigned r) const; // zeta -> zeta^r, gcd(r, order) == 1
    Cyclo pow(long e) const;

    friend bool operator==(const Cyclo& a, const Cyclo& b);
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

    // Enclosure of width <= 2^-bits under zeta_M -> exp(2*pi*i/M).
    ComplexInterval embed(long bits) const;

    // Exact sign of the real/imaginary part: algebraic zero test first, then
    // interval refinement doubling from 64 bits (hard cap 16384 -> Internal).
    int sign_real() const;
    int sign_imag() const;
    bool is_real() const;
    bool is_imaginary() const;

    // Deterministic token, e.g. "7:0,1/2,0,0,0,0"; used for canonical forms.
    std::string token() const;

    std::string to_string() const; // human-readable polynomial in z

private:
    unsigned order_;
    std::vector<Rational> coeffs_;
};

unsigned lcm_order(unsigned a, unsigned b);

// Sign of Im(conj(q-p) * (r-p)): +1 when r lies strictly to the left of the
// directed line p -> q, -1 to the right, 0 collinear.
int orientation(const Cyclo& p, const Cyclo& q, const Cyclo& r);

// +1 iff d lies strictly inside the circumcircle of the triangle (a,b,c),
// 0 if cocircular, -1 outside. (a,b,c) must not be collinear
// (DegenerateTriangle); a clockwise triple flips the sign so that the
// result agrees with the counterclockwise reading.
int incircle(const Cyclo& a, const Cyclo& b, const Cyclo& c, const Cyclo& d);

// cross(u,v) = Im(conj(u)*v), dot(u,v) = Re(conj(u)*v), as exact signs.
int cross_sign(const Cyclo& u, const Cyclo& v);
int dot_sign(const Cyclo& u, const Cyclo& v);

} // namespace flatspin
