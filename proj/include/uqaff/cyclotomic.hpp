#pragma once

/**
 * @file cyclotomic.hpp
 * @brief Exact arithmetic in cyclotomic fields Q(w_n).
 *
 * An element stores its order n and rational coordinates in the power basis
 * 1, w, ..., w^(phi(n)-1), reduced modulo the n-th cyclotomic polynomial.
 * Operands of different orders are lifted to the lcm of their orders.
 * Rational values are always stored with order 1.
 */

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace uqaff {

/// Integer coefficients of the n-th cyclotomic polynomial, low degree first.
const std::vector<long long>& cyclotomic_polynomial(int n);

/// Euler totient.
int euler_phi(int n);

class Cyclotomic {
public:
    Cyclotomic() : order_(1), c_(1) {}
    Cyclotomic(long v) : order_(1), c_{mpq_class(v)} {}  // NOLINT
    Cyclotomic(const mpq_class& v) : order_(1), c_{v} {}  // NOLINT

    /// w_n^k, with w_n = exp(2 pi i / n).
    static Cyclotomic root(int n, long k = 1);

    int order() const { return order_; }
    const std::vector<mpq_class>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const { return order_ == 1; }
    /// Only valid when is_rational().
    const mpq_class& rational() const { return c_[0]; }

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator*=(const mpq_class& r);

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }

    /// Multiplicative inverse; throws std::domain_error on zero.
    Cyclotomic inv() const;
    Cyclotomic pow(long e) const;

    /// Re-express in Q(w_m); requires order() | m.
    Cyclotomic lifted(int m) const;

    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    std::complex<double> to_complex() const;

    /// LCM of the denominators of all coordinates.
    mpz_class denominator_lcm() const;
    /// GCD of the numerators of all coordinates (0 for zero).
    mpz_class numerator_gcd() const;

    /// Text form, e.g. "3/2", "E(4)", "(1 + 2*E(3))". See scalar.hpp for the grammar.
    std::string to_string() const;
    /// True when to_string() needs parentheses inside a product.
    bool is_compound() const;

private:
    Cyclotomic(int order, std::vector<mpq_class> c) : order_(order), c_(std::move(c)) { normalize(); }
    static std::vector<mpq_class> reduce(std::vector<mpq_class> v, int n);
    void normalize();

    int order_;
    std::vector<mpq_class> c_;
};

}  // namespace uqaff
