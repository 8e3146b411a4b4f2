#pragma once

/**
 * @file scalar.hpp
 * @brief Exact rational functions over cyclotomic rationals.
 *
 * A Scalar is num/den with gcd(num, den) = 1 and den having leading coefficient 1.
 * This makes the representation unique, so equality is structural.
 *
 * Text grammar (used by both parse and to_string):
 *   expr   := term (('+' | '-') term)*
 *   term   := unary (('*' | '/') unary)*
 *   unary  := '-' unary | power
 *   power  := atom ('^' ['-'] integer)?
 *   atom   := integer | variable | 'q' | 'E(' integer ')' | '(' expr ')'
 * Variables are s a z w u v b1 c1 b2 c2 b3 c3; q means s^2; E(n) is exp(2 pi i/n).
 * Canonical output clears denominators so that all printed coefficients are
 * coprime integers, e.g. "(s^4 - 1)/(s^2)".
 */

#include <array>
#include <complex>
#include <map>
#include <stdexcept>
#include <string>

#include "uqaff/poly.hpp"

namespace uqaff {

class Scalar {
public:
    Scalar() : num_(), den_(1L) {}
    Scalar(long v) : num_(v), den_(1L) {}  // NOLINT
    Scalar(const mpq_class& v) : num_(Cyclotomic(v)), den_(1L) {}  // NOLINT
    Scalar(const Cyclotomic& c) : num_(c), den_(1L) {}  // NOLINT
    Scalar(const Poly& p) : num_(p), den_(1L) {}  // NOLINT

    /// Reduced fraction n/d; throws std::domain_error when d = 0.
    static Scalar frac(const Poly& n, const Poly& d);
    /// v^k for integer k (negative allowed).
    static Scalar var(int v, int k = 1);
    /// q^k = s^(2k).
    static Scalar q(int k = 1) { return var(S, 2 * k); }
    /// w_n^k as a scalar.
    static Scalar root(int n, long k = 1) { return Scalar(Cyclotomic::root(n, k)); }
    static Scalar rational(long p, long r) { return Scalar(mpq_class(p, r)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.is_one() && num_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& x, const Scalar& y);
    friend Scalar operator-(const Scalar& x, const Scalar& y) { return x + (-y); }
    friend Scalar operator*(const Scalar& x, const Scalar& y);
    friend Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inv(); }
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    /// Throws std::domain_error on zero.
    Scalar inv() const;
    Scalar pow(long e) const;

    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Substitute scalars for variables; unset entries keep their variable.
    Scalar substitute(const std::map<int, Scalar>& vals) const;

    std::string to_string() const;
    static Scalar parse(const std::string& text);

private:
    Poly num_, den_;
};

/// Division by zero and malformed input raise these.
struct ScalarParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Numeric assignment; s is taken as given, so a caller with q must pass s = sqrt(q).
using Assignment = std::array<std::complex<double>, NVARS>;

/// Complex value; throws PoleError when the denominator vanishes at the point.
std::complex<double> eval_numeric(const Scalar& x, const Assignment& at);

/// Primitive N-th root of unity w = E(N).
Cyclotomic cyclotomic_root(int n);

/// (n)_x = 1 + x + ... + x^(n-1).
Scalar qnumber_round(int n, const Scalar& x);
/// [n]_q = q^{-(n-1)} (n)_{q^2}.
Scalar qint(int n);
/// (n)_x! = (1)_x (2)_x ... (n)_x.
Scalar qfactorial_round(int n, const Scalar& x);

}  // namespace uqaff
