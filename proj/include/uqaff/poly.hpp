#pragma once

/**
 * @file poly.hpp
 * @brief Sparse multivariate polynomials over cyclotomic rationals.
 *
 * The variable set is fixed: s, a, z, w, u, v, b1, c1, b2, c2, b3, c3 (q = s^2).
 * Monomials are compared degree-lexicographically with s most significant;
 * terms are kept sorted in decreasing order so the first term is the leading one.
 */

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uqaff/cyclotomic.hpp"

namespace uqaff {

enum Var : int { S = 0, A, Z, W, U, V, B1, C1, B2, C2, B3, C3, NVARS };

const char* var_name(int v);
/// Index of a variable name, or -1.
int var_index(const std::string& name);

/// Exponent vector; slot 0 holds the total degree so that array comparison is degree-lex.
struct Mono {
    std::array<uint16_t, NVARS + 1> e{};

    static Mono var(int v, int k = 1) {
        Mono m;
        m.e[v + 1] = static_cast<uint16_t>(k);
        m.e[0] = static_cast<uint16_t>(k);
        return m;
    }
    int deg(int v) const { return e[v + 1]; }
    int total() const { return e[0]; }
    bool is_one() const { return e[0] == 0; }
    bool divides(const Mono& o) const {
        for (int i = 1; i <= NVARS; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    Mono operator*(const Mono& o) const {
        Mono r;
        for (int i = 0; i <= NVARS; ++i) r.e[i] = static_cast<uint16_t>(e[i] + o.e[i]);
        return r;
    }
    /// Requires o.divides(*this).
    Mono operator/(const Mono& o) const {
        Mono r;
        for (int i = 0; i <= NVARS; ++i) r.e[i] = static_cast<uint16_t>(e[i] - o.e[i]);
        return r;
    }
    static Mono gcd(const Mono& a, const Mono& b) {
        Mono r;
        for (int i = 1; i <= NVARS; ++i) {
            r.e[i] = std::min(a.e[i], b.e[i]);
            r.e[0] = static_cast<uint16_t>(r.e[0] + r.e[i]);
        }
        return r;
    }
    auto operator<=>(const Mono&) const = default;
    bool operator==(const Mono&) const = default;
};

struct Term {
    Mono m;
    Cyclotomic c;
};

class Poly {
public:
    Poly() = default;
    Poly(long c) { if (c) t_.push_back({Mono{}, Cyclotomic(c)}); }  // NOLINT
    Poly(const Cyclotomic& c) { if (!c.is_zero()) t_.push_back({Mono{}, c}); }  // NOLINT
    Poly(const Mono& m, const Cyclotomic& c) { if (!c.is_zero()) t_.push_back({m, c}); }

    static Poly var(int v, int k = 1) { return Poly(Mono::var(v, k), Cyclotomic(1L)); }
    /// Build from unsorted terms (duplicates are merged).
    static Poly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return t_; }
    size_t size() const { return t_.size(); }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.is_one()); }
    bool is_one() const { return t_.size() == 1 && t_[0].m.is_one() && t_[0].c.is_one(); }
    bool is_monomial() const { return t_.size() == 1; }
    const Term& lead() const { return t_.front(); }
    Cyclotomic constant_term() const;

    int degree(int v) const;
    /// Componentwise minimum exponent over all terms.
    Mono min_mono() const;
    /// Bitmask of variables occurring.
    unsigned var_mask() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly mul_term(const Mono& m, const Cyclotomic& c) const;
    Poly scaled(const Cyclotomic& c) const;
    /// Divide every exponent vector by m (requires m | each monomial).
    Poly div_mono(const Mono& m) const;
    Poly pow(unsigned e) const;

    /// Exact quotient if b divides *this, otherwise nullopt.
    std::optional<Poly> try_div(const Poly& b) const;
    /// Exact quotient; throws std::logic_error when not exact.
    Poly exact_div(const Poly& b) const;

    /// Coefficients in variable v, index = power of v.
    std::vector<Poly> coeffs_in(int v) const;
    static Poly from_coeffs(const std::vector<Poly>& c, int v);

    /// Substitute polynomial values for variables (entries left empty keep the variable).
    Poly substitute(const std::array<const Poly*, NVARS>& vals) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    std::complex<double> eval(const std::array<std::complex<double>, NVARS>& x) const;

    /// Integer-normalization data: lcm of coefficient denominators, gcd of numerators.
    mpz_class denominator_lcm() const;
    mpz_class numerator_gcd() const;

    /// Plain text with coefficients printed exactly as stored.
    std::string to_string() const;

private:
    std::vector<Term> t_;
};

/// gcd over Q(w)[vars], normalized to leading coefficient 1.
Poly gcd(const Poly& a, const Poly& b);

}  // namespace uqaff
