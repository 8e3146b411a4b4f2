#pragma once

/**
 * @file rmatrix.hpp
 * @brief The spectral R-matrix R(z) on V (x) V for the vector representation.
 *
 * R(z) = R_{alpha1} R_{delta} R_{alpha0} R_h at u = v = q^-1. The transcendental
 * series A(z) is handled either as a truncated power series ("series" mode)
 * or as formal atoms A(w^t z) with rational coefficients ("atoms" mode).
 * V (x) V is numbered by the Kronecker rule: pair (i, j) -> i * dim V + j.
 */

#include <array>
#include <complex>
#include <map>
#include <string>
#include <vector>

#include "uqaff/rep.hpp"

namespace uqaff {

/// Power series of x in z up to and including z^K. The denominator of x must have
/// nonzero constant term as a polynomial in z. Coefficients are z-free scalars.
std::vector<Scalar> series_coeffs(const Scalar& x, int K);
/// Drop all z-powers above K (the denominator must be free of z).
Scalar truncate_z(const Scalar& x, int K);
/// Expand x in z and re-assemble as a polynomial of degree <= K.
Scalar series_expand(const Scalar& x, int K);

/// Truncated A(z) = exp(-sum_k z^k (q^k - q^-k) / (k (q^k + q^-k))).
struct ASeries {
    int K = 0;
    std::vector<Scalar> c;  ///< coefficients of z^0 .. z^K
    /// As a polynomial in z.
    Scalar poly() const;
};
ASeries a_series(int K);
/// sum_k c_k (f z)^k.
Scalar rescale_z(const Scalar& poly, const Scalar& f);

/// Coefficients from z^0 to z^K of A(z)A(q^2 z) - (1-q^2 z)/(1-z) and of A(q^4 z)/A(z) - (1-z)(1-q^4 z)/(1-q^2 z)^2.
struct FunctionalCheck {
    bool product_ok = false;
    bool ratio_ok = false;
    int first_bad_product = -1;
    int first_bad_ratio = -1;
};
FunctionalCheck a_functional_check(int K);

/// Key for one atom monomial: (j, t) -> exponent for A(q^{2j} w^t z), t taken mod N.
using AtomKey = std::map<std::pair<int, int>, int>;

/// Finite sum of rational scalars times atom monomials.
class AtomPoly {
public:
    AtomPoly() = default;
    AtomPoly(long c) : AtomPoly(Scalar(c)) {}  // NOLINT
    AtomPoly(const Scalar& c) { add({}, c); }  // NOLINT
    static AtomPoly atom(int j, int t, int exponent = 1);

    const std::map<AtomKey, Scalar>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    void add(const AtomKey& k, const Scalar& c);

    friend AtomPoly operator+(const AtomPoly& x, const AtomPoly& y);
    friend AtomPoly operator-(const AtomPoly& x, const AtomPoly& y);
    friend AtomPoly operator*(const AtomPoly& x, const AtomPoly& y);
    bool operator==(const AtomPoly& o) const { return t_ == o.t_; }

    /// Rewrite A(q^2 x) = ((1 - q^2 x)/(1 - x)) A(x)^-1 (and its inverse) until only j = 0 atoms remain.
    AtomPoly reduced(int N) const;
    /// Coefficient of the single atom A(w^t z)^1 (after reduction).
    Scalar linear_coeff(int t) const;
    /// Substitute into every coefficient.
    AtomPoly substitute(const std::map<int, Scalar>& vals) const;
    std::string to_string() const;

private:
    std::map<AtomKey, Scalar> t_;
};

using AMat = SparseMatrix<AtomPoly>;

/// R_{alpha_i}(u, v) in its resummed rational form, exact in z.
SMat r_factor_alpha(int i, const RepConfig& cfg);
/// The defining sum truncated after n < terms, using the closed-form images and the pairing values.
SMat r_factor_alpha_naive(int i, const RepConfig& cfg, int terms);
/// R_delta as the truncated exponential of the displayed commuting family, to order z^K.
SMat r_factor_delta_series(const RepConfig& cfg, int K);
/// R_delta as the product over n of the truncated exponential series in rho(E~) (x) rho(F~) / pairing.
SMat r_factor_delta_product(const RepConfig& cfg, int K);
/// R_delta in atoms mode (requires u v = q^-2).
AMat r_factor_delta_atoms(const RepConfig& cfg);
/// Cartan factor, with q^{1/2} = s.
SMat r_cartan(int N);
/// The Cartan factor written with the longer exponents -(s-1)(2-t)+(2-s)(t-1) etc.
SMat r_cartan_long_form(int N);

/// Config with u = v = q^-1 at the given N.
RepConfig rmatrix_config(int N);
/// R(z) in atoms mode.
AMat assemble_R_atoms(int N);
/// R(z) in series mode, entries polynomials in z of degree <= K.
SMat assemble_R_series(int N, int K);
/// Expand an atoms-mode matrix as a power series to order K.
SMat atoms_to_series(const AMat& m, int N, int K);

/// Built-in transcriptions of the N = 1 and N = 2 closed forms.
/// N = 1: the coefficient of A(z). N = 2: entries in b1 = B(z), c1 = C(z).
SMat r1_transcription();
SMat r2_transcription();
/// Atoms-mode R(z) for N = 1 divided by A(z).
SMat r1_from_atoms(const AMat& r);
/// Atoms-mode R(z) for N = 2 with A(z) -> B + C, A(-z) -> B - C (B = b1, C = c1).
SMat r2_from_atoms(const AMat& r);
/// Renumber each V leg from the flat order 2(t-1)+i to N(i-1)+t (the M_N index fastest).
SMat to_display_order(const SMat& r, int N);
/// Lines "(i,j): ours | display" for every mismatch (1-based indices).
std::vector<std::string> diff_report(const SMat& ours, const SMat& display);

/// Tensor-leg embeddings into V^{(x)3}; slot is "12", "13", "23" (and "21" for legs = 2).
template <class T>
SparseMatrix<T> embed(const SparseMatrix<T>& m, const std::string& slot, int d, int legs = 3);

/// Yang-Baxter residual over any entry type.
template <class T>
SparseMatrix<T> ybe_residual(const SparseMatrix<T>& r12, const SparseMatrix<T>& r13, const SparseMatrix<T>& r23, int d) {
    auto a = embed(r12, "12", d), b = embed(r13, "13", d), c = embed(r23, "23", d);
    return a * b * c - c * b * a;
}

struct YbeResult {
    bool pass = false;
    double residual = 0;  ///< relative infinity-norm residual (numeric mode)
    std::string detail;
};

/// Exact YBE for N = 1 (rational part) and N = 2 (free constants b_t, c_t).
YbeResult ybe_exact(int N);
/// Numeric A(x) by summing the exponent until the tail bound drops below 1e-15.
std::complex<double> a_numeric(std::complex<double> x, std::complex<double> q);
/// Numeric R(z) from the atoms form.
SparseMatrix<std::complex<double>> r_numeric(const AMat& atoms, int N, std::complex<double> q, std::complex<double> z);
/// Disk constraints |u| < 1 for u in {z, w, zw, z q^2, w q^2, z w q^-2, z q^-2, w q^-2}.
bool disk_constraints_ok(std::complex<double> q, std::complex<double> z, std::complex<double> w);
YbeResult ybe_numeric(int N, std::complex<double> q, std::complex<double> z, std::complex<double> w);

/// Cartan lemma: (f1 (x) f2)(R0) against xi^{ab} w^{-x1 y0 + x0 y1}; chars = {a, b, x0, x1, y0, y1}.
bool cartan_universal_check(int x, int y, const std::array<int, 6>& chars);

// ---- template definitions ----

template <class T>
SparseMatrix<T> embed(const SparseMatrix<T>& m, const std::string& slot, int d, int legs) {
    if (m.rows() != d * d || m.cols() != d * d) throw std::invalid_argument("embed: matrix must be d^2 x d^2");
    if (legs == 2) {
        if (slot == "12") return m;
        if (slot != "21") throw std::invalid_argument("embed: unknown slot " + slot);
        SparseMatrix<T> r(d * d, d * d);
        for (int i = 0; i < d * d; ++i)
            for (const auto& [j, v] : m.row(i)) r.set((i % d) * d + i / d, (j % d) * d + j / d, v);
        return r;
    }
    if (legs != 3) throw std::invalid_argument("embed: legs must be 2 or 3");
    SparseMatrix<T> r(d * d * d, d * d * d);
    for (int i = 0; i < d * d; ++i) {
        int i1 = i / d, i2 = i % d;
        for (const auto& [j, v] : m.row(i)) {
            int j1 = j / d, j2 = j % d;
            for (int k = 0; k < d; ++k) {
                if (slot == "12")
                    r.set((i1 * d + i2) * d + k, (j1 * d + j2) * d + k, v);
                else if (slot == "13")
                    r.set((i1 * d + k) * d + i2, (j1 * d + k) * d + j2, v);
                else if (slot == "23")
                    r.set((k * d + i1) * d + i2, (k * d + j1) * d + j2, v);
                else
                    throw std::invalid_argument("embed: unknown slot " + slot);
            }
        }
    }
    return r;
}

}  // namespace uqaff
