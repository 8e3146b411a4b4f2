#pragma once

/**
 * @file rep.hpp
 * @brief The 2N-dimensional vector representation rho of U at a = q^-2 w.
 *
 * M_2N is identified with M_2 (x) M_N by flat index 2(t-1) + i for the pair
 * (i, t), i in {1, 2}, t in 1..N; the M_2 index runs fastest. w = E(N).
 */

#include <string>
#include <vector>

#include "uqaff/sparse.hpp"
#include "uqaff/ualg.hpp"

namespace uqaff {

using SMat = SparseMatrix<Scalar>;

struct RepConfig {
    int N = 1;
    Scalar u = Scalar::var(U);
    Scalar v = Scalar::var(V);
    /// Spectral twist: rho_y(E0) = y rho(E0), rho_y(F0) = y^-1 rho(F0).
    Scalar y = Scalar(1L);

    Scalar omega() const { return Scalar::root(N); }
    /// q^-2 w.
    Scalar a() const { return Scalar::q(-2) * omega(); }
};

/// 2x2 matrix unit E_{ij}, 1-based.
SMat unit2(int i, int j);
SMat diag2(const Scalar& x, const Scalar& y);
/// Cyclic permutation C (entries (t, t+1) and (N, 1)).
SMat cyclic_C(int N);
/// diag(1, w, ..., w^(N-1)).
SMat diag_D(int N);
/// DFT matrix P_{st} = w^((s-1)(t-1)) and its inverse.
SMat dft_P(int N);
SMat dft_Pinv(int N);
/// m2 (x) mN in the flat numbering above.
SMat block_tensor(const SMat& m2, const SMat& mN);
/// Integer power of an invertible N x N matrix among C, D (negative powers via inverse).
SMat cyc_pow(int N, int k);
SMat diag_pow(int N, int k);

/// Image of a generator; K and L powers may be any integer, E and F powers must be positive.
SMat rho(const Gen& g, const RepConfig& cfg);
SMat rho(const std::string& gens, const RepConfig& cfg);
/// Homomorphic extension; scalar coefficients in a are specialised to q^-2 w.
SMat rho_eval(const TriElem& x, const RepConfig& cfg);
SMat rho_eval(const AlgElem& x, const RepConfig& cfg);

enum class ImageKind { Ereal1, Ereal0, Eimag, EimagTilde, Freal1, Freal0, Fimag, FimagTilde };
ImageKind image_kind_from_string(const std::string& s);
std::string to_string(ImageKind k);
/// Root kind / side the image kind refers to.
bool image_is_positive(ImageKind k);

/// Closed-form image in 2x2 (x) NxN form (includes the y-twist).
SMat closed_form_image(ImageKind k, int n, const RepConfig& cfg);
/// Closed form read off the flat-index sums, with the bar map taken modulo 2N.
SMat flat_form_image(ImageKind k, int n, const RepConfig& cfg);
/// Flat-index form of a generator image (the printed 2-kappa read as 2N).
SMat flat_form_generator(const Gen& g, const RepConfig& cfg);
/// Root vector image computed by running the root-vector recursion on matrices.
SMat rho_root(ImageKind k, int n, const RepConfig& cfg);

/// Defining relations, grading, matrix identities and closed forms for n <= nmax.
/// Root vectors are also expanded into words and evaluated for n <= word_max.
std::vector<CheckResult> verify_rep(const RepConfig& cfg, int nmax = -1, int word_max = 4);
/// Comparison of the flat-index sums against the tensor forms; pass = agree.
std::vector<CheckResult> flat_index_report(const RepConfig& cfg, int nmax = -1);

/// {"rows": r, "cols": c, "entries": [[i, j, "scalar"], ...]} with 0-based indices.
std::string to_json(const SMat& m);
/// Short text: "(i,j): value" lines for the nonzero entries.
std::string to_text(const SMat& m);

}  // namespace uqaff
