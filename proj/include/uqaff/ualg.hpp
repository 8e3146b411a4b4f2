#pragma once

/**
 * @file ualg.hpp
 * @brief The full algebra U in triangular form U- U0 U+, its Hopf structure,
 * the Drinfeld pairing, Lusztig automorphisms and PBW checks.
 *
 * Everything is over the generic field Q(s, a). F- and E-words are kept in the
 * normal forms of the shared minus/plus Serre systems.
 */

#include <array>
#include <map>
#include <string>
#include <vector>

#include "uqaff/freealg.hpp"

namespace uqaff {

/// Exponents of K0, K1, L0, L1.
using Cartan = std::array<int, 4>;

inline Weight cartan_k(const Cartan& c) { return {c[0], c[1]}; }
inline Weight cartan_l(const Cartan& c) { return {c[2], c[3]}; }
inline Cartan make_cartan(const Weight& k, const Weight& l) { return {k.x, k.y, l.x, l.y}; }

/// One triangular monomial F-word * K/L monomial * E-word.
struct TriKey {
    Word f;
    Cartan c{};
    Word e;
    auto operator<=>(const TriKey&) const = default;
    bool operator==(const TriKey&) const = default;
    /// Weight wt(e) - wt(f).
    Weight weight() const { return f.weight() * -1 + e.weight(); }
    std::string to_string() const;
};

/// Generator token for tri_normal_form: kind is one of 'E', 'F', 'K', 'L'.
struct Gen {
    char kind;
    int index;
    int power = 1;
};

/// Parse "E1 F1 K0^-1 L1^2" (whitespace or '*' separated).
std::vector<Gen> parse_gens(const std::string& text);

class TriElem {
public:
    TriElem() = default;
    explicit TriElem(const Scalar& c);
    TriElem(const TriKey& k, const Scalar& c);

    static TriElem one() { return TriElem(Scalar(1L)); }
    static TriElem E(int i) { return TriElem(TriKey{{}, {}, Word::letter(i)}, Scalar(1L)); }
    static TriElem F(int i) { return TriElem(TriKey{Word::letter(i), {}, {}}, Scalar(1L)); }
    static TriElem K(const Weight& w) { return TriElem(TriKey{{}, make_cartan(w, {}), {}}, Scalar(1L)); }
    static TriElem L(const Weight& w) { return TriElem(TriKey{{}, make_cartan({}, w), {}}, Scalar(1L)); }
    static TriElem cartan(const Cartan& c) { return TriElem(TriKey{{}, c, {}}, Scalar(1L)); }
    /// Embeddings of U+ and U- elements.
    static TriElem from(const AlgElem& x);

    const std::map<TriKey, Scalar>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    Scalar coeff(const TriKey& k) const;
    bool is_homogeneous() const;
    /// Throws std::invalid_argument for zero or inhomogeneous elements.
    Weight weight() const;

    TriElem operator-() const;
    TriElem& operator+=(const TriElem& o);
    TriElem& operator-=(const TriElem& o);
    friend TriElem operator+(TriElem a, const TriElem& b) { return a += b; }
    friend TriElem operator-(TriElem a, const TriElem& b) { return a -= b; }
    friend TriElem operator*(const Scalar& c, const TriElem& x);
    friend TriElem operator*(const TriElem& x, const TriElem& y);
    bool operator==(const TriElem& o) const { return t_ == o.t_; }

    /// Right multiplication by single generators.
    TriElem times_E(int i) const;
    TriElem times_F(int j) const;
    TriElem times_cartan(const Cartan& d) const;

    /// "(c) * F0.F1 * K0^-1*L1 * E1 + ..." in decreasing key order.
    std::string to_string() const;

private:
    void add(const TriKey& k, const Scalar& c);
    std::map<TriKey, Scalar> t_;
};

TriElem tri_normal_form(const std::vector<Gen>& word);
TriElem pow(const TriElem& x, int n);

/// Commutator XY - YX.
TriElem commutator(const TriElem& x, const TriElem& y);
/// XY - chi(wt x, wt y) YX.
TriElem qbracket(const TriElem& x, const TriElem& y);
/// XY - chi(wt y, wt x) YX.
TriElem qbracket_bar(const TriElem& x, const TriElem& y);

/// Element of U^{(x) n}: map from n-tuples of triangular monomials to scalars.
class TensorElem {
public:
    TensorElem() = default;
    explicit TensorElem(int arity) : arity_(arity) {}
    /// x_1 (x) ... (x) x_n.
    static TensorElem pure(const std::vector<TriElem>& legs);

    int arity() const { return arity_; }
    const std::map<std::vector<TriKey>, Scalar>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    TensorElem& operator+=(const TensorElem& o);
    TensorElem& operator-=(const TensorElem& o);
    friend TensorElem operator+(TensorElem a, const TensorElem& b) { return a += b; }
    friend TensorElem operator-(TensorElem a, const TensorElem& b) { return a -= b; }
    friend TensorElem operator*(const Scalar& c, const TensorElem& x);
    /// Legwise product.
    friend TensorElem operator*(const TensorElem& x, const TensorElem& y);
    bool operator==(const TensorElem& o) const { return t_ == o.t_; }

    void add(const std::vector<TriKey>& k, const Scalar& c);
    std::string to_string() const;

private:
    int arity_ = 2;
    std::map<std::vector<TriKey>, Scalar> t_;
};

TensorElem coproduct(const TriElem& x);
/// Apply the coproduct to one leg, raising the arity by one.
TensorElem coproduct_on_leg(const TensorElem& x, int leg);
/// Swap the two legs of a 2-tensor.
TensorElem flip(const TensorElem& x);
/// Multiply the legs of a 2-tensor together.
TriElem multiply(const TensorElem& x);
TriElem antipode(const TriElem& x);
TriElem antipode_inverse(const TriElem& x);
Scalar counit(const TriElem& x);
/// Apply f to one leg of a 2-tensor.
TensorElem apply_leg(const TensorElem& x, int leg, TriElem (*f)(const TriElem&));

/// f_lambda: coefficient of K^0 L_lambda after discarding terms with an E or F part.
Scalar f_lambda(const TriElem& x, const Weight& lambda);
/// Pairing of an E-word with an F-word (both as raw letter sequences).
Scalar pairing_words(const Word& e, const Word& f);
/// Drinfeld pairing U^{+,>=} x U^{-,<=}; throws std::invalid_argument outside these subalgebras.
Scalar pairing(const TriElem& x, const TriElem& y);
/// Legwise product of pairings.
Scalar pairing(const TensorElem& x, const TensorElem& y);

enum class LusztigMap { T0, T1, T0inv, T1inv, Omega };
TriElem lusztig(LusztigMap m, const TriElem& x);
/// T_1^k for k of either sign.
TriElem lusztig_power(int k, const TriElem& x);

/// Dotted F_{n delta} = q^{6n-3} a^{n-1} / (q^2-1)^{2n-1} F_{n delta}.
TriElem fdot_plain(int n);

/// Finitely supported exponent data of a PBW monomial.
struct PBWMonomial {
    std::map<int, int> real1;  ///< x -> m_x for E_{x delta + alpha_1}
    std::map<int, int> imag;   ///< z -> r_z for E~_{z delta}
    std::map<int, int> real0;  ///< y -> n_y for E_{y delta + alpha_0}
    auto operator<=>(const PBWMonomial&) const = default;
    Weight weight() const;
    std::string to_string() const;
};

/// Product of root vectors in the PBW order (ascending real1, ascending imag, descending real0).
AlgElem pbw_monomial_element(const PBWMonomial& m, Side side);
/// All PBW monomials of the given weight.
std::vector<PBWMonomial> pbw_monomials(const Weight& w);
/// Closed diagonal pairing value.
Scalar pbw_diagonal_value(const PBWMonomial& m);

/// One line of a verification report.
struct CheckResult {
    std::string id;
    std::vector<int> params;
    bool pass = false;
    std::string residual;  ///< "0" on success
};

/// Gram matrices of PBW monomials for all weights x a0 + y a1 with 0 < x + y <= height.
std::vector<CheckResult> verify_pbw_pairing(int height);

enum class CopTarget { Endelta, Endelta0, Endelta1, TildeE, Fndelta, Fndelta0, Fndelta1, TildeF };
CopTarget cop_target_from_string(const std::string& s);
std::string to_string(CopTarget t);

/// Membership of one tensor monomial in V_{x,y} (positive side) or V'_{x,y} (negative side).
bool in_V(const std::vector<TriKey>& k, int x, int y);
bool in_Vprime(const std::vector<TriKey>& k, int x, int y);

/// Coproduct minus the displayed explicit terms, and the subspace it must lie in.
struct CopDecomposition {
    TensorElem residual;
    bool negative = false;
    int x = 1, y = 1;
};
CopDecomposition coproduct_decomposition(CopTarget t, int n);
CheckResult coproduct_structure_check(CopTarget t, int n);

/// [E~_{k delta}, dotted F_{n delta}] against the three-case formula.
CheckResult mixed_commutator_check(int k, int n);
/// [E~_{k delta}, F-dot-tilde_{r delta}] = delta_{kr} ([2k]/k)(-K_{k delta} + L_{k delta}).
CheckResult tilde_commutator_check(int k, int r);
/// [E_{k delta + alpha_i}, F_{k delta + alpha_i}] = q^{-4k}(q^2-1)^{2k}(-K + L).
CheckResult real_commutator_check(int i, int k);
/// Closed forms of T_1^{-k}(E_1), T_1^{-k}(F_1), T_1^k(E_1), T_1^k(F_1); family in 0..3.
CheckResult lusztig_family_check(int family, int k);

}  // namespace uqaff
