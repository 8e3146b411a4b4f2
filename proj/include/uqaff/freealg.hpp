#pragma once

/**
 * @file freealg.hpp
 * @brief The positive and negative halves U+ and U- with Serre normal forms.
 *
 * Words in two letters are packed into a 64-bit integer, first letter most
 * significant, so length-then-numeric order is length-then-lex with letter 0 < 1.
 * Under that order the leading words of the two Serre relations are 1000 and 1110.
 * The Serre rules alone are not confluent; SerreSystem completes them (Bergman
 * overlap resolution) degree by degree up to the lengths that are actually used.
 */

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "uqaff/scalar.hpp"

namespace uqaff {

struct Weight {
    int x = 0;  ///< coefficient of alpha_0
    int y = 0;  ///< coefficient of alpha_1

    static Weight alpha(int i) { return i == 0 ? Weight{1, 0} : Weight{0, 1}; }
    static Weight delta(int n = 1) { return {n, n}; }
    Weight operator+(const Weight& o) const { return {x + o.x, y + o.y}; }
    Weight operator-(const Weight& o) const { return {x - o.x, y - o.y}; }
    Weight operator-() const { return {-x, -y}; }
    Weight operator*(int k) const { return {k * x, k * y}; }
    auto operator<=>(const Weight&) const = default;
    std::string to_string() const;
};

/// chi(alpha_i, alpha_j) = q_ij extended bimultiplicatively.
class Bicharacter {
public:
    /// q00 = q11 = q^2, q01 = a, q10 = q^-4 a^-1.
    explicit Bicharacter(const Scalar& a);
    static Bicharacter generic() { return Bicharacter(Scalar::var(A)); }

    const Scalar& a() const { return a_; }
    const Scalar& qij(int i, int j) const { return q_[i][j]; }
    Scalar operator()(const Weight& l, const Weight& m) const;

private:
    Scalar a_;
    Scalar q_[2][2];
};

enum class Side { Plus, Minus };

struct Word {
    uint64_t bits = 0;
    int len = 0;

    static Word letter(int i) { return {static_cast<uint64_t>(i), 1}; }
    static Word from(const std::vector<int>& letters);
    int at(int i) const { return static_cast<int>((bits >> (len - 1 - i)) & 1u); }
    Word sub(int pos, int l) const {
        uint64_t mask = l == 64 ? ~0ull : ((1ull << l) - 1);
        return {(bits >> (len - pos - l)) & mask, l};
    }
    Word operator+(const Word& o) const { return {(bits << o.len) | o.bits, len + o.len}; }
    Weight weight() const;
    /// Reverse and swap letters (used by psi and Omega).
    Word reversed_swapped() const;
    Word reversed() const;
    auto operator<=>(const Word& o) const {
        if (len != o.len) return len <=> o.len;
        return bits <=> o.bits;
    }
    bool operator==(const Word& o) const = default;
    std::string to_string(char gen) const;
};

using LinComb = std::vector<std::pair<Word, Scalar>>;

/// Completed rewriting system for one half of U under one bicharacter.
class SerreSystem {
public:
    SerreSystem(Side side, Bicharacter chi);

    Side side() const { return side_; }
    const Bicharacter& chi() const { return chi_; }

    /// Normal form of a single word (completing the system as needed).
    LinComb normal_form(const Word& w);
    bool is_normal(const Word& w);

    struct Rule {
        Word lead;
        LinComb tail;  ///< lead is congruent to the tail
    };
    /// Rules currently known (completion is lazy, so this grows with use).
    std::vector<Rule> rules();
    int completed_length();

    /// Reduce w always rewriting the leftmost (or rightmost) reducible occurrence,
    /// without memoization. Used to test confluence.
    LinComb reduce_with_strategy(const Word& w, bool rightmost);

private:
    void ensure(int len);
    const LinComb& nf_locked(const Word& w);
    bool find_lead(const Word& w, int& pos, size_t& rule, bool rightmost) const;
    void resolve_overlaps(int d);

    Side side_;
    Bicharacter chi_;
    std::vector<Rule> rules_;
    int completed_ = 4;
    std::map<Word, LinComb> cache_;
    std::recursive_mutex mu_;
};

using SystemPtr = std::shared_ptr<SerreSystem>;

/// Shared generic systems over Q(s, a).
SystemPtr plus_system();
SystemPtr minus_system();

class AlgElem {
public:
    AlgElem() = default;
    explicit AlgElem(SystemPtr sys) : sys_(std::move(sys)) {}
    AlgElem(SystemPtr sys, const Scalar& c);
    /// Normal form of c * w.
    AlgElem(SystemPtr sys, const Word& w, const Scalar& c = Scalar(1L));

    static AlgElem generator(SystemPtr sys, int i) { return AlgElem(std::move(sys), Word::letter(i)); }

    const SystemPtr& system() const { return sys_; }
    Side side() const { return sys_->side(); }
    const std::map<Word, Scalar>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    Scalar coeff(const Word& w) const;

    /// Weight of the terms; throws std::invalid_argument if not homogeneous or zero.
    Weight weight() const;
    bool is_homogeneous() const;

    AlgElem operator-() const;
    AlgElem& operator+=(const AlgElem& o);
    AlgElem& operator-=(const AlgElem& o);
    friend AlgElem operator+(AlgElem a, const AlgElem& b) { return a += b; }
    friend AlgElem operator-(AlgElem a, const AlgElem& b) { return a -= b; }
    friend AlgElem operator*(const Scalar& c, const AlgElem& x);
    friend AlgElem operator*(const AlgElem& x, const AlgElem& y);

    bool operator==(const AlgElem& o) const { return t_ == o.t_; }

    /// "coeff * E0.E1.E0 + ..." with terms in decreasing word order.
    std::string to_string() const;

private:
    void add_lincomb(const LinComb& l, const Scalar& c);
    SystemPtr sys_;
    std::map<Word, Scalar> t_;
};

/// Rewrite an arbitrary (possibly unreduced) combination of words into normal form.
AlgElem serre_normal_form(SystemPtr sys, const std::vector<std::pair<Word, Scalar>>& raw);

/// q-bracket XY - chi(lambda, mu) YX on Plus, XY - chi(mu, lambda) YX on Minus.
AlgElem qbracket(const AlgElem& x, const AlgElem& y);

enum class RootKind { Real1, Real0, Imaginary };

/// Root vectors E_{n delta + alpha_1}, E_{n delta + alpha_0}, E_{n delta} (F analogues on Minus).
AlgElem root_vector(const SystemPtr& sys, RootKind kind, int n);
/// Modified imaginary root vector E~_{k delta} or F~_{k delta}.
AlgElem tilde_root(const SystemPtr& sys, int k);
/// F.(dot)_{k delta} = q^{2k} (q - q^-1)^{-(2k-1)} F~_{k delta}.
AlgElem fdot_root(const SystemPtr& sys, int k);
/// The anti-isomorphism of U+ swapping E0 and E1.
AlgElem apply_psi(const AlgElem& e);

Weight root_weight(RootKind kind, int n);

/// Result of checking one identity.
struct RelationResult {
    std::string id;
    std::vector<int> params;
    bool pass = false;
    AlgElem residual;
};

/// Identity names "EQ1".."EQ10", "FQ1".."FQ10"; params per identity:
/// 1,3: (n); 2,4: (n, r); 5,6: (r, n) resp. (n, r); 7: (x, y); 8: (x, y); 9,10: (k, n).
RelationResult verify_relation(const std::string& id, const std::vector<int>& params);
/// Same with every term after the first multiplied by perturb (negative controls).
RelationResult verify_relation(const std::string& id, const std::vector<int>& params, const Scalar& perturb);

/// All index tuples with total delta-height (sum of bracket-argument heights) at most h.
std::vector<std::vector<int>> relation_index_tuples(const std::string& id, int h);

}  // namespace uqaff
