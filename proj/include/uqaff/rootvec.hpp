#pragma once

/**
 * @file rootvec.hpp
 * @brief Root-vector recursions, generic over the algebra they are evaluated in.
 *
 * The same recursion builds words in U+/U- and matrices in a representation.
 * T needs T + T, T - T and Scalar * T; multiplication is supplied as a functor.
 */

#include <functional>
#include <map>

#include "uqaff/freealg.hpp"

namespace uqaff {

template <class T>
class RootVectorFamily {
public:
    using MulFn = std::function<T(const T&, const T&)>;

    /// bar = false: X Y - chi(l, m) Y X (positive side); bar = true: X Y - chi(m, l) Y X.
    RootVectorFamily(Bicharacter chi, bool bar, T g0, T g1, MulFn mul)
        : chi_(std::move(chi)), bar_(bar), mul_(std::move(mul)) {
        real0_.emplace(0, std::move(g0));
        real1_.emplace(0, std::move(g1));
    }

    const T& real1(int n) {
        auto it = real1_.find(n);
        if (it != real1_.end()) return it->second;
        T v = qint(2).inv() * bracket(imag(1), Weight::delta(), real1(n - 1), root_weight(RootKind::Real1, n - 1));
        return real1_.emplace(n, std::move(v)).first->second;
    }

    const T& real0(int n) {
        auto it = real0_.find(n);
        if (it != real0_.end()) return it->second;
        T v = qint(2).inv() * bracket(real0(n - 1), root_weight(RootKind::Real0, n - 1), imag(1), Weight::delta());
        return real0_.emplace(n, std::move(v)).first->second;
    }

    const T& imag(int n) {
        auto it = imag_.find(n);
        if (it != imag_.end()) return it->second;
        T v = bracket(real0(0), Weight::alpha(0), real1(n - 1), root_weight(RootKind::Real1, n - 1));
        return imag_.emplace(n, std::move(v)).first->second;
    }

    /// Solves k T_k = c^{-(k-1)} k I_k - (q - q^-1) sum_r r c^{-(k-r-1)} T_r I_{k-r},
    /// with c = q^2 a (positive side) or q^2 abar, abar = a^-1 q^-4 (negative side).
    const T& tilde(int k) {
        auto it = tilde_.find(k);
        if (it != tilde_.end()) return it->second;
        Scalar c = bar_ ? Scalar::q(2) * (chi_.a().inv() * Scalar::q(-4)) : Scalar::q(2) * chi_.a();
        Scalar qq = Scalar::q() - Scalar::q(-1);
        T v = c.pow(-(k - 1)) * imag(k);
        for (int r = 1; r < k; ++r) {
            Scalar f = -qq * Scalar(static_cast<long>(r)) * c.pow(-(k - r - 1)) / Scalar(static_cast<long>(k));
            v = v + f * mul_(tilde(r), imag(k - r));
        }
        return tilde_.emplace(k, std::move(v)).first->second;
    }

    T bracket(const T& x, const Weight& l, const T& y, const Weight& m) const {
        Scalar c = bar_ ? chi_(m, l) : chi_(l, m);
        return mul_(x, y) - c * mul_(y, x);
    }

    const Bicharacter& chi() const { return chi_; }

private:
    Bicharacter chi_;
    bool bar_;
    MulFn mul_;
    std::map<int, T> real1_, real0_, imag_, tilde_;
};

}  // namespace uqaff
