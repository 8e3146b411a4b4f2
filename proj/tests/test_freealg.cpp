#include <random>

#include "doctest.h"
#include "uqaff/freealg.hpp"

using namespace uqaff;

namespace {

AlgElem E(int i) { return AlgElem::generator(plus_system(), i); }
AlgElem F(int i) { return AlgElem::generator(minus_system(), i); }
AlgElem word(const SystemPtr& sys, std::vector<int> l) { return AlgElem(sys, Word::from(l)); }
Scalar q(int k = 1) { return Scalar::q(k); }
const Scalar a = Scalar::var(A);

}  // namespace

TEST_CASE("q-brackets of generators") {
    CHECK(qbracket(E(0), E(1)) == E(0) * E(1) - a * (E(1) * E(0)));
    CHECK(qbracket(E(0), E(0)) == (1 - q(2)) * (E(0) * E(0)));
    CHECK(qbracket(F(0), F(1)) == F(0) * F(1) - (q(-4) * a.inv()) * (F(1) * F(0)));
}

TEST_CASE("Serre relation lies in the ideal") {
    // E0^3 E1 equals the displayed combination of lower words modulo the relations.
    Scalar three = 1 + q(2) + q(4);
    AlgElem lhs = word(plus_system(), {0, 0, 0, 1});
    AlgElem rhs = a * three * word(plus_system(), {0, 0, 1, 0}) -
                  q(2) * a * a * three * word(plus_system(), {0, 1, 0, 0}) +
                  q(6) * a.pow(3) * word(plus_system(), {1, 0, 0, 0});
    CHECK(lhs == rhs);
    // Already-normal word is untouched.
    CHECK(word(plus_system(), {0, 1}).terms().size() == 1);
    // Negative side uses q_ji.
    Scalar p = q(-4) * a.inv();
    AlgElem f = word(minus_system(), {0, 0, 0, 1}) - p * three * word(minus_system(), {0, 0, 1, 0}) +
                q(2) * p * p * three * word(minus_system(), {0, 1, 0, 0}) - q(6) * p.pow(3) * word(minus_system(), {1, 0, 0, 0});
    CHECK(f.is_zero());
}

TEST_CASE("rewriting is confluent") {
    auto sys = plus_system();
    Word w = Word::from({0, 0, 0, 0, 1});
    CHECK(sys->reduce_with_strategy(w, false) == sys->reduce_with_strategy(w, true));
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> len(1, 8), bit(0, 1);
    for (int t = 0; t < 500; ++t) {
        std::vector<int> l(len(rng));
        for (auto& x : l) x = bit(rng);
        Word u = Word::from(l);
        LinComb left = sys->reduce_with_strategy(u, false);
        LinComb right = sys->reduce_with_strategy(u, true);
        CHECK(left == right);
        CHECK(left == sys->normal_form(u));
    }
}

TEST_CASE("normal form is idempotent and graded") {
    auto sys = plus_system();
    AlgElem x = word(sys, {1, 1, 0, 0, 1, 0}) + word(sys, {1, 0, 0, 1, 1, 0});
    std::vector<std::pair<Word, Scalar>> raw(x.terms().begin(), x.terms().end());
    CHECK(serre_normal_form(sys, raw) == x);
    CHECK(x.weight() == Weight{3, 3});
    for (const auto& [w, c] : x.terms()) CHECK(sys->is_normal(w));
    AlgElem y = root_vector(sys, RootKind::Real1, 1);
    CHECK(qbracket(x, y).weight() == x.weight() + y.weight());
}

TEST_CASE("root vectors") {
    auto P = plus_system();
    CHECK(root_vector(P, RootKind::Imaginary, 1) == E(0) * E(1) - a * (E(1) * E(0)));
    CHECK(root_vector(P, RootKind::Real1, 0) == E(1));
    CHECK(root_vector(P, RootKind::Real0, 0) == E(0));
    CHECK(root_vector(P, RootKind::Imaginary, 2) ==
          qbracket(root_vector(P, RootKind::Real0, 1), root_vector(P, RootKind::Real1, 0)));
    for (int n = 0; n <= 3; ++n) {
        CHECK_FALSE(root_vector(P, RootKind::Real1, n).is_zero());
        CHECK_FALSE(root_vector(P, RootKind::Real0, n).is_zero());
        CHECK(root_vector(P, RootKind::Real1, n).weight() == root_weight(RootKind::Real1, n));
    }
    CHECK_THROWS_AS(root_vector(P, RootKind::Imaginary, 0), std::invalid_argument);
}

TEST_CASE("modified imaginary root vectors") {
    auto P = plus_system();
    AlgElem Ed = root_vector(P, RootKind::Imaginary, 1);
    CHECK(tilde_root(P, 1) == Ed);
    AlgElem expect = (-(q() - q(-1)) / Scalar(2L)) * (Ed * Ed) + (q(2) * a).inv() * root_vector(P, RootKind::Imaginary, 2);
    CHECK(tilde_root(P, 2) == expect);
    auto M = minus_system();
    CHECK(fdot_root(M, 1) == (q(2) / (q() - q(-1))) * tilde_root(M, 1));
}

TEST_CASE("psi") {
    CHECK(apply_psi(E(0) * E(1)) == E(0) * E(1));
    auto P = plus_system();
    for (int n = 0; n <= 3; ++n) {
        CHECK(apply_psi(root_vector(P, RootKind::Real1, n)) == root_vector(P, RootKind::Real0, n));
        CHECK(apply_psi(apply_psi(root_vector(P, RootKind::Real1, n))) == root_vector(P, RootKind::Real1, n));
    }
    CHECK(apply_psi(root_vector(P, RootKind::Imaginary, 1)) == root_vector(P, RootKind::Imaginary, 1));
    CHECK(apply_psi(root_vector(P, RootKind::Imaginary, 2)) == root_vector(P, RootKind::Imaginary, 2));
    CHECK_THROWS_AS(apply_psi(F(0)), std::invalid_argument);
}

TEST_CASE("bracket antisymmetry for imaginary weights") {
    auto P = plus_system();
    const auto& chi = P->chi();
    for (int n = 1; n <= 2; ++n) {
        AlgElem X = root_vector(P, RootKind::Imaginary, n);
        for (RootKind k : {RootKind::Real1, RootKind::Real0, RootKind::Imaginary}) {
            for (int m = (k == RootKind::Imaginary ? 1 : 0); n + m <= 4; ++m) {
                AlgElem Y = root_vector(P, k, m);
                CHECK(qbracket(X, Y) == -chi(Weight::delta(n), Y.weight()) * qbracket(Y, X));
            }
        }
    }
}

TEST_CASE("Jacobi-type identity for q-brackets") {
    auto P = plus_system();
    const auto& chi = P->chi();
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> len(1, 2), bit(0, 1);
    for (int t = 0; t < 30; ++t) {
        auto rw = [&]() {
            std::vector<int> l(len(rng));
            for (auto& x : l) x = bit(rng);
            return word(P, l);
        };
        AlgElem X = rw(), Y = rw(), Z = rw();
        Weight l = X.weight(), m = Y.weight(), n = Z.weight();
        AlgElem lhs = qbracket(qbracket(X, Y), Z);
        AlgElem xz = qbracket(X, Z);
        AlgElem rhs = qbracket(X, qbracket(Y, Z)) + chi(m, n) * (xz * Y) - chi(l, m) * (Y * xz);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("relation identities: examples") {
    CHECK(verify_relation("EQ7", {2, 1}).pass);
    CHECK(verify_relation("EQ1", {0}).pass);
    CHECK(verify_relation("EQ9", {1, 0}).pass);
    CHECK(verify_relation("FQ8", {1, 1}).pass);
    // (EQ9) at k=1, n=0: both sides equal [2]_q E_{delta+alpha_1}.
    auto P = plus_system();
    CHECK(qbracket(tilde_root(P, 1), E(1)) == qint(2) * root_vector(P, RootKind::Real1, 1));
}

TEST_CASE("relation identities: perturbed coefficients leave a residual") {
    auto r = verify_relation("EQ5", {2, 0}, Scalar(2L));
    CHECK_FALSE(r.pass);
    CHECK_FALSE(r.residual.is_zero());
    CHECK_FALSE(verify_relation("FQ8", {0, 1}, Scalar::q()).pass);
}

TEST_CASE("relation identities up to height 3") {
    for (std::string pre : {"EQ", "FQ"}) {
        for (int i = 1; i <= 10; ++i) {
            std::string id = pre + std::to_string(i);
            for (const auto& p : relation_index_tuples(id, 3)) {
                INFO(id);
                CHECK(verify_relation(id, p).pass);
            }
        }
    }
}

TEST_CASE("text form") {
    AlgElem x = root_vector(plus_system(), RootKind::Imaginary, 1);
    CHECK(x.to_string() == "(-a) * E1.E0 + (1) * E0.E1");
}
