#include <complex>
#include <random>

#include "doctest.h"
#include "uqaff/scalar.hpp"

using namespace uqaff;

namespace {

Scalar P(const char* s) { return Scalar::parse(s); }

Scalar random_scalar(std::mt19937& rng, bool with_root) {
    std::uniform_int_distribution<int> coef(-3, 3), ex(0, 2), var(0, 3), nt(1, 3);
    auto rpoly = [&]() {
        Scalar p;
        int n = nt(rng);
        for (int i = 0; i < n; ++i) {
            Scalar t(static_cast<long>(coef(rng)));
            if (with_root && ex(rng) == 0) t *= Scalar::root(3, ex(rng));
            t *= Scalar::var(var(rng), ex(rng));
            t *= Scalar::var(var(rng), ex(rng));
            p += t;
        }
        return p;
    };
    Scalar d = rpoly();
    while (d.is_zero()) d = rpoly();
    return rpoly() / d;
}

}  // namespace

TEST_CASE("polynomial cancellation") {
    CHECK(P("(q^2-1)/(q-1)") == P("q+1"));
    CHECK(P("(q^2-1)/(q-1)").to_string() == "s^2 + 1");
}

TEST_CASE("inverse of q^2 a") {
    Scalar x = (Scalar::q(2) * Scalar::var(A)).inv();
    CHECK(x == Scalar::var(S, -4) * Scalar::var(A, -1));
    CHECK(x.to_string() == "(1)/(s^4*a)");
}

TEST_CASE("quantum integer [2]_q") {
    CHECK(qint(2) == Scalar::q() + Scalar::q(-1));
    CHECK(qint(2).to_string() == "(s^4 + 1)/(s^2)");
    CHECK(qint(3) == Scalar::q(2) + 1 + Scalar::q(-2));
}

TEST_CASE("canonical text example") {
    CHECK(P("q - q^-1").to_string() == "(s^4 - 1)/(s^2)");
    CHECK(P("(s^4 - 1)/(s^2)") == P("q - 1/q"));
}

TEST_CASE("cyclotomic roots") {
    CHECK(cyclotomic_root(1).is_one());
    CHECK(cyclotomic_root(2) == Cyclotomic(-1L));
    Cyclotomic i = cyclotomic_root(4);
    CHECK(i * i == Cyclotomic(-1L));
    CHECK(i.pow(4).is_one());
    for (int n = 1; n <= 12; ++n) {
        Cyclotomic w = cyclotomic_root(n);
        CHECK(w.pow(n).is_one());
        for (int y = 1; y < n; ++y) CHECK_FALSE(w.pow(y).is_one());
    }
    // mixed orders: w6^2 = w3
    CHECK(Cyclotomic::root(6, 2) == Cyclotomic::root(3, 1));
    CHECK(Cyclotomic::root(6, 1) * Cyclotomic::root(10, 3) == Cyclotomic::root(30, 14));
    Cyclotomic x = Cyclotomic::root(5, 1) + Cyclotomic(2L);
    CHECK((x * x.inv()).is_one());
}

TEST_CASE("numeric evaluation") {
    Assignment at{};
    at[S] = std::sqrt(2.0);
    CHECK(std::abs(eval_numeric(P("q + q^-1"), at) - 2.5) < 1e-12);
    CHECK(std::abs(eval_numeric(Scalar::root(2), at) - std::complex<double>(-1, 0)) < 1e-15);
    at[S] = std::sqrt(0.8);
    at[Z] = 0.1;
    long double q = 0.8L, z = 0.1L;
    long double ref = (q * q - 1) / (q * q * z - 1);
    std::complex<double> got = eval_numeric(P("(q^2-1)/(q^2*z-1)"), at);
    CHECK(std::abs(got - static_cast<double>(ref)) < 1e-12 * std::abs(static_cast<double>(ref)));
    at[S] = 1.0;
    at[Z] = 1.0;
    CHECK_THROWS_AS(eval_numeric(P("1/(q*z-1)"), at), PoleError);
}

TEST_CASE("division by zero is an error") {
    CHECK_THROWS_AS(Scalar().inv(), std::domain_error);
    CHECK_THROWS_AS(P("1/(q-q)"), ScalarParseError);
}

TEST_CASE("gcd of multivariate polynomials") {
    Poly x = Poly::var(Z), y = Poly::var(W), s = Poly::var(S);
    Poly f = (x + y) * (x - y) * (s + Poly(1L));
    Poly g = (x + y) * (s + Poly(1L)).pow(2) * Poly::var(A);
    CHECK(gcd(f, g) == (x + y) * (s + Poly(1L)));
    Poly h = (x * y + s * s * s + Poly(2L)).pow(2) * (x - s);
    Poly k = (x * y + s * s * s + Poly(2L)) * (y - s * x).pow(3);
    CHECK(gcd(h, k) == x * y + s * s * s + Poly(2L));
    Poly om = Poly(Cyclotomic::root(3));
    Poly m = (x - om) * (x + y);
    Poly n = (x - om) * (x - y);
    CHECK(gcd(m, n) == x - om);
}

TEST_CASE("field laws on random scalars") {
    std::mt19937 rng(12345);
    for (int i = 0; i < 60; ++i) {
        Scalar x = random_scalar(rng, i % 3 == 0), y = random_scalar(rng, false), z = random_scalar(rng, i % 4 == 0);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        if (!x.is_zero()) CHECK((x * x.inv()).is_one());
        CHECK(x - x == Scalar());
        std::string t = x.to_string();
        CHECK(Scalar::parse(t) == x);
        CHECK(Scalar::parse(t).to_string() == t);
    }
}

TEST_CASE("numeric evaluation is a ring homomorphism") {
    std::mt19937 rng(7);
    Assignment at{};
    std::uniform_real_distribution<double> u(0.3, 1.7);
    for (int i = 0; i < 40; ++i) {
        for (auto& c : at) c = {u(rng), u(rng) - 1.0};
        Scalar x = random_scalar(rng, true), y = random_scalar(rng, true);
        auto ex = eval_numeric(x, at), ey = eval_numeric(y, at);
        CHECK(std::abs(eval_numeric(x * y, at) - ex * ey) <= 1e-10 * (1 + std::abs(ex * ey)));
        CHECK(std::abs(eval_numeric(x + y, at) - (ex + ey)) <= 1e-10 * (1 + std::abs(ex) + std::abs(ey)));
    }
}

TEST_CASE("cyclotomic text round trip") {
    Scalar x = P("(E(4) + 2)*s^2*z - 3/2*E(4)");
    CHECK(Scalar::parse(x.to_string()) == x);
    CHECK(P("E(4)^2") == Scalar(-1L));
    CHECK(P("E(3)^2 + E(3) + 1").is_zero());
}
