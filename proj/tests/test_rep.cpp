#include <random>

#include "doctest.h"
#include "uqaff/rep.hpp"

using namespace uqaff;

namespace {

Scalar q(int k = 1) { return Scalar::q(k); }

RepConfig config(int N) {
    RepConfig c;
    c.N = N;
    return c;
}

bool all_pass(const std::vector<CheckResult>& rs) {
    bool ok = true;
    for (const auto& r : rs) {
        if (!r.pass) {
            MESSAGE(r.id << " " << r.residual);
            ok = false;
        }
    }
    return ok;
}

}  // namespace

TEST_CASE("generator images") {
    RepConfig c = config(3);
    CHECK(rho("F1", c) == block_tensor(unit2(2, 1), SMat::identity(3)));
    RepConfig one = config(1);
    one.u = Scalar(1L);
    SMat k1(2, 2);
    k1.set(0, 0, q(2));
    k1.set(1, 1, Scalar(1L));
    CHECK(rho("K1", one) == k1);
    CHECK(rho("E0", c) == (-c.v * (q(2) - 1)) * block_tensor(unit2(2, 1), diag_pow(3, -1) * cyclic_C(3)));
    CHECK(rho("K0 K0^-1", c) == SMat::identity(6));
    CHECK_THROWS_AS(rho(Gen{'X', 0, 1}, c), std::invalid_argument);
    // rho_y rescales only E0 and F0
    RepConfig cy = c;
    cy.y = Scalar::var(Z);
    CHECK(rho("E0", cy) == Scalar::var(Z) * rho("E0", c));
    CHECK(rho("F0", cy) == Scalar::var(Z, -1) * rho("F0", c));
    CHECK(rho("E1", cy) == rho("E1", c));
}

TEST_CASE("matrix identities") {
    for (int N = 1; N <= 5; ++N) {
        CHECK(dft_Pinv(N) * cyclic_C(N) * dft_P(N) == diag_D(N));
        CHECK(Scalar::root(N) * (diag_D(N) * cyclic_C(N)) == cyclic_C(N) * diag_D(N));
        CHECK(mat_pow(cyclic_C(N), N) == SMat::identity(N));
    }
}

TEST_CASE("rho_eval") {
    RepConfig c = config(2);
    CHECK(rho_eval(TriElem::one(), c) == SMat::identity(4));
    TriElem ef = tri_normal_form(parse_gens("E1 F1")) - tri_normal_form(parse_gens("F1 E1"));
    CHECK(rho_eval(ef, c) == rho_eval(TriElem::L({0, 1}) - TriElem::K({0, 1}), c));
    CHECK(rho("E0", c) * rho("F0", c) - rho("F0", c) * rho("E0", c) == rho("L0", c) - rho("K0", c));
    // Serre relation image at N = 2
    AlgElem serre(plus_system(), Word::from({0, 0, 0, 1}));
    CHECK(rho("E0 E0 E0 E1", c) == rho_eval(serre, c));
}

TEST_CASE("rho is multiplicative on the triangular form") {
    RepConfig c = config(2);
    std::mt19937 rng(8);
    const char* kinds = "EFKL";
    std::uniform_int_distribution<int> len(1, 4), kind(0, 3), idx(0, 1);
    for (int t = 0; t < 20; ++t) {
        auto rnd = [&]() {
            std::vector<Gen> g;
            for (int p = len(rng); p > 0; --p) g.push_back({kinds[kind(rng)], idx(rng), 1});
            return g;
        };
        auto g1 = rnd(), g2 = rnd();
        std::vector<Gen> g12 = g1;
        g12.insert(g12.end(), g2.begin(), g2.end());
        SMat lhs = rho_eval(tri_normal_form(g12), c);
        SMat rhs = rho_eval(tri_normal_form(g1), c) * rho_eval(tri_normal_form(g2), c);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("imaginary root vector at N = 1 by hand") {
    RepConfig c = config(1);
    c.u = c.v = q(-1);
    // E_delta = E0 E1 - a E1 E0 with a = q^-2
    SMat ed = rho("E0 E1", c) - q(-2) * rho("E1 E0", c);
    SMat want(2, 2);
    want.set(0, 0, -(q(2) - 1).pow(2) * q(-4));
    want.set(1, 1, (q(2) - 1).pow(2) * q(-2));
    CHECK(ed == want);
    CHECK(closed_form_image(ImageKind::Eimag, 1, c) == want);
    CHECK(rho_eval(root_vector(plus_system(), RootKind::Imaginary, 1), c) == want);
}

TEST_CASE("closed forms: examples") {
    RepConfig c = config(2);
    CHECK(closed_form_image(ImageKind::Freal1, 0, c) == rho("F1", c));
    CHECK(closed_form_image(ImageKind::Ereal1, 0, c) == rho("E1", c));
    CHECK(closed_form_image(ImageKind::Ereal0, 0, c) == rho("E0", c));
    CHECK(rho_root(ImageKind::Ereal1, 1, c) == closed_form_image(ImageKind::Ereal1, 1, c));
    // E~_{2 delta} at N = 2: w^2 = 1 and C^2 = 1, so the (1,1) entry is u^2 v^2 (q^2-1)^3 (q^4-1) / (2 q) * q^-4
    Scalar u = c.u, v = c.v;
    SMat t2 = rho_root(ImageKind::EimagTilde, 2, c);
    CHECK(t2.get(0, 0) == u.pow(2) * v.pow(2) * (q(2) - 1).pow(3) * (q(4) - 1) / (Scalar(2L) * q()) * q(-4));
    CHECK(t2.get(1, 1) == -u.pow(2) * v.pow(2) * (q(2) - 1).pow(3) * (q(4) - 1) / (Scalar(2L) * q()));
    CHECK(t2 == closed_form_image(ImageKind::EimagTilde, 2, c));
    CHECK_THROWS_AS(closed_form_image(ImageKind::Eimag, 0, c), std::invalid_argument);
}

TEST_CASE("verify_rep") {
    for (int N = 1; N <= 3; ++N) CHECK(all_pass(verify_rep(config(N), -1, 2)));
    RepConfig c = config(2);
    c.y = Scalar::var(W);
    CHECK(all_pass(verify_rep(c, 2, 1)));
}

TEST_CASE("flat-index sums") {
    RepConfig c = config(3);
    for (const auto& r : flat_index_report(c, 3)) {
        bool offset_family = r.id == "FLAT-Eimag" || r.id == "FLAT-EimagTilde";
        INFO(r.id);
        CHECK(r.pass == !offset_family);
    }
    // the printed imaginary sums are the tensor form with C^(n-1) in place of C^n
    SMat flat = flat_form_image(ImageKind::Eimag, 2, c);
    SMat shifted = closed_form_image(ImageKind::Eimag, 2, c) * block_tensor(SMat::identity(2), cyc_pow(3, -1));
    CHECK(flat == shifted);
}

TEST_CASE("json export") {
    SMat m(2, 2);
    m.set(0, 1, q(2) - 1);
    CHECK(to_json(m) == R"({"rows":2,"cols":2,"entries":[[0,1,"s^4 - 1"]]})");
}
