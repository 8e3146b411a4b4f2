// Acceptance runner: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>

#include "uqaff/freealg.hpp"
#include "uqaff/rmatrix.hpp"

using namespace uqaff;

namespace {

// Tolerance for the numeric Yang-Baxter residual (relative infinity norm).
constexpr double kYbeTol = 1e-9;
constexpr int kSeriesOrder = 30;
constexpr int kNumericSamples = 20;

struct Outcome {
    bool pass = true;
    std::string detail;
    void fail(const std::string& what) {
        if (pass) detail = what;
        pass = false;
    }
};

Outcome c1_relations() {
    Outcome o;
    int n = 0;
    for (std::string pre : {"EQ", "FQ"}) {
        for (int i = 1; i <= 10; ++i) {
            std::string id = pre + std::to_string(i);
            // the imaginary commutators are also run to x + y <= 5
            int h = i == 7 ? 5 : 4;
            for (const auto& p : relation_index_tuples(id, h)) {
                ++n;
                if (!verify_relation(id, p).pass) o.fail(id);
            }
        }
    }
    if (o.pass) o.detail = std::to_string(n) + " instances";
    return o;
}

Outcome c2_pairing() {
    Outcome o;
    const Scalar q = Scalar::q();
    PBWMonomial r1;
    r1.real1[1] = 1;
    if (pbw_diagonal_value(r1) != Scalar::q(-4) * (Scalar::q(2) - 1).pow(2)) o.fail("<E_{d+a1},F_{d+a1}>");
    PBWMonomial t1;
    t1.imag[1] = 1;
    if (pbw_diagonal_value(t1) != qint(2) * (Scalar::q(2) - 1) / q.pow(3)) o.fail("<E~_d,F~_d>");
    auto rs = verify_pbw_pairing(6);
    for (const auto& r : rs)
        if (!r.pass) o.fail(r.id);
    if (o.pass) o.detail = std::to_string(rs.size()) + " checks";
    return o;
}

Outcome c3_coproduct() {
    Outcome o;
    for (CopTarget t : {CopTarget::Endelta, CopTarget::Endelta0, CopTarget::Endelta1, CopTarget::TildeE, CopTarget::Fndelta,
                        CopTarget::Fndelta0, CopTarget::Fndelta1, CopTarget::TildeF})
        for (int n = 1; n <= 3; ++n)
            if (!coproduct_structure_check(t, n).pass) o.fail(to_string(t) + " n=" + std::to_string(n));
    if (o.pass) o.detail = "8 targets, n <= 3";
    return o;
}

Outcome c4_lusztig() {
    Outcome o;
    for (std::string g : {"E0", "E1", "F0", "F1", "K0", "K1", "L0", "L1"}) {
        TriElem x = tri_normal_form(parse_gens(g));
        if (lusztig(LusztigMap::T1, lusztig(LusztigMap::T1inv, x)) != x) o.fail("T1 T1^-1 on " + g);
        if (lusztig(LusztigMap::T1inv, lusztig(LusztigMap::T1, x)) != x) o.fail("T1^-1 T1 on " + g);
    }
    for (int k = 1; k <= 3; ++k) {
        for (int f = 0; f < 4; ++f)
            if (!lusztig_family_check(f, k).pass) o.fail("family " + std::to_string(f));
        for (int r = 1; r <= 3; ++r)
            if (!tilde_commutator_check(k, r).pass) o.fail("tilde commutator");
        for (int i = 0; i < 2; ++i)
            if (!real_commutator_check(i, k).pass) o.fail("real commutator");
    }
    if (o.pass) o.detail = "k, r <= 3";
    return o;
}

Outcome c5_rep() {
    Outcome o;
    int n = 0;
    // rho and the spectrally twisted rho_y
    for (bool twisted : {false, true}) {
        for (int N = 1; N <= 4; ++N) {
            RepConfig c;
            c.N = N;
            if (twisted) c.y = Scalar::var(W);
            for (const auto& r : verify_rep(c, 2 * N, 4)) {
                ++n;
                if (!r.pass) o.fail("N=" + std::to_string(N) + (twisted ? " rho_y " : " ") + r.id);
            }
        }
    }
    if (o.pass) o.detail = std::to_string(n) + " checks, N <= 4, rho and rho_y";
    return o;
}

Outcome c6_series() {
    Outcome o;
    FunctionalCheck f = a_functional_check(kSeriesOrder);
    if (!f.product_ok) o.fail("product identity at z^" + std::to_string(f.first_bad_product));
    if (!f.ratio_ok) o.fail("ratio identity at z^" + std::to_string(f.first_bad_ratio));
    if (o.pass) o.detail = "order " + std::to_string(kSeriesOrder);
    return o;
}

Outcome c7_six_vertex() {
    Outcome o;
    auto d = diff_report(r1_from_atoms(assemble_R_atoms(1)), r1_transcription());
    if (!d.empty()) o.fail(std::to_string(d.size()) + " entries differ");
    if (!ybe_exact(1).pass) o.fail("exact YBE");
    if (o.pass) o.detail = "4x4 exact";
    return o;
}

Outcome c8_n2() {
    Outcome o;
    SMat ours = to_display_order(r2_from_atoms(assemble_R_atoms(2)), 2);
    auto d = diff_report(ours, r2_transcription());
    if (!d.empty()) o.fail(std::to_string(d.size()) + " entries differ");
    if (!ybe_exact(2).pass) o.fail("exact YBE");
    if (o.pass) o.detail = std::to_string(ours.nnz()) + " entries, 64x64 YBE exact";
    return o;
}

Outcome c9_numeric() {
    Outcome o;
    const double qv = 0.8, pi = std::acos(-1.0);
    std::mt19937 rng(20261018);
    std::uniform_real_distribution<double> rad(0.0, 0.6), ang(0.0, 2 * pi);
    double worst = 0;
    for (int N = 1; N <= 3; ++N) {
        for (int k = 0; k < kNumericSamples;) {
            std::complex<double> z = std::polar(rad(rng), ang(rng)), w = std::polar(rad(rng), ang(rng));
            if (!disk_constraints_ok(qv, z, w)) continue;
            ++k;
            YbeResult r = ybe_numeric(N, qv, z, w);
            worst = std::max(worst, r.residual);
            if (!(r.residual <= kYbeTol)) o.fail("N=" + std::to_string(N) + " residual " + r.detail);
        }
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "max residual %.3e", worst);
    if (o.pass) o.detail = buf;
    return o;
}

Outcome c10_cartan() {
    Outcome o;
    for (auto [x, y] : {std::pair{1, 1}, std::pair{3, 2}, std::pair{5, 3}}) {
        for (int code = 0; code < 729; ++code) {
            std::array<int, 6> ch{};
            for (int k = 0, c = code; k < 6; ++k, c /= 3) ch[k] = c % 3;
            if (!cartan_universal_check(x, y, ch)) o.fail("(" + std::to_string(x) + "," + std::to_string(y) + ")");
        }
    }
    if (o.pass) o.detail = "3 x 729 characters";
    return o;
}

}  // namespace

int main() {
    using Fn = Outcome (*)();
    const Fn criteria[] = {c1_relations, c2_pairing,    c3_coproduct, c4_lusztig, c5_rep,
                           c6_series,    c7_six_vertex, c8_n2,        c9_numeric, c10_cartan};
    bool all = true;
    for (int i = 0; i < 10; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i]();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        char t[32];
        std::snprintf(t, sizeof t, "%.1fs", secs);
        std::cout << "criterion " << i + 1 << " | " << (o.pass ? "PASS" : "FAIL") << " | " << o.detail << " | " << t
                  << std::endl;
        all = all && o.pass;
    }
    return all ? 0 : 1;
}
