#include <functional>
#include <mutex>
#include <stdexcept>

#include "uqaff/ualg.hpp"

namespace uqaff {

namespace {

Scalar q(int k = 1) { return Scalar::q(k); }
const Scalar& a() {
    static const Scalar v = Scalar::var(A);
    return v;
}

TriElem R1(Side s, int n) { return TriElem::from(root_vector(s == Side::Plus ? plus_system() : minus_system(), RootKind::Real1, n)); }
TriElem R0(Side s, int n) { return TriElem::from(root_vector(s == Side::Plus ? plus_system() : minus_system(), RootKind::Real0, n)); }
TriElem Im(Side s, int n) { return TriElem::from(root_vector(s == Side::Plus ? plus_system() : minus_system(), RootKind::Imaginary, n)); }
TriElem Tl(Side s, int n) { return TriElem::from(tilde_root(s == Side::Plus ? plus_system() : minus_system(), n)); }

CheckResult make_result(std::string id, std::vector<int> params, const TriElem& residual) {
    return {std::move(id), std::move(params), residual.is_zero(), residual.to_string()};
}

// Action of T_i (inverse = false) or T_i^-1 on the root lattice.
Weight lattice_image(int i, bool inverse, const Weight& w) {
    int j = 1 - i;
    Weight ai = Weight::alpha(i), aj = Weight::alpha(j);
    Weight img_i = inverse ? ai * 2 + aj : aj * -1;
    Weight img_j = inverse ? ai * -1 : ai + aj * 2;
    int ci = i == 0 ? w.x : w.y, cj = j == 0 ? w.x : w.y;
    return img_i * ci + img_j * cj;
}

TriElem generator_image(int i, bool inverse, char kind, int idx) {
    int j = 1 - i;
    const Bicharacter chi = Bicharacter::generic();
    Scalar qij = chi.qij(i, j);
    Scalar qq = q() - q(-1);
    Scalar ce = q(2) * qij / (q() + q(-1));
    Scalar cf = q(3) * qij.inv() / ((q(4) - 1) * (q(2) - 1));
    TriElem Ei = TriElem::E(i), Ej = TriElem::E(j), Fi = TriElem::F(i), Fj = TriElem::F(j);
    Weight ai = Weight::alpha(i), aj = Weight::alpha(j);
    if (!inverse) {
        if (kind == 'E') return idx == i ? qq.inv() * (Fj * TriElem::L(aj * -1)) : ce * qbracket(Ej, qbracket(Ej, Ei));
        return idx == i ? qq * (TriElem::K(aj * -1) * Ej) : cf * qbracket_bar(Fj, qbracket_bar(Fj, Fi));
    }
    if (kind == 'E') return idx == i ? ce * qbracket(qbracket(Ej, Ei), Ei) : qq.inv() * (TriElem::K(ai * -1) * Fi);
    return idx == i ? cf * qbracket_bar(qbracket_bar(Fj, Fi), Fi) : qq * (Ei * TriElem::L(ai * -1));
}

const TriElem& letter_image(LusztigMap m, char kind, int idx) {
    static std::mutex mu;
    static std::map<std::tuple<int, char, int>, TriElem> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(static_cast<int>(m), kind, idx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    int i = (m == LusztigMap::T0 || m == LusztigMap::T0inv) ? 0 : 1;
    bool inverse = m == LusztigMap::T0inv || m == LusztigMap::T1inv;
    return cache.emplace(key, generator_image(i, inverse, kind, idx)).first->second;
}

Cartan omega_cartan(const Cartan& c) { return {c[3], c[2], c[1], c[0]}; }

}  // namespace

TriElem lusztig(LusztigMap m, const TriElem& x) {
    TriElem r;
    if (m == LusztigMap::Omega) {
        // anti-automorphism: Omega(f c e) = Omega(e) Omega(c) Omega(f), letters swapped
        for (const auto& [k, c] : x.terms()) {
            TriElem e = TriElem::from(AlgElem(plus_system(), k.e.reversed_swapped()));
            TriElem f = TriElem::from(AlgElem(minus_system(), k.f.reversed_swapped()));
            if (!k.e.len) e = TriElem::one();
            if (!k.f.len) f = TriElem::one();
            r += c * (e * TriElem::cartan(omega_cartan(k.c)) * f);
        }
        return r;
    }
    int i = (m == LusztigMap::T0 || m == LusztigMap::T0inv) ? 0 : 1;
    bool inverse = m == LusztigMap::T0inv || m == LusztigMap::T1inv;
    for (const auto& [k, c] : x.terms()) {
        TriElem t = TriElem::one();
        for (int p = 0; p < k.f.len; ++p) t = t * letter_image(m, 'F', k.f.at(p));
        Weight kw = lattice_image(i, inverse, cartan_k(k.c)), lw = lattice_image(i, inverse, cartan_l(k.c));
        t = t.times_cartan(make_cartan(kw, lw));
        for (int p = 0; p < k.e.len; ++p) t = t * letter_image(m, 'E', k.e.at(p));
        r += c * t;
    }
    return r;
}

TriElem lusztig_power(int k, const TriElem& x) {
    TriElem r = x;
    for (int t = 0; t < std::abs(k); ++t) r = lusztig(k > 0 ? LusztigMap::T1 : LusztigMap::T1inv, r);
    return r;
}

TriElem fdot_plain(int n) {
    return (q(6 * n - 3) * a().pow(n - 1) / (q(2) - 1).pow(2 * n - 1)) * Im(Side::Minus, n);
}

// ------------------------------------------------------------------- PBW

Weight PBWMonomial::weight() const {
    Weight w;
    for (auto [x, m] : real1) w = w + root_weight(RootKind::Real1, x) * m;
    for (auto [z, r] : imag) w = w + Weight::delta(z) * r;
    for (auto [y, n] : real0) w = w + root_weight(RootKind::Real0, y) * n;
    return w;
}

std::string PBWMonomial::to_string() const {
    std::string out;
    auto part = [&](const char* name, const std::map<int, int>& m) {
        for (auto [k, e] : m) {
            if (!out.empty()) out += " ";
            out += std::string(name) + std::to_string(k) + (e == 1 ? "" : "^" + std::to_string(e));
        }
    };
    part("R1_", real1);
    part("T_", imag);
    part("R0_", real0);
    return out.empty() ? "1" : out;
}

AlgElem pbw_monomial_element(const PBWMonomial& m, Side side) {
    SystemPtr sys = side == Side::Plus ? plus_system() : minus_system();
    AlgElem r(sys, Scalar(1L));
    for (auto it = m.real1.begin(); it != m.real1.end(); ++it)
        for (int t = 0; t < it->second; ++t) r = r * root_vector(sys, RootKind::Real1, it->first);
    for (auto it = m.imag.begin(); it != m.imag.end(); ++it)
        for (int t = 0; t < it->second; ++t) r = r * tilde_root(sys, it->first);
    for (auto it = m.real0.rbegin(); it != m.real0.rend(); ++it)
        for (int t = 0; t < it->second; ++t) r = r * root_vector(sys, RootKind::Real0, it->first);
    return r;
}

std::vector<PBWMonomial> pbw_monomials(const Weight& w) {
    struct Root {
        int kind;  // 0 real1, 1 imag, 2 real0
        int index;
        Weight wt;
    };
    std::vector<Root> roots;
    for (int n = 0; n <= std::max(w.x, w.y); ++n) {
        if (n + 1 <= w.y && n <= w.x) roots.push_back({0, n, root_weight(RootKind::Real1, n)});
        if (n >= 1 && n <= w.x && n <= w.y) roots.push_back({1, n, Weight::delta(n)});
        if (n + 1 <= w.x && n <= w.y) roots.push_back({2, n, root_weight(RootKind::Real0, n)});
    }
    std::vector<PBWMonomial> out;
    PBWMonomial cur;
    std::function<void(size_t, Weight)> rec = [&](size_t i, Weight left) {
        if (left == Weight{}) {
            out.push_back(cur);
            return;
        }
        if (i == roots.size()) return;
        rec(i + 1, left);
        const Root& r = roots[i];
        auto& slot = r.kind == 0 ? cur.real1 : r.kind == 1 ? cur.imag : cur.real0;
        Weight rem = left;
        int e = 0;
        while (rem.x >= r.wt.x && rem.y >= r.wt.y) {
            rem = rem - r.wt;
            slot[r.index] = ++e;
            rec(i + 1, rem);
        }
        slot.erase(r.index);
    };
    rec(0, w);
    return out;
}

Scalar pbw_diagonal_value(const PBWMonomial& m) {
    Scalar v(1L), q2 = q(2), d = q2 - 1;
    auto real = [&](const std::map<int, int>& part) {
        for (auto [x, e] : part) v *= qfactorial_round(e, q2) * q(-4 * x * e) * d.pow(2 * x * e);
    };
    real(m.real1);
    real(m.real0);
    for (auto [z, r] : m.imag) {
        Scalar fact(1L);
        for (int t = 2; t <= r; ++t) fact *= Scalar(static_cast<long>(t));
        v *= fact * qint(2 * z).pow(r) * Scalar(static_cast<long>(z)).pow(-r) * q(-r * (4 * z - 1)) * d.pow(r * (2 * z - 1));
    }
    return v;
}

std::vector<CheckResult> verify_pbw_pairing(int height) {
    std::vector<CheckResult> out;
    for (int tot = 1; tot <= height; ++tot) {
        for (int x = 0; x <= tot; ++x) {
            Weight w{x, tot - x};
            auto mons = pbw_monomials(w);
            std::vector<AlgElem> ep, fm;
            for (const auto& m : mons) {
                ep.push_back(pbw_monomial_element(m, Side::Plus));
                fm.push_back(pbw_monomial_element(m, Side::Minus));
            }
            std::string bad;
            for (size_t i = 0; i < mons.size() && bad.empty(); ++i) {
                for (size_t j = 0; j < mons.size() && bad.empty(); ++j) {
                    Scalar g;
                    for (const auto& [e, c] : ep[i].terms())
                        for (const auto& [f, d] : fm[j].terms()) g += c * d * pairing_words(e, f);
                    Scalar want = i == j ? pbw_diagonal_value(mons[i]) : Scalar();
                    if (g != want)
                        bad = "<" + mons[i].to_string() + ", " + mons[j].to_string() + "> = " + g.to_string() + ", expected " +
                              want.to_string();
                }
            }
            // PBW monomials must also span: compare with the number of Serre-normal words.
            size_t normal = 0;
            int len = w.x + w.y;
            for (uint64_t b = 0; b < (1ull << len); ++b) {
                Word u{b, len};
                if (u.weight() == w && plus_system()->is_normal(u)) ++normal;
            }
            if (bad.empty() && normal != mons.size())
                bad = std::to_string(mons.size()) + " PBW monomials but " + std::to_string(normal) + " normal words";
            out.push_back({"PBW", {w.x, w.y}, bad.empty(), bad.empty() ? "0" : bad});
        }
    }
    return out;
}

// -------------------------------------------------------------- coproduct

CopTarget cop_target_from_string(const std::string& s) {
    static const std::map<std::string, CopTarget> names{
        {"Endelta", CopTarget::Endelta}, {"Endelta0", CopTarget::Endelta0}, {"Endelta1", CopTarget::Endelta1},
        {"TildeE", CopTarget::TildeE},   {"Fndelta", CopTarget::Fndelta},   {"Fndelta0", CopTarget::Fndelta0},
        {"Fndelta1", CopTarget::Fndelta1}, {"TildeF", CopTarget::TildeF}};
    auto it = names.find(s);
    if (it == names.end()) throw std::invalid_argument("unknown coproduct target " + s);
    return it->second;
}

std::string to_string(CopTarget t) {
    switch (t) {
        case CopTarget::Endelta: return "Endelta";
        case CopTarget::Endelta0: return "Endelta0";
        case CopTarget::Endelta1: return "Endelta1";
        case CopTarget::TildeE: return "TildeE";
        case CopTarget::Fndelta: return "Fndelta";
        case CopTarget::Fndelta0: return "Fndelta0";
        case CopTarget::Fndelta1: return "Fndelta1";
        case CopTarget::TildeF: return "TildeF";
    }
    return "";
}

bool in_V(const std::vector<TriKey>& k, int x, int y) {
    const TriKey &A = k[0], &B = k[1];
    if (A.f.len || A.c[2] || A.c[3] || B.f.len || B.c != Cartan{}) return false;
    Weight wa = A.e.weight(), wb = B.e.weight();
    return cartan_k(A.c) == wb && wa.x - wa.y >= x && wa.y >= 0 && wb.x >= 0 && wb.y - wb.x >= y;
}

bool in_Vprime(const std::vector<TriKey>& k, int x, int y) {
    const TriKey &A = k[0], &B = k[1];
    if (A.e.len || A.c != Cartan{} || B.e.len || B.c[0] || B.c[1]) return false;
    Weight wa = A.f.weight(), wb = B.f.weight();
    return cartan_l(B.c) == wa && wa.y - wa.x >= y && wa.x >= 0 && wb.x - wb.y >= x && wb.y >= 0;
}

CopDecomposition coproduct_decomposition(CopTarget t, int n) {
    if (n < 1) throw std::invalid_argument("coproduct check needs n >= 1");
    auto P = [](const TriElem& l, const TriElem& r) { return TensorElem::pure({l, r}); };
    const TriElem one = TriElem::one();
    const Scalar qq = q() - q(-1);
    const Scalar c = q(2) * a();
    const Scalar cbar = q(2) * a().inv() * q(-4);
    Weight nd = Weight::delta(n);
    CopDecomposition d;
    TensorElem expl(2);
    TriElem target;
    switch (t) {
        case CopTarget::Endelta:
            target = Im(Side::Plus, n);
            expl = P(target, one) + P(TriElem::K(nd), target);
            for (int k = 1; k < n; ++k)
                expl += (qq * c) * P(Im(Side::Plus, k) * TriElem::K(Weight::delta(n - k)), Im(Side::Plus, n - k));
            d.x = 1, d.y = 1;
            break;
        case CopTarget::Endelta0:
            target = R0(Side::Plus, n);
            expl = P(target, one) + P(TriElem::K(root_weight(RootKind::Real0, n)), target);
            for (int k = 0; k < n; ++k)
                expl += (qq * c.pow(-(n - k - 1))) * P(R0(Side::Plus, k) * TriElem::K(Weight::delta(n - k)), Im(Side::Plus, n - k));
            d.x = 2, d.y = 1;
            break;
        case CopTarget::Endelta1:
            target = R1(Side::Plus, n);
            expl = P(target, one) + P(TriElem::K(root_weight(RootKind::Real1, n)), target);
            for (int k = 0; k < n; ++k)
                expl += (qq * c.pow(-(n - k - 1))) *
                        P(Im(Side::Plus, n - k) * TriElem::K(root_weight(RootKind::Real1, k)), R1(Side::Plus, k));
            d.x = 1, d.y = 2;
            break;
        case CopTarget::TildeE:
            target = Tl(Side::Plus, n);
            expl = P(target, one) + P(TriElem::K(nd), target);
            d.x = 1, d.y = 1;
            break;
        case CopTarget::Fndelta:
            target = Im(Side::Minus, n);
            expl = P(one, target) + P(target, TriElem::L(nd));
            for (int k = 1; k < n; ++k)
                expl += (qq * cbar) * P(Im(Side::Minus, n - k), Im(Side::Minus, k) * TriElem::L(Weight::delta(n - k)));
            d.negative = true, d.x = 1, d.y = 1;
            break;
        case CopTarget::Fndelta0:
            target = R0(Side::Minus, n);
            expl = P(one, target) + P(target, TriElem::L(root_weight(RootKind::Real0, n)));
            for (int k = 0; k < n; ++k)
                expl += (qq * cbar.pow(-(n - k - 1))) *
                        P(Im(Side::Minus, n - k), R0(Side::Minus, k) * TriElem::L(Weight::delta(n - k)));
            d.negative = true, d.x = 2, d.y = 1;
            break;
        case CopTarget::Fndelta1:
            target = R1(Side::Minus, n);
            expl = P(one, target) + P(target, TriElem::L(root_weight(RootKind::Real1, n)));
            for (int k = 0; k < n; ++k)
                expl += (qq * cbar.pow(-(n - k - 1))) *
                        P(R1(Side::Minus, k), Im(Side::Minus, n - k) * TriElem::L(root_weight(RootKind::Real1, k)));
            d.negative = true, d.x = 1, d.y = 2;
            break;
        case CopTarget::TildeF:
            target = Tl(Side::Minus, n);
            expl = P(one, target) + P(target, TriElem::L(nd));
            d.negative = true, d.x = 1, d.y = 1;
            break;
    }
    d.residual = coproduct(target) - expl;
    return d;
}

CheckResult coproduct_structure_check(CopTarget t, int n) {
    CopDecomposition d = coproduct_decomposition(t, n);
    std::string bad;
    for (const auto& [k, c] : d.residual.terms()) {
        bool ok = d.negative ? in_Vprime(k, d.x, d.y) : in_V(k, d.x, d.y);
        if (!ok) {
            bad = "(" + c.to_string() + ") * " + k[0].to_string() + " (x) " + k[1].to_string();
            break;
        }
    }
    return {"COP_" + to_string(t), {n}, bad.empty(), bad.empty() ? "0" : bad};
}

// ----------------------------------------------------------- commutators

CheckResult mixed_commutator_check(int k, int n) {
    if (k < 1 || n < 1) throw std::invalid_argument("mixed commutator needs k, n >= 1");
    TriElem lhs = commutator(Tl(Side::Plus, k), fdot_plain(n));
    Scalar c = qint(2 * k) / Scalar(static_cast<long>(k));
    TriElem kl = TriElem::L(Weight::delta(k)) - TriElem::K(Weight::delta(k));
    TriElem rhs;
    if (n > k)
        rhs = c * (kl * fdot_plain(n - k));
    else if (n == k)
        rhs = c * kl;
    return make_result("MIX", {k, n}, lhs - rhs);
}

CheckResult tilde_commutator_check(int k, int r) {
    TriElem lhs = commutator(Tl(Side::Plus, k), TriElem::from(fdot_root(minus_system(), r)));
    TriElem rhs;
    if (k == r)
        rhs = (qint(2 * k) / Scalar(static_cast<long>(k))) * (TriElem::L(Weight::delta(k)) - TriElem::K(Weight::delta(k)));
    return make_result("TILDE", {k, r}, lhs - rhs);
}

CheckResult real_commutator_check(int i, int k) {
    TriElem e = i == 1 ? R1(Side::Plus, k) : R0(Side::Plus, k);
    TriElem f = i == 1 ? R1(Side::Minus, k) : R0(Side::Minus, k);
    Weight w = root_weight(i == 1 ? RootKind::Real1 : RootKind::Real0, k);
    TriElem rhs = (q(-4 * k) * (q(2) - 1).pow(2 * k)) * (TriElem::L(w) - TriElem::K(w));
    return make_result("EFREAL", {i, k}, commutator(e, f) - rhs);
}

CheckResult lusztig_family_check(int family, int k) {
    TriElem lhs, rhs;
    Scalar d = q(2) - 1;
    switch (family) {
        case 0:
            lhs = lusztig_power(-k, TriElem::E(1));
            rhs = (q(-2 * k) * a().pow(-k)) * R1(Side::Plus, k);
            break;
        case 1:
            lhs = lusztig_power(-k, TriElem::F(1));
            rhs = (q(6 * k) * a().pow(k) / d.pow(2 * k)) * R1(Side::Minus, k);
            break;
        case 2: {
            if (k < 1) throw std::invalid_argument("family needs k >= 1");
            Weight w = root_weight(RootKind::Real0, k - 1);
            lhs = lusztig_power(k, TriElem::E(1));
            rhs = (q(6 * k - 5) * a().pow(k - 1) / d.pow(2 * k - 1)) * (R0(Side::Minus, k - 1) * TriElem::L(w * -1));
            break;
        }
        case 3: {
            if (k < 1) throw std::invalid_argument("family needs k >= 1");
            Weight w = root_weight(RootKind::Real0, k - 1);
            lhs = lusztig_power(k, TriElem::F(1));
            rhs = (d * q(-(2 * k - 1)) * a().pow(-(k - 1))) * (TriElem::K(w * -1) * R0(Side::Plus, k - 1));
            break;
        }
        default:
            throw std::invalid_argument("unknown Lusztig family");
    }
    return make_result("LUSZTIG" + std::to_string(family), {k}, lhs - rhs);
}

}  // namespace uqaff
