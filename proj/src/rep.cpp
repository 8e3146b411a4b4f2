#include "uqaff/rep.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "json.hpp"
#include "uqaff/rootvec.hpp"

namespace uqaff {

namespace {

Scalar q(int k = 1) { return Scalar::q(k); }
Scalar sgn(int n) { return (n % 2 == 0) ? Scalar(1L) : Scalar(-1L); }

int mod(int x, int m) { return ((x % m) + m) % m; }

Scalar spec_a(const Scalar& x, const RepConfig& cfg) { return x.substitute({{A, cfg.a()}}); }

}  // namespace

SMat unit2(int i, int j) {
    SMat m(2, 2);
    m.set(i - 1, j - 1, Scalar(1L));
    return m;
}

SMat diag2(const Scalar& x, const Scalar& y) {
    SMat m(2, 2);
    m.set(0, 0, x);
    m.set(1, 1, y);
    return m;
}

SMat cyclic_C(int N) {
    SMat m(N, N);
    for (int t = 0; t < N; ++t) m.set(t, (t + 1) % N, Scalar(1L));
    return m;
}

SMat diag_D(int N) { return diag_pow(N, 1); }

SMat dft_P(int N) {
    SMat m(N, N);
    for (int s = 0; s < N; ++s)
        for (int t = 0; t < N; ++t) m.set(s, t, Scalar::root(N, static_cast<long>(s) * t));
    return m;
}

SMat dft_Pinv(int N) {
    SMat m(N, N);
    for (int s = 0; s < N; ++s)
        for (int t = 0; t < N; ++t) m.set(s, t, Scalar::rational(1, N) * Scalar::root(N, -static_cast<long>(s) * t));
    return m;
}

SMat block_tensor(const SMat& m2, const SMat& mN) { return kron(mN, m2); }

SMat cyc_pow(int N, int k) {
    SMat m(N, N);
    for (int t = 0; t < N; ++t) m.set(t, mod(t + k, N), Scalar(1L));
    return m;
}

SMat diag_pow(int N, int k) {
    SMat m(N, N);
    for (int t = 0; t < N; ++t) m.set(t, t, Scalar::root(N, static_cast<long>(t) * k));
    return m;
}

SMat rho(const Gen& g, const RepConfig& cfg) {
    const int N = cfg.N;
    const Scalar w = cfg.omega();
    SMat I = SMat::identity(N);
    auto cartan = [&](const Scalar& c, const SMat& m2, int dpow) {
        SMat d = block_tensor(m2, diag_pow(N, dpow));
        SMat base = c * d;
        if (g.power >= 0) return mat_pow(base, g.power);
        // inverse of a diagonal matrix
        SMat inv(2 * N, 2 * N);
        for (int i = 0; i < 2 * N; ++i) inv.set(i, i, base.get(i, i).inv());
        return mat_pow(inv, -g.power);
    };
    if (g.index != 0 && g.index != 1) throw std::invalid_argument("generator index must be 0 or 1");
    switch (g.kind) {
        case 'K':
            return g.index == 1 ? cartan(cfg.u, diag2(q(2), 1), 1) : cartan(cfg.v, diag2(w, q(2)), -1);
        case 'L':
            return g.index == 1 ? cartan(cfg.u, diag2(1, q(2)), 1) : cartan(cfg.v, diag2(w * q(2), 1), -1);
        case 'E':
        case 'F': {
            if (g.power < 0) throw std::invalid_argument("E and F are not invertible");
            SMat x;
            if (g.kind == 'E' && g.index == 1) x = (-cfg.u * (q(2) - 1)) * block_tensor(unit2(1, 2), diag_D(N));
            if (g.kind == 'F' && g.index == 1) x = block_tensor(unit2(2, 1), I);
            if (g.kind == 'E' && g.index == 0)
                x = (-cfg.y * cfg.v * (q(2) - 1)) * block_tensor(unit2(2, 1), diag_pow(N, -1) * cyclic_C(N));
            if (g.kind == 'F' && g.index == 0) x = cfg.y.inv() * block_tensor(unit2(1, 2), cyc_pow(N, -1));
            return mat_pow(x, g.power);
        }
        default:
            throw std::invalid_argument(std::string("unknown generator ") + g.kind);
    }
}

SMat rho(const std::string& gens, const RepConfig& cfg) {
    SMat r = SMat::identity(2 * cfg.N);
    for (const Gen& g : parse_gens(gens)) r = r * rho(g, cfg);
    return r;
}

namespace {

SMat rho_word(const Word& w, char kind, const RepConfig& cfg) {
    SMat r = SMat::identity(2 * cfg.N);
    for (int p = 0; p < w.len; ++p) r = r * rho(Gen{kind, w.at(p), 1}, cfg);
    return r;
}

}  // namespace

SMat rho_eval(const TriElem& x, const RepConfig& cfg) {
    SMat r(2 * cfg.N, 2 * cfg.N);
    for (const auto& [k, c] : x.terms()) {
        SMat m = rho_word(k.f, 'F', cfg);
        const char kinds[4] = {'K', 'K', 'L', 'L'};
        for (int p = 0; p < 4; ++p)
            if (k.c[p]) m = m * rho(Gen{kinds[p], p % 2, k.c[p]}, cfg);
        m = m * rho_word(k.e, 'E', cfg);
        r = r + spec_a(c, cfg) * m;
    }
    return r;
}

SMat rho_eval(const AlgElem& x, const RepConfig& cfg) {
    SMat r(2 * cfg.N, 2 * cfg.N);
    char kind = x.side() == Side::Plus ? 'E' : 'F';
    for (const auto& [w, c] : x.terms()) r = r + spec_a(c, cfg) * rho_word(w, kind, cfg);
    return r;
}

ImageKind image_kind_from_string(const std::string& s) {
    static const std::map<std::string, ImageKind> m{
        {"Ereal1", ImageKind::Ereal1}, {"Ereal0", ImageKind::Ereal0},         {"Eimag", ImageKind::Eimag},
        {"EimagTilde", ImageKind::EimagTilde}, {"Freal1", ImageKind::Freal1}, {"Freal0", ImageKind::Freal0},
        {"Fimag", ImageKind::Fimag},   {"FimagTilde", ImageKind::FimagTilde}};
    auto it = m.find(s);
    if (it == m.end()) throw std::invalid_argument("unknown image kind " + s);
    return it->second;
}

std::string to_string(ImageKind k) {
    static const char* names[] = {"Ereal1", "Ereal0", "Eimag", "EimagTilde", "Freal1", "Freal0", "Fimag", "FimagTilde"};
    return names[static_cast<int>(k)];
}

bool image_is_positive(ImageKind k) { return static_cast<int>(k) < 4; }

namespace {

bool is_imag(ImageKind k) {
    return k == ImageKind::Eimag || k == ImageKind::EimagTilde || k == ImageKind::Fimag || k == ImageKind::FimagTilde;
}

void check_n(ImageKind k, int n) {
    if (n < (is_imag(k) ? 1 : 0)) throw std::invalid_argument("root index out of range");
}

/// Number of E0 (or F0) letters, for the y-twist.
int zero_count(ImageKind k, int n) {
    return (k == ImageKind::Ereal0 || k == ImageKind::Freal0) ? n + 1 : n;
}

Scalar twist(ImageKind k, int n, const RepConfig& cfg) {
    Scalar t = cfg.y.pow(zero_count(k, n));
    return image_is_positive(k) ? t : t.inv();
}

}  // namespace

namespace {

/// Scalar prefactor and matrix part of a closed form.
std::pair<Scalar, SMat> closed_form_parts(ImageKind k, int n, const RepConfig& cfg) {
    check_n(k, n);
    const int N = cfg.N;
    const Scalar& u = cfg.u;
    const Scalar& v = cfg.v;
    auto w = [&](long e) { return Scalar::root(N, e); };
    Scalar q1 = q(2) - 1;
    Scalar nn(static_cast<long>(n));
    Scalar c;
    SMat m;
    switch (k) {
        case ImageKind::Ereal1:
            c = sgn(n + 1) * w(2 * n) * u.pow(n + 1) * v.pow(n) * q1.pow(2 * n + 1) / q(n);
            m = block_tensor(unit2(1, 2), diag_D(N) * cyc_pow(N, n));
            break;
        case ImageKind::Ereal0:
            c = sgn(n + 1) * w(n) * u.pow(n) * v.pow(n + 1) * q1.pow(2 * n + 1) / q(n);
            m = block_tensor(unit2(2, 1), diag_pow(N, -1) * cyc_pow(N, n + 1));
            break;
        case ImageKind::Eimag:
            c = sgn(n) * w(2 * n - 1) * u.pow(n) * v.pow(n) * q1.pow(2 * n) / q(n + 1);
            m = block_tensor(diag2(1, -q(2)), cyc_pow(N, n));
            break;
        case ImageKind::EimagTilde:
            c = sgn(n) * w(n) * u.pow(n) * v.pow(n) * q1.pow(2 * n - 1) * (q(2 * n) - 1) / (nn * q(n - 1));
            m = block_tensor(diag2(q(-2 * n), -1), cyc_pow(N, n));
            break;
        case ImageKind::Freal1:
            c = sgn(n) * w(-n) / q(n);
            m = block_tensor(unit2(2, 1), cyc_pow(N, -n));
            break;
        case ImageKind::Freal0:
            c = sgn(n) * w(-n) / q(n);
            m = block_tensor(unit2(1, 2), cyc_pow(N, -(n + 1)));
            break;
        case ImageKind::Fimag:
            c = sgn(n - 1) * w(-n + 1) / q(n + 1);
            m = block_tensor(diag2(q(2), -w(-n)), cyc_pow(N, -n));
            break;
        case ImageKind::FimagTilde:
            c = sgn(n - 1) * (q(2 * n) - 1) / (nn * q(n - 1) * q1);
            m = block_tensor(diag2(1, -w(-n) * q(-2 * n)), cyc_pow(N, -n));
            break;
    }
    return {c * twist(k, n, cfg), m};
}

}  // namespace

SMat closed_form_image(ImageKind k, int n, const RepConfig& cfg) {
    auto [c, m] = closed_form_parts(k, n, cfg);
    return c * m;
}

namespace {

/// bar(y) in 1..2N with y - bar(y) in 2N Z.
int bar(int y, int N) { return mod(y - 1, 2 * N) + 1; }

}  // namespace

SMat flat_form_image(ImageKind k, int n, const RepConfig& cfg) {
    check_n(k, n);
    const int N = cfg.N;
    SMat m(2 * N, 2 * N);
    auto put = [&](int r, int c, const Scalar& x) { m.add(r - 1, c - 1, x); };
    auto w = [&](long e) { return Scalar::root(N, e); };
    // Prefactors are those of the tensor forms; only the index pattern is under test.
    for (int s = 1; s <= N; ++s) {
        switch (k) {
            case ImageKind::Ereal1:
                put(2 * s - 1, bar(2 * (n + s), N), w(s - 1));
                break;
            case ImageKind::Ereal0:
                put(2 * s, bar(2 * (n + s) + 1, N), w(1 - s));
                break;
            case ImageKind::Eimag:
                put(2 * s - 1, bar(2 * (n + s) - 3, N), 1);
                put(2 * s, bar(2 * (n + s - 1), N), -q(2));
                break;
            case ImageKind::EimagTilde:
                put(2 * s - 1, bar(2 * (n + s) - 3, N), q(-2 * n));
                put(2 * s, bar(2 * (n + s - 1), N), -1);
                break;
            case ImageKind::Freal1:
                put(bar(2 * (n + s), N), 2 * s - 1, 1);
                break;
            case ImageKind::Freal0:
                put(bar(2 * (n + s) + 1, N), 2 * s, 1);
                break;
            case ImageKind::Fimag:
                put(bar(2 * (n + s) - 1, N), 2 * s - 1, q(2));
                put(bar(2 * (n + s), N), 2 * s, -w(-n));
                break;
            case ImageKind::FimagTilde:
                put(bar(2 * (n + s) - 1, N), 2 * s - 1, 1);
                put(bar(2 * (n + s), N), 2 * s, -w(-n) * q(-2 * n));
                break;
        }
    }
    return closed_form_parts(k, n, cfg).first * m;
}

SMat flat_form_generator(const Gen& g, const RepConfig& cfg) {
    const int N = cfg.N;
    const Scalar w = cfg.omega();
    SMat m(2 * N, 2 * N);
    auto put = [&](int r, int c, const Scalar& x) { m.add(r - 1, c - 1, x); };
    auto wp = [&](long e) { return Scalar::root(N, e); };
    const Scalar& u = cfg.u;
    const Scalar& v = cfg.v;
    std::string key = std::string(1, g.kind) + std::to_string(g.index);
    if (key == "K1") {
        for (int t = 1; t <= N; ++t) put(2 * t - 1, 2 * t - 1, u * wp(t - 1) * q(2)), put(2 * t, 2 * t, u * wp(t - 1));
    } else if (key == "L1") {
        for (int t = 1; t <= N; ++t) put(2 * t - 1, 2 * t - 1, u * wp(t - 1)), put(2 * t, 2 * t, u * wp(t - 1) * q(2));
    } else if (key == "E1") {
        for (int t = 1; t <= N; ++t) put(2 * t - 1, 2 * t, -u * (q(2) - 1) * wp(t - 1));
    } else if (key == "F1") {
        for (int t = 1; t <= N; ++t) put(2 * t, 2 * t - 1, 1);
    } else if (key == "K0" || key == "L0") {
        Scalar hi = key == "K0" ? q(2) : Scalar(1L);
        Scalar lo = key == "K0" ? Scalar(1L) : q(2);
        put(1, 1, v * w * lo);
        for (int t = 1; t <= N - 1; ++t) put(2 * t, 2 * t, v * wp(-(t - 1)) * hi), put(2 * t + 1, 2 * t + 1, v * wp(-(t - 1)) * lo);
        put(2 * N, 2 * N, v * w * hi);
    } else if (key == "E0") {
        for (int t = 1; t <= N - 1; ++t) put(2 * t, 2 * t + 1, -v * (q(2) - 1) * wp(-(t - 1)));
        put(2 * N, 1, -v * (q(2) - 1) * w);
    } else if (key == "F0") {
        for (int t = 1; t <= N - 1; ++t) put(2 * t + 1, 2 * t, 1);
        put(1, 2 * N, 1);
    } else {
        throw std::invalid_argument("unknown generator " + key);
    }
    if (g.kind == 'E' && g.index == 0) m = cfg.y * m;
    if (g.kind == 'F' && g.index == 0) m = cfg.y.inv() * m;
    return m;
}

namespace {

using MatFamily = RootVectorFamily<SMat>;

struct FamilyCache {
    std::mutex mu;
    std::map<std::string, std::unique_ptr<MatFamily>> fams;
};

std::string cfg_key(const RepConfig& cfg, bool positive) {
    return std::to_string(cfg.N) + "|" + cfg.u.to_string() + "|" + cfg.v.to_string() + "|" + cfg.y.to_string() +
           (positive ? "|+" : "|-");
}

}  // namespace

SMat rho_root(ImageKind k, int n, const RepConfig& cfg) {
    check_n(k, n);
    static FamilyCache cache;
    bool pos = image_is_positive(k);
    std::lock_guard<std::mutex> lock(cache.mu);
    auto& fam = cache.fams[cfg_key(cfg, pos)];
    if (!fam) {
        char kind = pos ? 'E' : 'F';
        fam = std::make_unique<MatFamily>(Bicharacter(cfg.a()), !pos, rho(Gen{kind, 0, 1}, cfg), rho(Gen{kind, 1, 1}, cfg),
                                          [](const SMat& x, const SMat& y) { return x * y; });
    }
    switch (k) {
        case ImageKind::Ereal1:
        case ImageKind::Freal1:
            return fam->real1(n);
        case ImageKind::Ereal0:
        case ImageKind::Freal0:
            return fam->real0(n);
        case ImageKind::Eimag:
        case ImageKind::Fimag:
            return fam->imag(n);
        default:
            return fam->tilde(n);
    }
}

namespace {

std::string residual_text(const SMat& r) {
    if (r.is_zero()) return "0";
    std::ostringstream os;
    os << r.nnz() << " nonzero entries, first ";
    for (int i = 0; i < r.rows(); ++i) {
        if (r.row(i).empty()) continue;
        auto [j, v] = *r.row(i).begin();
        os << "(" << i << "," << j << ")=" << v.to_string();
        break;
    }
    return os.str();
}

CheckResult compare(const std::string& id, std::vector<int> params, const SMat& lhs, const SMat& rhs) {
    SMat d = lhs - rhs;
    return CheckResult{id, std::move(params), d.is_zero(), residual_text(d)};
}

SMat inverse_diag(const SMat& m) {
    SMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i) r.set(i, i, m.get(i, i).inv());
    return r;
}

AlgElem word_root(ImageKind k, int n) {
    SystemPtr sys = image_is_positive(k) ? plus_system() : minus_system();
    switch (k) {
        case ImageKind::Ereal1:
        case ImageKind::Freal1:
            return root_vector(sys, RootKind::Real1, n);
        case ImageKind::Ereal0:
        case ImageKind::Freal0:
            return root_vector(sys, RootKind::Real0, n);
        case ImageKind::Eimag:
        case ImageKind::Fimag:
            return root_vector(sys, RootKind::Imaginary, n);
        default:
            return tilde_root(sys, n);
    }
}

Weight image_weight(ImageKind k, int n) {
    Weight w;
    switch (k) {
        case ImageKind::Ereal1:
        case ImageKind::Freal1:
            w = root_weight(RootKind::Real1, n);
            break;
        case ImageKind::Ereal0:
        case ImageKind::Freal0:
            w = root_weight(RootKind::Real0, n);
            break;
        default:
            w = Weight::delta(n);
    }
    return image_is_positive(k) ? w : w * -1;
}

/// Every nonzero entry stays inside one block of the given pairing of flat indices.
bool block_invariant(const SMat& m, int shift, int N) {
    for (int i = 0; i < m.rows(); ++i)
        for (const auto& [j, v] : m.row(i))
            if (((i + shift) / 2) % N != ((j + shift) / 2) % N) return false;
    return true;
}

}  // namespace

std::vector<CheckResult> verify_rep(const RepConfig& cfg, int nmax, int word_max) {
    const int N = cfg.N;
    if (nmax < 0) nmax = 2 * N;
    std::vector<CheckResult> out;
    Bicharacter chi(cfg.a());
    // Cartan part
    for (char c1 : {'K', 'L'})
        for (int i = 0; i < 2; ++i) {
            SMat x = rho(Gen{c1, i, 1}, cfg);
            out.push_back(compare(std::string("REP-INV-") + c1, {i}, x * rho(Gen{c1, i, -1}, cfg), SMat::identity(2 * N)));
            for (char c2 : {'K', 'L'})
                for (int j = 0; j < 2; ++j) {
                    SMat y = rho(Gen{c2, j, 1}, cfg);
                    out.push_back(compare(std::string("REP-COMM-") + c1 + c2, {i, j}, x * y, y * x));
                }
        }
    // conjugation of E_j, F_j
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            SMat K = rho(Gen{'K', i, 1}, cfg), Ki = rho(Gen{'K', i, -1}, cfg);
            SMat L = rho(Gen{'L', i, 1}, cfg), Li = rho(Gen{'L', i, -1}, cfg);
            SMat E = rho(Gen{'E', j, 1}, cfg), F = rho(Gen{'F', j, 1}, cfg);
            out.push_back(compare("REP-KEK", {i, j}, K * E * Ki, chi.qij(i, j) * E));
            out.push_back(compare("REP-LEL", {i, j}, L * E * Li, chi.qij(j, i).inv() * E));
            out.push_back(compare("REP-KFK", {i, j}, K * F * Ki, chi.qij(i, j).inv() * F));
            out.push_back(compare("REP-LFL", {i, j}, L * F * Li, chi.qij(j, i) * F));
            SMat rhs(2 * N, 2 * N);
            if (i == j) rhs = L - K;
            SMat Ei = rho(Gen{'E', i, 1}, cfg);
            out.push_back(compare("REP-EF", {i, j}, Ei * F - F * Ei, rhs));
        }
    }
    // Serre relations: every word of length 4 equals its normal form
    for (Side side : {Side::Plus, Side::Minus}) {
        SystemPtr sys = side == Side::Plus ? plus_system() : minus_system();
        char kind = side == Side::Plus ? 'E' : 'F';
        for (uint64_t b = 0; b < 16; ++b) {
            Word w{b, 4};
            out.push_back(compare(side == Side::Plus ? "REP-SERRE-E" : "REP-SERRE-F", {static_cast<int>(b)},
                                  rho_word(w, kind, cfg), rho_eval(AlgElem(sys, w), cfg)));
        }
    }
    // matrix identities
    out.push_back(compare("REP-PCP", {N}, dft_Pinv(N) * cyclic_C(N) * dft_P(N), diag_D(N)));
    out.push_back(compare("REP-PPINV", {N}, dft_P(N) * dft_Pinv(N), SMat::identity(N)));
    out.push_back(compare("REP-WDC", {N}, cfg.omega() * (diag_D(N) * cyclic_C(N)), cyclic_C(N) * diag_D(N)));
    out.push_back(compare("REP-CN", {N}, mat_pow(cyclic_C(N), N), SMat::identity(N)));
    // closed forms
    for (int ki = 0; ki < 8; ++ki) {
        ImageKind k = static_cast<ImageKind>(ki);
        for (int n = is_imag(k) ? 1 : 0; n <= nmax; ++n) {
            SMat closed = closed_form_image(k, n, cfg);
            SMat rec = rho_root(k, n, cfg);
            out.push_back(compare("REP-" + to_string(k), {n}, rec, closed));
            if (n <= word_max) out.push_back(compare("REP-WORD-" + to_string(k), {n}, rho_eval(word_root(k, n), cfg), closed));
            // grading: conjugation by K_i, L_i
            Weight wt = image_weight(k, n);
            for (int i = 0; i < 2; ++i) {
                SMat K = rho(Gen{'K', i, 1}, cfg), L = rho(Gen{'L', i, 1}, cfg);
                bool okK = K * closed * inverse_diag(K) == chi(Weight::alpha(i), wt) * closed;
                bool okL = L * closed * inverse_diag(L) == chi(wt, Weight::alpha(i)).inv() * closed;
                out.push_back(CheckResult{"REP-GRADING-" + to_string(k), {n, i}, okK && okL, okK && okL ? "0" : "scaling"});
            }
        }
    }
    // periodicity of the real root images
    for (ImageKind k : {ImageKind::Ereal1, ImageKind::Ereal0, ImageKind::Freal1, ImageKind::Freal0}) {
        SMat a = closed_form_image(k, 0, cfg), b = closed_form_image(k, N, cfg);
        int r0 = 0;
        while (a.row(r0).empty()) ++r0;
        int c0 = a.row(r0).begin()->first;
        Scalar f = b.get(r0, c0) / a.get(r0, c0);
        out.push_back(compare("REP-PERIOD-" + to_string(k), {N}, b, f * a));
    }
    // block structure of the alpha_1 and alpha_0 subalgebras
    {
        bool ok1 = true, ok0 = true;
        for (char c : {'E', 'F', 'K', 'L'}) {
            ok1 = ok1 && block_invariant(rho(Gen{c, 1, 1}, cfg), 0, N);
            ok0 = ok0 && block_invariant(rho(Gen{c, 0, 1}, cfg), 1, N);
        }
        out.push_back(CheckResult{"REP-BLOCKS", {1}, ok1, ok1 ? "0" : "not block diagonal"});
        out.push_back(CheckResult{"REP-BLOCKS", {0}, ok0, ok0 ? "0" : "not block diagonal"});
    }
    return out;
}

std::vector<CheckResult> flat_index_report(const RepConfig& cfg, int nmax) {
    const int N = cfg.N;
    if (nmax < 0) nmax = 2 * N;
    std::vector<CheckResult> out;
    for (char c : {'K', 'L', 'E', 'F'})
        for (int i = 0; i < 2; ++i) {
            Gen g{c, i, 1};
            out.push_back(compare(std::string("FLAT-") + c + std::to_string(i), {N}, flat_form_generator(g, cfg), rho(g, cfg)));
        }
    for (int ki = 0; ki < 8; ++ki) {
        ImageKind k = static_cast<ImageKind>(ki);
        for (int n = is_imag(k) ? 1 : 0; n <= nmax; ++n)
            out.push_back(compare("FLAT-" + to_string(k), {N, n}, flat_form_image(k, n, cfg), closed_form_image(k, n, cfg)));
    }
    return out;
}

std::string to_json(const SMat& m) {
    nlohmann::ordered_json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    nlohmann::json entries = nlohmann::json::array();
    for (int i = 0; i < m.rows(); ++i)
        for (const auto& [c, v] : m.row(i)) entries.push_back({i, c, v.to_string()});
    j["entries"] = entries;
    return j.dump();
}

std::string to_text(const SMat& m) {
    std::ostringstream os;
    for (int i = 0; i < m.rows(); ++i)
        for (const auto& [c, v] : m.row(i)) os << "(" << i << "," << c << "): " << v.to_string() << "\n";
    return os.str();
}

}  // namespace uqaff
