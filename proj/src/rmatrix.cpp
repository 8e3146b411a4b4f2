#include "uqaff/rmatrix.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace uqaff {

namespace {

Scalar q(int k = 1) { return Scalar::q(k); }
const Scalar zv = Scalar::var(Z);
const Scalar sv = Scalar::var(S);

Scalar spec_a(const Scalar& x, const RepConfig& cfg) { return x.substitute({{A, cfg.a()}}); }

SMat truncate_mat(const SMat& m, int K) {
    return m.map<Scalar>([K](const Scalar& x) { return truncate_z(x, K); });
}

AMat lift(const SMat& m) {
    return m.map<AtomPoly>([](const Scalar& x) { return AtomPoly(x); });
}

int mod(int x, int m) { return ((x % m) + m) % m; }

}  // namespace

std::vector<Scalar> series_coeffs(const Scalar& x, int K) {
    std::vector<Poly> n = x.num().coeffs_in(Z), d = x.den().coeffs_in(Z);
    if (d.empty() || d[0].is_zero()) throw std::domain_error("series_coeffs: denominator vanishes at z = 0");
    Scalar d0inv = Scalar(d[0]).inv();
    std::vector<Scalar> c(K + 1);
    for (int k = 0; k <= K; ++k) {
        Scalar acc = k < static_cast<int>(n.size()) ? Scalar(n[k]) : Scalar();
        for (int i = 1; i <= k && i < static_cast<int>(d.size()); ++i)
            if (!d[i].is_zero()) acc -= Scalar(d[i]) * c[k - i];
        c[k] = acc * d0inv;
    }
    return c;
}

Scalar truncate_z(const Scalar& x, int K) {
    if (x.den().degree(Z) > 0) throw std::invalid_argument("truncate_z: denominator depends on z");
    if (x.num().degree(Z) <= K) return x;
    std::vector<Term> keep;
    for (const Term& t : x.num().terms())
        if (t.m.deg(Z) <= K) keep.push_back(t);
    return Scalar::frac(Poly::from_terms(std::move(keep)), x.den());
}

Scalar series_expand(const Scalar& x, int K) {
    auto c = series_coeffs(x, K);
    Scalar r;
    for (int k = 0; k <= K; ++k)
        if (!c[k].is_zero()) r += c[k] * Scalar::var(Z, k);
    return r;
}

Scalar ASeries::poly() const {
    Scalar r;
    for (int k = 0; k <= K; ++k) r += c[k] * Scalar::var(Z, k);
    return r;
}

namespace {

// Dense polynomials in x = q^2 over Q, used for the A(z) coefficients. With
// D_k = prod_j (x^j + 1)^floor(k/j), D_k c_k is a polynomial, so no gcds are needed.
using UPoly = std::vector<mpq_class>;

void trim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

UPoly umul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

void uadd(UPoly& a, const UPoly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    trim(a);
}

// p * (x^j + sign)
UPoly ubinom(const UPoly& p, int j, int sign) {
    if (p.empty()) return {};
    UPoly r(p.size() + j);
    for (size_t i = 0; i < p.size(); ++i) {
        r[i + j] += p[i];
        r[i] += sign * p[i];
    }
    trim(r);
    return r;
}

UPoly ushift(const UPoly& p, int k) {
    if (p.empty()) return {};
    UPoly r(p.size() + k);
    std::copy(p.begin(), p.end(), r.begin() + k);
    return r;
}

// p * D_hi / D_lo, given exponent vectors with lo <= hi
UPoly cofactor(UPoly p, const std::vector<int>& hi, const std::vector<int>& lo) {
    for (size_t j = 1; j < hi.size(); ++j)
        for (int e = (j < lo.size() ? lo[j] : 0); e < hi[j]; ++e) p = ubinom(p, static_cast<int>(j), 1);
    return p;
}

struct DenseA {
    std::vector<UPoly> num;                // D_k c_k
    std::vector<std::vector<int>> dexp;    // exponent of (x^j + 1) in D_k
};

DenseA dense_a(int K) {
    DenseA a;
    a.num.resize(K + 1);
    a.dexp.assign(K + 1, std::vector<int>(K + 1, 0));
    for (int k = 0; k <= K; ++k)
        for (int j = 1; j <= k; ++j) a.dexp[k][j] = k / j;
    a.num[0] = {mpq_class(1)};
    for (int k = 1; k <= K; ++k) {
        // k c_k = sum_j j p_j c_{k-j}, p_j = -(x^j - 1)/(x^j + 1)
        UPoly acc;
        for (int j = 1; j <= k; ++j) {
            std::vector<int> lo = a.dexp[k - j];
            lo[j] += 1;
            UPoly t = cofactor(ubinom(a.num[k - j], j, -1), a.dexp[k], lo);
            for (auto& c : t) c *= mpq_class(-1, k);
            uadd(acc, t);
        }
        a.num[k] = std::move(acc);
    }
    return a;
}

Poly to_poly_s(const UPoly& p) {
    std::vector<Term> ts;
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0) ts.push_back({Mono::var(S, static_cast<int>(4 * i)), Cyclotomic(p[i])});
    return Poly::from_terms(std::move(ts));
}

UPoly dexp_poly(const std::vector<int>& e) { return cofactor({mpq_class(1)}, e, {}); }

}  // namespace

ASeries a_series(int K) {
    if (K < 1) throw std::invalid_argument("a_series: order must be at least 1");
    DenseA d = dense_a(K);
    ASeries a;
    a.K = K;
    for (int k = 0; k <= K; ++k) a.c.push_back(Scalar::frac(to_poly_s(d.num[k]), to_poly_s(dexp_poly(d.dexp[k]))));
    return a;
}

Scalar rescale_z(const Scalar& poly, const Scalar& f) { return poly.substitute({{Z, f * zv}}); }

FunctionalCheck a_functional_check(int K) {
    if (K < 1) throw std::invalid_argument("a_functional_check: order must be at least 1");
    FunctionalCheck r;
    DenseA a = dense_a(K);
    // coefficients of (1-z)(1-x^2 z)/(1-x z)^2 are polynomials in x
    std::vector<UPoly> ratio(K + 1);
    for (int k = 0; k <= K; ++k) {
        // (1 - x z)^-2 = sum (m+1) x^m z^m
        auto g = [](int m) {
            UPoly p(m + 1);
            p[m] = m + 1;
            return p;
        };
        UPoly t = g(k);
        if (k >= 1) {
            UPoly u = g(k - 1);
            u = ubinom(u, 2, 1);  // (x^2 + 1) g_{k-1}, from -z - x^2 z
            for (auto& c : u) c = -c;
            uadd(t, u);
        }
        if (k >= 2) uadd(t, ushift(g(k - 2), 2));
        ratio[k] = t;
    }
    for (int k = 0; k <= K; ++k) {
        // A(z) A(x z) = (1 - x z)/(1 - z): sum_i c_i c_{k-i} x^{k-i}, times D_k
        UPoly lhs;
        for (int i = 0; i <= k; ++i) {
            std::vector<int> lo(K + 1);
            for (int j = 1; j <= K; ++j) lo[j] = a.dexp[i][j] + a.dexp[k - i][j];
            uadd(lhs, cofactor(ushift(umul(a.num[i], a.num[k - i]), k - i), a.dexp[k], lo));
        }
        UPoly rhs = dexp_poly(a.dexp[k]);
        if (k >= 1) rhs = ubinom(rhs, 1, -1), std::for_each(rhs.begin(), rhs.end(), [](mpq_class& c) { c = -c; });
        if (r.first_bad_product < 0 && lhs != rhs) r.first_bad_product = k;
        // A(x^2 z) = ratio(z) A(z), times D_k
        UPoly l2 = ushift(a.num[k], 2 * k), r2;
        for (int i = 0; i <= k; ++i) uadd(r2, cofactor(umul(ratio[i], a.num[k - i]), a.dexp[k], a.dexp[k - i]));
        if (r.first_bad_ratio < 0 && l2 != r2) r.first_bad_ratio = k;
    }
    r.product_ok = r.first_bad_product < 0;
    r.ratio_ok = r.first_bad_ratio < 0;
    return r;
}

// ---- AtomPoly ----

AtomPoly AtomPoly::atom(int j, int t, int exponent) {
    AtomPoly p;
    AtomKey k;
    if (exponent) k[{j, t}] = exponent;
    p.add(k, Scalar(1L));
    return p;
}

void AtomPoly::add(const AtomKey& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

AtomPoly operator+(const AtomPoly& x, const AtomPoly& y) {
    AtomPoly r = x;
    for (const auto& [k, c] : y.t_) r.add(k, c);
    return r;
}

AtomPoly operator-(const AtomPoly& x, const AtomPoly& y) {
    AtomPoly r = x;
    for (const auto& [k, c] : y.t_) r.add(k, -c);
    return r;
}

AtomPoly operator*(const AtomPoly& x, const AtomPoly& y) {
    AtomPoly r;
    for (const auto& [kx, cx] : x.t_) {
        for (const auto& [ky, cy] : y.t_) {
            AtomKey k = kx;
            for (const auto& [a, e] : ky) {
                int& slot = k[a];
                slot += e;
                if (slot == 0) k.erase(a);
            }
            r.add(k, cx * cy);
        }
    }
    return r;
}

AtomPoly AtomPoly::reduced(int N) const {
    AtomPoly out;
    for (const auto& [key, coeff] : t_) {
        AtomKey k = key;
        Scalar c = coeff;
        for (;;) {
            auto it = std::find_if(k.begin(), k.end(), [](const auto& p) { return p.first.first != 0; });
            if (it == k.end()) break;
            auto [j, t] = it->first;
            int e = it->second;
            k.erase(it);
            int j2 = j > 0 ? j - 1 : j + 1;
            Scalar x = q(2 * j2) * Scalar::root(N, t) * zv;
            // A(q^2 x) A(x) = (1 - q^2 x)/(1 - x)
            Scalar f = j > 0 ? (1 - q(2) * x) / (1 - x) : (1 - x) / (1 - q(-2) * x);
            c *= f.pow(e);
            int& slot = k[{j2, t}];
            slot -= e;
            if (slot == 0) k.erase({j2, t});
        }
        out.add(k, c);
    }
    return out;
}

Scalar AtomPoly::linear_coeff(int t) const {
    AtomKey k{{{0, t}, 1}};
    auto it = t_.find(k);
    return it == t_.end() ? Scalar() : it->second;
}

AtomPoly AtomPoly::substitute(const std::map<int, Scalar>& vals) const {
    AtomPoly r;
    for (const auto& [k, c] : t_) r.add(k, c.substitute(vals));
    return r;
}

std::string AtomPoly::to_string() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : t_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        for (const auto& [a, e] : k) {
            os << "*A(";
            if (a.first) os << "q^" << 2 * a.first << "*";
            if (a.second) os << "w^" << a.second << "*";
            os << "z)";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

// ---- factors ----

SMat r_factor_alpha(int i, const RepConfig& cfg) {
    const int N = cfg.N;
    Scalar uvq2z = cfg.u * cfg.v * q(2) * zv;
    Scalar den = 1 - uvq2z.pow(N);
    SMat sum(4 * N * N, 4 * N * N);
    for (int n = 0; n < N; ++n) {
        if (i == 1) {
            SMat e = block_tensor(unit2(1, 2), diag_D(N) * cyc_pow(N, n));
            SMat f = block_tensor(unit2(2, 1), cyc_pow(N, -n));
            sum = sum + (uvq2z * cfg.omega()).pow(n) * kron(e, f);
        } else {
            SMat e = block_tensor(unit2(2, 1), diag_pow(N, -1) * cyc_pow(N, n + 1));
            SMat f = block_tensor(unit2(1, 2), cyc_pow(N, -(n + 1)));
            sum = sum + uvq2z.pow(n) * kron(e, f);
        }
    }
    Scalar pref = i == 1 ? (q(2) - 1) * cfg.u / den : zv * (q(2) - 1) * cfg.v / den;
    return SMat::identity(4 * N * N) - pref * sum;
}

SMat r_factor_alpha_naive(int i, const RepConfig& cfg, int terms) {
    const int N = cfg.N;
    SMat r = SMat::identity(4 * N * N);
    ImageKind ek = i == 1 ? ImageKind::Ereal1 : ImageKind::Ereal0;
    ImageKind fk = i == 1 ? ImageKind::Freal1 : ImageKind::Freal0;
    for (int n = 0; n < terms; ++n) {
        PBWMonomial m;
        (i == 1 ? m.real1 : m.real0)[n] = 1;
        Scalar pair = spec_a(pbw_diagonal_value(m), cfg);
        int zpow = i == 1 ? n : n + 1;  // rho_lambda (x) rho_mu contributes (lambda/mu)^{#E0}
        r = r + (Scalar::var(Z, zpow) / pair) * kron(closed_form_image(ek, n, cfg), closed_form_image(fk, n, cfg));
    }
    return r;
}

namespace {

SMat mat_exp_trunc(const SMat& x, int K) {
    SMat result = SMat::identity(x.rows()), term = SMat::identity(x.rows());
    for (int j = 1; j <= K; ++j) {
        term = truncate_mat(term * x, K);
        term = Scalar(static_cast<long>(j)).inv() * term;
        if (term.is_zero()) break;
        result = result + term;
    }
    return result;
}

}  // namespace

SMat r_factor_delta_series(const RepConfig& cfg, int K) {
    const int N = cfg.N;
    Scalar w = cfg.omega();
    SMat x(4 * N * N, 4 * N * N);
    for (int n = 1; n <= K; ++n) {
        Scalar c = -(zv * w * cfg.u * cfg.v * q(4)).pow(n) / Scalar(static_cast<long>(n)) * (q(n) - q(-n)) / (q(n) + q(-n));
        SMat e = block_tensor(diag2(q(-2 * n), -1), cyc_pow(N, n));
        SMat f = block_tensor(diag2(1, -Scalar::root(N, -n) * q(-2 * n)), cyc_pow(N, -n));
        x = x + c * kron(e, f);
    }
    return mat_exp_trunc(x, K);
}

SMat r_factor_delta_product(const RepConfig& cfg, int K) {
    const int N = cfg.N;
    SMat r = SMat::identity(4 * N * N);
    for (int n = 1; n <= K; ++n) {
        SMat e = closed_form_image(ImageKind::EimagTilde, n, cfg);
        SMat f = closed_form_image(ImageKind::FimagTilde, n, cfg);
        SMat ef = kron(e, f), pw = SMat::identity(4 * N * N);
        SMat factor = SMat::identity(4 * N * N);
        for (int k = 1; n * k <= K; ++k) {
            pw = pw * ef;
            PBWMonomial m;
            m.imag[n] = k;
            Scalar pair = spec_a(pbw_diagonal_value(m), cfg);
            factor = factor + (Scalar::var(Z, n * k) / pair) * pw;
        }
        r = truncate_mat(r * factor, K);
    }
    return r;
}

AMat r_factor_delta_atoms(const RepConfig& cfg) {
    if (cfg.u * cfg.v != q(-2)) throw std::invalid_argument("atoms mode requires u v = q^-2");
    const int N = cfg.N, d = 2 * N;
    AMat diag(d * d, d * d);
    for (int s = 0; s < N; ++s) {
        for (int t = 0; t < N; ++t) {
            int st = mod(s - t, N), st1 = mod(1 + s - t, N);
            // arguments z w uv q^2 w^{s-t}, z uv w^{s-t}, z w uv q^4 w^{s-t}, z uv q^2 w^{s-t} at uv = q^-2
            AtomPoly blocks[2][2] = {{AtomPoly::atom(0, st1), AtomPoly::atom(-1, st, -1)},
                                     {AtomPoly::atom(1, st1, -1), AtomPoly::atom(0, st)}};
            for (int i1 = 0; i1 < 2; ++i1)
                for (int i2 = 0; i2 < 2; ++i2) {
                    int f1 = 2 * s + i1, f2 = 2 * t + i2;
                    diag.set(f1 * d + f2, f1 * d + f2, blocks[i1][i2].reduced(N));
                }
        }
    }
    SMat P = block_tensor(SMat::identity(2), dft_P(N)), Pi = block_tensor(SMat::identity(2), dft_Pinv(N));
    return lift(kron(P, P)) * diag * lift(kron(Pi, Pi));
}

SMat r_cartan(int N) {
    const int d = 2 * N;
    SMat m(d * d, d * d);
    for (int s = 1; s <= N; ++s)
        for (int t = 1; t <= N; ++t)
            for (int i1 = 0; i1 < 2; ++i1)
                for (int i2 = 0; i2 < 2; ++i2) {
                    Scalar v;
                    if (i1 == 0 && i2 == 0) v = sv.inv() * Scalar::root(N, -s + t);
                    if (i1 == 0 && i2 == 1) v = sv * Scalar::root(N, t - 1);
                    if (i1 == 1 && i2 == 0) v = sv * Scalar::root(N, -s + 1);
                    if (i1 == 1 && i2 == 1) v = sv.inv();
                    int f1 = 2 * (s - 1) + i1, f2 = 2 * (t - 1) + i2;
                    m.set(f1 * d + f2, f1 * d + f2, v);
                }
    return m;
}

SMat r_cartan_long_form(int N) {
    const int d = 2 * N;
    SMat m(d * d, d * d);
    for (int s = 1; s <= N; ++s)
        for (int t = 1; t <= N; ++t)
            for (int i1 = 0; i1 < 2; ++i1)
                for (int i2 = 0; i2 < 2; ++i2) {
                    // exponent -(s-1)(b2 - t) + (b1 - s)(t-1) with b = 2 for the first block index, 1 for the second
                    int b1 = i1 == 0 ? 2 : 1, b2 = i2 == 0 ? 2 : 1;
                    int e = -(s - 1) * (b2 - t) + (b1 - s) * (t - 1);
                    Scalar sq = (i1 == i2) ? sv.inv() : sv;
                    int f1 = 2 * (s - 1) + i1, f2 = 2 * (t - 1) + i2;
                    m.set(f1 * d + f2, f1 * d + f2, sq * Scalar::root(N, e));
                }
    return m;
}

RepConfig rmatrix_config(int N) {
    RepConfig c;
    c.N = N;
    c.u = c.v = q(-1);
    return c;
}

AMat assemble_R_atoms(int N) {
    RepConfig c = rmatrix_config(N);
    AMat r = lift(r_factor_alpha(1, c)) * r_factor_delta_atoms(c) * lift(r_factor_alpha(0, c)) * lift(r_cartan(N));
    return r.map<AtomPoly>([N](const AtomPoly& x) { return x.reduced(N); });
}

SMat assemble_R_series(int N, int K) {
    RepConfig c = rmatrix_config(N);
    auto expand = [K](const SMat& m) { return m.map<Scalar>([K](const Scalar& x) { return series_expand(x, K); }); };
    SMat r = truncate_mat(expand(r_factor_alpha(1, c)) * r_factor_delta_series(c, K), K);
    r = truncate_mat(r * expand(r_factor_alpha(0, c)), K);
    return r * r_cartan(N);
}

SMat atoms_to_series(const AMat& m, int N, int K) {
    Scalar a = a_series(K).poly();
    std::vector<Scalar> at(N);
    for (int t = 0; t < N; ++t) at[t] = rescale_z(a, Scalar::root(N, t));
    return m.map<Scalar>([&](const AtomPoly& x) {
        Scalar r;
        for (const auto& [k, c] : x.terms()) {
            Scalar term = series_expand(c, K);
            for (const auto& [atom, e] : k) {
                if (atom.first != 0 || e < 0) throw std::invalid_argument("atoms_to_series: reduce first");
                for (int p = 0; p < e; ++p) term = truncate_z(term * at[mod(atom.second, N)], K);
            }
            r += term;
        }
        return r;
    });
}

// ---- transcriptions ----

SMat r1_transcription() {
    Scalar den = q(2) * zv - 1;
    SMat m(4, 4);
    m.set(0, 0, 1);
    m.set(1, 1, q() * (zv - 1) / den);
    m.set(1, 2, (q(2) - 1) / den);
    m.set(2, 1, zv * (q(2) - 1) / den);
    m.set(2, 2, q() * (zv - 1) / den);
    m.set(3, 3, 1);
    return sv.inv() * m;
}

SMat r2_transcription() {
    const Scalar B = Scalar::var(B1), C = Scalar::var(C1);
    const Scalar qq = q(), den = (q(2) * zv - 1) * (q(2) * zv + 1), d = (qq - 1) * (qq + 1);
    const Scalar P1 = qq * (q(2) * zv.pow(2) * B - q(2) * zv * C + zv * C - B) / den;
    const Scalar P2 = qq * (q(2) * zv.pow(2) * C - q(2) * zv * B - C + zv * B) / den;
    const Scalar P3 = d * (q(2) * zv * C + B) / den;
    const Scalar P4 = d * (q(2) * zv * B + C) / den;
    const Scalar P5 = d * zv * (q(2) * zv * B + C) / den;
    const Scalar P6 = d * zv * (q(2) * zv * C + B) / den;
    struct E {
        int r, c;
        Scalar v;
    };
    const std::vector<E> es{
        {1, 1, B},    {1, 6, -C},   {2, 2, -B},   {2, 5, C},    {3, 3, P1},   {3, 8, -P2},  {3, 9, P3},
        {3, 14, P4},  {4, 4, -P1},  {4, 7, P2},   {4, 10, P3},  {4, 13, P4},  {5, 2, C},    {5, 5, -B},
        {6, 1, -C},   {6, 6, B},    {7, 4, -P2},  {7, 7, P1},   {7, 10, P4},  {7, 13, P3},  {8, 3, P2},
        {8, 8, -P1},  {8, 9, P4},   {8, 14, P3},  {9, 3, P5},   {9, 8, -P6},  {9, 9, P1},   {9, 14, P2},
        {10, 4, -P5}, {10, 7, P6},  {10, 10, P1}, {10, 13, P2}, {11, 11, B},  {11, 16, C},  {12, 12, B},
        {12, 15, C},  {13, 4, P6},  {13, 7, -P5}, {13, 10, -P2}, {13, 13, -P1}, {14, 3, -P6}, {14, 8, P5},
        {14, 9, -P2}, {14, 14, -P1}, {15, 12, C}, {15, 15, B},  {16, 11, C},  {16, 16, B}};
    SMat m(16, 16);
    for (const auto& e : es) m.set(e.r - 1, e.c - 1, sv.inv() * e.v);
    return m;
}

SMat r1_from_atoms(const AMat& r) {
    return r.map<Scalar>([](const AtomPoly& x) {
        AtomPoly y = x.reduced(1);
        Scalar c = y.linear_coeff(0);
        if (y.terms().size() != 1 || c.is_zero()) throw std::invalid_argument("N = 1 entry is not a multiple of A(z): " + y.to_string());
        return c;
    });
}

SMat r2_from_atoms(const AMat& r) {
    const Scalar B = Scalar::var(B1), C = Scalar::var(C1);
    return r.map<Scalar>([&](const AtomPoly& x) {
        AtomPoly y = x.reduced(2);
        Scalar a0 = y.linear_coeff(0), a1 = y.linear_coeff(1);
        size_t n = (a0.is_zero() ? 0 : 1) + (a1.is_zero() ? 0 : 1);
        if (n != y.terms().size()) throw std::invalid_argument("N = 2 entry is not linear in A(z), A(-z): " + y.to_string());
        return a0 * (B + C) + a1 * (B - C);
    });
}

SMat to_display_order(const SMat& r, int N) {
    const int d = 2 * N;
    if (r.rows() != d * d) throw std::invalid_argument("to_display_order: expected a (2N)^2 square matrix");
    auto leg = [N](int f) { return (f % 2) * N + f / 2; };
    auto pos = [&](int k) { return leg(k / d) * d + leg(k % d); };
    SMat out(d * d, d * d);
    for (int i = 0; i < d * d; ++i)
        for (const auto& [j, v] : r.row(i)) out.set(pos(i), pos(j), v);
    return out;
}

std::vector<std::string> diff_report(const SMat& ours, const SMat& display) {
    std::vector<std::string> out;
    for (int i = 0; i < ours.rows(); ++i)
        for (int j = 0; j < ours.cols(); ++j) {
            Scalar a = ours.get(i, j), b = display.get(i, j);
            if (a != b)
                out.push_back("(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): " + a.to_string() + " | " +
                              b.to_string());
        }
    return out;
}

// ---- Yang-Baxter ----

YbeResult ybe_exact(int N) {
    YbeResult res;
    AMat atoms = assemble_R_atoms(N);
    const Scalar w = Scalar::var(W);
    SMat r1, r2, r3;
    if (N == 1) {
        SMat m = sv * r1_from_atoms(atoms);
        r1 = m;
        r2 = m.map<Scalar>([&](const Scalar& x) { return x.substitute({{Z, zv * w}}); });
        r3 = m.map<Scalar>([&](const Scalar& x) { return x.substitute({{Z, w}}); });
    } else if (N == 2) {
        Scalar f = sv * (q(2) * zv - 1) * (q(2) * zv + 1);
        SMat m = f * r2_from_atoms(atoms);
        r1 = m;
        r2 = m.map<Scalar>([&](const Scalar& x) {
            return x.substitute({{Z, zv * w}, {B1, Scalar::var(B2)}, {C1, Scalar::var(C2)}});
        });
        r3 = m.map<Scalar>([&](const Scalar& x) {
            return x.substitute({{Z, w}, {B1, Scalar::var(B3)}, {C1, Scalar::var(C3)}});
        });
    } else {
        throw std::invalid_argument("exact YBE is available for N = 1 and N = 2");
    }
    SMat d = ybe_residual(r1, r2, r3, 2 * N);
    res.pass = d.is_zero();
    res.residual = static_cast<double>(d.nnz());
    res.detail = res.pass ? "0" : std::to_string(d.nnz()) + " nonzero residual entries";
    return res;
}

std::complex<double> a_numeric(std::complex<double> x, std::complex<double> qv) {
    double ax = std::abs(x);
    if (ax >= 1) throw std::domain_error("A(x) needs |x| < 1");
    std::complex<double> sum = 0, xk = 1, q2 = qv * qv, q2k = 1;
    for (int k = 1; k < 100000; ++k) {
        xk *= x;
        q2k *= q2;
        std::complex<double> r = (q2k - 1.0) / (q2k + 1.0);
        sum -= xk * r / static_cast<double>(k);
        // |r_k| is bounded by max(1, |r_k|) for the remaining terms once |q^2k| is far from 1
        double bound = std::pow(ax, k + 1) / ((k + 1) * (1 - ax)) * std::max(1.0, std::abs(r));
        if (bound < 1e-17) break;
    }
    return std::exp(sum);
}

SparseMatrix<std::complex<double>> r_numeric(const AMat& atoms, int N, std::complex<double> qv, std::complex<double> z) {
    Assignment at{};
    at[S] = std::sqrt(qv);
    at[Z] = z;
    const double pi = std::acos(-1.0);
    std::complex<double> w = std::polar(1.0, 2 * pi / N);
    return atoms.map<std::complex<double>>([&](const AtomPoly& x) {
        std::complex<double> r = 0;
        for (const auto& [k, c] : x.terms()) {
            std::complex<double> term = eval_numeric(c, at);
            for (const auto& [a, e] : k) {
                std::complex<double> arg = std::pow(qv, 2 * a.first) * std::pow(w, a.second) * z;
                term *= std::pow(a_numeric(arg, qv), e);
            }
            r += term;
        }
        return r;
    });
}

bool disk_constraints_ok(std::complex<double> qv, std::complex<double> z, std::complex<double> w) {
    std::complex<double> q2 = qv * qv;
    for (auto u : {z, w, z * w, z * q2, w * q2, z * w / q2, z / q2, w / q2})
        if (std::abs(u) >= 1) return false;
    return true;
}

namespace {

double inf_norm(const SparseMatrix<std::complex<double>>& m) {
    double best = 0;
    for (int i = 0; i < m.rows(); ++i) {
        double s = 0;
        for (const auto& [j, v] : m.row(i)) s += std::abs(v);
        best = std::max(best, s);
    }
    return best;
}

}  // namespace

YbeResult ybe_numeric(int N, std::complex<double> qv, std::complex<double> z, std::complex<double> w) {
    YbeResult res;
    if (!disk_constraints_ok(qv, z, w)) {
        res.detail = "disk constraints violated";
        return res;
    }
    AMat atoms = assemble_R_atoms(N);
    auto a = embed(r_numeric(atoms, N, qv, z), "12", 2 * N);
    auto b = embed(r_numeric(atoms, N, qv, z * w), "13", 2 * N);
    auto c = embed(r_numeric(atoms, N, qv, w), "23", 2 * N);
    auto lhs = a * b * c, rhs = c * b * a;
    double scale = std::max(inf_norm(lhs), inf_norm(rhs));
    res.residual = scale > 0 ? inf_norm(lhs - rhs) / scale : 0;
    res.pass = res.residual <= 1e-9;
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << res.residual;
    res.detail = os.str();
    return res;
}

// ---- Cartan lemma ----

bool cartan_universal_check(int x, int y, const std::array<int, 6>& chars) {
    if (x < 1 || x % 2 == 0) throw std::invalid_argument("cartan_universal_check: x must be odd and positive");
    if (y < 1 || std::gcd(x, y) != 1) throw std::invalid_argument("cartan_universal_check: gcd(x, y) must be 1");
    const long L = static_cast<long>(x) * y;
    // theta = E(L); zeta = theta^y, omega = theta^x, xi = zeta^((x+1)/2)
    auto m = [L](long e) { return ((e % L) + L) % L; };
    // v with u x + v y = 1
    long v = 0;
    for (long c = 0; c < x; ++c)
        if (m(c * y) % x == 1 % x) {
            v = c;
            break;
        }
    auto [a, b, x0, x1, y0, y1] = chars;
    long eK1 = m(static_cast<long>(y) * a + static_cast<long>(x) * x1);
    long eK0 = m(-static_cast<long>(y) * a + static_cast<long>(x) * x0);
    long eL1 = m(static_cast<long>(y) * b + static_cast<long>(x) * y1);
    long eL0 = m(-static_cast<long>(y) * b + static_cast<long>(x) * y0);
    long eKK2 = m(v * y % L * eK1 + eK0);  // f1(K1^{vy} K0)
    long eLL2 = m(v * y % L * eL0 + eL1);  // f2(L0^{vy} L1)
    long c0 = m(-2L * y - x);               // zeta^-2 omega^-1
    std::vector<long> count(L, 0);
    for (long s = 0; s < L; ++s)
        for (long t = 0; t < L; ++t)
            for (long g = 0; g < y; ++g)
                for (long h = 0; h < y; ++h) {
                    long e = -s * t % L * c0 - g * h * x + s * eK1 + g * eKK2 + t * eL0 + h * eLL2;
                    ++count[m(e)];
                }
    Cyclotomic sum;
    for (long r = 0; r < L; ++r)
        if (count[r]) sum += Cyclotomic(count[r]) * Cyclotomic::root(static_cast<int>(L), r);
    sum *= mpq_class(1, static_cast<long>(x) * y * y);
    long want = m(static_cast<long>(y) * (x + 1) / 2 % L * a % L * b + static_cast<long>(x) * (-x1 * y0 + x0 * y1));
    return sum == Cyclotomic::root(static_cast<int>(L), want);
}

}  // namespace uqaff
