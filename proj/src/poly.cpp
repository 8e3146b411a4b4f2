#include "uqaff/poly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace uqaff {

namespace {

constexpr const char* kVarNames[NVARS] = {"s", "a", "z", "w", "u", "v", "b1", "c1", "b2", "c2", "b3", "c3"};

bool mono_greater(const Term& x, const Term& y) { return x.m > y.m; }

}  // namespace

const char* var_name(int v) { return kVarNames[v]; }

int var_index(const std::string& name) {
    for (int i = 0; i < NVARS; ++i)
        if (name == kVarNames[i]) return i;
    return -1;
}

Poly Poly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), mono_greater);
    Poly p;
    for (auto& t : terms) {
        if (!p.t_.empty() && p.t_.back().m == t.m) {
            p.t_.back().c += t.c;
        } else {
            if (!p.t_.empty() && p.t_.back().c.is_zero()) p.t_.pop_back();
            p.t_.push_back(std::move(t));
        }
    }
    if (!p.t_.empty() && p.t_.back().c.is_zero()) p.t_.pop_back();
    return p;
}

Cyclotomic Poly::constant_term() const {
    if (!t_.empty() && t_.back().m.is_one()) return t_.back().c;
    return Cyclotomic();
}

int Poly::degree(int v) const {
    int d = 0;
    for (const auto& t : t_) d = std::max(d, t.m.deg(v));
    return d;
}

Mono Poly::min_mono() const {
    if (t_.empty()) return Mono{};
    Mono r = t_[0].m;
    for (const auto& t : t_) r = Mono::gcd(r, t.m);
    return r;
}

unsigned Poly::var_mask() const {
    unsigned mask = 0;
    for (const auto& t : t_)
        for (int v = 0; v < NVARS; ++v)
            if (t.m.deg(v)) mask |= 1u << v;
    return mask;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& t : r.t_) t.c = -t.c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.t_.empty()) return *this;
    if (t_.empty()) return *this = o;
    std::vector<Term> out;
    out.reserve(t_.size() + o.t_.size());
    size_t i = 0, j = 0;
    while (i < t_.size() || j < o.t_.size()) {
        if (j == o.t_.size() || (i < t_.size() && t_[i].m > o.t_[j].m)) {
            out.push_back(std::move(t_[i++]));
        } else if (i == t_.size() || o.t_[j].m > t_[i].m) {
            out.push_back(o.t_[j++]);
        } else {
            Cyclotomic c = std::move(t_[i].c);
            c += o.t_[j].c;
            if (!c.is_zero()) out.push_back({t_[i].m, std::move(c)});
            ++i;
            ++j;
        }
    }
    t_ = std::move(out);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.t_.empty() || b.t_.empty()) return Poly();
    if (a.t_.size() == 1) return b.mul_term(a.t_[0].m, a.t_[0].c);
    if (b.t_.size() == 1) return a.mul_term(b.t_[0].m, b.t_[0].c);
    std::vector<Term> terms;
    terms.reserve(a.t_.size() * b.t_.size());
    for (const auto& x : a.t_)
        for (const auto& y : b.t_) terms.push_back({x.m * y.m, x.c * y.c});
    return Poly::from_terms(std::move(terms));
}

Poly Poly::mul_term(const Mono& m, const Cyclotomic& c) const {
    if (c.is_zero()) return Poly();
    Poly r;
    r.t_.reserve(t_.size());
    for (const auto& t : t_) r.t_.push_back({t.m * m, t.c * c});
    return r;
}

Poly Poly::scaled(const Cyclotomic& c) const { return mul_term(Mono{}, c); }

Poly Poly::div_mono(const Mono& m) const {
    Poly r = *this;
    for (auto& t : r.t_) t.m = t.m / m;
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly r(1L), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

std::optional<Poly> Poly::try_div(const Poly& b) const {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (is_zero()) return Poly();
    if (b.t_.size() == 1) {
        const Mono& m = b.t_[0].m;
        for (const auto& t : t_)
            if (!m.divides(t.m)) return std::nullopt;
        return div_mono(m).scaled(b.t_[0].c.inv());
    }
    for (int v = 0; v < NVARS; ++v)
        if (b.degree(v) > degree(v)) return std::nullopt;
    Cyclotomic inv_lc = b.lead().c.inv();
    const Mono& lm = b.lead().m;
    Poly r = *this;
    std::vector<Term> q;
    while (!r.is_zero()) {
        const Term& lt = r.lead();
        if (!lm.divides(lt.m)) return std::nullopt;
        Mono qm = lt.m / lm;
        Cyclotomic qc = lt.c * inv_lc;
        r -= b.mul_term(qm, qc);
        q.push_back({qm, std::move(qc)});
    }
    Poly out;
    out.t_ = std::move(q);  // produced in decreasing order
    return out;
}

Poly Poly::exact_div(const Poly& b) const {
    auto q = try_div(b);
    if (!q) throw std::logic_error("inexact polynomial division");
    return std::move(*q);
}

std::vector<Poly> Poly::coeffs_in(int v) const {
    std::vector<Poly> out(degree(v) + 1);
    std::vector<std::vector<Term>> buckets(out.size());
    for (const auto& t : t_) {
        Term u = t;
        int d = u.m.deg(v);
        u.m.e[v + 1] = 0;
        u.m.e[0] = static_cast<uint16_t>(u.m.e[0] - d);
        buckets[d].push_back(std::move(u));
    }
    for (size_t d = 0; d < out.size(); ++d) out[d] = Poly::from_terms(std::move(buckets[d]));
    return out;
}

Poly Poly::from_coeffs(const std::vector<Poly>& c, int v) {
    std::vector<Term> terms;
    for (size_t d = 0; d < c.size(); ++d) {
        Mono m = Mono::var(v, static_cast<int>(d));
        for (const auto& t : c[d].t_) terms.push_back({t.m * m, t.c});
    }
    return Poly::from_terms(std::move(terms));
}

Poly Poly::substitute(const std::array<const Poly*, NVARS>& vals) const {
    std::array<std::vector<Poly>, NVARS> powers;
    Poly out;
    for (const auto& t : t_) {
        Poly term(Mono{}, t.c);
        Mono keep;
        for (int v = 0; v < NVARS; ++v) {
            int d = t.m.deg(v);
            if (!d) continue;
            if (!vals[v]) {
                keep = keep * Mono::var(v, d);
                continue;
            }
            auto& pw = powers[v];
            if (pw.empty()) pw.push_back(Poly(1L));
            while (static_cast<int>(pw.size()) <= d) pw.push_back(pw.back() * *vals[v]);
            term = term * pw[d];
        }
        out += term.mul_term(keep, Cyclotomic(1L));
    }
    return out;
}

bool Poly::operator==(const Poly& o) const {
    if (t_.size() != o.t_.size()) return false;
    for (size_t i = 0; i < t_.size(); ++i)
        if (t_[i].m != o.t_[i].m || t_[i].c != o.t_[i].c) return false;
    return true;
}

std::complex<double> Poly::eval(const std::array<std::complex<double>, NVARS>& x) const {
    std::complex<double> r = 0;
    for (const auto& t : t_) {
        std::complex<double> v = t.c.to_complex();
        for (int i = 0; i < NVARS; ++i) {
            int d = t.m.deg(i);
            if (d) v *= std::pow(x[i], d);
        }
        r += v;
    }
    return r;
}

mpz_class Poly::denominator_lcm() const {
    mpz_class l = 1;
    for (const auto& t : t_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.c.denominator_lcm().get_mpz_t());
    return l;
}

mpz_class Poly::numerator_gcd() const {
    mpz_class g = 0;
    for (const auto& t : t_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.numerator_gcd().get_mpz_t());
    return g;
}

std::string Poly::to_string() const {
    if (t_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : t_) {
        std::string mono;
        for (int v = 0; v < NVARS; ++v) {
            int d = t.m.deg(v);
            if (!d) continue;
            if (!mono.empty()) mono += "*";
            mono += kVarNames[v];
            if (d > 1) mono += "^" + std::to_string(d);
        }
        std::string coef;
        bool neg = false;
        if (t.c.is_compound()) {
            coef = t.c.to_string();
        } else {
            coef = t.c.to_string();
            if (coef[0] == '-') {
                neg = true;
                coef = coef.substr(1);
            }
        }
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        if (mono.empty()) {
            out += coef;
        } else if (coef == "1") {
            out += mono;
        } else {
            out += coef + "*" + mono;
        }
    }
    return out;
}

}  // namespace uqaff
