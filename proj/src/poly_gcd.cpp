// Multivariate gcd: monomial content split, variable elimination when a
// variable occurs on one side only, then content/primitive-part recursion with
// subresultant pseudo-remainder sequences in a chosen main variable.

#include <algorithm>
#include <bit>

#include "uqaff/poly.hpp"

namespace uqaff {

namespace {

using UPoly = std::vector<Poly>;

void trim(UPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int udeg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

Poly gcd_impl(const Poly& a, const Poly& b);

Poly content(const UPoly& p) {
    Poly g;
    for (const auto& c : p) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c : gcd_impl(g, c);
        if (g.is_constant()) return Poly(1L);
    }
    return g;
}

UPoly div_coeffs(UPoly p, const Poly& c) {
    if (c.is_one()) return p;
    for (auto& x : p) x = x.exact_div(c);
    return p;
}

UPoly prem(const UPoly& a, const UPoly& b) {
    UPoly r = a;
    int db = udeg(b);
    int e = udeg(a) - db + 1;
    const Poly& lb = b.back();
    while (!r.empty() && udeg(r) >= db) {
        Poly lr = r.back();
        int shift = udeg(r) - db;
        for (auto& x : r) x = x * lb;
        for (int j = 0; j <= db; ++j) r[j + shift] -= lr * b[j];
        trim(r);
        --e;
    }
    if (e > 0 && !r.empty()) {
        Poly f = lb.pow(static_cast<unsigned>(e));
        for (auto& x : r) x = x * f;
    }
    return r;
}

UPoly subresultant_gcd(UPoly a, UPoly b) {
    if (udeg(a) < udeg(b)) std::swap(a, b);
    Poly g(1L), h(1L);
    while (true) {
        int d = udeg(a) - udeg(b);
        UPoly r = prem(a, b);
        if (r.empty()) break;
        if (udeg(r) == 0) return UPoly{Poly(1L)};
        a = std::move(b);
        Poly divisor = g * h.pow(static_cast<unsigned>(d));
        b = div_coeffs(std::move(r), divisor);
        g = a.back();
        if (d == 1) {
            h = g;
        } else if (d > 1) {
            h = g.pow(static_cast<unsigned>(d)).exact_div(h.pow(static_cast<unsigned>(d - 1)));
        }
    }
    return div_coeffs(b, content(b));
}

// Both inputs have constant coefficients: Euclid over the coefficient field.
UPoly field_gcd(UPoly a, UPoly b) {
    if (udeg(a) < udeg(b)) std::swap(a, b);
    while (!b.empty()) {
        Cyclotomic inv = b.back().constant_term().inv();
        int db = udeg(b);
        while (!a.empty() && udeg(a) >= db) {
            Cyclotomic f = a.back().constant_term() * inv;
            int shift = udeg(a) - db;
            for (int j = 0; j <= db; ++j) a[j + shift] -= b[j].scaled(f);
            trim(a);
        }
        std::swap(a, b);
    }
    return a;
}

Poly gcd_primitive(const Poly& a, const Poly& b) {
    if (a.is_constant() || b.is_constant()) return Poly(1L);
    if (a.size() <= b.size()) {
        if (b.try_div(a)) return a;
    } else if (a.try_div(b)) {
        return b;
    }
    unsigned ma = a.var_mask(), mb = b.var_mask();
    if (unsigned only = ma & ~mb) {
        int v = std::countr_zero(only);
        return gcd_impl(content(a.coeffs_in(v)), b);
    }
    if (unsigned only = mb & ~ma) {
        int v = std::countr_zero(only);
        return gcd_impl(a, content(b.coeffs_in(v)));
    }
    int best = -1, best_deg = 1 << 30;
    for (int v = 0; v < NVARS; ++v) {
        if (!(ma >> v & 1)) continue;
        int d = std::max(a.degree(v), b.degree(v));
        if (d < best_deg) {
            best_deg = d;
            best = v;
        }
    }
    int v = best;
    UPoly ua = a.coeffs_in(v), ub = b.coeffs_in(v);
    Poly ca = content(ua), cb = content(ub);
    Poly c = gcd_impl(ca, cb);
    ua = div_coeffs(std::move(ua), ca);
    ub = div_coeffs(std::move(ub), cb);
    UPoly g = (ma == (1u << v)) ? field_gcd(std::move(ua), std::move(ub))
                                : subresultant_gcd(std::move(ua), std::move(ub));
    return c * Poly::from_coeffs(g, v);
}

Poly gcd_impl(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.is_constant() || b.is_constant()) return Poly(1L);
    Mono mA = a.min_mono(), mB = b.min_mono();
    Mono g = Mono::gcd(mA, mB);
    Poly pa = mA.is_one() ? a : a.div_mono(mA);
    Poly pb = mB.is_one() ? b : b.div_mono(mB);
    Poly r = gcd_primitive(pa, pb);
    return g.is_one() ? r : r.mul_term(g, Cyclotomic(1L));
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
    Poly g = gcd_impl(a, b);
    if (g.is_zero()) return g;
    return g.scaled(g.lead().c.inv());
}

}  // namespace uqaff
