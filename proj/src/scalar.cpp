#include "uqaff/scalar.hpp"

#include <cctype>
#include <cmath>

namespace uqaff {

Scalar Scalar::frac(const Poly& n, const Poly& d) {
    if (d.is_zero()) throw std::domain_error("division by zero");
    Scalar r;
    if (n.is_zero()) return r;
    if (d.is_constant()) {
        r.num_ = n.scaled(d.constant_term().inv());
        r.den_ = Poly(1L);
        return r;
    }
    Poly g = gcd(n, d);
    Poly nn = g.is_one() ? n : n.exact_div(g);
    Poly dd = g.is_one() ? d : d.exact_div(g);
    Cyclotomic lc = dd.lead().c;
    if (!lc.is_one()) {
        Cyclotomic inv = lc.inv();
        nn = nn.scaled(inv);
        dd = dd.scaled(inv);
    }
    r.num_ = std::move(nn);
    r.den_ = std::move(dd);
    return r;
}

Scalar Scalar::var(int v, int k) {
    if (k >= 0) return Scalar(Poly::var(v, k));
    Scalar r;
    r.num_ = Poly(1L);
    r.den_ = Poly::var(v, -k);
    return r;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar operator+(const Scalar& x, const Scalar& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.den_ == y.den_) {
        Poly n = x.num_ + y.num_;
        if (x.den_.is_one()) return Scalar(n);
        return Scalar::frac(n, x.den_);
    }
    if (x.den_.is_one()) {
        Scalar r;
        r.num_ = x.num_ * y.den_ + y.num_;
        r.den_ = y.den_;  // gcd(x*d + n, d) = gcd(n, d) = 1
        return r;
    }
    if (y.den_.is_one()) return y + x;
    Poly g = gcd(x.den_, y.den_);
    if (g.is_one()) {
        Scalar r;
        r.num_ = x.num_ * y.den_ + y.num_ * x.den_;
        Poly d = x.den_ * y.den_;
        r.den_ = d;
        if (r.num_.is_zero()) return Scalar();
        return r;  // both denominators monic, so the product is monic
    }
    Poly xd = x.den_.exact_div(g), yd = y.den_.exact_div(g);
    Poly n = x.num_ * yd + y.num_ * xd;
    if (n.is_zero()) return Scalar();
    Poly g2 = gcd(n, g);
    Scalar r;
    if (g2.is_one()) {
        r.num_ = std::move(n);
        r.den_ = x.den_ * yd;
    } else {
        r.num_ = n.exact_div(g2);
        r.den_ = (x.den_ * yd).exact_div(g2);
    }
    Cyclotomic lc = r.den_.lead().c;
    if (!lc.is_one()) {
        Cyclotomic inv = lc.inv();
        r.num_ = r.num_.scaled(inv);
        r.den_ = r.den_.scaled(inv);
    }
    return r;
}

Scalar operator*(const Scalar& x, const Scalar& y) {
    if (x.is_zero() || y.is_zero()) return Scalar();
    if (x.den_.is_one() && y.den_.is_one()) return Scalar(x.num_ * y.num_);
    // (a/b)(c/d) with g1 = gcd(a, d), g2 = gcd(c, b)
    Poly g1 = y.den_.is_one() ? Poly(1L) : gcd(x.num_, y.den_);
    Poly g2 = x.den_.is_one() ? Poly(1L) : gcd(y.num_, x.den_);
    Poly a = g1.is_one() ? x.num_ : x.num_.exact_div(g1);
    Poly d = g1.is_one() ? y.den_ : y.den_.exact_div(g1);
    Poly c = g2.is_one() ? y.num_ : y.num_.exact_div(g2);
    Poly b = g2.is_one() ? x.den_ : x.den_.exact_div(g2);
    Scalar r;
    r.num_ = a * c;
    r.den_ = b * d;
    Cyclotomic lc = r.den_.lead().c;
    if (!lc.is_one()) {
        Cyclotomic inv = lc.inv();
        r.num_ = r.num_.scaled(inv);
        r.den_ = r.den_.scaled(inv);
    }
    return r;
}

Scalar Scalar::inv() const {
    if (is_zero()) throw std::domain_error("inverse of zero scalar");
    Scalar r;
    r.num_ = den_;
    r.den_ = num_;
    Cyclotomic lc = r.den_.lead().c;
    if (!lc.is_one()) {
        Cyclotomic inv = lc.inv();
        r.num_ = r.num_.scaled(inv);
        r.den_ = r.den_.scaled(inv);
    }
    return r;
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    Scalar r;
    r.num_ = num_.pow(static_cast<unsigned>(e));
    r.den_ = den_.pow(static_cast<unsigned>(e));
    return r;
}

Scalar Scalar::substitute(const std::map<int, Scalar>& vals) const {
    // Substitute into num and den separately, clearing the denominators of the values.
    auto sub = [&](const Poly& p) {
        Scalar out;
        for (const auto& t : p.terms()) {
            Scalar term(t.c);
            Mono keep;
            for (int v = 0; v < NVARS; ++v) {
                int d = t.m.deg(v);
                if (!d) continue;
                auto it = vals.find(v);
                if (it == vals.end()) {
                    keep = keep * Mono::var(v, d);
                } else {
                    term *= it->second.pow(d);
                }
            }
            out += term * Scalar(Poly(keep, Cyclotomic(1L)));
        }
        return out;
    };
    if (den_.is_one()) return sub(num_);
    return sub(num_) / sub(den_);
}

std::complex<double> eval_numeric(const Scalar& x, const Assignment& at) {
    std::complex<double> d = x.den().eval(at);
    double scale = 0;
    for (const auto& t : x.den().terms()) {
        std::complex<double> v = t.c.to_complex();
        for (int i = 0; i < NVARS; ++i)
            if (t.m.deg(i)) v *= std::pow(at[i], t.m.deg(i));
        scale += std::abs(v);
    }
    if (std::abs(d) <= 1e-14 * scale || d == 0.0) throw PoleError("pole at numeric assignment");
    return x.num().eval(at) / d;
}

Cyclotomic cyclotomic_root(int n) { return Cyclotomic::root(n, 1); }

Scalar qnumber_round(int n, const Scalar& x) {
    Scalar r, p(1L);
    for (int m = 0; m < n; ++m) {
        r += p;
        p *= x;
    }
    return r;
}

Scalar qint(int n) { return Scalar::q(-(n - 1)) * qnumber_round(n, Scalar::q(2)); }

Scalar qfactorial_round(int n, const Scalar& x) {
    Scalar r(1L);
    for (int m = 1; m <= n; ++m) r *= qnumber_round(m, x);
    return r;
}

// ---------------------------------------------------------------- text I/O

std::string Scalar::to_string() const {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), num_.denominator_lcm().get_mpz_t(), den_.denominator_lcm().get_mpz_t());
    Poly n = num_.scaled(Cyclotomic(mpq_class(l)));
    Poly d = den_.scaled(Cyclotomic(mpq_class(l)));
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), n.numerator_gcd().get_mpz_t(), d.numerator_gcd().get_mpz_t());
    if (g != 1) {
        mpq_class ig(mpz_class(1), g);
        n = n.scaled(Cyclotomic(ig));
        d = d.scaled(Cyclotomic(ig));
    }
    if (d.is_one()) return n.to_string();
    return "(" + n.to_string() + ")/(" + d.to_string() + ")";
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    Scalar run() {
        Scalar r = expr();
        skip();
        if (p_ != s_.size()) fail("trailing input");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& what) {
        throw ScalarParseError("scalar parse error at " + std::to_string(p_) + ": " + what + " in '" + s_ + "'");
    }
    void skip() {
        while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
    }
    bool eat(char c) {
        skip();
        if (p_ < s_.size() && s_[p_] == c) {
            ++p_;
            return true;
        }
        return false;
    }
    mpz_class integer() {
        skip();
        size_t b = p_;
        while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
        if (b == p_) fail("expected integer");
        return mpz_class(s_.substr(b, p_ - b));
    }
    Scalar expr() {
        Scalar r = term();
        while (true) {
            if (eat('+')) {
                r += term();
            } else if (eat('-')) {
                r -= term();
            } else {
                return r;
            }
        }
    }
    Scalar term() {
        Scalar r = unary();
        while (true) {
            if (eat('*')) {
                r *= unary();
            } else if (eat('/')) {
                Scalar d = unary();
                if (d.is_zero()) fail("division by zero");
                r /= d;
            } else {
                return r;
            }
        }
    }
    Scalar unary() {
        if (eat('-')) return -unary();
        return power();
    }
    Scalar power() {
        Scalar base = atom();
        if (eat('^')) {
            bool neg = eat('-');
            bool paren = !neg && eat('(');
            if (paren) neg = eat('-');
            mpz_class e = integer();
            if (paren && !eat(')')) fail("expected ')'");
            if (!e.fits_slong_p()) fail("exponent too large");
            long k = e.get_si();
            if (neg && base.is_zero()) fail("division by zero");
            return base.pow(neg ? -k : k);
        }
        return base;
    }
    Scalar atom() {
        skip();
        if (p_ >= s_.size()) fail("unexpected end");
        char c = s_[p_];
        if (c == '(') {
            ++p_;
            Scalar r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Scalar(mpq_class(integer()));
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t b = p_;
            while (p_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[p_]))) ++p_;
            std::string id = s_.substr(b, p_ - b);
            if (id == "E") {
                if (!eat('(')) fail("expected '(' after E");
                mpz_class n = integer();
                if (!eat(')')) fail("expected ')'");
                if (n < 1 || !n.fits_sint_p()) fail("bad root order");
                return Scalar::root(static_cast<int>(n.get_si()));
            }
            if (id == "q") return Scalar::q();
            int v = var_index(id);
            if (v < 0) fail("unknown symbol '" + id + "'");
            return Scalar::var(v);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    const std::string& s_;
    size_t p_ = 0;
};

}  // namespace

Scalar Scalar::parse(const std::string& text) { return Parser(text).run(); }

}  // namespace uqaff
