#include "uqaff/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace uqaff {

namespace {

std::vector<long long> poly_div_exact(std::vector<long long> a, const std::vector<long long>& b) {
    // b monic
    std::vector<long long> q(a.size() - b.size() + 1, 0);
    for (int i = static_cast<int>(a.size()) - 1; i >= static_cast<int>(b.size()) - 1; --i) {
        long long c = a[i];
        if (c == 0) continue;
        int shift = i - static_cast<int>(b.size()) + 1;
        q[shift] = c;
        for (size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    }
    return q;
}

}  // namespace

const std::vector<long long>& cyclotomic_polynomial(int n) {
    static std::recursive_mutex mu;
    static std::map<int, std::vector<long long>> cache;
    std::lock_guard<std::recursive_mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
    // x^n - 1 divided by Phi_d for every proper divisor d
    std::vector<long long> p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d) continue;
        p = poly_div_exact(p, cyclotomic_polynomial(d));
    }
    return cache.emplace(n, p).first->second;
}

int euler_phi(int n) {
    int r = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            r -= r / p;
        }
    }
    if (n > 1) r -= r / n;
    return r;
}

std::vector<mpq_class> Cyclotomic::reduce(std::vector<mpq_class> v, int n) {
    const auto& phi = cyclotomic_polynomial(n);
    int d = static_cast<int>(phi.size()) - 1;
    for (int i = static_cast<int>(v.size()) - 1; i >= d; --i) {
        if (sgn(v[i]) == 0) continue;
        mpq_class c = v[i];
        for (int j = 0; j < d; ++j) {
            if (phi[j] != 0) v[i - d + j] -= c * static_cast<long>(phi[j]);
        }
        v[i] = 0;
    }
    v.resize(d);
    return v;
}

void Cyclotomic::normalize() {
    bool rational = true;
    for (size_t j = 1; j < c_.size(); ++j) {
        if (sgn(c_[j]) != 0) {
            rational = false;
            break;
        }
    }
    if (rational) {
        order_ = 1;
        c_.resize(1);
    }
}

Cyclotomic Cyclotomic::root(int n, long k) {
    if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
    long e = ((k % n) + n) % n;
    std::vector<mpq_class> v(e + 1);
    v[e] = 1;
    return Cyclotomic(n, reduce(std::move(v), n));
}

bool Cyclotomic::is_zero() const { return order_ == 1 && sgn(c_[0]) == 0; }
bool Cyclotomic::is_one() const { return order_ == 1 && c_[0] == 1; }

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Cyclotomic Cyclotomic::lifted(int m) const {
    if (m == order_) return *this;
    if (m % order_) throw std::invalid_argument("lift target not a multiple of the order");
    int step = m / order_;
    std::vector<mpq_class> v(static_cast<size_t>(step) * (c_.size() - 1) + 1);
    for (size_t j = 0; j < c_.size(); ++j) v[j * step] = c_[j];
    Cyclotomic r;
    r.order_ = m;
    r.c_ = reduce(std::move(v), m);
    return r;  // deliberately not normalized: callers combine it at order m
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    if (o.order_ == 1) {
        c_[0] += o.c_[0];
        if (order_ != 1) normalize();
        return *this;
    }
    if (order_ == o.order_) {
        for (size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
    } else {
        int m = std::lcm(order_, o.order_);
        Cyclotomic a = lifted(m), b = o.lifted(m);
        for (size_t j = 0; j < a.c_.size(); ++j) a.c_[j] += b.c_[j];
        *this = std::move(a);
    }
    normalize();
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const mpq_class& r) {
    for (auto& x : c_) x *= r;
    if (sgn(r) == 0) normalize();
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    if (o.order_ == 1) return *this *= o.c_[0];
    if (order_ == 1) {
        mpq_class r = c_[0];
        *this = o;
        return *this *= r;
    }
    int m = std::lcm(order_, o.order_);
    Cyclotomic a = lifted(m), b = o.lifted(m);
    std::vector<mpq_class> v(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (sgn(a.c_[i]) == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (sgn(b.c_[j]) == 0) continue;
            v[i + j] += a.c_[i] * b.c_[j];
        }
    }
    order_ = m;
    c_ = reduce(std::move(v), m);
    normalize();
    return *this;
}

Cyclotomic Cyclotomic::inv() const {
    if (is_zero()) throw std::domain_error("inverse of zero cyclotomic number");
    if (order_ == 1) return Cyclotomic(mpq_class(1) / c_[0]);
    // Solve (multiplication-by-this) * x = e_0 by Gaussian elimination.
    int d = static_cast<int>(c_.size());
    std::vector<std::vector<mpq_class>> m(d, std::vector<mpq_class>(d + 1));
    for (int j = 0; j < d; ++j) {
        std::vector<mpq_class> v(2 * d);
        for (int i = 0; i < d; ++i) v[i + j] = c_[i];
        v = reduce(std::move(v), order_);
        for (int i = 0; i < d; ++i) m[i][j] = v[i];
    }
    m[0][d] = 1;
    for (int col = 0; col < d; ++col) {
        int piv = col;
        while (sgn(m[piv][col]) == 0) ++piv;
        std::swap(m[piv], m[col]);
        mpq_class inv = 1 / m[col][col];
        for (int j = col; j <= d; ++j) m[col][j] *= inv;
        for (int i = 0; i < d; ++i) {
            if (i == col || sgn(m[i][col]) == 0) continue;
            mpq_class f = m[i][col];
            for (int j = col; j <= d; ++j) m[i][j] -= f * m[col][j];
        }
    }
    std::vector<mpq_class> x(d);
    for (int i = 0; i < d; ++i) x[i] = m[i][d];
    return Cyclotomic(order_, std::move(x));
}

Cyclotomic Cyclotomic::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    Cyclotomic r(1L), b = *this;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    if (order_ == o.order_) return c_ == o.c_;
    if (order_ == 1 || o.order_ == 1) return false;  // normalized: exactly one side is irrational
    int m = std::lcm(order_, o.order_);
    return lifted(m).c_ == o.lifted(m).c_;
}

std::complex<double> Cyclotomic::to_complex() const {
    std::complex<double> r = 0;
    for (size_t j = 0; j < c_.size(); ++j) {
        if (sgn(c_[j]) == 0) continue;
        double ang = 2.0 * std::numbers::pi * static_cast<double>(j) / order_;
        r += c_[j].get_d() * std::polar(1.0, ang);
    }
    return r;
}

mpz_class Cyclotomic::denominator_lcm() const {
    mpz_class l = 1;
    for (const auto& x : c_) {
        if (sgn(x) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    }
    return l;
}

mpz_class Cyclotomic::numerator_gcd() const {
    mpz_class g = 0;
    for (const auto& x : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
    return g;
}

bool Cyclotomic::is_compound() const {
    int nz = 0;
    for (const auto& x : c_) nz += sgn(x) != 0;
    return nz > 1;
}

std::string Cyclotomic::to_string() const {
    std::string out;
    bool first = true;
    for (size_t j = 0; j < c_.size(); ++j) {
        const mpq_class& x = c_[j];
        if (sgn(x) == 0) continue;
        mpq_class ax = abs(x);
        if (first) {
            if (sgn(x) < 0) out += "-";
        } else {
            out += sgn(x) < 0 ? " - " : " + ";
        }
        first = false;
        if (j == 0) {
            out += ax.get_str();
        } else {
            if (ax != 1) out += ax.get_str() + "*";
            out += "E(" + std::to_string(order_) + ")";
            if (j > 1) out += "^" + std::to_string(j);
        }
    }
    if (first) return "0";
    if (is_compound()) return "(" + out + ")";
    return out;
}

}  // namespace uqaff
