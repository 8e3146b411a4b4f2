#include "uqaff/ualg.hpp"

#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace uqaff {

namespace {

const Bicharacter& generic_chi() {
    static const Bicharacter b = Bicharacter::generic();
    return b;
}

// chi values recur constantly; cache them by weight pair.
const Scalar& chi(const Weight& l, const Weight& m) {
    static std::mutex mu;
    static std::map<std::array<int, 4>, Scalar> cache;
    std::array<int, 4> key{l.x, l.y, m.x, m.y};
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, generic_chi()(l, m)).first;
    return it->second;
}

Cartan cartan_add(const Cartan& a, const Cartan& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]}; }

Cartan negate(const Cartan& a) { return {-a[0], -a[1], -a[2], -a[3]}; }

std::string cartan_string(const Cartan& c) {
    static const char* names[] = {"K0", "K1", "L0", "L1"};
    std::string out;
    for (int i = 0; i < 4; ++i) {
        if (!c[i]) continue;
        if (!out.empty()) out += "*";
        out += names[i];
        if (c[i] != 1) out += "^" + std::to_string(c[i]);
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------- TriKey

std::string TriKey::to_string() const {
    std::vector<std::string> parts;
    if (f.len) parts.push_back(f.to_string('F'));
    std::string c = cartan_string(this->c);
    if (!c.empty()) parts.push_back(c);
    if (e.len) parts.push_back(e.to_string('E'));
    if (parts.empty()) return "1";
    std::string out = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) out += " * " + parts[i];
    return out;
}

std::vector<Gen> parse_gens(const std::string& text) {
    std::vector<Gen> out;
    std::string s = text;
    for (char& ch : s)
        if (ch == '*') ch = ' ';
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) {
        if (tok.size() < 2 || std::string("EFKL").find(tok[0]) == std::string::npos || (tok[1] != '0' && tok[1] != '1'))
            throw std::invalid_argument("bad generator token '" + tok + "'");
        Gen g{tok[0], tok[1] - '0', 1};
        if (tok.size() > 2) {
            if (tok[2] != '^') throw std::invalid_argument("bad generator token '" + tok + "'");
            try {
                size_t used = 0;
                g.power = std::stoi(tok.substr(3), &used);
                if (used != tok.size() - 3) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw std::invalid_argument("bad exponent in '" + tok + "'");
            }
        }
        if ((g.kind == 'E' || g.kind == 'F') && g.power < 0)
            throw std::invalid_argument("negative power of " + tok.substr(0, 2));
        out.push_back(g);
    }
    return out;
}

// --------------------------------------------------------------- TriElem

TriElem::TriElem(const Scalar& c) {
    if (!c.is_zero()) t_.emplace(TriKey{}, c);
}

TriElem::TriElem(const TriKey& k, const Scalar& c) {
    if (!c.is_zero()) t_.emplace(k, c);
}

TriElem TriElem::from(const AlgElem& x) {
    TriElem r;
    if (x.is_zero()) return r;
    bool minus = x.side() == Side::Minus;
    for (const auto& [w, c] : x.terms()) r.add(minus ? TriKey{w, {}, {}} : TriKey{{}, {}, w}, c);
    return r;
}

void TriElem::add(const TriKey& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.emplace(k, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

Scalar TriElem::coeff(const TriKey& k) const {
    auto it = t_.find(k);
    return it == t_.end() ? Scalar() : it->second;
}

bool TriElem::is_homogeneous() const {
    if (t_.empty()) return true;
    Weight w = t_.begin()->first.weight();
    for (const auto& kv : t_)
        if (kv.first.weight() != w) return false;
    return true;
}

Weight TriElem::weight() const {
    if (t_.empty()) throw std::invalid_argument("weight of zero element");
    if (!is_homogeneous()) throw std::invalid_argument("element is not homogeneous");
    return t_.begin()->first.weight();
}

TriElem TriElem::operator-() const {
    TriElem r = *this;
    for (auto& kv : r.t_) kv.second = -kv.second;
    return r;
}

TriElem& TriElem::operator+=(const TriElem& o) {
    for (const auto& [k, c] : o.t_) add(k, c);
    return *this;
}

TriElem& TriElem::operator-=(const TriElem& o) {
    for (const auto& [k, c] : o.t_) add(k, -c);
    return *this;
}

TriElem operator*(const Scalar& c, const TriElem& x) {
    TriElem r;
    if (c.is_zero()) return r;
    for (const auto& [k, d] : x.t_) r.t_.emplace(k, c * d);
    return r;
}

TriElem TriElem::times_E(int i) const {
    TriElem r;
    auto sys = plus_system();
    for (const auto& [k, c] : t_) {
        for (const auto& [w, d] : sys->normal_form(k.e + Word::letter(i))) r.add(TriKey{k.f, k.c, w}, c * d);
    }
    return r;
}

TriElem TriElem::times_F(int j) const {
    TriElem r;
    auto plus = plus_system(), minus = minus_system();
    const Weight aj = Weight::alpha(j);
    Cartan kj{}, lj{};
    kj[j] = 1;
    lj[2 + j] = 1;
    for (const auto& [k, c] : t_) {
        // e F_j = F_j e + sum over letters E_j of e: e_<p (-K_j + L_j) e_>p
        for (int p = 0; p < k.e.len; ++p) {
            if (k.e.at(p) != j) continue;
            Word pre = k.e.sub(0, p), post = k.e.sub(p + 1, k.e.len - p - 1);
            Weight mu = pre.weight();
            Scalar ck = -c * chi(aj * -1, mu), cl = c * chi(mu, aj);
            for (const auto& [w, d] : plus->normal_form(pre + post)) {
                r.add(TriKey{k.f, cartan_add(k.c, kj), w}, ck * d);
                r.add(TriKey{k.f, cartan_add(k.c, lj), w}, cl * d);
            }
        }
        // K_beta F_j = chi(beta, a_j)^-1 F_j K_beta, L_gamma F_j = chi(a_j, gamma) F_j L_gamma
        Scalar move = c * chi(cartan_k(k.c) * -1, aj) * chi(aj, cartan_l(k.c));
        for (const auto& [w, d] : minus->normal_form(k.f + Word::letter(j))) r.add(TriKey{w, k.c, k.e}, move * d);
    }
    return r;
}

TriElem TriElem::times_cartan(const Cartan& d) const {
    TriElem r;
    Weight beta = cartan_k(d), gamma = cartan_l(d);
    for (const auto& [k, c] : t_) {
        // e K_beta = chi(beta, wt e)^-1 K_beta e, e L_gamma = chi(wt e, gamma) L_gamma e
        Weight we = k.e.weight();
        r.add(TriKey{k.f, cartan_add(k.c, d), k.e}, c * chi(beta * -1, we) * chi(we, gamma));
    }
    return r;
}

TriElem operator*(const TriElem& x, const TriElem& y) {
    TriElem r;
    if (x.is_zero() || y.is_zero()) return r;
    auto plus = plus_system();
    std::map<Word, TriElem> by_f;  // x times each F-prefix
    by_f.emplace(Word{}, x);
    std::function<const TriElem&(const Word&)> xf = [&](const Word& f) -> const TriElem& {
        auto it = by_f.find(f);
        if (it != by_f.end()) return it->second;
        TriElem v = xf(f.sub(0, f.len - 1)).times_F(f.at(f.len - 1));
        return by_f.emplace(f, std::move(v)).first->second;
    };
    for (const auto& [k, c] : y.t_) {
        TriElem t = xf(k.f).times_cartan(k.c);
        for (const auto& [tk, tc] : t.t_) {
            Scalar cc = c * tc;
            if (!k.e.len) {
                r.add(tk, cc);
                continue;
            }
            for (const auto& [w, d] : plus->normal_form(tk.e + k.e)) r.add(TriKey{tk.f, tk.c, w}, cc * d);
        }
    }
    return r;
}

std::string TriElem::to_string() const {
    if (t_.empty()) return "0";
    std::string out;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += "(" + it->second.to_string() + ") * " + it->first.to_string();
    }
    return out;
}

TriElem tri_normal_form(const std::vector<Gen>& word) {
    TriElem r = TriElem::one();
    for (const Gen& g : word) {
        switch (g.kind) {
            case 'E':
                for (int t = 0; t < g.power; ++t) r = r.times_E(g.index);
                break;
            case 'F':
                for (int t = 0; t < g.power; ++t) r = r.times_F(g.index);
                break;
            case 'K':
            case 'L': {
                Cartan d{};
                d[(g.kind == 'K' ? 0 : 2) + g.index] = g.power;
                r = r.times_cartan(d);
                break;
            }
            default:
                throw std::invalid_argument("unknown generator kind");
        }
    }
    return r;
}

TriElem pow(const TriElem& x, int n) {
    if (n < 0) throw std::invalid_argument("negative power of an algebra element");
    TriElem r = TriElem::one();
    for (int i = 0; i < n; ++i) r = r * x;
    return r;
}

TriElem commutator(const TriElem& x, const TriElem& y) { return x * y - y * x; }

TriElem qbracket(const TriElem& x, const TriElem& y) {
    if (x.is_zero() || y.is_zero()) return TriElem();
    return x * y - chi(x.weight(), y.weight()) * (y * x);
}

TriElem qbracket_bar(const TriElem& x, const TriElem& y) {
    if (x.is_zero() || y.is_zero()) return TriElem();
    return x * y - chi(y.weight(), x.weight()) * (y * x);
}

// ------------------------------------------------------------ TensorElem

void TensorElem::add(const std::vector<TriKey>& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.emplace(k, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

TensorElem TensorElem::pure(const std::vector<TriElem>& legs) {
    TensorElem r(static_cast<int>(legs.size()));
    std::vector<TriKey> key(legs.size());
    std::function<void(size_t, const Scalar&)> rec = [&](size_t i, const Scalar& c) {
        if (i == legs.size()) {
            r.add(key, c);
            return;
        }
        for (const auto& [k, d] : legs[i].terms()) {
            key[i] = k;
            rec(i + 1, c * d);
        }
    };
    rec(0, Scalar(1L));
    return r;
}

TensorElem& TensorElem::operator+=(const TensorElem& o) {
    if (t_.empty()) arity_ = o.arity_;
    for (const auto& [k, c] : o.t_) add(k, c);
    return *this;
}

TensorElem& TensorElem::operator-=(const TensorElem& o) {
    if (t_.empty()) arity_ = o.arity_;
    for (const auto& [k, c] : o.t_) add(k, -c);
    return *this;
}

TensorElem operator*(const Scalar& c, const TensorElem& x) {
    TensorElem r(x.arity_);
    if (c.is_zero()) return r;
    for (const auto& [k, d] : x.t_) r.t_.emplace(k, c * d);
    return r;
}

TensorElem operator*(const TensorElem& x, const TensorElem& y) {
    TensorElem r(x.arity_);
    for (const auto& [kx, cx] : x.t_) {
        for (const auto& [ky, cy] : y.t_) {
            std::vector<TriElem> legs;
            legs.reserve(kx.size());
            for (size_t l = 0; l < kx.size(); ++l) legs.push_back(TriElem(kx[l], Scalar(1L)) * TriElem(ky[l], Scalar(1L)));
            r += (cx * cy) * TensorElem::pure(legs);
        }
    }
    return r;
}

std::string TensorElem::to_string() const {
    if (t_.empty()) return "0";
    std::string out;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += "(" + it->second.to_string() + ")";
        for (size_t l = 0; l < it->first.size(); ++l) out += (l ? " (x) " : " * ") + it->first[l].to_string();
    }
    return out;
}

// ------------------------------------------------------------ Hopf maps

namespace {

TensorElem cop_generator(char kind, int i) {
    Weight a = Weight::alpha(i);
    if (kind == 'E')
        return TensorElem::pure({TriElem::E(i), TriElem::one()}) + TensorElem::pure({TriElem::K(a), TriElem::E(i)});
    return TensorElem::pure({TriElem::F(i), TriElem::L(a)}) + TensorElem::pure({TriElem::one(), TriElem::F(i)});
}

const TensorElem& cop_word(const Word& w, char kind) {
    static std::recursive_mutex mu;
    static std::map<std::pair<Word, char>, TensorElem> cache;
    std::lock_guard<std::recursive_mutex> lock(mu);
    auto key = std::make_pair(w, kind);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    TensorElem v;
    if (w.len == 0)
        v = TensorElem::pure({TriElem::one(), TriElem::one()});
    else
        v = cop_word(w.sub(0, w.len - 1), kind) * cop_generator(kind, w.at(w.len - 1));
    return cache.emplace(key, std::move(v)).first->second;
}

}  // namespace

TensorElem coproduct(const TriElem& x) {
    TensorElem r(2);
    for (const auto& [k, c] : x.terms()) {
        TensorElem t = cop_word(k.f, 'F') * TensorElem::pure({TriElem::cartan(k.c), TriElem::cartan(k.c)});
        r += c * (t * cop_word(k.e, 'E'));
    }
    return r;
}

TensorElem coproduct_on_leg(const TensorElem& x, int leg) {
    TensorElem r(x.arity() + 1);
    for (const auto& [k, c] : x.terms()) {
        TensorElem d = coproduct(TriElem(k[leg], Scalar(1L)));
        for (const auto& [dk, dc] : d.terms()) {
            std::vector<TriKey> nk(k.begin(), k.begin() + leg);
            nk.push_back(dk[0]);
            nk.push_back(dk[1]);
            nk.insert(nk.end(), k.begin() + leg + 1, k.end());
            r.add(nk, c * dc);
        }
    }
    return r;
}

TensorElem flip(const TensorElem& x) {
    TensorElem r(2);
    for (const auto& [k, c] : x.terms()) r.add({k[1], k[0]}, c);
    return r;
}

TriElem multiply(const TensorElem& x) {
    TriElem r;
    for (const auto& [k, c] : x.terms()) {
        TriElem p = TriElem(k[0], Scalar(1L));
        for (size_t l = 1; l < k.size(); ++l) p = p * TriElem(k[l], Scalar(1L));
        r += c * p;
    }
    return r;
}

TensorElem apply_leg(const TensorElem& x, int leg, TriElem (*f)(const TriElem&)) {
    TensorElem r(x.arity());
    for (const auto& [k, c] : x.terms()) {
        TriElem img = f(TriElem(k[leg], Scalar(1L)));
        for (const auto& [ik, ic] : img.terms()) {
            std::vector<TriKey> nk = k;
            nk[leg] = ik;
            r.add(nk, c * ic);
        }
    }
    return r;
}

namespace {

// Image of a single letter under S (inverse = false) or S^-1 (inverse = true).
TriElem antipode_letter(char kind, int i, bool inverse) {
    Weight a = Weight::alpha(i);
    if (kind == 'E') return inverse ? -(TriElem::E(i) * TriElem::K(a * -1)) : -(TriElem::K(a * -1) * TriElem::E(i));
    return inverse ? -(TriElem::L(a * -1) * TriElem::F(i)) : -(TriElem::F(i) * TriElem::L(a * -1));
}

TriElem antipode_impl(const TriElem& x, bool inverse) {
    static std::mutex mu;
    static std::map<std::tuple<Word, char, bool>, TriElem> cache;
    auto word_image = [&](const Word& w, char kind) {
        {
            std::lock_guard<std::mutex> lock(mu);
            auto it = cache.find({w, kind, inverse});
            if (it != cache.end()) return it->second;
        }
        // anti-homomorphism: reverse the letters
        TriElem v = TriElem::one();
        for (int p = w.len - 1; p >= 0; --p) v = v * antipode_letter(kind, w.at(p), inverse);
        std::lock_guard<std::mutex> lock(mu);
        cache.emplace(std::make_tuple(w, kind, inverse), v);
        return v;
    };
    TriElem r;
    for (const auto& [k, c] : x.terms()) {
        TriElem t = word_image(k.e, 'E') * TriElem::cartan(negate(k.c)) * word_image(k.f, 'F');
        r += c * t;
    }
    return r;
}

}  // namespace

TriElem antipode(const TriElem& x) { return antipode_impl(x, false); }
TriElem antipode_inverse(const TriElem& x) { return antipode_impl(x, true); }

Scalar counit(const TriElem& x) {
    Scalar r;
    for (const auto& [k, c] : x.terms())
        if (!k.f.len && !k.e.len) r += c;
    return r;
}

// --------------------------------------------------------------- pairing

Scalar f_lambda(const TriElem& x, const Weight& lambda) {
    return x.coeff(TriKey{{}, make_cartan({}, lambda), {}});
}

Scalar pairing_words(const Word& e, const Word& f) {
    if (e.weight() != f.weight()) return Scalar();
    if (e.len == 0) return Scalar(1L);
    static std::mutex mu;
    static std::map<std::pair<Word, Word>, Scalar> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({e, f});
        if (it != cache.end()) return it->second;
    }
    // f_lambda(e' E_i f): E_i meets each F_i of f; only the L_i half survives f_lambda,
    // moved to the right end past the remaining letters.
    int i = e.at(e.len - 1);
    Word head = e.sub(0, e.len - 1);
    Weight ai = Weight::alpha(i);
    Scalar r;
    for (int p = 0; p < f.len; ++p) {
        if (f.at(p) != i) continue;
        Word pre = f.sub(0, p), post = f.sub(p + 1, f.len - p - 1);
        Scalar sub = pairing_words(head, pre + post);
        if (!sub.is_zero()) r += chi(post.weight(), ai) * sub;
    }
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(std::make_pair(e, f), r);
    return r;
}

Scalar pairing(const TriElem& x, const TriElem& y) {
    Scalar r;
    for (const auto& [kx, cx] : x.terms()) {
        if (kx.f.len || kx.c[2] || kx.c[3]) throw std::invalid_argument("left argument of pairing not in U^{+,>=}");
    }
    for (const auto& [ky, cy] : y.terms()) {
        if (ky.e.len || ky.c[0] || ky.c[1]) throw std::invalid_argument("right argument of pairing not in U^{-,<=}");
    }
    for (const auto& [kx, cx] : x.terms()) {
        Weight lambda = cartan_k(kx.c), we = kx.e.weight();
        for (const auto& [ky, cy] : y.terms()) {
            Scalar p = pairing_words(kx.e, ky.f);
            if (p.is_zero()) continue;
            // <K_l E, F L_m> = chi(l, wt E) <E K_l, F L_m> = chi(l, wt E) chi(l, m) <E, F>
            r += cx * cy * chi(lambda, we) * chi(lambda, cartan_l(ky.c)) * p;
        }
    }
    return r;
}

Scalar pairing(const TensorElem& x, const TensorElem& y) {
    if (x.arity() != y.arity()) throw std::invalid_argument("tensor arity mismatch in pairing");
    Scalar r;
    for (const auto& [kx, cx] : x.terms()) {
        for (const auto& [ky, cy] : y.terms()) {
            Scalar p = cx * cy;
            for (size_t l = 0; l < kx.size() && !p.is_zero(); ++l)
                p *= pairing(TriElem(kx[l], Scalar(1L)), TriElem(ky[l], Scalar(1L)));
            r += p;
        }
    }
    return r;
}

}  // namespace uqaff
