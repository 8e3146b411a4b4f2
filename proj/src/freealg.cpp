#include "uqaff/freealg.hpp"

#include <algorithm>
#include <stdexcept>

#include "uqaff/rootvec.hpp"

namespace uqaff {

std::string Weight::to_string() const { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; }

Bicharacter::Bicharacter(const Scalar& a) : a_(a) {
    q_[0][0] = Scalar::q(2);
    q_[1][1] = Scalar::q(2);
    q_[0][1] = a;
    q_[1][0] = Scalar::q(-4) * a.inv();
}

Scalar Bicharacter::operator()(const Weight& l, const Weight& m) const {
    // q^{2(l0 m0 + l1 m1)} q01^{l0 m1} q10^{l1 m0}
    Scalar r = Scalar::q(2 * (l.x * m.x + l.y * m.y));
    int e01 = l.x * m.y, e10 = l.y * m.x;
    if (e01) r *= q_[0][1].pow(e01);
    if (e10) r *= q_[1][0].pow(e10);
    return r;
}

// ------------------------------------------------------------------ Word

Word Word::from(const std::vector<int>& letters) {
    Word w;
    for (int l : letters) w = w + Word::letter(l);
    return w;
}

Weight Word::weight() const {
    int ones = __builtin_popcountll(bits);
    return {len - ones, ones};
}

Word Word::reversed() const {
    Word r;
    for (int i = len - 1; i >= 0; --i) r = r + Word::letter(at(i));
    return r;
}

Word Word::reversed_swapped() const {
    Word r = reversed();
    r.bits ^= (len == 64 ? ~0ull : ((1ull << len) - 1));
    return r;
}

std::string Word::to_string(char gen) const {
    if (len == 0) return "1";
    std::string out;
    for (int i = 0; i < len; ++i) {
        if (i) out += ".";
        out += gen;
        out += static_cast<char>('0' + at(i));
    }
    return out;
}

// ----------------------------------------------------------- SerreSystem

namespace {

void accumulate(std::map<Word, Scalar>& acc, const Word& w, const Scalar& c) {
    auto [it, fresh] = acc.emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
    }
}

LinComb to_lincomb(const std::map<Word, Scalar>& m) {
    LinComb out(m.rbegin(), m.rend());
    return out;
}

}  // namespace

SerreSystem::SerreSystem(Side side, Bicharacter chi) : side_(side), chi_(std::move(chi)) {
    // Relation (i, j): X_i^3 X_j - p (3) X_i^2 X_j X_i + q_ii p^2 (3) X_i X_j X_i^2 - q_ii^3 p^3 X_j X_i^3,
    // p = q_ij on Plus and q_ji on Minus, (3) = (3)_{q_ii}.
    for (int i = 0; i < 2; ++i) {
        int j = 1 - i;
        Scalar qii = chi_.qij(i, i);
        Scalar p = side_ == Side::Plus ? chi_.qij(i, j) : chi_.qij(j, i);
        Scalar three = qnumber_round(3, qii);
        std::map<Word, Scalar> rel;
        rel[Word::from({i, i, i, j})] = Scalar(1L);
        rel[Word::from({i, i, j, i})] = -p * three;
        rel[Word::from({i, j, i, i})] = qii * p * p * three;
        rel[Word::from({j, i, i, i})] = -(qii.pow(3) * p.pow(3));
        auto lead = std::prev(rel.end());
        Scalar inv = lead->second.inv();
        Rule r{lead->first, {}};
        for (auto it = rel.rbegin(); it != rel.rend(); ++it) {
            if (it->first == r.lead) continue;
            r.tail.emplace_back(it->first, -it->second * inv);
        }
        rules_.push_back(std::move(r));
    }
}

bool SerreSystem::find_lead(const Word& w, int& pos, size_t& rule, bool rightmost) const {
    bool found = false;
    for (size_t r = 0; r < rules_.size(); ++r) {
        const Word& L = rules_[r].lead;
        if (L.len > w.len) continue;
        for (int p = 0; p + L.len <= w.len; ++p) {
            if (w.sub(p, L.len).bits != L.bits) continue;
            if (!found || (rightmost ? p > pos : p < pos)) {
                pos = p;
                rule = r;
                found = true;
            }
        }
    }
    return found;
}

const LinComb& SerreSystem::nf_locked(const Word& w) {
    auto it = cache_.find(w);
    if (it != cache_.end()) return it->second;
    int pos = 0;
    size_t r = 0;
    LinComb out;
    if (!find_lead(w, pos, r, false)) {
        out.emplace_back(w, Scalar(1L));
    } else {
        const Rule& rule = rules_[r];
        Word pre = w.sub(0, pos);
        Word post = w.sub(pos + rule.lead.len, w.len - pos - rule.lead.len);
        std::map<Word, Scalar> acc;
        for (const auto& [t, c] : rule.tail) {
            const LinComb& sub = nf_locked(pre + t + post);
            for (const auto& [u, d] : sub) accumulate(acc, u, c * d);
        }
        out = to_lincomb(acc);
    }
    return cache_.emplace(w, std::move(out)).first->second;
}

void SerreSystem::resolve_overlaps(int d) {
    size_t nrules = rules_.size();
    for (size_t a = 0; a < nrules; ++a) {
        for (size_t b = 0; b < nrules; ++b) {
            const Word L1 = rules_[a].lead, L2 = rules_[b].lead;
            if (L1.len >= d || L2.len >= d) continue;
            int k = L1.len + L2.len - d;
            if (k < 1 || k >= std::min(L1.len, L2.len)) continue;
            if (L1.sub(L1.len - k, k) != L2.sub(0, k)) continue;
            Word right = L2.sub(k, L2.len - k);
            Word left = L1.sub(0, L1.len - k);
            std::map<Word, Scalar> acc;
            for (const auto& [t, c] : rules_[a].tail)
                for (const auto& [u, e] : nf_locked(t + right)) accumulate(acc, u, c * e);
            for (const auto& [t, c] : rules_[b].tail)
                for (const auto& [u, e] : nf_locked(left + t)) accumulate(acc, u, -c * e);
            if (acc.empty()) continue;
            auto lead = std::prev(acc.end());
            Scalar inv = lead->second.inv();
            Rule r{lead->first, {}};
            for (auto it = acc.rbegin(); it != acc.rend(); ++it) {
                if (it->first == r.lead) continue;
                r.tail.emplace_back(it->first, -it->second * inv);
            }
            rules_.push_back(std::move(r));
            // Normal forms of words of length d may change.
            for (auto it = cache_.begin(); it != cache_.end();) {
                it = it->first.len >= d ? cache_.erase(it) : std::next(it);
            }
        }
    }
}

void SerreSystem::ensure(int len) {
    while (completed_ < len) {
        resolve_overlaps(completed_ + 1);
        ++completed_;
    }
}

LinComb SerreSystem::normal_form(const Word& w) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    ensure(w.len);
    return nf_locked(w);
}

bool SerreSystem::is_normal(const Word& w) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    ensure(w.len);
    int pos = 0;
    size_t r = 0;
    return !find_lead(w, pos, r, false);
}

std::vector<SerreSystem::Rule> SerreSystem::rules() {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    return rules_;
}

int SerreSystem::completed_length() {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    return completed_;
}

LinComb SerreSystem::reduce_with_strategy(const Word& w0, bool rightmost) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    ensure(w0.len);
    std::map<Word, Scalar> cur{{w0, Scalar(1L)}}, done;
    while (!cur.empty()) {
        auto it = std::prev(cur.end());
        Word w = it->first;
        Scalar c = it->second;
        cur.erase(it);
        int pos = 0;
        size_t r = 0;
        if (!find_lead(w, pos, r, rightmost)) {
            accumulate(done, w, c);
            continue;
        }
        const Rule& rule = rules_[r];
        Word pre = w.sub(0, pos);
        Word post = w.sub(pos + rule.lead.len, w.len - pos - rule.lead.len);
        for (const auto& [t, d] : rule.tail) accumulate(cur, pre + t + post, c * d);
    }
    return to_lincomb(done);
}

SystemPtr plus_system() {
    static SystemPtr p = std::make_shared<SerreSystem>(Side::Plus, Bicharacter::generic());
    return p;
}

SystemPtr minus_system() {
    static SystemPtr p = std::make_shared<SerreSystem>(Side::Minus, Bicharacter::generic());
    return p;
}

// --------------------------------------------------------------- AlgElem

AlgElem::AlgElem(SystemPtr sys, const Scalar& c) : sys_(std::move(sys)) {
    if (!c.is_zero()) t_.emplace(Word{}, c);
}

AlgElem::AlgElem(SystemPtr sys, const Word& w, const Scalar& c) : sys_(std::move(sys)) {
    if (!c.is_zero()) add_lincomb(sys_->normal_form(w), c);
}

void AlgElem::add_lincomb(const LinComb& l, const Scalar& c) {
    for (const auto& [w, d] : l) accumulate(t_, w, c * d);
}

Scalar AlgElem::coeff(const Word& w) const {
    auto it = t_.find(w);
    return it == t_.end() ? Scalar() : it->second;
}

bool AlgElem::is_homogeneous() const {
    if (t_.empty()) return true;
    Weight w = t_.begin()->first.weight();
    return std::all_of(t_.begin(), t_.end(), [&](const auto& kv) { return kv.first.weight() == w; });
}

Weight AlgElem::weight() const {
    if (t_.empty()) throw std::invalid_argument("weight of zero element");
    if (!is_homogeneous()) throw std::invalid_argument("element is not homogeneous");
    return t_.begin()->first.weight();
}

AlgElem AlgElem::operator-() const {
    AlgElem r = *this;
    for (auto& kv : r.t_) kv.second = -kv.second;
    return r;
}

AlgElem& AlgElem::operator+=(const AlgElem& o) {
    if (!sys_) sys_ = o.sys_;
    for (const auto& [w, c] : o.t_) accumulate(t_, w, c);
    return *this;
}

AlgElem& AlgElem::operator-=(const AlgElem& o) { return *this += -o; }

AlgElem operator*(const Scalar& c, const AlgElem& x) {
    AlgElem r(x.sys_);
    if (c.is_zero()) return r;
    for (const auto& [w, d] : x.t_) r.t_.emplace(w, c * d);
    return r;
}

AlgElem operator*(const AlgElem& x, const AlgElem& y) {
    AlgElem r(x.sys_ ? x.sys_ : y.sys_);
    for (const auto& [u, c] : x.t_) {
        for (const auto& [v, d] : y.t_) r.add_lincomb(r.sys_->normal_form(u + v), c * d);
    }
    return r;
}

std::string AlgElem::to_string() const {
    if (t_.empty()) return "0";
    char gen = sys_ && sys_->side() == Side::Minus ? 'F' : 'E';
    std::string out;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += "(" + it->second.to_string() + ") * " + it->first.to_string(gen);
    }
    return out;
}

AlgElem serre_normal_form(SystemPtr sys, const std::vector<std::pair<Word, Scalar>>& raw) {
    AlgElem r(sys);
    for (const auto& [w, c] : raw) r += AlgElem(sys, w, c);
    return r;
}

AlgElem qbracket(const AlgElem& x, const AlgElem& y) {
    if (x.is_zero() || y.is_zero()) return AlgElem(x.system() ? x.system() : y.system());
    Weight l = x.weight(), m = y.weight();
    const auto& chi = x.system()->chi();
    Scalar c = x.side() == Side::Plus ? chi(l, m) : chi(m, l);
    return x * y - c * (y * x);
}

// ---------------------------------------------------------- root vectors

Weight root_weight(RootKind kind, int n) {
    switch (kind) {
        case RootKind::Real1: return {n, n + 1};
        case RootKind::Real0: return {n + 1, n};
        case RootKind::Imaginary: return {n, n};
    }
    return {};
}

namespace {

using Family = RootVectorFamily<AlgElem>;

Family& family(const SystemPtr& sys) {
    static std::mutex mu;
    static std::map<const SerreSystem*, std::unique_ptr<Family>> fams;
    std::lock_guard<std::mutex> lock(mu);
    auto it = fams.find(sys.get());
    if (it == fams.end()) {
        auto fam = std::make_unique<Family>(sys->chi(), sys->side() == Side::Minus, AlgElem::generator(sys, 0),
                                            AlgElem::generator(sys, 1),
                                            [](const AlgElem& a, const AlgElem& b) { return a * b; });
        it = fams.emplace(sys.get(), std::move(fam)).first;
    }
    return *it->second;
}

}  // namespace

AlgElem root_vector(const SystemPtr& sys, RootKind kind, int n) {
    if (n < 0 || (kind == RootKind::Imaginary && n < 1)) throw std::invalid_argument("invalid root vector index");
    Family& f = family(sys);
    switch (kind) {
        case RootKind::Real1: return f.real1(n);
        case RootKind::Real0: return f.real0(n);
        case RootKind::Imaginary: return f.imag(n);
    }
    return AlgElem(sys);
}

AlgElem tilde_root(const SystemPtr& sys, int k) {
    if (k < 1) throw std::invalid_argument("tilde root index must be positive");
    return family(sys).tilde(k);
}

AlgElem fdot_root(const SystemPtr& sys, int k) {
    Scalar c = Scalar::q(2 * k) * (Scalar::q() - Scalar::q(-1)).pow(-(2 * k - 1));
    return c * tilde_root(sys, k);
}

AlgElem apply_psi(const AlgElem& e) {
    if (e.system() && e.side() != Side::Plus) throw std::invalid_argument("psi is defined on the positive part");
    AlgElem r(e.system());
    for (const auto& [w, c] : e.terms()) r += AlgElem(e.system(), w.reversed_swapped(), c);
    return r;
}

}  // namespace uqaff
