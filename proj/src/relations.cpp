#include <stdexcept>

#include "uqaff/freealg.hpp"

namespace uqaff {

namespace {

struct Ctx {
    SystemPtr sys;
    Scalar a;  // a on the positive side, abar = a^-1 q^-4 on the negative side

    AlgElem R1(int n) const { return root_vector(sys, RootKind::Real1, n); }
    AlgElem R0(int n) const { return root_vector(sys, RootKind::Real0, n); }
    AlgElem I(int n) const { return root_vector(sys, RootKind::Imaginary, n); }
    AlgElem T(int k) const { return tilde_root(sys, k); }
};

void need(const std::vector<int>& p, size_t n, bool ok) {
    if (p.size() != n || !ok) throw std::invalid_argument("invalid relation parameters");
}

}  // namespace

RelationResult verify_relation(const std::string& id, const std::vector<int>& params) {
    return verify_relation(id, params, Scalar(1L));
}

RelationResult verify_relation(const std::string& id, const std::vector<int>& p, const Scalar& perturb) {
    if (id.size() < 3 || (id.rfind("EQ", 0) != 0 && id.rfind("FQ", 0) != 0))
        throw std::invalid_argument("unknown relation id " + id);
    bool minus = id[0] == 'F';
    int num = std::stoi(id.substr(2));
    Ctx c{minus ? minus_system() : plus_system(),
          minus ? Scalar::var(A, -1) * Scalar::q(-4) : Scalar::var(A)};
    const Scalar& e = perturb;
    AlgElem res(c.sys);
    switch (num) {
        case 1:
            need(p, 1, p[0] >= 0);
            res = qbracket(c.R1(p[0] + 1), c.R1(p[0]));
            break;
        case 2: {
            need(p, 2, p[0] >= 0 && p[1] >= 1);
            int n = p[0], r = p[1];
            res = qbracket(c.R1(n + r), c.R1(n)) +
                  e * c.a.pow(r - 1) * Scalar::q(2 * (r - 1)) * qbracket(c.R1(n + 1), c.R1(n + r - 1));
            break;
        }
        case 3:
            need(p, 1, p[0] >= 0);
            res = qbracket(c.R0(p[0]), c.R0(p[0] + 1));
            break;
        case 4: {
            need(p, 2, p[0] >= 0 && p[1] >= 1);
            int n = p[0], r = p[1];
            res = qbracket(c.R0(n), c.R0(n + r)) +
                  e * c.a.pow(r - 1) * Scalar::q(2 * (r - 1)) * qbracket(c.R0(n + r - 1), c.R0(n + 1));
            break;
        }
        case 5: {
            need(p, 2, p[0] >= 1 && p[1] >= 0);
            int r = p[0], n = p[1];
            AlgElem rhs = c.a.pow(r - 1) * qint(2) * c.R1(n + r);
            for (int k = 1; k < r; ++k) rhs += (Scalar::q(4) - 1) * c.a.pow(k) * (c.I(r - k) * c.R1(n + k));
            res = qbracket(c.I(r), c.R1(n)) - e * rhs;
            break;
        }
        case 6: {
            need(p, 2, p[0] >= 0 && p[1] >= 1);
            int n = p[0], r = p[1];
            AlgElem rhs = c.a.pow(r - 1) * qint(2) * c.R0(n + r);
            for (int k = 1; k < r; ++k) rhs += (Scalar::q(4) - 1) * c.a.pow(k) * (c.R0(n + k) * c.I(r - k));
            res = qbracket(c.R0(n), c.I(r)) - e * rhs;
            break;
        }
        case 7:
            need(p, 2, p[0] >= 1 && p[1] >= 1);
            res = qbracket(c.I(p[0]), c.I(p[1]));
            break;
        case 8:
            need(p, 2, p[0] >= 0 && p[1] >= 0);
            res = qbracket(c.R0(p[0]), c.R1(p[1])) - e * c.I(p[0] + p[1] + 1);
            break;
        case 9: {
            need(p, 2, p[0] >= 1 && p[1] >= 0);
            int k = p[0], n = p[1];
            res = qbracket(c.T(k), c.R1(n)) - e * (qint(2 * k) / Scalar(static_cast<long>(k))) * c.R1(n + k);
            break;
        }
        case 10: {
            need(p, 2, p[0] >= 1 && p[1] >= 0);
            int k = p[0], n = p[1];
            res = qbracket(c.R0(n), c.T(k)) - e * (qint(2 * k) / Scalar(static_cast<long>(k))) * c.R0(n + k);
            break;
        }
        default:
            throw std::invalid_argument("unknown relation id " + id);
    }
    return RelationResult{id, p, res.is_zero(), res};
}

std::vector<std::vector<int>> relation_index_tuples(const std::string& id, int h) {
    int num = std::stoi(id.substr(2));
    std::vector<std::vector<int>> out;
    switch (num) {
        case 1:
        case 3:
            for (int n = 0; 2 * n + 1 <= h; ++n) out.push_back({n});
            break;
        case 2:
        case 4:
            for (int n = 0; n <= h; ++n)
                for (int r = 1; 2 * n + r <= h; ++r) out.push_back({n, r});
            break;
        case 5:
            for (int r = 1; r <= h; ++r)
                for (int n = 0; r + n <= h; ++n) out.push_back({r, n});
            break;
        case 6:
            for (int n = 0; n <= h; ++n)
                for (int r = 1; r + n <= h; ++r) out.push_back({n, r});
            break;
        case 7:
            for (int x = 1; x <= h; ++x)
                for (int y = 1; x + y <= h; ++y) out.push_back({x, y});
            break;
        case 8:
            for (int x = 0; x <= h; ++x)
                for (int y = 0; x + y <= h; ++y) out.push_back({x, y});
            break;
        case 9:
        case 10:
            for (int k = 1; k <= h; ++k)
                for (int n = 0; k + n <= h; ++n) out.push_back({k, n});
            break;
        default:
            throw std::invalid_argument("unknown relation id " + id);
    }
    return out;
}

}  // namespace uqaff
