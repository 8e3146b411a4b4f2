#pragma once

/**
 * @file sparse.hpp
 * @brief Row-sparse matrices over an arbitrary entry ring.
 *
 * T needs a zero default constructor, T(1L), +, -, * and either is_zero() or
 * an entry_is_zero overload.
 */

#include <complex>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

namespace uqaff {

template <class T>
bool entry_is_zero(const T& x) {
    return x.is_zero();
}
inline bool entry_is_zero(const std::complex<double>& x) { return x == 0.0; }

template <class T>
class SparseMatrix {
public:
    using Row = std::map<int, T>;

    SparseMatrix() = default;
    SparseMatrix(int rows, int cols) : r_(rows), c_(cols), rows_(rows) {}

    static SparseMatrix identity(int n) {
        SparseMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.rows_[i].emplace(i, T(1L));
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }
    const Row& row(int i) const { return rows_[i]; }

    T get(int i, int j) const {
        auto it = rows_[i].find(j);
        return it == rows_[i].end() ? T() : it->second;
    }
    void set(int i, int j, const T& v) {
        if (entry_is_zero(v))
            rows_[i].erase(j);
        else
            rows_[i][j] = v;
    }
    void add(int i, int j, const T& v) {
        if (entry_is_zero(v)) return;
        auto [it, fresh] = rows_[i].emplace(j, v);
        if (!fresh) {
            it->second = it->second + v;
            if (entry_is_zero(it->second)) rows_[i].erase(it);
        }
    }

    size_t nnz() const {
        size_t n = 0;
        for (const auto& r : rows_) n += r.size();
        return n;
    }
    bool is_zero() const { return nnz() == 0; }

    SparseMatrix operator+(const SparseMatrix& o) const {
        check_same(o);
        SparseMatrix m = *this;
        for (int i = 0; i < r_; ++i)
            for (const auto& [j, v] : o.rows_[i]) m.add(i, j, v);
        return m;
    }
    SparseMatrix operator-() const {
        SparseMatrix m(r_, c_);
        for (int i = 0; i < r_; ++i)
            for (const auto& [j, v] : rows_[i]) m.rows_[i].emplace(j, T() - v);
        return m;
    }
    SparseMatrix operator-(const SparseMatrix& o) const { return *this + (-o); }

    friend SparseMatrix operator*(const T& c, const SparseMatrix& x) {
        SparseMatrix m(x.r_, x.c_);
        if (entry_is_zero(c)) return m;
        for (int i = 0; i < x.r_; ++i)
            for (const auto& [j, v] : x.rows_[i]) m.set(i, j, c * v);
        return m;
    }

    SparseMatrix operator*(const SparseMatrix& o) const {
        if (c_ != o.r_) throw std::invalid_argument("matrix dimension mismatch");
        SparseMatrix m(r_, o.c_);
        for (int i = 0; i < r_; ++i) {
            Row acc;
            for (const auto& [k, v] : rows_[i]) {
                for (const auto& [j, w] : o.rows_[k]) {
                    auto [it, fresh] = acc.emplace(j, v * w);
                    if (!fresh) it->second = it->second + v * w;
                }
            }
            for (auto& [j, v] : acc)
                if (!entry_is_zero(v)) m.rows_[i].emplace(j, std::move(v));
        }
        return m;
    }

    bool operator==(const SparseMatrix& o) const { return r_ == o.r_ && c_ == o.c_ && rows_ == o.rows_; }

    /// Apply f to every stored entry.
    template <class U>
    SparseMatrix<U> map(const std::function<U(const T&)>& f) const {
        SparseMatrix<U> m(r_, c_);
        for (int i = 0; i < r_; ++i)
            for (const auto& [j, v] : rows_[i]) m.set(i, j, f(v));
        return m;
    }

    SparseMatrix transpose() const {
        SparseMatrix m(c_, r_);
        for (int i = 0; i < r_; ++i)
            for (const auto& [j, v] : rows_[i]) m.rows_[j].emplace(i, v);
        return m;
    }

private:
    void check_same(const SparseMatrix& o) const {
        if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix dimension mismatch");
    }

    int r_ = 0, c_ = 0;
    std::vector<Row> rows_;
};

/// Kronecker product; the index of b runs fastest.
template <class T>
SparseMatrix<T> kron(const SparseMatrix<T>& a, const SparseMatrix<T>& b) {
    SparseMatrix<T> m(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (const auto& [j, v] : a.row(i))
            for (int k = 0; k < b.rows(); ++k)
                for (const auto& [l, w] : b.row(k)) m.set(i * b.rows() + k, j * b.cols() + l, v * w);
    return m;
}

template <class T>
SparseMatrix<T> mat_pow(const SparseMatrix<T>& a, int n) {
    SparseMatrix<T> r = SparseMatrix<T>::identity(a.rows());
    for (int i = 0; i < n; ++i) r = r * a;
    return r;
}

}  // namespace uqaff
