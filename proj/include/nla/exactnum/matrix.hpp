#pragma once

#include "nla/errors.hpp"
#include "nla/exactnum/gauss.hpp"
#include "nla/exactnum/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nla {

template <class S>
class MatrixT {
public:
    MatrixT() = default;
    MatrixT(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

    static MatrixT identity(std::size_t n) {
        MatrixT m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
        return m;
    }

    static MatrixT from_rows(const std::vector<std::vector<S>>& rows, std::size_t cols) {
        MatrixT m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw AmbientMismatch("row length");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }

    S& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const S& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    std::vector<S> row(std::size_t i) const {
        return std::vector<S>(a_.begin() + static_cast<long>(i * c_), a_.begin() + static_cast<long>((i + 1) * c_));
    }
    std::vector<S> col(std::size_t j) const {
        std::vector<S> v(r_);
        for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    MatrixT transpose() const {
        MatrixT t(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    MatrixT conj() const {
        MatrixT t(r_, c_);
        for (std::size_t k = 0; k < a_.size(); ++k) t.a_[k] = nla::conj(a_[k]);
        return t;
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!nla::is_zero(x)) return false;
        return true;
    }

    friend MatrixT operator*(const MatrixT& x, const MatrixT& y) {
        if (x.c_ != y.r_) throw AmbientMismatch("matrix product shape");
        MatrixT z(x.r_, y.c_);
        for (std::size_t i = 0; i < x.r_; ++i)
            for (std::size_t k = 0; k < x.c_; ++k) {
                const S& xik = x(i, k);
                if (nla::is_zero(xik)) continue;
                for (std::size_t j = 0; j < y.c_; ++j) z(i, j) += xik * y(k, j);
            }
        return z;
    }
    friend MatrixT operator+(MatrixT x, const MatrixT& y) {
        if (x.r_ != y.r_ || x.c_ != y.c_) throw AmbientMismatch("matrix sum shape");
        for (std::size_t k = 0; k < x.a_.size(); ++k) x.a_[k] += y.a_[k];
        return x;
    }
    friend MatrixT operator-(MatrixT x, const MatrixT& y) {
        if (x.r_ != y.r_ || x.c_ != y.c_) throw AmbientMismatch("matrix difference shape");
        for (std::size_t k = 0; k < x.a_.size(); ++k) x.a_[k] -= y.a_[k];
        return x;
    }
    friend MatrixT operator*(const S& s, MatrixT x) {
        for (auto& e : x.a_) e = s * e;
        return x;
    }
    std::vector<S> apply(const std::vector<S>& v) const {
        if (v.size() != c_) throw AmbientMismatch("matrix-vector shape");
        std::vector<S> out(r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j)
                if (!nla::is_zero(v[j])) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    friend bool operator==(const MatrixT& x, const MatrixT& y) {
        return x.r_ == y.r_ && x.c_ == y.c_ && x.a_ == y.a_;
    }

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<S> a_;
};

using QMatrix = MatrixT<Rational>;
using Matrix = MatrixT<Gauss>;

Matrix to_gauss(const QMatrix& m);
// Throws NotReal if any entry has a nonzero imaginary part.
QMatrix real_part_checked(const Matrix& m);

// Fraction-free (Bareiss) elimination; returns the rank.
template <class S>
std::size_t rank(MatrixT<S> m) {
    std::size_t r = 0;
    S prev(1);
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && is_zero(m(p, c))) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            for (std::size_t j = c + 1; j < m.cols(); ++j)
                m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
            m(i, c) = S(0);
        }
        prev = m(r, c);
        ++r;
    }
    return r;
}

// Reduced row echelon form in place; returns pivot columns.
template <class S>
std::vector<std::size_t> rref_in_place(MatrixT<S>& m, std::size_t col_limit = static_cast<std::size_t>(-1)) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    std::size_t lim = std::min(col_limit, m.cols());
    for (std::size_t c = 0; c < lim && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && is_zero(m(p, c))) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        S inv = S(1) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            S f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// Kernel basis: one vector per free column, with a 1 in that column.
template <class S>
std::vector<std::vector<S>> kernel(MatrixT<S> m) {
    auto piv = rref_in_place(m);
    std::vector<bool> is_piv(m.cols(), false);
    for (auto p : piv) is_piv[p] = true;
    std::vector<std::vector<S>> out;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_piv[f]) continue;
        std::vector<S> v(m.cols());
        v[f] = S(1);
        for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -m(k, f);
        out.push_back(std::move(v));
    }
    return out;
}

template <class S>
struct LinearSolution {
    std::optional<std::vector<S>> particular;
    std::vector<std::vector<S>> kernel;
};

template <class S>
LinearSolution<S> solve_linear(const MatrixT<S>& a, const std::vector<S>& rhs) {
    if (rhs.size() != a.rows()) throw AmbientMismatch("rhs length");
    MatrixT<S> aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = rhs[i];
    }
    auto piv = rref_in_place(aug, a.cols());
    LinearSolution<S> sol;
    sol.kernel = kernel(a);
    for (std::size_t i = piv.size(); i < aug.rows(); ++i)
        if (!is_zero(aug(i, a.cols()))) return sol;
    std::vector<S> x(a.cols());
    for (std::size_t k = 0; k < piv.size(); ++k) x[piv[k]] = aug(k, a.cols());
    sol.particular = std::move(x);
    return sol;
}

template <class S>
S determinant(MatrixT<S> m) {
    if (m.rows() != m.cols()) throw AmbientMismatch("determinant of non-square matrix");
    std::size_t n = m.rows();
    S det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && is_zero(m(p, c))) ++p;
        if (p == n) return S(0);
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        S inv = S(1) / m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (is_zero(m(i, c))) continue;
            S f = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

template <class S>
std::optional<MatrixT<S>> inverse(const MatrixT<S>& m) {
    if (m.rows() != m.cols()) throw AmbientMismatch("inverse of non-square matrix");
    std::size_t n = m.rows();
    MatrixT<S> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = S(1);
    }
    auto piv = rref_in_place(aug, n);
    if (piv.size() != n) return std::nullopt;
    MatrixT<S> out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
    return out;
}

struct Inertia {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t zero = 0;
    friend bool operator==(const Inertia&, const Inertia&) = default;
};

// Sylvester inertia via symmetric (congruence) pivoting.
Inertia signature_symmetric(const QMatrix& m);
Inertia signature_symmetric(const Matrix& m);

std::string to_string(const QMatrix& m);
std::string to_string(const Matrix& m);

}  // namespace nla
