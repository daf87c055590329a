#include "nla/exactnum/matrix.hpp"

#include <sstream>

namespace nla {

Matrix to_gauss(const QMatrix& m) {
    Matrix g(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) g(i, j) = Gauss(m(i, j));
    return g;
}

QMatrix real_part_checked(const Matrix& m) {
    QMatrix q(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!m(i, j).is_real())
                throw NotReal("entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " + m(i, j).str());
            q(i, j) = m(i, j).re();
        }
    return q;
}

namespace {

void swap_congruent(QMatrix& a, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(i, k), a(j, k));
    for (std::size_t k = 0; k < a.rows(); ++k) std::swap(a(k, i), a(k, j));
}

// row_i += f*row_j, col_i += f*col_j
void add_congruent(QMatrix& a, std::size_t i, std::size_t j, const Rational& f) {
    for (std::size_t k = 0; k < a.cols(); ++k)
        if (!a(j, k).is_zero()) a(i, k) += f * a(j, k);
    for (std::size_t k = 0; k < a.rows(); ++k)
        if (!a(k, j).is_zero()) a(k, i) += f * a(k, j);
}

}  // namespace

Inertia signature_symmetric(const QMatrix& m) {
    if (m.rows() != m.cols()) throw NotSymmetric("matrix is not square");
    const std::size_t n = m.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (m(i, j) != m(j, i))
                throw NotSymmetric("entry (" + std::to_string(i) + "," + std::to_string(j) + ")");

    QMatrix a = m;
    Inertia out;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, p).is_zero()) ++p;
        if (p == n) {
            bool found = false;
            for (std::size_t i = k; i < n && !found; ++i)
                for (std::size_t j = i + 1; j < n && !found; ++j)
                    if (!a(i, j).is_zero()) {
                        add_congruent(a, i, j, Rational(1));
                        p = i;
                        found = true;
                    }
            if (!found) {
                out.zero += n - k;
                return out;
            }
        }
        swap_congruent(a, k, p);
        const Rational piv = a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k).is_zero()) continue;
            add_congruent(a, i, k, -(a(i, k) / piv));
        }
        if (piv.sign() > 0) ++out.positive;
        else ++out.negative;
    }
    return out;
}

Inertia signature_symmetric(const Matrix& m) {
    QMatrix q(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!m(i, j).is_real()) {
                if (i < m.cols() && j < m.rows() && m(i, j) != m(j, i))
                    throw NotSymmetric("entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
                throw NotReal("entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " + m(i, j).str());
            }
            q(i, j) = m(i, j).re();
        }
    return signature_symmetric(q);
}

namespace {

template <class S>
std::string render(const MatrixT<S>& m) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) os << "; ";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ", ";
            os << m(i, j).str();
        }
    }
    os << ']';
    return os.str();
}

}  // namespace

std::string to_string(const QMatrix& m) { return render(m); }
std::string to_string(const Matrix& m) { return render(m); }

}  // namespace nla
