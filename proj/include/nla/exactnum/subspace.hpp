#pragma once

#include "nla/exactnum/matrix.hpp"

#include <vector>

namespace nla {

// Subspace of S^n stored as its reduced row echelon basis.
template <class S>
class SubspaceT {
public:
    using Vec = std::vector<S>;

    explicit SubspaceT(std::size_t ambient = 0) : n_(ambient) {}

    static SubspaceT span(std::size_t ambient, const std::vector<Vec>& vectors) {
        SubspaceT s(ambient);
        if (vectors.empty()) return s;
        auto m = MatrixT<S>::from_rows(vectors, ambient);
        s.pivots_ = rref_in_place(m);
        for (std::size_t i = 0; i < s.pivots_.size(); ++i) s.basis_.push_back(m.row(i));
        return s;
    }
    static SubspaceT whole(std::size_t ambient) {
        std::vector<Vec> id;
        for (std::size_t i = 0; i < ambient; ++i) {
            Vec v(ambient);
            v[i] = S(1);
            id.push_back(v);
        }
        return span(ambient, id);
    }

    std::size_t ambient() const { return n_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    // v minus its pivot components; zero iff v lies in the subspace.
    Vec reduce(Vec v) const {
        check(v);
        for (std::size_t k = 0; k < basis_.size(); ++k) {
            S f = v[pivots_[k]];
            if (is_zero(f)) continue;
            for (std::size_t j = 0; j < n_; ++j)
                if (!is_zero(basis_[k][j])) v[j] -= f * basis_[k][j];
        }
        return v;
    }

    bool contains(const Vec& v) const {
        for (const auto& x : reduce(v))
            if (!is_zero(x)) return false;
        return true;
    }
    bool contains(const SubspaceT& o) const {
        if (o.n_ != n_) throw AmbientMismatch("subspace ambient dimensions differ");
        for (const auto& b : o.basis_)
            if (!contains(b)) return false;
        return true;
    }

    // Non-pivot coordinates index a complement; quotient coordinates live there.
    std::vector<std::size_t> complement_indices() const {
        std::vector<bool> p(n_, false);
        for (auto c : pivots_) p[c] = true;
        std::vector<std::size_t> out;
        for (std::size_t j = 0; j < n_; ++j)
            if (!p[j]) out.push_back(j);
        return out;
    }
    Vec quotient_coords(const Vec& v) const {
        Vec r = reduce(v);
        Vec out;
        for (auto j : complement_indices()) out.push_back(r[j]);
        return out;
    }

    // Functionals vanishing on the subspace, as coefficient vectors.
    SubspaceT annihilator() const {
        if (basis_.empty()) return whole(n_);
        return span(n_, kernel(MatrixT<S>::from_rows(basis_, n_)));
    }

    friend SubspaceT operator+(const SubspaceT& a, const SubspaceT& b) {
        if (a.n_ != b.n_) throw AmbientMismatch("subspace ambient dimensions differ");
        auto v = a.basis_;
        v.insert(v.end(), b.basis_.begin(), b.basis_.end());
        return span(a.n_, v);
    }

    friend SubspaceT intersect(const SubspaceT& a, const SubspaceT& b) {
        if (a.n_ != b.n_) throw AmbientMismatch("subspace ambient dimensions differ");
        if (a.basis_.empty() || b.basis_.empty()) return SubspaceT(a.n_);
        std::size_t ka = a.dim(), kb = b.dim();
        MatrixT<S> m(a.n_, ka + kb);
        for (std::size_t j = 0; j < a.n_; ++j) {
            for (std::size_t i = 0; i < ka; ++i) m(j, i) = a.basis_[i][j];
            for (std::size_t i = 0; i < kb; ++i) m(j, ka + i) = -b.basis_[i][j];
        }
        std::vector<Vec> out;
        for (const auto& k : kernel(m)) {
            Vec v(a.n_);
            for (std::size_t i = 0; i < ka; ++i)
                if (!is_zero(k[i]))
                    for (std::size_t j = 0; j < a.n_; ++j) v[j] += k[i] * a.basis_[i][j];
            out.push_back(std::move(v));
        }
        return span(a.n_, out);
    }

    friend bool operator==(const SubspaceT& a, const SubspaceT& b) {
        return a.n_ == b.n_ && a.basis_ == b.basis_;
    }

private:
    void check(const Vec& v) const {
        if (v.size() != n_) throw AmbientMismatch("vector length " + std::to_string(v.size()) +
                                                  " vs ambient " + std::to_string(n_));
    }

    std::size_t n_;
    std::vector<Vec> basis_;
    std::vector<std::size_t> pivots_;
};

using Subspace = SubspaceT<Rational>;
using CSubspace = SubspaceT<Gauss>;

}  // namespace nla
