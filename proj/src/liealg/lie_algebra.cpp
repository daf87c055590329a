#include "nla/liealg/lie_algebra.hpp"

namespace nla {

JacobiViolation::JacobiViolation(int gen, KForm res)
    : Error("JacobiViolation: d^2 e^" + std::to_string(gen + 1) + " = " + render_real(res)),
      generator(gen), residual(std::move(res)) {}

LieAlgebra::LieAlgebra(int n)
    : n_(n), c_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n) * static_cast<std::size_t>(n)), eqs_(n) {
    if (n < 0 || n > 32) throw AmbientMismatch("unsupported dimension " + std::to_string(n));
}

LieAlgebra abelian(int n) {
    LieAlgebra g(n);
    g.set_name(n == 0 ? "0" : "R" + std::to_string(n));
    return g;
}

void LieAlgebra::set(int k, int i, int j, const Rational& value) {
    if (i == j) {
        if (!value.is_zero()) throw AmbientMismatch("c^k_ii must vanish");
        return;
    }
    c_[idx(k, i, j)] = value;
    c_[idx(k, j, i)] = -value;
    KForm f(n_, 2);
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b) f.add_term(indices_mask({a, b}), Gauss(c(k, a, b)));
    eqs_.d[static_cast<std::size_t>(k)] = std::move(f);
}

void LieAlgebra::rebuild_equations() {
    for (int k = 0; k < n_; ++k) {
        KForm f(n_, 2);
        for (int a = 0; a < n_; ++a)
            for (int b = a + 1; b < n_; ++b) f.add_term(indices_mask({a, b}), Gauss(c(k, a, b)));
        eqs_.d[static_cast<std::size_t>(k)] = std::move(f);
    }
}

LieAlgebra LieAlgebra::from_equations(const StructureEquations& eqs, std::string name) {
    LieAlgebra g(eqs.dim);
    for (int k = 0; k < eqs.dim; ++k)
        for (const auto& [m, v] : eqs.d[static_cast<std::size_t>(k)].terms()) {
            if (!v.is_real()) throw NotReal("structure constant " + v.str() + " in d e^" + std::to_string(k + 1));
            auto ij = mask_indices(m);
            g.c_[g.idx(k, ij[0], ij[1])] = v.re();
            g.c_[g.idx(k, ij[1], ij[0])] = -v.re();
        }
    g.rebuild_equations();
    g.name_ = std::move(name);
    g.check_jacobi();
    return g;
}

KForm LieAlgebra::d(int k) const { return eqs_.d.at(static_cast<std::size_t>(k)); }

QVec LieAlgebra::bracket_basis(int i, int j) const {
    QVec out(static_cast<std::size_t>(n_));
    for (int k = 0; k < n_; ++k) out[static_cast<std::size_t>(k)] = -c(k, i, j);
    return out;
}

QVec LieAlgebra::bracket(const QVec& x, const QVec& y) const {
    if (static_cast<int>(x.size()) != n_ || static_cast<int>(y.size()) != n_)
        throw AmbientMismatch("bracket arguments have wrong length");
    QVec out(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
        if (x[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int j = 0; j < n_; ++j) {
            if (y[static_cast<std::size_t>(j)].is_zero() || i == j) continue;
            Rational xy = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
            for (int k = 0; k < n_; ++k) {
                const Rational& ck = c(k, i, j);
                if (!ck.is_zero()) out[static_cast<std::size_t>(k)] -= xy * ck;
            }
        }
    }
    return out;
}

std::optional<std::pair<int, KForm>> LieAlgebra::jacobi_residual() const {
    for (int k = 0; k < n_; ++k) {
        KForm dd = ce_differential(eqs_, eqs_.d[static_cast<std::size_t>(k)]);
        if (!dd.is_zero()) return std::make_pair(k, dd);
    }
    return std::nullopt;
}

void LieAlgebra::check_jacobi() const {
    if (auto r = jacobi_residual()) throw JacobiViolation(r->first, r->second);
}

LieAlgebra change_coframe(const LieAlgebra& g, const QMatrix& p) {
    const int n = g.dim();
    if (p.rows() != static_cast<std::size_t>(n) || p.cols() != static_cast<std::size_t>(n))
        throw AmbientMismatch("coframe change has wrong shape");
    auto inv = inverse(p);
    if (!inv) throw AmbientMismatch("coframe change is singular");
    // e^j = sum_l inv_jl f^l
    std::vector<KForm> images;
    for (int j = 0; j < n; ++j) {
        KForm f(n, 1);
        for (int l = 0; l < n; ++l) f.add_term(Mask(1) << l, Gauss((*inv)(static_cast<std::size_t>(j), static_cast<std::size_t>(l))));
        images.push_back(std::move(f));
    }
    std::vector<KForm> dnew;
    for (int i = 0; i < n; ++i) {
        KForm acc(n, 2);
        for (int j = 0; j < n; ++j) {
            const Rational& pij = p(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
            if (pij.is_zero()) continue;
            acc += Gauss(pij) * substitute(g.d(j), images, n);
        }
        dnew.push_back(std::move(acc));
    }
    return LieAlgebra::from_equations(StructureEquations(std::move(dnew)), g.name());
}

LieAlgebra rescale_coframe(const LieAlgebra& g, const std::vector<Rational>& r) {
    const int n = g.dim();
    if (static_cast<int>(r.size()) != n) throw AmbientMismatch("one radicand per generator");
    for (const auto& x : r)
        if (x.sign() <= 0) throw AmbientMismatch("radicands must be positive");
    LieAlgebra out(n);
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const Rational& v = g.c(k, i, j);
                if (v.is_zero()) continue;
                Rational q = r[static_cast<std::size_t>(k)] /
                             (r[static_cast<std::size_t>(i)] * r[static_cast<std::size_t>(j)]);
                auto s = q.sqrt();
                if (!s) throw IrrationalRotation("rescaled constant c^" + std::to_string(k + 1) + "_" +
                                                 std::to_string(i + 1) + std::to_string(j + 1) + " needs sqrt(" + q.str() + ")");
                out.set(k, i, j, v * *s);
            }
    out.check_jacobi();
    out.set_name(g.name());
    return out;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
    const int na = a.dim(), nb = b.dim();
    LieAlgebra s(na + nb);
    for (int k = 0; k < na; ++k)
        for (int i = 0; i < na; ++i)
            for (int j = i + 1; j < na; ++j)
                if (!a.c(k, i, j).is_zero()) s.set(k, i, j, a.c(k, i, j));
    for (int k = 0; k < nb; ++k)
        for (int i = 0; i < nb; ++i)
            for (int j = i + 1; j < nb; ++j)
                if (!b.c(k, i, j).is_zero()) s.set(na + k, na + i, na + j, b.c(k, i, j));
    s.set_name(a.name() + "+" + b.name());
    return s;
}

}  // namespace nla
