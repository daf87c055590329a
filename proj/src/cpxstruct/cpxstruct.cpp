#include "nla/cpxstruct/cpxstruct.hpp"

#include <functional>
#include <stdexcept>

namespace nla {

namespace {

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

QVec unit(int n, int i) {
    QVec v(sz(n));
    v[sz(i)] = Rational(1);
    return v;
}

KForm one_form(int n, const std::vector<Gauss>& coeffs) {
    KForm f(n, 1);
    for (int m = 0; m < n; ++m)
        if (!coeffs[sz(m)].is_zero()) f.add_term(Mask(1) << m, coeffs[sz(m)]);
    return f;
}

// [P; conj P] for an n x 2n coefficient matrix.
Matrix stack_conj(const Matrix& P) {
    const std::size_t n = P.rows(), N = P.cols();
    Matrix M(N, N);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t m = 0; m < N; ++m) {
            M(k, m) = P(k, m);
            M(k + n, m) = P(k, m).conj();
        }
    return M;
}

Matrix block_diag_conj(const Matrix& L) {
    const std::size_t n = L.rows();
    Matrix D(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            D(i, j) = L(i, j);
            D(i + n, j + n) = L(i, j).conj();
        }
    return D;
}

// Theta images of e^m, given e = Minv theta.
std::vector<KForm> e_in_theta(const Matrix& Minv) {
    const int N = static_cast<int>(Minv.rows());
    std::vector<KForm> out;
    for (int m = 0; m < N; ++m) out.push_back(one_form(N, Minv.row(sz(m))));
    return out;
}

std::vector<KForm> theta_in_e(const Matrix& M) {
    const int N = static_cast<int>(M.rows());
    std::vector<KForm> out;
    for (int a = 0; a < N; ++a) out.push_back(one_form(N, M.row(sz(a))));
    return out;
}

}  // namespace

RealJ::RealJ(QMatrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw NotAlmostComplex("J is not square");
    const std::size_t n = m_.rows();
    QMatrix sq = m_ * m_;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (sq(i, j) != Rational(i == j ? -1 : 0))
                throw NotAlmostComplex("J^2 differs from -Id at (" + std::to_string(i + 1) + "," +
                                       std::to_string(j + 1) + ")");
}

RealJ RealJ::standard(int dim) {
    if (dim % 2) throw NotAlmostComplex("odd dimension " + std::to_string(dim));
    QMatrix m(sz(dim), sz(dim));
    for (std::size_t k = 0; k < sz(dim); k += 2) {
        m(k + 1, k) = Rational(1);
        m(k, k + 1) = Rational(-1);
    }
    return RealJ(std::move(m));
}

bool RealJ::preserves(const Subspace& s) const {
    for (const auto& b : s.basis())
        if (!s.contains(apply(b))) return false;
    return true;
}

std::vector<NijenhuisValue> nijenhuis(const LieAlgebra& g, const RealJ& J) {
    const int n = g.dim();
    if (J.dim() != n) throw AmbientMismatch("J and algebra dimensions differ");
    std::vector<NijenhuisValue> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            QVec x = unit(n, i), y = unit(n, j);
            QVec jx = J.apply(x), jy = J.apply(y);
            QVec v = g.bracket(x, y);
            QVec a = J.apply(g.bracket(jx, y)), b = J.apply(g.bracket(x, jy)), c = g.bracket(jx, jy);
            bool nz = false;
            for (std::size_t k = 0; k < v.size(); ++k) {
                v[k] += a[k] + b[k] - c[k];
                nz = nz || !v[k].is_zero();
            }
            if (nz) out.push_back({i, j, std::move(v)});
        }
    return out;
}

KForm wmono(int n, std::initializer_list<int> idx, const Gauss& c) {
    std::vector<int> v;
    for (int x : idx) {
        if (x == 0 || x > n || x < -n) throw AmbientMismatch("frame index " + std::to_string(x));
        v.push_back(x > 0 ? x - 1 : -x - 1 + n);
    }
    KForm f = KForm::basis(2 * n, {}, Gauss(1));
    for (int i : v) f = wedge(f, KForm::one_form(2 * n, i));
    return c * f;
}

CoframePresentation::CoframePresentation(int n_) : n(n_) {
    for (int k = 0; k < n; ++k) d.emplace_back(2 * n, 2);
}

CoframePresentation::CoframePresentation(int n_, std::vector<KForm> dw) : n(n_), d(std::move(dw)) {
    if (static_cast<int>(d.size()) != n) throw AmbientMismatch("one equation per (1,0)-form");
    for (const auto& f : d)
        if (f.ambient() != 2 * n || f.degree() != 2) throw AmbientMismatch("frame equation is not a 2-form of rank " + std::to_string(n));
}

StructureEquations CoframePresentation::full() const {
    std::vector<KForm> all = d;
    for (const auto& f : d) all.push_back(frame_conj(f, n));
    return StructureEquations(std::move(all));
}

void CoframePresentation::validate() const {
    for (int k = 0; k < n; ++k)
        if (!bidegree_part(d[sz(k)], n, 0, 2).is_zero())
            throw NotIntegrable("d omega^" + std::to_string(k + 1) + " has a (0,2) part " +
                                render_frame(bidegree_part(d[sz(k)], n, 0, 2), n));
    auto eqs = full();
    for (int k = 0; k < n; ++k) {
        KForm dd = ce_differential(eqs, eqs.d[sz(k)]);
        if (!dd.is_zero()) throw JacobiViolation(k, dd);
    }
}

std::vector<std::string> CoframePresentation::render() const {
    std::vector<std::string> out;
    for (const auto& f : d) out.push_back(render_frame(f, n));
    return out;
}

std::vector<std::string> CoframePresentation::render_tex() const {
    std::vector<std::string> out;
    for (const auto& f : d) out.push_back(render_frame_tex(f, n));
    return out;
}

CoframePresentation rescale_frame(const CoframePresentation& p, const std::vector<Rational>& s) {
    if (static_cast<int>(s.size()) != p.n) throw AmbientMismatch("one radicand per (1,0)-form");
    for (const auto& x : s)
        if (x.sign() <= 0) throw AmbientMismatch("radicands must be positive");
    CoframePresentation out(p.n);
    for (int k = 0; k < p.n; ++k)
        for (const auto& [m, c] : p.d[sz(k)].terms()) {
            auto ij = mask_indices(m);
            Rational q = s[sz(ij[0] % p.n)] * s[sz(ij[1] % p.n)] / s[sz(k)];
            auto r = q.sqrt();
            if (!r) throw IrrationalRotation("coefficient of d omega^" + std::to_string(k + 1) + " needs sqrt(" + q.str() + ")");
            out.d[sz(k)].add_term(m, c * Gauss(*r));
        }
    return out;
}

RealForm realify(const CoframePresentation& p) {
    Matrix P(sz(p.n), sz(2 * p.n));
    for (std::size_t k = 0; k < sz(p.n); ++k) {
        P(k, 2 * k) = Gauss(1);
        P(k, 2 * k + 1) = Gauss::i();
    }
    return realify(p, P);
}

RealForm realify(const CoframePresentation& p, const Matrix& P, const std::vector<Rational>& radicands) {
    const int n = p.n, N = 2 * n;
    if (P.rows() != sz(n) || P.cols() != sz(N)) throw AmbientMismatch("coframe matrix must be n x 2n");
    CoframePresentation q = radicands.empty() ? p : rescale_frame(p, radicands);
    Matrix M = stack_conj(P);
    auto Minv = inverse(M);
    if (!Minv) throw NotAlmostComplex("the forms and their conjugates are not a basis");
    auto images = theta_in_e(M);
    auto eqs = q.full();
    std::vector<KForm> dtheta;
    for (const auto& f : eqs.d) dtheta.push_back(substitute(f, images, N));
    std::vector<KForm> de;
    for (int m = 0; m < N; ++m) {
        KForm acc(N, 2);
        for (int l = 0; l < N; ++l) {
            const Gauss& c = (*Minv)(sz(m), sz(l));
            if (!c.is_zero()) acc += c * dtheta[sz(l)];
        }
        if (!acc.is_real()) throw NotReal("d e^" + std::to_string(m + 1) + " is not real");
        de.push_back(std::move(acc));
    }
    Matrix D(sz(N), sz(N));
    for (std::size_t k = 0; k < sz(n); ++k) {
        D(k, k) = Gauss::i();
        D(k + sz(n), k + sz(n)) = -Gauss::i();
    }
    RealJ J(real_part_checked(*Minv * D * M));
    return RealForm{LieAlgebra::from_equations(StructureEquations(std::move(de))), std::move(J), std::move(M)};
}

Presented to_presentation(const LieAlgebra& g, const RealJ& J) {
    const int N = g.dim();
    if (J.dim() != N) throw AmbientMismatch("J and algebra dimensions differ");
    if (N % 2) throw NotAlmostComplex("odd dimension");
    const int n = N / 2;
    Matrix A = to_gauss(J.matrix().transpose());
    for (std::size_t i = 0; i < sz(N); ++i) A(i, i) -= Gauss::i();
    auto holo = CSubspace::span(sz(N), kernel(A));
    if (holo.dim() != sz(n)) throw NotAlmostComplex("i-eigenspace has wrong dimension");
    Matrix P = Matrix::from_rows(holo.basis(), sz(N));
    Matrix M = stack_conj(P);
    auto Minv = inverse(M);
    if (!Minv) throw NotAlmostComplex("eigenspaces are not complementary");
    auto images = e_in_theta(*Minv);
    CoframePresentation out(n);
    for (int k = 0; k < n; ++k) {
        KForm dw(N, 2);
        for (int m = 0; m < N; ++m) {
            const Gauss& c = P(sz(k), sz(m));
            if (c.is_zero()) continue;
            KForm dm = g.d(m);
            dw += c * dm;
        }
        KForm framed = substitute(dw, images, N);
        KForm bad = bidegree_part(framed, n, 0, 2);
        if (!bad.is_zero())
            throw NotIntegrable("d omega^" + std::to_string(k + 1) + " has (0,2) part " + render_frame(bad, n));
        out.d[sz(k)] = std::move(framed);
    }
    return {std::move(out), std::move(M)};
}

std::string to_string(JTag t) {
    switch (t) {
        case JTag::Nilpotent: return "Nilpotent";
        case JTag::WeaklyNonNilpotent: return "WnN";
        case JTag::StronglyNonNilpotent: return "SnN";
    }
    return "?";
}

Subspace JSeries::at(int k) const {
    if (k <= 0) return Subspace(terms.empty() ? 0 : terms.front().ambient());
    if (sz(k) <= terms.size()) return terms[sz(k - 1)];
    return terms.back();
}

JSeries j_compatible_series(const LieAlgebra& g, const RealJ& J) {
    const int n = g.dim();
    if (J.dim() != n) throw AmbientMismatch("J and algebra dimensions differ");
    JSeries s;
    if (n == 0) return s;
    std::vector<QMatrix> maps{QMatrix::identity(sz(n)), J.matrix()};
    Subspace prev(sz(n));
    for (int k = 1;; ++k) {
        Subspace next = bracket_preimage(g, prev, maps);
        if (!J.preserves(next) || next.dim() % 2) throw std::logic_error("a_" + std::to_string(k) + " is not J-invariant");
        s.terms.push_back(next);
        s.type.series_dims.push_back(static_cast<int>(next.dim()));
        if (next == prev) {
            s.type.t = k - 1;
            break;
        }
        if (static_cast<int>(next.dim()) == n) {
            s.type.t = k;
            break;
        }
        prev = std::move(next);
    }
    if (static_cast<int>(s.terms.back().dim()) == n)
        s.type.tag = JTag::Nilpotent;
    else if (s.terms.front().dim() == 0)
        s.type.tag = JTag::StronglyNonNilpotent;
    else
        s.type.tag = JTag::WeaklyNonNilpotent;
    return s;
}

InducedQuotient induced_quotient(const LieAlgebra& g, const RealJ& J, int q) {
    const int n = g.dim();
    auto series = j_compatible_series(g, J);
    Subspace aq = series.at(q);
    if (static_cast<int>(aq.dim()) == n) throw QuotientIsZero("a_" + std::to_string(q) + " is the whole algebra");
    Quotient quo = quotient(g, aq);
    const std::size_t m = quo.section.size();
    QMatrix S(sz(n), m);
    for (std::size_t j = 0; j < m; ++j) S(quo.section[j], j) = Rational(1);
    RealJ jt(quo.projection * J.matrix() * S);
    if (!(quo.projection * J.matrix() == jt.matrix() * quo.projection))
        throw std::logic_error("induced J is not well defined");
    auto sub = j_compatible_series(quo.algebra, jt);
    const int depth = static_cast<int>(series.terms.size() + sub.terms.size()) + 1;
    for (int l = 1; l <= depth; ++l) {
        Subspace big = series.at(q + l);
        Subspace small = sub.at(l);
        if (small.dim() + aq.dim() != big.dim()) throw std::logic_error("quotient series dimension mismatch");
        std::vector<QVec> img;
        for (const auto& b : big.basis()) img.push_back(quo.projection.apply(b));
        if (!(Subspace::span(m, img) == small)) throw std::logic_error("quotient series image mismatch");
    }
    return {std::move(quo), std::move(jt)};
}

IntertwinerCheck check_intertwiner(const CoframePresentation& p, const CoframePresentation& pp, const Matrix& lambda) {
    const int n = p.n, N = 2 * n;
    if (pp.n != n || lambda.rows() != sz(n) || lambda.cols() != sz(n)) throw AmbientMismatch("intertwiner shape");
    if (determinant(lambda).is_zero()) throw SingularLambda("det Lambda = 0");
    std::vector<KForm> images;
    for (int a = 0; a < N; ++a) {
        std::vector<Gauss> c(sz(N));
        for (int j = 0; j < n; ++j) {
            if (a < n)
                c[sz(j)] = lambda(sz(a), sz(j));
            else
                c[sz(j + n)] = lambda(sz(a - n), sz(j)).conj();
        }
        images.push_back(one_form(N, c));
    }
    auto eqs = p.full();
    IntertwinerCheck out;
    out.valid = true;
    for (int i = 0; i < n; ++i) {
        KForm r = ce_differential(eqs, images[sz(i)]) - substitute(pp.d[sz(i)], images, N);
        out.valid = out.valid && r.is_zero();
        out.residuals.push_back(std::move(r));
    }
    return out;
}

QMatrix transport(const RealForm& a, const RealForm& b, const Matrix& lambda) {
    auto binv = inverse(b.M);
    if (!binv) throw SingularLambda("target coframe is singular");
    return real_part_checked(*binv * block_diag_conj(lambda) * a.M);
}

std::vector<Gauss> complex_bracket(const CoframePresentation& p, int a, int b) {
    const int N = 2 * p.n;
    std::vector<Gauss> out(sz(N));
    if (a == b) return out;
    auto eqs = p.full();
    for (int k = 0; k < N; ++k) out[sz(k)] = -eqs.d[sz(k)].coefficient(std::vector<int>{a, b});
    return out;
}

namespace {

// Real and imaginary parts of every 2-form coefficient, in a fixed order.
QVec flatten(const std::vector<KForm>& forms, const std::vector<Mask>& basis) {
    QVec out;
    for (const auto& f : forms)
        for (Mask m : basis) {
            Gauss c = f.coefficient(m);
            out.push_back(c.re());
            out.push_back(c.im());
        }
    return out;
}

struct Searcher {
    const CoframePresentation& p;
    const CoframePresentation& pp;
    int n, N;
    StructureEquations eqs;
    std::vector<Mask> basis2;

    Searcher(const CoframePresentation& a, const CoframePresentation& b)
        : p(a), pp(b), n(a.n), N(2 * a.n), eqs(a.full()), basis2(degree_basis(2 * a.n, 2)) {}

    std::vector<KForm> images(const Matrix& L) const {
        std::vector<KForm> out;
        for (int a = 0; a < N; ++a) {
            std::vector<Gauss> c(sz(N));
            for (int j = 0; j < n; ++j) {
                if (a < n)
                    c[sz(j)] = L(sz(a), sz(j));
                else
                    c[sz(j + n)] = L(sz(a - n), sz(j)).conj();
            }
            out.push_back(one_form(N, c));
        }
        return out;
    }

    std::vector<KForm> residuals(const Matrix& L, int from, int to) const {
        auto im = images(L);
        std::vector<KForm> out;
        for (int i = from; i < to; ++i)
            out.push_back(ce_differential(eqs, im[sz(i)]) - substitute(pp.d[sz(i)], im, N));
        return out;
    }
};

// Rows [from, to) of L are set from x: (re, im) pairs row by row.
void place(Matrix& L, int from, int to, const QVec& x) {
    std::size_t u = 0;
    for (int i = from; i < to; ++i)
        for (std::size_t j = 0; j < L.cols(); ++j, u += 2) L(sz(i), j) = Gauss(x[u], x[u + 1]);
}

void enumerate_box(std::size_t k, int box, const std::function<bool(const std::vector<int>&)>& visit) {
    std::vector<int> c(k, -box);
    while (true) {
        if (!visit(c)) return;
        std::size_t pos = 0;
        while (pos < k && c[pos] == box) c[pos++] = -box;
        if (pos == k) return;
        ++c[pos];
    }
}

// Affine solve of rows [from, to) making residual rows [from, to) vanish.
LinearSolution<Rational> affine_solve(const Searcher& s, Matrix L, int from, int to) {
    const std::size_t K = sz(2 * s.n * (to - from));
    place(L, from, to, QVec(K));
    QVec b = flatten(s.residuals(L, from, to), s.basis2);
    QMatrix A(b.size(), K);
    for (std::size_t u = 0; u < K; ++u) {
        QVec x(K);
        x[u] = Rational(1);
        place(L, from, to, x);
        QVec r = flatten(s.residuals(L, from, to), s.basis2);
        for (std::size_t i = 0; i < b.size(); ++i) A(i, u) = r[i] - b[i];
    }
    QVec probe(K);
    for (std::size_t u = 0; u < K; ++u) probe[u] = Rational(static_cast<long>(u % 5) - 2, static_cast<long>(u % 3) + 1);
    place(L, from, to, probe);
    QVec r = flatten(s.residuals(L, from, to), s.basis2);
    QVec pred = A.apply(probe);
    for (std::size_t i = 0; i < b.size(); ++i)
        if (r[i] != b[i] + pred[i]) throw std::logic_error("intertwiner conditions are not affine in the searched rows");
    QVec rhs(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) rhs[i] = -b[i];
    return solve_linear(A, rhs);
}

QVec combine(const LinearSolution<Rational>& sol, const std::vector<int>& c) {
    QVec x = *sol.particular;
    for (std::size_t k = 0; k < c.size(); ++k)
        if (c[k])
            for (std::size_t u = 0; u < x.size(); ++u) x[u] += Rational(c[k]) * sol.kernel[k][u];
    return x;
}

}  // namespace

std::vector<Matrix> search_intertwiners(const CoframePresentation& p, const CoframePresentation& pp,
                                        const SearchOptions& opts) {
    if (p.n != pp.n) throw AmbientMismatch("presentations have different ranks");
    const int n = p.n;
    if (n < 2) throw AmbientMismatch("search needs rank at least 2");
    Searcher s(p, pp);
    const std::vector<Gauss> units{Gauss(0), Gauss(1), Gauss(-1), Gauss::i(), -Gauss::i()};
    std::vector<Matrix> found;
    std::vector<int> digit(sz(n), 0);
    while (true) {
        Matrix L(sz(n), sz(n));
        bool nonzero = false;
        for (int j = 0; j < n; ++j) {
            L(0, sz(j)) = units[sz(digit[sz(j)])];
            nonzero = nonzero || digit[sz(j)] != 0;
        }
        if (nonzero && s.residuals(L, 0, 1)[0].is_zero()) {
            auto mid = affine_solve(s, L, 1, n - 1);
            if (mid.particular) {
                enumerate_box(mid.kernel.size(), opts.box, [&](const std::vector<int>& c) {
                    Matrix L2 = L;
                    place(L2, 1, n - 1, combine(mid, c));
                    auto last = affine_solve(s, L2, n - 1, n);
                    if (!last.particular) return true;
                    bool more = true;
                    enumerate_box(last.kernel.size(), opts.box, [&](const std::vector<int>& c2) {
                        Matrix L3 = L2;
                        place(L3, n - 1, n, combine(last, c2));
                        if (!determinant(L3).is_zero() && check_intertwiner(p, pp, L3).valid) {
                            found.push_back(L3);
                            if (found.size() >= opts.limit) more = false;
                        }
                        return more;
                    });
                    return more;
                });
                if (found.size() >= opts.limit) return found;
            }
        }
        int pos = 0;
        while (pos < n && digit[sz(pos)] == 4) digit[sz(pos++)] = 0;
        if (pos == n) break;
        ++digit[sz(pos)];
    }
    return found;
}

}  // namespace nla
