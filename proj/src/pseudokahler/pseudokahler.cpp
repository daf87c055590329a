#include "nla/pseudokahler/pseudokahler.hpp"

#include "nla/forms/differential.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace nla {

namespace {

using GVec = std::vector<Gauss>;

std::size_t us(int i) { return static_cast<std::size_t>(i); }

std::vector<std::pair<int, int>> upper_pairs(int n) {
    std::vector<std::pair<int, int>> out;
    for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l) out.emplace_back(k, l);
    return out;
}

Gauss top_coefficient(const KForm& f) {
    const int amb = f.ambient();
    const Mask full = amb >= 32 ? ~Mask(0) : ((Mask(1) << amb) - 1);
    return f.coefficient(full);
}

std::vector<Rational> factorials(int n) {
    std::vector<Rational> f(us(n + 1), Rational(1));
    for (int i = 1; i <= n; ++i) f[us(i)] = f[us(i - 1)] * Rational(i);
    return f;
}

// Expansion of (sum t_a K_a)^deg in wedge powers, top coefficient only.
Polynomial top_polynomial(const std::vector<KForm>& basis, int deg) {
    Polynomial poly;
    poly.vars = static_cast<int>(basis.size());
    if (basis.empty()) return poly;
    const auto fact = factorials(deg);
    std::vector<int> idx;
    std::function<void(int, const KForm&)> rec = [&](int start, const KForm& acc) {
        if (static_cast<int>(idx.size()) == deg) {
            Gauss c = top_coefficient(acc);
            if (c.is_zero()) return;
            Rational mult = fact[us(deg)];
            for (std::size_t i = 0; i < idx.size();) {
                std::size_t j = i;
                while (j < idx.size() && idx[j] == idx[i]) ++j;
                mult /= fact[j - i];
                i = j;
            }
            poly.terms[idx] = Gauss(mult) * c;
            return;
        }
        for (int a = start; a < poly.vars; ++a) {
            KForm next = idx.empty() ? basis[us(a)] : wedge(acc, basis[us(a)]);
            if (next.is_zero()) continue;
            idx.push_back(a);
            rec(a, next);
            idx.pop_back();
        }
    };
    rec(0, KForm());
    return poly;
}

// Integer points ordered by support size, then support, then values 1,-1,2,-2,...
void enumerate_points(int k, int height, std::size_t cap, const std::function<bool(const std::vector<Rational>&)>& visit) {
    std::vector<int> vals;
    for (int h = 1; h <= height; ++h) {
        vals.push_back(h);
        vals.push_back(-h);
    }
    std::size_t count = 0;
    for (int size = 1; size <= k; ++size) {
        std::vector<int> sup(us(size));
        for (int i = 0; i < size; ++i) sup[us(i)] = i;
        while (true) {
            std::vector<std::size_t> choice(us(size), 0);
            while (true) {
                std::vector<Rational> t(us(k), Rational(0));
                for (int i = 0; i < size; ++i) t[us(sup[us(i)])] = Rational(vals[choice[us(i)]]);
                if (visit(t) || ++count >= cap) return;
                int p = size - 1;
                while (p >= 0 && choice[us(p)] + 1 == vals.size()) choice[us(p--)] = 0;
                if (p < 0) break;
                ++choice[us(p)];
            }
            int p = size - 1;
            while (p >= 0 && sup[us(p)] == k - size + p) --p;
            if (p < 0) break;
            ++sup[us(p)];
            for (int q = p + 1; q < size; ++q) sup[us(q)] = sup[us(q - 1)] + 1;
        }
    }
}

Hermitian11Form combine(int n, const std::vector<QVec>& basis, const std::vector<Rational>& t) {
    QVec c(us(Hermitian11Form::real_dim(n)));
    for (std::size_t a = 0; a < basis.size(); ++a)
        if (!t[a].is_zero())
            for (std::size_t j = 0; j < c.size(); ++j) c[j] += t[a] * basis[a][j];
    return Hermitian11Form::from_real(n, c);
}

GVec scaled_add(GVec acc, const GVec& v, const Gauss& c) {
    if (c.is_zero()) return acc;
    for (std::size_t i = 0; i < acc.size(); ++i)
        if (!v[i].is_zero()) acc[i] += c * v[i];
    return acc;
}

bool all_zero(const GVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Gauss& x) { return x.is_zero(); });
}

Gauss pairing(const Matrix& g, const GVec& u, const GVec& v) {
    Gauss s;
    for (std::size_t a = 0; a < u.size(); ++a) {
        if (u[a].is_zero()) continue;
        for (std::size_t b = 0; b < v.size(); ++b)
            if (!v[b].is_zero()) s += u[a] * g(a, b) * v[b];
    }
    return s;
}

GVec unit(int N, int a) {
    GVec v(us(N));
    v[us(a)] = Gauss(1);
    return v;
}

}  // namespace

Hermitian11Form Hermitian11Form::from_real(int n, const QVec& coords) {
    if (static_cast<int>(coords.size()) != real_dim(n)) throw AmbientMismatch("hermitian coordinates");
    Hermitian11Form f(n);
    for (int k = 0; k < n; ++k) f(k, k) = Gauss(coords[us(k)]);
    int p = 0;
    for (auto [k, l] : upper_pairs(n)) {
        f(k, l) = Gauss(coords[us(n + 2 * p)], coords[us(n + 2 * p + 1)]);
        ++p;
    }
    return f;
}

QVec Hermitian11Form::to_real() const {
    QVec c(us(real_dim(n)));
    for (int k = 0; k < n; ++k) c[us(k)] = (*this)(k, k).re();
    int p = 0;
    for (auto [k, l] : upper_pairs(n)) {
        c[us(n + 2 * p)] = (*this)(k, l).re();
        c[us(n + 2 * p + 1)] = (*this)(k, l).im();
        ++p;
    }
    return c;
}

KForm Hermitian11Form::form() const {
    const int amb = 2 * n;
    KForm f(amb, 2);
    for (int k = 0; k < n; ++k) {
        if (!(*this)(k, k).is_real()) throw NotReal("diagonal of a hermitian form");
        f += KForm::basis(amb, {k, n + k}, Gauss::i() * (*this)(k, k));
    }
    for (auto [k, l] : upper_pairs(n)) {
        const Gauss& x = (*this)(k, l);
        if (x.is_zero()) continue;
        f += KForm::basis(amb, {k, n + l}, x);
        f += KForm::basis(amb, {l, n + k}, -x.conj());
    }
    return f;
}

Gauss top_power(const Hermitian11Form& f) {
    KForm F = f.form();
    KForm acc = F;
    for (int i = 1; i < f.n; ++i) acc = wedge(acc, F);
    return top_coefficient(acc);
}

Gauss Polynomial::eval(const std::vector<Rational>& t) const {
    Gauss s;
    for (const auto& [idx, c] : terms) {
        Rational m(1);
        for (int v : idx) {
            m *= t[us(v)];
            if (m.is_zero()) break;
        }
        if (!m.is_zero()) s += Gauss(m) * c;
    }
    return s;
}

std::string Polynomial::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : terms) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (int v : idx) os << "*t" << v + 1;
    }
    return os.str();
}

bool is_closed(const CoframePresentation& p, const Hermitian11Form& f) {
    return ce_differential(p.full(), f.form()).is_zero();
}

QMatrix metric_matrix(const CoframePresentation& p, const Hermitian11Form& f) {
    const RealForm rf = realify(p);
    const int N = 2 * p.n;
    std::vector<KForm> images;
    for (int a = 0; a < N; ++a) {
        KForm img(N, 1);
        for (int m = 0; m < N; ++m)
            if (!rf.M(us(a), us(m)).is_zero()) img += KForm::one_form(N, m, rf.M(us(a), us(m)));
        images.push_back(img);
    }
    KForm Fe = substitute(f.form(), images, N);
    if (!Fe.is_real()) throw NotReal("fundamental form");
    QMatrix Fm(us(N), us(N));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            if (i != j) Fm(us(i), us(j)) = Fe.coefficient(std::vector<int>{i, j}).re();
    QMatrix g = Fm * rf.J.matrix();
    if (!(g == g.transpose())) throw NotSymmetric("metric from a non (1,1) form");
    return g;
}

PKSolution metric_and_signature(const CoframePresentation& p, const Hermitian11Form& f) {
    QMatrix g = metric_matrix(p, f);
    if (determinant(g).is_zero()) throw Degenerate("metric is degenerate");
    return PKSolution{f, g, signature_symmetric(g)};
}

PKReport pk_solve(const CoframePresentation& p, const PKOptions& opts) {
    const int n = p.n;
    const int N = Hermitian11Form::real_dim(n);
    const StructureEquations eqs = p.full();
    const auto rows = degree_basis(2 * n, 3);

    QMatrix sys(2 * rows.size(), us(N));
    for (int u = 0; u < N; ++u) {
        QVec e(us(N));
        e[us(u)] = Rational(1);
        KForm del = del_delbar(eqs, n, Hermitian11Form::from_real(n, e).form()).first;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            Gauss c = del.coefficient(rows[r]);
            sys(2 * r, us(u)) = c.re();
            sys(2 * r + 1, us(u)) = c.im();
        }
    }

    PKReport rep;
    rep.closed_space = kernel(sys);
    std::vector<KForm> forms;
    for (const auto& v : rep.closed_space) {
        auto h = Hermitian11Form::from_real(n, v);
        if (!is_closed(p, h)) throw OracleDisagreement("del-closed (1,1)-form is not d-closed");
        forms.push_back(h.form());
    }
    rep.top = top_polynomial(forms, n);
    if (rep.top.is_zero()) return rep;

    const int k = rep.kernel_dim();
    enumerate_points(k, opts.height, opts.max_points, [&](const std::vector<Rational>& t) {
        if (rep.top.eval(t).is_zero()) return false;
        auto h = combine(n, rep.closed_space, t);
        auto sol = metric_and_signature(p, h);
        const bool neutral = sol.signature.positive == sol.signature.negative;
        if (!rep.witness || (neutral && !(rep.witness->signature.positive == rep.witness->signature.negative))) {
            rep.witness = sol;
            rep.witness_coords = t;
        }
        return neutral || !opts.prefer_neutral;
    });
    return rep;
}

Hermitian11Form wnn_pk_form(const WnNParams& prm, const Rational& u, const Rational& v, const Rational& r,
                            const Rational& s) {
    if (prm.eps != 0 || prm.nu != 1) throw InadmissibleParams("closed family needs eps = 0 and nu = 1");
    const Gauss I = Gauss::i();
    const Rational ad = prm.a * Rational(prm.delta);
    Hermitian11Form f(4);
    f(0, 0) = Gauss(u);
    f(1, 1) = Gauss(-s);
    f(2, 2) = Gauss(-Rational(prm.delta) * r);
    f(0, 1) = Gauss(v);
    f(0, 2) = I * Gauss(ad) * Gauss(r, -s);
    f(0, 3) = Gauss(r, s);
    return f;
}

Hermitian11Form snn_pk_form(const Rational& r, const Rational& s, const Rational& u, const Rational& v) {
    Hermitian11Form f(4);
    f(0, 0) = Gauss(r);
    f(3, 3) = Gauss(s);
    f(0, 1) = Gauss(u);
    f(0, 2) = Gauss(v);
    f(1, 2) = Gauss(-s);
    return f;
}

ConnectionTable levi_civita(const CoframePresentation& p, const Hermitian11Form& f) {
    const int n = p.n;
    const int N = 2 * n;
    const KForm F = f.form();
    ConnectionTable c;
    c.n = n;
    c.g = Matrix(us(N), us(N));
    for (int a = 0; a < N; ++a) {
        const Gauss ja = a < n ? Gauss::i() : -Gauss::i();
        for (int b = 0; b < N; ++b)
            if (a != b) c.g(us(a), us(b)) = ja * F.coefficient(std::vector<int>{a, b});
    }
    auto ginv = inverse(c.g);
    if (!ginv) throw Degenerate("frame metric is degenerate");

    std::vector<std::vector<GVec>> br(us(N), std::vector<GVec>(us(N)));
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) br[us(a)][us(b)] = complex_bracket(p, a, b);

    // g([U,V], W) with U, V, W frame fields
    auto gb = [&](int u, int v, int w) { return pairing(c.g, br[us(u)][us(v)], unit(N, w)); };

    const Gauss half(Rational(1, 2));
    c.gamma.assign(us(N), std::vector<GVec>(us(N)));
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            GVec rhs(us(N));
            for (int w = 0; w < N; ++w) rhs[us(w)] = half * (gb(a, b, w) - gb(b, w, a) + gb(w, a, b));
            c.gamma[us(a)][us(b)] = ginv->apply(rhs);
        }

    c.torsion_free = true;
    c.metric = true;
    c.parallel_J = true;
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            GVec t = scaled_add(scaled_add(c.nabla(a, b), c.nabla(b, a), Gauss(-1)), br[us(a)][us(b)], Gauss(-1));
            if (!all_zero(t)) c.torsion_free = false;
            for (int e = 0; e < N; ++e)
                if ((b < n) != (e < n) && !c.nabla(a, b)[us(e)].is_zero()) c.parallel_J = false;
            for (int d = 0; d < N; ++d) {
                Gauss m = pairing(c.g, c.nabla(a, b), unit(N, d)) + pairing(c.g, unit(N, b), c.nabla(a, d));
                if (!m.is_zero()) c.metric = false;
            }
        }
    return c;
}

Curvature curvature(const CoframePresentation& p, const ConnectionTable& c) {
    const int N = 2 * c.n;
    Curvature cv;
    cv.N = N;
    cv.r.assign(us(N * N * N * N), Gauss());
    cv.ricci = Matrix(us(N), us(N));
    // nabla_a of a constant-coefficient field v
    auto nab = [&](int a, const GVec& v) {
        GVec out(us(N));
        for (int e = 0; e < N; ++e) out = scaled_add(std::move(out), c.nabla(a, e), v[us(e)]);
        return out;
    };
    cv.flat = true;
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            const GVec ab = complex_bracket(p, a, b);
            for (int k = 0; k < N; ++k) {
                GVec rv = scaled_add(nab(a, c.nabla(b, k)), nab(b, c.nabla(a, k)), Gauss(-1));
                for (int e = 0; e < N; ++e) rv = scaled_add(std::move(rv), c.nabla(e, k), -ab[us(e)]);
                cv.ricci(us(b), us(k)) += rv[us(a)];
                for (int d = 0; d < N; ++d) {
                    Gauss val = pairing(c.g, rv, unit(N, d));
                    if (!val.is_zero()) cv.flat = false;
                    cv.r[us(((a * N + b) * N + k) * N + d)] = val;
                }
            }
        }
    cv.ricci_flat = cv.ricci.is_zero();
    return cv;
}

bool Curvature::symmetries_hold() const {
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b)
            for (int c = 0; c < N; ++c)
                for (int d = 0; d < N; ++d) {
                    const Gauss& x = at(a, b, c, d);
                    if (!(x == -at(b, a, c, d)) || !(x == -at(a, b, d, c)) || !(x == at(c, d, a, b))) return false;
                }
    return true;
}

bool Curvature::first_bianchi_holds() const {
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b)
            for (int c = 0; c < N; ++c)
                for (int d = 0; d < N; ++d)
                    if (!(at(a, b, c, d) + at(b, c, a, d) + at(c, a, b, d)).is_zero()) return false;
    return true;
}

bool parallel_volume_check(const ConnectionTable& c) {
    const int n = c.n;
    const int N = 2 * n;
    // Phi(X_{s_1},...,X_{s_n}) for the frame volume w^1 ^ ... ^ w^n
    auto phi = [&](const std::vector<int>& s) {
        std::vector<int> t = s;
        for (int v : t)
            if (v >= n) return 0;
        int sign = 1;
        for (std::size_t i = 0; i < t.size(); ++i)
            for (std::size_t j = i + 1; j < t.size(); ++j) {
                if (t[i] == t[j]) return 0;
                if (t[i] > t[j]) sign = -sign;
            }
        return sign;
    };
    for (int a = 0; a < N; ++a)
        for (Mask m : degree_basis(N, n)) {
            const auto s = mask_indices(m);
            Gauss val;
            for (std::size_t pos = 0; pos < s.size(); ++pos)
                for (int e = 0; e < n; ++e) {
                    const Gauss& ce = c.nabla(a, s[pos])[us(e)];
                    if (ce.is_zero()) continue;
                    auto t = s;
                    t[pos] = e;
                    int sg = phi(t);
                    if (sg) val -= Gauss(sg) * ce;
                }
            if (!val.is_zero()) return false;
        }
    return true;
}

KForm Holo2Form::form() const {
    const auto c = coords();
    const auto pairs = upper_pairs(4);
    KForm f(8, 2);
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (!c[i].is_zero()) f += KForm::basis(8, {pairs[i].first, pairs[i].second}, c[i]);
    return f;
}

SymplecticReport complex_symplectic_solve(const CoframePresentation& p) {
    if (p.n != 4) throw AmbientMismatch("holomorphic 2-forms are modelled in complex dimension 4");
    const auto eqs = p.full();
    const auto rows = degree_basis(8, 3);
    const auto pairs = upper_pairs(4);
    Matrix sys(rows.size(), pairs.size());
    for (std::size_t j = 0; j < pairs.size(); ++j) {
        KForm d = ce_differential(eqs, KForm::basis(8, {pairs[j].first, pairs[j].second}));
        for (std::size_t r = 0; r < rows.size(); ++r) sys(r, j) = d.coefficient(rows[r]);
    }
    SymplecticReport rep;
    rep.closed_space = kernel(sys);
    static const char* names[] = {"alpha", "beta", "gamma", "tau", "theta", "xi"};
    for (std::size_t j = 0; j < pairs.size(); ++j) {
        bool zero = std::all_of(rep.closed_space.begin(), rep.closed_space.end(),
                                [&](const GVec& v) { return v[j].is_zero(); });
        if (zero) rep.forced_zero.emplace_back(names[j]);
    }
    auto bil = [](const GVec& x, const GVec& y) { return x[0] * y[5] - x[1] * y[4] + x[2] * y[3]; };
    const int k = static_cast<int>(rep.closed_space.size());
    rep.pfaffian.vars = k;
    for (int a = 0; a < k; ++a)
        for (int b = a; b < k; ++b) {
            const auto& x = rep.closed_space[us(a)];
            const auto& y = rep.closed_space[us(b)];
            Gauss c = a == b ? bil(x, x) : bil(x, y) + bil(y, x);
            if (!c.is_zero()) rep.pfaffian.terms[{a, b}] = c;
        }
    rep.nondegenerate = !rep.pfaffian.is_zero();
    if (rep.nondegenerate)
        enumerate_points(k, 2, 100000, [&](const std::vector<Rational>& t) {
            if (rep.pfaffian.eval(t).is_zero()) return false;
            GVec c(6);
            for (int a = 0; a < k; ++a) c = scaled_add(std::move(c), rep.closed_space[us(a)], Gauss(t[us(a)]));
            rep.witness = Holo2Form::from(c);
            return true;
        });
    return rep;
}

std::vector<PKSurveyEntry> pk_survey() {
    std::vector<PKSurveyEntry> out;
    const Gauss I = Gauss::i();
    for (int e : {0, 1})
        for (int d : {-1, 1}) {
            std::vector<WnNParams> samples = {
                {e, d, 0, 0, 0}, {e, d, 0, 0, 1}, {e, d, 0, 1, 0}, {e, d, 0, 1, 1},
                {e, d, 1, 0, 0}, {e, d, 1, 0, 1}, {e, d, 1, 1, 0}, {e, d, 1, 1, 1},
                {e, d, 1, 1, I}, {e, d, 1, 1, Gauss(2, 3)}, {e, d, 1, 1, -1},
            };
            if (e == 1) {
                samples.push_back({e, d, 0, 1, 2});
                samples.push_back({e, d, 1, 0, 2});
                samples.push_back({e, d, 1, 2, Gauss(1, -1)});
                samples.push_back({e, d, 1, Rational(1, 2), 3});
            }
            for (const auto& s : samples) {
                PKSurveyEntry en;
                en.label = "wnn" + s.str();
                en.algebra = realify_table1(s).name;
                en.pk = pk_solve(build_wnn(s)).exists();
                out.push_back(en);
            }
        }
    std::vector<SnNParams> snn;
    for (int d : {-1, 1})
        for (int e : {0, 1})
            for (int nu : {0, 1}) {
                SnNParams s;
                s.family = SnNParams::I;
                s.delta = d;
                s.eps = e;
                s.nu = nu;
                s.a = Rational(1);
                snn.push_back(s);
                s.a = Rational(0);
                s.b = Rational(1);
                snn.push_back(s);
                s.a = Rational(2);
                s.b = Rational(-1);
                snn.push_back(s);
            }
    auto two = [](int e, int m, int nu, Rational a, Rational b) {
        SnNParams s;
        s.family = SnNParams::II;
        s.eps = e;
        s.mu = m;
        s.nu = nu;
        s.a = std::move(a);
        s.b = std::move(b);
        return s;
    };
    snn.push_back(two(1, 0, 0, 0, 0));
    snn.push_back(two(1, 0, 1, 1, 2));
    snn.push_back(two(1, 0, 0, 1, 0));
    snn.push_back(two(0, 1, 0, 1, 1));
    snn.push_back(two(1, 1, 0, 0, 0));
    snn.push_back(two(1, 1, 0, 2, -1));
    for (const auto& s : snn) {
        PKSurveyEntry en;
        en.label = (s.family == SnNParams::I ? "snn1" : "snn2") + s.str();
        const bool pk_case = s.family == SnNParams::II && s.eps == 1 && s.mu == 0 && s.nu == 0 &&
                             s.a.is_zero() && s.b.is_zero();
        en.algebra = pk_case && snn_pk_real_form() == builtin_algebra("g10^0") ? "g10^0" : "";
        en.pk = pk_solve(build_snn(s)).exists();
        out.push_back(en);
    }
    return out;
}

nlohmann::json to_json(const PKReport& r) {
    nlohmann::json j;
    j["pk_exists"] = r.exists();
    j["kernel_dim"] = r.kernel_dim();
    j["top_power_identically_zero"] = r.top.is_zero();
    if (r.witness) {
        const auto& h = r.witness->form;
        nlohmann::json x = nlohmann::json::array();
        for (int k = 0; k < h.n; ++k) {
            nlohmann::json row = nlohmann::json::array();
            for (int l = 0; l < h.n; ++l) row.push_back(l >= k ? h(k, l).str() : (-h(l, k).conj()).str());
            x.push_back(row);
        }
        j["witness"] = x;
        const auto& s = r.witness->signature;
        j["signature"] = {s.positive, s.negative};
    } else {
        j["witness"] = nullptr;
        j["signature"] = nullptr;
    }
    return j;
}

}  // namespace nla
