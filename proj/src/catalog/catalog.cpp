#include "nla/catalog/catalog.hpp"

#include "nla/liealg/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace nla {

namespace {

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

const Gauss I = Gauss::i();

bool is_bit(int v) { return v == 0 || v == 1; }
bool is_sign(int v) { return v == 1 || v == -1; }

std::string gs(const Gauss& g) { return g.str(); }

}  // namespace

std::string WnNParams::str() const {
    return "(" + std::to_string(eps) + "," + std::to_string(delta) + "," + std::to_string(nu) + "," + a.str() + "," +
           gs(B) + ")";
}

std::string GenericExtParams::str() const {
    return "(" + std::to_string(eps) + "," + std::to_string(delta) + "," + std::to_string(nu) + "," + gs(A) + "," +
           gs(B) + ")";
}

std::string SnNParams::str() const {
    if (family == I)
        return "I(delta=" + std::to_string(delta) + ",eps=" + std::to_string(eps) + ",nu=" + std::to_string(nu) +
               ",a=" + a.str() + ",b=" + b.str() + ")";
    return "II(eps=" + std::to_string(eps) + ",mu=" + std::to_string(mu) + ",nu=" + std::to_string(nu) +
           ",a=" + a.str() + ",b=" + b.str() + ")";
}

int admissible_branch(const WnNParams& p) {
    if (!is_bit(p.eps) || !is_sign(p.delta) || !is_bit(p.nu))
        throw InadmissibleParams(p.str() + ": eps, nu must lie in {0,1} and delta in {-1,1}");
    const bool real_nonneg = p.B.is_real() && p.B.re().sign() >= 0;
    const bool b01 = p.B == Gauss(0) || p.B == Gauss(1);
    if (p.a.sign() < 0) throw InadmissibleParams(p.str() + ": a must be non-negative");
    if (p.nu == 0) {
        if (p.a.is_zero() && p.B.is_zero()) return 1;
        if (p.a.is_zero() && p.B == Gauss(1)) return 2;
        if (p.a == Rational(1)) {
            if (!real_nonneg) throw InadmissibleParams(p.str() + ": nu=0, a=1 requires B real and >= 0");
            if (p.eps == 0 && !b01) throw InadmissibleParams(p.str() + ": eps=0, nu=0, a=1 requires B in {0,1}");
            return 3;
        }
        throw InadmissibleParams(p.str() + ": nu=0 requires a in {0,1} (and B in {0,1} when a=0)");
    }
    if (p.a.is_zero()) {
        if (!real_nonneg) throw InadmissibleParams(p.str() + ": nu=1, a=0 requires B real and >= 0");
        if (p.eps == 0 && !b01) throw InadmissibleParams(p.str() + ": eps=0, nu=1, a=0 requires B in {0,1}");
        return 3;
    }
    if (p.eps == 0) {
        if (p.a != Rational(1)) throw InadmissibleParams(p.str() + ": eps=0, nu=1 requires a in {0,1}");
        if (p.B.im().sign() < 0) throw InadmissibleParams(p.str() + ": eps=0, nu=1, a=1 requires Im B >= 0");
    }
    return 4;
}

namespace {

CoframePresentation wnn_shape(int eps, int delta, int nu, const Gauss& A, const Gauss& B) {
    const int n = 4;
    CoframePresentation p(n);
    Gauss e(eps), d(delta), v(nu);
    p.d[1] = wmono(n, {1, 3}) + wmono(n, {1, -3});
    p.d[2] = wmono(n, {1, -1}, I * e) + wmono(n, {1, -2}, I * d) - wmono(n, {2, -1}, I * d);
    p.d[3] = wmono(n, {1, 2}, A) + wmono(n, {1, -1}, B) +
             v * (wmono(n, {2, 3}) + wmono(n, {1, -3}, Gauss(2) * d * e) + wmono(n, {2, -3}));
    return p;
}

}  // namespace

CoframePresentation build_wnn(const WnNParams& p) {
    admissible_branch(p);
    auto out = wnn_shape(p.eps, p.delta, p.nu, Gauss(p.a), p.B);
    out.validate();
    return out;
}

CoframePresentation build_generic(const GenericExtParams& p) {
    if (!is_bit(p.eps) || !is_sign(p.delta) || !is_bit(p.nu))
        throw InadmissibleParams(p.str() + ": eps, nu must lie in {0,1} and delta in {-1,1}");
    auto out = wnn_shape(p.eps, p.delta, p.nu, p.A, p.B);
    out.validate();
    return out;
}

CoframePresentation build_extension(const ExtensionCoefficients& c) {
    auto p = snn6_presentation(c.eps, c.delta);
    CoframePresentation out(4);
    auto lift = [](const KForm& f) {
        // rank-3 frame index k -> rank-4 index
        std::vector<KForm> img;
        for (int k = 0; k < 6; ++k) img.push_back(KForm::one_form(8, k < 3 ? k : k + 1));
        return substitute(f, img, 8);
    };
    for (int k = 0; k < 3; ++k) out.d[sz(k)] = lift(p.d[sz(k)]);
    KForm d4(8, 2);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i < j) d4 += wmono(4, {i + 1, j + 1}, c.A[i][j]);
            d4 += wmono(4, {i + 1, -(j + 1)}, c.B[i][j]);
        }
    out.d[3] = std::move(d4);
    return out;
}

GenericReduction extension_to_generic(const ExtensionCoefficients& c) {
    const Gauss& A12 = c.A[0][1];
    const Gauss& A13 = c.A[0][2];
    const Gauss& A23 = c.A[1][2];
    const Gauss& B11 = c.B[0][0];
    const Gauss& B12 = c.B[0][1];
    bool ok = c.B[1][1].is_zero() && c.B[2][0].is_zero() && c.B[2][1].is_zero() && c.B[2][2].is_zero() &&
              c.B[1][2] == A23 && c.B[0][2] == A13 + Gauss(2 * c.delta * c.eps) * A23 && c.B[1][0] == -B12;
    if (!ok) throw JacobiViolation(3, ce_differential(build_extension(c).full(), build_extension(c).d[3]));
    GenericReduction r;
    r.params.eps = c.eps;
    r.params.delta = c.delta;
    Gauss s = A23.is_zero() ? Gauss(1) : A23.inverse();
    r.params.nu = A23.is_zero() ? 0 : 1;
    r.params.A = A12 * s;
    r.params.B = (B11 - Gauss(c.eps * c.delta) * B12) * s;
    r.lambda = Matrix::identity(4);
    r.lambda(3, 3) = s;
    r.lambda(3, 1) = -A13 * s;
    r.lambda(3, 2) = I * Gauss(c.delta) * B12 * s;
    return r;
}

namespace {

Rational modulus(const Gauss& z, const char* what) {
    auto m = z.abs();
    if (!m) throw IrrationalRotation(std::string("|") + what + "| = sqrt(" + z.norm().str() + ") is irrational");
    return *m;
}

Matrix diag4(const Gauss& a, const Gauss& b, const Gauss& c, const Gauss& d) {
    Matrix m(4, 4);
    m(0, 0) = a;
    m(1, 1) = b;
    m(2, 2) = c;
    m(3, 3) = d;
    return m;
}

}  // namespace

NormalReduction reduce_to_normal_form(const GenericExtParams& g) {
    build_generic(g);
    NormalReduction r;
    r.params.eps = g.eps;
    r.params.delta = g.delta;
    r.params.nu = g.nu;
    const Gauss& A = g.A;
    const Gauss& B = g.B;
    if (g.nu == 0) {
        if (A.is_zero() && B.is_zero()) {
            r.lambda = Matrix::identity(4);
        } else if (A.is_zero()) {
            r.params.B = Gauss(1);
            r.lambda = diag4(1, 1, 1, B.inverse());
        } else {
            Rational am = modulus(A, "A");
            Gauss u(1), c;
            Rational bnew;
            if (B.is_zero()) {
                c = A.inverse();
            } else {
                Rational bm = modulus(B, "B");
                Gauss phase = (A / Gauss(am)) / (B / Gauss(bm));
                auto root = phase.sqrt();
                if (!root) throw IrrationalRotation("half-angle rotation sqrt(" + phase.str() + ") leaves Q(i)");
                u = *root;
                c = (B / Gauss(bm)).conj() / Gauss(am);
                bnew = bm / am;
            }
            r.params.a = Rational(1);
            r.params.B = Gauss(bnew);
            r.lambda = diag4(u, u, 1, c);
            if (g.eps == 0 && !bnew.is_zero()) {
                Gauss t(Rational(1) / bnew);
                for (std::size_t k = 1; k < 4; ++k) r.lambda(k, k) = r.lambda(k, k) * t;
                r.params.B = Gauss(1);
            }
        }
    } else if (A.is_zero()) {
        if (!B.is_zero()) {
            Rational bm = modulus(B, "B");
            Gauss rot = (B / Gauss(bm)).conj();
            if (g.eps == 0) {
                auto root = bm.sqrt();
                if (!root) throw IrrationalRotation("sqrt(|B|) = sqrt(" + bm.str() + ") is irrational");
                Gauss rinv(Rational(1) / *root);
                r.lambda = diag4(rot, rot * rinv, rinv, rot / Gauss(bm));
                r.params.B = Gauss(1);
            } else {
                r.lambda = diag4(rot, rot, 1, rot);
                r.params.B = Gauss(bm);
            }
        } else {
            r.lambda = Matrix::identity(4);
        }
    } else {
        Rational am = modulus(A, "A");
        Gauss rot = A / Gauss(am);
        if (g.eps == 0) {
            Gauss probe = B * rot;
            Gauss sigma(probe.im().sign() < 0 ? -1 : 1);
            Gauss ai(Rational(1) / am);
            r.lambda = diag4(sigma * rot, rot * ai, sigma * ai, sigma * rot * ai * ai);
            r.params.a = Rational(1);
            r.params.B = B * rot / (sigma * Gauss(am * am));
        } else {
            r.lambda = diag4(rot, rot, 1, rot);
            r.params.a = am;
            r.params.B = B * rot;
        }
    }
    admissible_branch(r.params);
    return r;
}

namespace {

// Coefficient rows over e^1..e^8 (1-based keys).
std::vector<Gauss> row(std::initializer_list<std::pair<int, Gauss>> terms) {
    std::vector<Gauss> v(8);
    for (const auto& [m, c] : terms) v[sz(m - 1)] += c;
    return v;
}

Matrix rows4(std::vector<Gauss> a, std::vector<Gauss> b, std::vector<Gauss> c, std::vector<Gauss> d) {
    return Matrix::from_rows({std::move(a), std::move(b), std::move(c), std::move(d)}, 8);
}

}  // namespace

Table1Row table1_row(const WnNParams& p) {
    admissible_branch(p);
    const Gauss d(p.delta), e(p.eps);
    const Gauss a(p.a), B = p.B;
    Table1Row t;
    if (p.nu == 0) {
        if (p.a.is_zero() && p.B.is_zero() && p.eps == 0) {
            t.name = "f1";
            t.P = rows4(row({{1, 1}, {3, -I}}), row({{4, 1}, {5, I}}), row({{2, Gauss(Rational(1, 2))}, {6, Gauss(2) * I * d}}),
                        row({{7, 1}, {8, -I}}));
        } else if (p.a.is_zero() && p.B.is_zero()) {
            t.name = "f2";
            t.P = rows4(row({{1, 1}, {2, I}}), row({{4, 1}, {5, I}}), row({{3, 1}, {6, Gauss(2) * I * d}}),
                        row({{7, 1}, {8, -I}}));
            t.radicands = {Rational(1, 2), Rational(2), Rational(1), Rational(1)};
        } else if (p.a.is_zero() && p.eps == 0) {
            t.name = "f3";
            t.P = rows4(row({{1, 1}, {2, I}}), row({{5, 4}, {6, Gauss(4) * I}}), row({{3, 2}, {7, Gauss(8) * I * d}}),
                        row({{8, 2}, {4, Gauss(-2) * I}}));
        } else if (p.a.is_zero()) {
            t.name = "f2";
            t.P = rows4(row({{1, 1}, {2, I}}), row({{4, 4}, {5, Gauss(4) * I}}), row({{3, 2}, {6, Gauss(8) * I * d}}),
                        row({{7, 2}, {3, Gauss(-2) * I}, {8, Gauss(2) * I}}));
        } else {
            t.name = p.eps ? "f4^1" : "f4^0";
            t.P = rows4(row({{1, 1}, {2, I}}), row({{4, 4}, {6, Gauss(4) * I}, {2, Gauss(2) * I * B * (Gauss(1) - e)}}),
                        row({{3, 2}, {5, Gauss(8) * I * d}, {7, Gauss(8) * I * d}}),
                        row({{5, 4}, {7, -4}, {8, Gauss(4) * I}, {3, Gauss(-2) * I * e * B}}));
        }
        return t;
    }
    if (p.a.is_zero() && p.eps == 0) {
        t.name = p.B.is_zero() ? "f5^0" : "f5^1";
        t.P = rows4(row({{1, 1}, {2, I}}), row({{4, 2}, {5, Gauss(2) * I}}), row({{3, 1}, {8, Gauss(4) * I * d}}),
                    row({{6, -4}, {7, Gauss(-4) * I}}));
    } else if (p.a.is_zero()) {
        t.name = "f6";
        t.P = rows4(row({{1, 1}, {2, I}}), row({{4, 4}, {5, Gauss(4) * I}}), row({{3, 2}, {6, Gauss(8) * I * d}}),
                    row({{8, 16}, {7, Gauss(-16) * I}, {4, Gauss(4) * d}, {5, Gauss(4) * d * I}, {3, Gauss(-2) * I * B}}));
    } else if (p.eps == 0 && p.B.is_real()) {
        t.name = "f7^0";
        t.P = rows4(row({{1, -1}, {2, -I}}), row({{4, -1}, {1, Gauss(2) * B}, {5, -I}}),
                    row({{3, Gauss(Rational(1, 2))}, {6, Gauss(2) * I * d}}),
                    row({{7, 1}, {6, -1}, {4, Gauss(2) * B}, {1, Gauss(-4) * B * B}, {8, I}}));
    } else if (p.eps == 0) {
        t.name = "f7^1";
        const Gauss b1(B.re()), b2(B.im());
        const Gauss b23 = b2 * b2 * b2;
        t.P = rows4(row({{1, Gauss(-2) * b2}, {2, Gauss(-2) * b2 * I}}),
                    row({{4, Gauss(-4) * b2 * b2}, {1, Gauss(4) * b2 * b1}, {5, Gauss(-4) * b2 * b2 * I}}),
                    row({{3, b2}, {6, Gauss(16) * I * d * b23}}),
                    row({{7, Gauss(8) * b23}, {6, Gauss(-8) * b23}, {4, Gauss(8) * b2 * b2 * b1}, {1, Gauss(-8) * b2 * b1 * b1},
                         {8, Gauss(8) * I * b23}}));
    } else {
        t.name = "f8";
        const Gauss a2 = a * a, a3 = a2 * a, a4 = a3 * a, a5 = a4 * a;
        t.P = rows4(row({{1, -a / Gauss(4)}, {2, -I * a / Gauss(4)}}),
                    row({{4, -a3 / Gauss(16)}, {5, -I * a3 / Gauss(16)}}),
                    row({{3, a2 / Gauss(8)}, {6, I * d * a4 / Gauss(32)}}),
                    row({{7, a5 / Gauss(64)}, {6, -a5 / Gauss(64)}, {8, I * a5 / Gauss(64)}, {3, -I * a2 * B / Gauss(8)},
                         {4, -d * a3 / Gauss(16)}, {5, -I * d * a3 / Gauss(16)}}));
    }
    return t;
}

Table1Result realify_table1(const WnNParams& p) {
    auto row = table1_row(p);
    auto pres = build_wnn(p);
    RealForm rf = realify(pres, row.P, row.radicands);
    LieAlgebra target = builtin_algebra(row.name);
    if (!(rf.g == target))
        throw RowMismatch(p.str() + " realifies to " + render_algebra(rf.g) + ", expected " + row.name + " = " +
                          render_algebra(target));
    rf.g.set_name(row.name);
    return {std::move(rf), row.name};
}

void check_snn(const SnNParams& p) {
    if (!is_bit(p.eps) || !is_bit(p.nu) || !is_bit(p.mu))
        throw InadmissibleParams(p.str() + ": eps, nu, mu must lie in {0,1}");
    if (p.family == SnNParams::I) {
        if (!is_sign(p.delta)) throw InadmissibleParams(p.str() + ": delta must be -1 or 1");
        if (p.a.is_zero() && p.b.is_zero()) throw InadmissibleParams(p.str() + ": (a,b) must be nonzero");
        if (p.a.sign() < 0) throw InadmissibleParams(p.str() + ": a must be non-negative");
    } else if (p.family == SnNParams::II) {
        if (p.eps == 0 && p.mu == 0) throw InadmissibleParams(p.str() + ": (eps,mu) must be nonzero");
        if (p.mu * p.nu != 0) throw InadmissibleParams(p.str() + ": mu nu must vanish");
    } else {
        throw InadmissibleParams("unknown SnN family");
    }
}

CoframePresentation build_snn(const SnNParams& p) {
    check_snn(p);
    const int n = 4;
    CoframePresentation out(n);
    const Gauss e(p.eps), v(p.nu), m(p.mu), d(p.delta), a(p.a), b(p.b);
    if (p.family == SnNParams::I) {
        out.d[1] = wmono(n, {1, -1}, e);
        out.d[2] = wmono(n, {1, 4}) + wmono(n, {1, -4}) + wmono(n, {2, -1}, a) + wmono(n, {1, -2}, I * d * e * b);
        out.d[3] = wmono(n, {1, -1}, I * v) + wmono(n, {2, -2}, b) + wmono(n, {1, -3}, I * d) - wmono(n, {3, -1}, I * d);
    } else {
        out.d[1] = wmono(n, {1, 4}) + wmono(n, {1, -4});
        out.d[2] = wmono(n, {1, -1}, a) + e * (wmono(n, {1, 2}) + wmono(n, {1, -2}) - wmono(n, {2, -1})) +
                   I * m * (wmono(n, {2, 4}) + wmono(n, {2, -4}));
        out.d[3] = wmono(n, {1, -1}, I * v) - wmono(n, {2, -2}, m) + I * b * (wmono(n, {1, -2}) - wmono(n, {2, -1})) +
                   I * (wmono(n, {1, -3}) - wmono(n, {3, -1}));
    }
    out.validate();
    return out;
}

CoframePresentation snn6_presentation(int eps, int delta) {
    if (!is_bit(eps) || !is_sign(delta)) throw InadmissibleParams("snn6 needs eps in {0,1}, delta in {-1,1}");
    const int n = 3;
    CoframePresentation p(n);
    p.d[1] = wmono(n, {1, 3}) + wmono(n, {1, -3});
    p.d[2] = wmono(n, {1, -1}, I * Gauss(eps)) + wmono(n, {1, -2}, I * Gauss(delta)) - wmono(n, {2, -1}, I * Gauss(delta));
    p.validate();
    return p;
}

RealForm build_snn6(int eps, int delta) { return realify(snn6_presentation(eps, delta)); }

LieAlgebra snn_pk_real_form() {
    SnNParams sp;
    sp.family = SnNParams::II;
    sp.eps = 1;
    auto rf = realify(build_snn(sp));
    // x_k, y_k = e^{2k-1}, e^{2k}
    QMatrix e(8, 8);
    e(0, 0) = Rational(1);
    e(1, 1) = Rational(1);
    e(2, 6) = Rational(2);
    e(3, 2) = Rational(1);
    e(4, 3) = Rational(1);
    e(5, 4) = Rational(1, 3);
    e(6, 5) = Rational(1);
    e(7, 7) = Rational(1, 6);
    const Rational t(1, 3);
    auto g = rescale_coframe(change_coframe(rf.g, e), {1, t, 1, 1, t, 1, t, 1});
    g.set_name("g10^0");
    return g;
}

namespace {

const std::vector<std::pair<std::string, std::string>>& builtin_table() {
    static const std::vector<std::pair<std::string, std::string>> t = {
        {"f1", "(0,0,0,12,23,14-35,0,0)"},
        {"f2", "(0,0,12,13,23,14+25,0,0)"},
        {"f3", "(0,0,0,12,13,23,15+26,0)"},
        {"f4^0", "(0,0,0,13,14,23,26,16+24)"},
        {"f4^1", "(0,0,12,13,14,23,26,16+24)"},
        {"f5^0", "(0,0,0,13,23,34,35,14+25)"},
        {"f5^1", "(0,0,0,13,23,34,1/2.12+35,14+25)"},
        {"f6", "(0,0,12,13,23,14+25,16+35,26-34)"},
        {"f7^0", "(0,0,0,13,23,14+25,2.14+34,15+24+35)"},
        {"f7^1", "(0,0,0,13,23,14+25,12+2.14+34,15+24+35)"},
        {"f8", "(0,0,12,13,23,14+25,2.14-26+34,15+16+24+35)"},
        {"g10^0", "(0,0,0,13,23,14+25,15+24,16+27)"},
        {"h19^-", "(0,0,0,12,23,14-35)"},
        {"h26^+", "(0,0,12,13,23,14+25)"},
    };
    return t;
}

std::optional<int> abelian_dim(std::string_view name) {
    if (name.size() < 2 || name[0] != 'R') return std::nullopt;
    int v = 0;
    for (char ch : name.substr(1)) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
        v = v * 10 + (ch - '0');
        if (v > 32) return std::nullopt;
    }
    return v;
}

}  // namespace

std::vector<std::string> builtin_names() {
    std::vector<std::string> out;
    for (const auto& [k, v] : builtin_table()) out.push_back(k);
    out.push_back("R<n>");
    return out;
}

bool is_builtin(std::string_view name) {
    if (abelian_dim(name)) return true;
    for (const auto& [k, v] : builtin_table())
        if (k == name) return true;
    return false;
}

LieAlgebra builtin_algebra(std::string_view name) {
    if (auto n = abelian_dim(name)) return abelian(*n);
    for (const auto& [k, v] : builtin_table())
        if (k == name) return parse_algebra(v, k);
    throw UnknownAlgebra(std::string(name));
}

const std::vector<std::string>& wnn_algebra_names() {
    static const std::vector<std::string> names = {"f1",   "f2", "f3",   "f4^0", "f4^1", "f5^0",
                                                   "f5^1", "f6", "f7^0", "f7^1", "f8"};
    return names;
}

LieAlgebra resolve_algebra(std::string_view ref) {
    std::size_t b = 0;
    while (b < ref.size() && std::isspace(static_cast<unsigned char>(ref[b]))) ++b;
    if (b < ref.size() && ref[b] == '(') return parse_algebra(ref);
    std::string name(ref.substr(b));
    while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.pop_back();
    return builtin_algebra(name);
}

namespace {

int parse_int(const std::string& s, std::size_t pos) {
    auto r = Rational::parse(s);
    if (r.den() != 1) throw ParseError(pos, "integer");
    return static_cast<int>(r.num().get_si());
}

}  // namespace

JRef parse_jref(std::string_view text) {
    std::string t;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
    auto open = t.find('(');
    if (open == std::string::npos) throw ParseError(t.size(), "'('");
    if (t.back() != ')') throw ParseError(t.size(), "')'");
    std::string kind = t.substr(0, open);
    std::vector<std::string> args;
    std::vector<std::size_t> pos;
    std::size_t start = open + 1;
    for (std::size_t i = start; i < t.size(); ++i)
        if (t[i] == ',' || i + 1 == t.size()) {
            args.push_back(t.substr(start, i - start));
            pos.push_back(start);
            start = i + 1;
        }
    auto need = [&](std::size_t k) {
        if (args.size() != k) throw ParseError(open, std::to_string(k) + " arguments for " + kind);
    };
    auto num = [&](std::size_t i) {
        try {
            return Rational::parse(args[i]);
        } catch (const Error&) {
            throw ParseError(pos[i], "rational number");
        } catch (const std::exception&) {
            throw ParseError(pos[i], "rational number");
        }
    };
    auto cpx = [&](std::size_t i) {
        try {
            return Gauss::parse(args[i]);
        } catch (const Error&) {
            throw ParseError(pos[i], "Gaussian rational");
        } catch (const std::exception&) {
            throw ParseError(pos[i], "Gaussian rational");
        }
    };
    auto integer = [&](std::size_t i) {
        try {
            return parse_int(args[i], pos[i]);
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception&) {
            throw ParseError(pos[i], "integer");
        }
    };
    JRef r;
    r.kind = kind;
    r.label = t;
    if (kind == "wnn") {
        need(5);
        WnNParams p{integer(0), integer(1), integer(2), num(3), cpx(4)};
        r.p = build_wnn(p);
        r.wnn = p;
    } else if (kind == "generic") {
        need(5);
        GenericExtParams p{integer(0), integer(1), integer(2), cpx(3), cpx(4)};
        r.p = build_generic(p);
        r.generic = p;
    } else if (kind == "snn1") {
        need(5);
        SnNParams p;
        p.family = SnNParams::I;
        p.delta = integer(0);
        p.eps = integer(1);
        p.nu = integer(2);
        p.a = num(3);
        p.b = num(4);
        r.p = build_snn(p);
        r.snn = p;
    } else if (kind == "snn2") {
        need(5);
        SnNParams p;
        p.family = SnNParams::II;
        p.eps = integer(0);
        p.mu = integer(1);
        p.nu = integer(2);
        p.a = num(3);
        p.b = num(4);
        r.p = build_snn(p);
        r.snn = p;
    } else if (kind == "snn6") {
        need(2);
        r.p = snn6_presentation(integer(0), integer(1));
    } else {
        throw ParseError(0, "one of wnn, generic, snn1, snn2, snn6");
    }
    return r;
}

}  // namespace nla
