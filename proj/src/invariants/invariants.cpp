#include "nla/invariants/invariants.hpp"

#include "nla/exactnum/subspace.hpp"
#include "nla/liealg/series.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace nla {

QMatrix differential_matrix(const LieAlgebra& g, int k) {
    const int n = g.dim();
    auto src = degree_basis(n, k);
    auto dst = degree_basis(n, k + 1);
    std::map<Mask, std::size_t> row;
    for (std::size_t i = 0; i < dst.size(); ++i) row[dst[i]] = i;
    QMatrix m(dst.size(), src.size());
    for (std::size_t j = 0; j < src.size(); ++j) {
        KForm mono(n, k);
        mono.add_term(src[j], Gauss(1));
        KForm dm = ce_differential(g.equations(), mono);
        for (const auto& [mask, c] : dm.terms()) m(row.at(mask), j) = c.re();
    }
    return m;
}

int betti(const LieAlgebra& g, int k) {
    const int n = g.dim();
    if (k < 0 || k > n) return 0;
    auto dim_k = static_cast<int>(degree_basis(n, k).size());
    int rank_out = k < n ? static_cast<int>(rank(differential_matrix(g, k))) : 0;
    int rank_in = k > 0 ? static_cast<int>(rank(differential_matrix(g, k - 1))) : 0;
    return dim_k - rank_out - rank_in;
}

std::vector<int> betti_numbers(const LieAlgebra& g) {
    const int n = g.dim();
    std::vector<int> ranks(static_cast<std::size_t>(n + 1), 0);
    for (int k = 0; k < n; ++k) ranks[static_cast<std::size_t>(k)] = static_cast<int>(rank(differential_matrix(g, k)));
    std::vector<int> b;
    for (int k = 0; k <= n; ++k) {
        int dim_k = static_cast<int>(degree_basis(n, k).size());
        b.push_back(dim_k - ranks[static_cast<std::size_t>(k)] - (k > 0 ? ranks[static_cast<std::size_t>(k - 1)] : 0));
    }
    return b;
}

namespace {

using I64 = long long;

struct QuadTerm {
    int a, b;
    I64 coef;
};

// Integer data of the decomposability problem on d(Lambda^1).
struct NdSetup {
    int n = 0;
    std::vector<Mask> pairs;
    std::vector<std::vector<I64>> beta;          // integer basis of d(Lambda^1), coordinates on pairs
    std::vector<std::vector<QuadTerm>> quad;     // alpha^alpha components as quadratic forms in t
    QMatrix dmat;                                // columns d e^k on pairs
};

I64 to_i64(const mpz_class& z) {
    if (!z.fits_slong_p()) throw Degenerate("coefficient too large for the n_d search");
    return z.get_si();
}

NdSetup setup_nd(const LieAlgebra& g) {
    NdSetup s;
    s.n = g.dim();
    s.pairs = degree_basis(s.n, 2);
    std::map<Mask, std::size_t> pidx;
    for (std::size_t i = 0; i < s.pairs.size(); ++i) pidx[s.pairs[i]] = i;
    s.dmat = QMatrix(s.pairs.size(), static_cast<std::size_t>(s.n));
    std::vector<QVec> gens;
    for (int k = 0; k < s.n; ++k) {
        QVec v(s.pairs.size());
        KForm dk = g.d(k);
        for (const auto& [m, c] : dk.terms()) v[pidx.at(m)] = c.re();
        for (std::size_t i = 0; i < v.size(); ++i) s.dmat(i, static_cast<std::size_t>(k)) = v[i];
        gens.push_back(std::move(v));
    }
    auto e = Subspace::span(s.pairs.size(), gens);
    for (const auto& row : e.basis()) {
        mpz_class l = 1, gg = 0;
        for (const auto& x : row) l = lcm(l, x.den());
        std::vector<mpz_class> z;
        for (const auto& x : row) {
            mpz_class v = x.num() * (l / x.den());
            z.push_back(v);
            gg = gcd(gg, v);
        }
        std::vector<I64> out;
        for (auto& v : z) out.push_back(to_i64(v / gg));
        s.beta.push_back(std::move(out));
    }
    const int r = static_cast<int>(s.beta.size());
    std::vector<KForm> forms;
    for (const auto& b : s.beta) {
        KForm f(s.n, 2);
        for (std::size_t i = 0; i < b.size(); ++i)
            if (b[i]) f.add_term(s.pairs[i], Gauss(Rational(static_cast<long>(b[i]))));
        forms.push_back(std::move(f));
    }
    auto quads = degree_basis(s.n, 4);
    std::map<Mask, std::size_t> qidx;
    for (std::size_t i = 0; i < quads.size(); ++i) qidx[quads[i]] = i;
    s.quad.assign(quads.size(), {});
    for (int a = 0; a < r; ++a)
        for (int b = a; b < r; ++b) {
            KForm w = wedge(forms[static_cast<std::size_t>(a)], forms[static_cast<std::size_t>(b)]);
            for (const auto& [m, c] : w.terms()) {
                I64 v = to_i64(c.re().num());
                if (a != b) v *= 2;
                s.quad[qidx.at(m)].push_back({a, b, v});
            }
        }
    s.quad.erase(std::remove_if(s.quad.begin(), s.quad.end(), [](const auto& q) { return q.empty(); }), s.quad.end());
    return s;
}

bool decomposable(const NdSetup& s, const std::vector<I64>& t, I64 p) {
    for (const auto& comp : s.quad) {
        I64 acc = 0;
        for (const auto& q : comp) {
            acc += q.coef * t[static_cast<std::size_t>(q.a)] * t[static_cast<std::size_t>(q.b)];
            if (p) acc %= p;
        }
        if (acc != 0) return false;
    }
    return true;
}

// Row-echelon span modulo p.
class ModSpan {
public:
    ModSpan(std::size_t n, I64 p) : n_(n), p_(p) {}
    bool add(std::vector<I64> v) {
        for (auto& x : v) x = ((x % p_) + p_) % p_;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            I64 f = v[piv_[r]];
            if (!f) continue;
            for (std::size_t j = 0; j < n_; ++j) v[j] = ((v[j] - f * rows_[r][j]) % p_ + p_) % p_;
        }
        std::size_t c = 0;
        while (c < n_ && v[c] == 0) ++c;
        if (c == n_) return false;
        I64 inv = modinv(v[c]);
        for (auto& x : v) x = x * inv % p_;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            I64 f = rows_[r][c];
            if (!f) continue;
            for (std::size_t j = 0; j < n_; ++j) rows_[r][j] = ((rows_[r][j] - f * v[j]) % p_ + p_) % p_;
        }
        rows_.push_back(std::move(v));
        piv_.push_back(c);
        return true;
    }
    int dim() const { return static_cast<int>(rows_.size()); }

private:
    I64 modinv(I64 a) const {
        I64 r = 1, b = a, e = p_ - 2;
        while (e) {
            if (e & 1) r = r * b % p_;
            b = b * b % p_;
            e >>= 1;
        }
        return r;
    }
    std::size_t n_;
    I64 p_;
    std::vector<std::vector<I64>> rows_;
    std::vector<std::size_t> piv_;
};

std::vector<I64> combine(const NdSetup& s, const std::vector<I64>& t) {
    std::vector<I64> v(s.pairs.size(), 0);
    for (std::size_t a = 0; a < t.size(); ++a)
        if (t[a])
            for (std::size_t i = 0; i < v.size(); ++i) v[i] += t[a] * s.beta[a][i];
    return v;
}

int field_dim(const NdSetup& s, I64 p) {
    const int r = static_cast<int>(s.beta.size());
    ModSpan span(s.pairs.size(), p);
    for (int lead = 0; lead < r; ++lead) {
        std::vector<I64> t(static_cast<std::size_t>(r), 0);
        t[static_cast<std::size_t>(lead)] = 1;
        const int free = r - lead - 1;
        I64 total = 1;
        for (int i = 0; i < free; ++i) total *= p;
        for (I64 code = 0; code < total; ++code) {
            I64 c = code;
            for (int i = 0; i < free; ++i) {
                t[static_cast<std::size_t>(lead + 1 + i)] = c % p;
                c /= p;
            }
            if (decomposable(s, t, p)) {
                span.add(combine(s, t));
                if (span.dim() == r) return r;
            }
        }
    }
    return span.dim();
}

KForm form_from(const NdSetup& s, const QVec& v) {
    KForm f(s.n, 2);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) f.add_term(s.pairs[i], Gauss(v[i]));
    return f;
}

}  // namespace

NdReport nd_analyze(const LieAlgebra& g, const NdOptions& opts) {
    NdSetup s = setup_nd(g);
    const int r = static_cast<int>(s.beta.size());
    NdReport rep;
    rep.exact_dim = r;

    Subspace found(s.pairs.size());
    auto consider = [&](const std::vector<I64>& t) {
        if (!decomposable(s, t, 0)) return;
        auto iv = combine(s, t);
        QVec v;
        for (auto x : iv) v.push_back(Rational(static_cast<long>(x)));
        if (found.contains(v)) return;
        found = found + Subspace::span(s.pairs.size(), {v});
        auto sol = solve_linear(s.dmat, v);
        KForm gamma(s.n, 1);
        for (int k = 0; k < s.n; ++k) {
            const auto& c = (*sol.particular)[static_cast<std::size_t>(k)];
            if (!c.is_zero()) gamma.add_term(Mask(1) << k, Gauss(c));
        }
        rep.witnesses.push_back({form_from(s, v), gamma});
    };
    auto full = [&] { return found.dim() == static_cast<std::size_t>(r); };
    // Height first, then support size, then support in lexicographic order;
    // values run 1,-1,2,-2,... with the leading entry positive.
    for (int h = 1; h <= opts.height && !full(); ++h) {
        std::vector<I64> vals;
        for (int a = 1; a <= h; ++a) {
            vals.push_back(a);
            vals.push_back(-a);
        }
        for (int sz = 1; sz <= r && !full(); ++sz) {
            std::vector<int> supp(static_cast<std::size_t>(sz));
            std::iota(supp.begin(), supp.end(), 0);
            while (!full()) {
                std::vector<std::size_t> pick(static_cast<std::size_t>(sz), 0);
                while (!full()) {
                    std::vector<I64> t(static_cast<std::size_t>(r), 0);
                    I64 mx = 0, gg = 0;
                    for (std::size_t q = 0; q < pick.size(); ++q) {
                        I64 x = vals[pick[q]];
                        t[static_cast<std::size_t>(supp[q])] = x;
                        mx = std::max(mx, x < 0 ? -x : x);
                        gg = std::gcd(gg, x);
                    }
                    if (mx == h && gg == 1 && t[static_cast<std::size_t>(supp[0])] > 0) consider(t);
                    std::size_t q = pick.size();
                    while (q > 0 && pick[q - 1] + 1 == vals.size()) pick[--q] = 0;
                    if (q == 0) break;
                    ++pick[q - 1];
                }
                int q = sz - 1;
                while (q >= 0 && supp[static_cast<std::size_t>(q)] == r - sz + q) --q;
                if (q < 0) break;
                ++supp[static_cast<std::size_t>(q)];
                for (int u = q + 1; u < sz; ++u) supp[static_cast<std::size_t>(u)] = supp[static_cast<std::size_t>(u - 1)] + 1;
            }
        }
    }
    rep.lower_bound = static_cast<int>(found.dim());

    bool agree = true;
    for (int p : opts.primes) {
        int d = field_dim(s, p);
        rep.field_dims.push_back({p, d});
        if (d != rep.lower_bound) agree = false;
    }
    rep.agree = agree;
    std::ostringstream os;
    if (agree) {
        os << "exact-lower-bound + finite-field-confirmed";
    } else {
        os << "disagreement: rational lower bound " << rep.lower_bound << " (height " << opts.height << ")";
        for (auto [p, d] : rep.field_dims) os << ", F_" << p << " span " << d;
    }
    rep.confidence = os.str();
    return rep;
}

int nd_invariant(const LieAlgebra& g, const NdOptions& opts) {
    auto rep = nd_analyze(g, opts);
    if (!rep.agree) throw OracleDisagreement((g.name().empty() ? std::string("n_d") : "n_d of " + g.name()) + ": " + rep.confidence);
    return rep.lower_bound;
}

QMatrix CasimirMatrix::at(const QVec& x) const {
    QMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (std::size_t k = 0; k < m.rows(); ++k)
        for (std::size_t i = 0; i < m.cols(); ++i) {
            Rational acc;
            for (std::size_t j = 0; j < x.size(); ++j) acc += entries[k][i][j] * x[j];
            m(k, i) = acc;
        }
    return m;
}

std::string CasimirMatrix::entry_str(int k, int i) const {
    std::string out;
    const auto& v = entries[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j].is_zero()) continue;
        if (v[j].sign() < 0) out += "-";
        else if (!out.empty()) out += "+";
        Rational a = v[j].abs();
        if (a != Rational(1)) out += a.str() + "*";
        out += "x" + std::to_string(j + 1);
    }
    return out.empty() ? "0" : out;
}

CasimirMatrix casimir_matrix(const LieAlgebra& g) {
    CasimirMatrix c;
    c.n = g.dim();
    const auto n = static_cast<std::size_t>(c.n);
    c.entries.assign(n, std::vector<QVec>(n, QVec(n)));
    for (int k = 0; k < c.n; ++k)
        for (int i = 0; i < c.n; ++i)
            for (int j = 0; j < c.n; ++j)
                c.entries[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = -g.c(j, k, i);
    return c;
}

CasimirCount casimir_count(const LieAlgebra& g, std::uint64_t seed, int draws) {
    static const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
    CasimirCount out;
    out.matrix = casimir_matrix(g);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(std::size(primes)) - 1);
    for (int d = 0; d < draws; ++d) {
        QVec x;
        for (int j = 0; j < g.dim(); ++j) x.push_back(Rational(primes[pick(rng)]));
        out.rank = std::max(out.rank, static_cast<int>(rank(out.matrix.at(x))));
        out.points.push_back(std::move(x));
    }
    out.n_I = g.dim() - out.rank;
    return out;
}

Fingerprint fingerprint(const LieAlgebra& g, const NdOptions& opts) {
    Fingerprint f;
    f.ascending = ascending_type(g);
    f.descending = descending_type(g);
    auto b = betti_numbers(g);
    for (std::size_t k = 1; k <= 4; ++k) f.betti[k - 1] = k < b.size() ? b[k] : 0;
    auto nd = nd_analyze(g, opts);
    f.n_d = nd.lower_bound;
    f.n_d_confirmed = nd.agree;
    f.n_I = casimir_count(g).n_I;
    return f;
}

namespace {

std::string tuple_str(const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

}  // namespace

std::optional<Separation> distinguish(const Fingerprint& a, const Fingerprint& b) {
    if (a.ascending != b.ascending) return Separation{"ascending", tuple_str(a.ascending) + " vs " + tuple_str(b.ascending)};
    if (a.descending != b.descending)
        return Separation{"descending", tuple_str(a.descending) + " vs " + tuple_str(b.descending)};
    for (std::size_t k = 0; k < 4; ++k)
        if (a.betti[k] != b.betti[k])
            return Separation{"betti", "b" + std::to_string(k + 1) + ": " + std::to_string(a.betti[k]) + " vs " +
                                           std::to_string(b.betti[k])};
    if (a.n_d_confirmed && b.n_d_confirmed && a.n_d != b.n_d)
        return Separation{"n_d", std::to_string(a.n_d) + " vs " + std::to_string(b.n_d)};
    if (a.n_I != b.n_I) return Separation{"n_I", std::to_string(a.n_I) + " vs " + std::to_string(b.n_I)};
    return std::nullopt;
}

nlohmann::json to_json(const Fingerprint& f) {
    return {{"ascending", f.ascending},
            {"descending", f.descending},
            {"betti", f.betti},
            {"n_d", f.n_d},
            {"n_d_confirmed", f.n_d_confirmed},
            {"n_I", f.n_I}};
}

nlohmann::json to_json(const NdReport& r) {
    nlohmann::json w = nlohmann::json::array();
    for (const auto& x : r.witnesses) w.push_back({{"alpha", render_real(x.alpha)}, {"gamma", render_real(x.gamma)}});
    nlohmann::json fd = nlohmann::json::array();
    for (auto [p, d] : r.field_dims) fd.push_back({{"p", p}, {"dim", d}});
    return {{"exact_dim", r.exact_dim}, {"lower_bound", r.lower_bound}, {"witnesses", w},
            {"field_dims", fd},         {"agree", r.agree},             {"confidence", r.confidence}};
}

}  // namespace nla
