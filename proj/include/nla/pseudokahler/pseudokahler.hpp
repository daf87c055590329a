#pragma once

#include "nla/catalog/catalog.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace nla {

// Real (1,1)-form F = sum i x_kk w^{k~k} + sum_{k<l} (x_kl w^{k~l} - conj(x_kl) w^{l~k}).
// Only the diagonal (real) and the upper triangle of x are read.
struct Hermitian11Form {
    int n = 4;
    Matrix x;

    explicit Hermitian11Form(int n_ = 4) : n(n_), x(static_cast<std::size_t>(n_), static_cast<std::size_t>(n_)) {}

    // x_kk, then (Re, Im) of x_kl for k < l in lexicographic order.
    static int real_dim(int n) { return n + n * (n - 1); }
    static Hermitian11Form from_real(int n, const QVec& coords);
    QVec to_real() const;

    KForm form() const;  // on the rank-n frame
    Gauss& operator()(int k, int l) { return x(static_cast<std::size_t>(k), static_cast<std::size_t>(l)); }
    const Gauss& operator()(int k, int l) const { return x(static_cast<std::size_t>(k), static_cast<std::size_t>(l)); }
};

// Coefficient of w^{1..n ~1..~n} in F^n.
Gauss top_power(const Hermitian11Form& f);

// Homogeneous polynomial keyed by sorted variable multisets.
struct Polynomial {
    int vars = 0;
    std::map<std::vector<int>, Gauss> terms;

    bool is_zero() const { return terms.empty(); }
    Gauss eval(const std::vector<Rational>& t) const;
    std::string str() const;
};

struct PKSolution {
    Hermitian11Form form;
    QMatrix metric;  // g in the realified basis e_1..e_2n
    Inertia signature;
};

struct PKOptions {
    int height = 2;
    std::size_t max_points = 20000;
    bool prefer_neutral = true;
};

struct PKReport {
    std::vector<QVec> closed_space;  // basis of the del F = 0 kernel in real coordinates
    Polynomial top;                  // F^n coefficient on kernel coordinates
    std::optional<PKSolution> witness;
    std::vector<Rational> witness_coords;

    int kernel_dim() const { return static_cast<int>(closed_space.size()); }
    bool exists() const { return witness.has_value(); }
    // No witness and F^n identically zero on the kernel.
    bool certified_none() const { return !witness && top.is_zero(); }
};

PKReport pk_solve(const CoframePresentation& p, const PKOptions& opts = {});

// True iff dF = 0 (checked with the full differential).
bool is_closed(const CoframePresentation& p, const Hermitian11Form& f);

// g(x, y) = F(x, J y) in the standard realification; Degenerate if singular.
QMatrix metric_matrix(const CoframePresentation& p, const Hermitian11Form& f);
PKSolution metric_and_signature(const CoframePresentation& p, const Hermitian11Form& f);

// Closed forms for eps = 0, nu = 1 normal forms (rs != 0 for non-degeneracy).
Hermitian11Form wnn_pk_form(const WnNParams& p, const Rational& u, const Rational& v, const Rational& r,
                            const Rational& s);
// Closed forms on the pseudo-Kahler SnN structure (r s != 0).
Hermitian11Form snn_pk_form(const Rational& r, const Rational& s, const Rational& u, const Rational& v);

// Levi-Civita connection in the frame X_0..X_{2n-1} (Z's then conjugates),
// with the metric g(U, V) = F(JU, V) extended complex-bilinearly.
struct ConnectionTable {
    int n = 0;
    Matrix g;                                    // g(X_a, X_b)
    std::vector<std::vector<std::vector<Gauss>>> gamma;  // gamma[a][b] = nabla_{X_a} X_b
    bool torsion_free = false;
    bool metric = false;
    bool parallel_J = false;

    const std::vector<Gauss>& nabla(int a, int b) const {
        return gamma[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    }
};

ConnectionTable levi_civita(const CoframePresentation& p, const Hermitian11Form& f);

struct Curvature {
    int N = 0;
    std::vector<Gauss> r;  // R(X_a, X_b, X_c, X_d) at ((a*N + b)*N + c)*N + d
    Matrix ricci;
    bool flat = false;
    bool ricci_flat = false;

    const Gauss& at(int a, int b, int c, int d) const {
        return r[static_cast<std::size_t>(((a * N + b) * N + c) * N + d)];
    }
    bool symmetries_hold() const;
    bool first_bianchi_holds() const;
};

Curvature curvature(const CoframePresentation& p, const ConnectionTable& c);

// nabla of w^1 ^ ... ^ w^n vanishes.
bool parallel_volume_check(const ConnectionTable& c);

// Omega = alpha w12 + beta w13 + gamma w14 + tau w23 + theta w24 + xi w34.
struct Holo2Form {
    Gauss alpha, beta, gamma, tau, theta, xi;

    std::vector<Gauss> coords() const { return {alpha, beta, gamma, tau, theta, xi}; }
    static Holo2Form from(const std::vector<Gauss>& c) { return {c[0], c[1], c[2], c[3], c[4], c[5]}; }
    KForm form() const;
    Gauss pfaffian() const { return alpha * xi - beta * theta + gamma * tau; }
};

struct SymplecticReport {
    std::vector<std::vector<Gauss>> closed_space;  // over Q(i) in (alpha..xi) coordinates
    Polynomial pfaffian;                           // on kernel coordinates
    bool nondegenerate = false;
    std::optional<Holo2Form> witness;
    // Coordinates that vanish on every closed form, by name.
    std::vector<std::string> forced_zero;
};

SymplecticReport complex_symplectic_solve(const CoframePresentation& p);

struct PKSurveyEntry {
    std::string label;      // parameter tuple
    std::string algebra;    // realified algebra name
    bool pk = false;
};

// Table rows and SnN samples with pseudo-Kahler verdicts.
std::vector<PKSurveyEntry> pk_survey();

nlohmann::json to_json(const PKReport& r);

}  // namespace nla
