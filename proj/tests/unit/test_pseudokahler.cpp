#include "doctest.h"

#include "nla/pseudokahler/pseudokahler.hpp"

#include "nla/forms/differential.hpp"

#include <set>

using namespace nla;

namespace {

const Gauss I = Gauss::i();

WnNParams wnn(int e, int d, int n, Rational a, Gauss B) { return WnNParams{e, d, n, std::move(a), std::move(B)}; }

// Metric matrix with rows as printed for the eps = 0, nu = 1 family.
QMatrix neutral_g(int delta, const Rational& a, const Rational& u, const Rational& v, const Rational& r,
                  const Rational& s) {
    const Rational d(delta);
    const Rational ad = Rational(2) * a * d;
    std::vector<std::vector<Rational>> rows = {
        {2 * u, 0, 0, -2 * v, ad * r, -ad * s, 2 * s, -2 * r},
        {0, 2 * u, 2 * v, 0, ad * s, ad * r, 2 * r, 2 * s},
        {0, 2 * v, -2 * s, 0, 0, 0, 0, 0},
        {-2 * v, 0, 0, -2 * s, 0, 0, 0, 0},
        {ad * r, ad * s, 0, 0, -2 * d * r, 0, 0, 0},
        {-ad * s, ad * r, 0, 0, 0, -2 * d * r, 0, 0},
        {2 * s, 2 * r, 0, 0, 0, 0, 0, 0},
        {-2 * r, 2 * s, 0, 0, 0, 0, 0, 0},
    };
    return QMatrix::from_rows(rows, 8);
}

SnNParams snn_pk_params() {
    SnNParams s;
    s.family = SnNParams::II;
    s.eps = 1;
    return s;
}

Hermitian11Form standard_kahler() {
    Hermitian11Form f(4);
    for (int k = 0; k < 4; ++k) f(k, k) = Gauss(1);
    return f;
}

}  // namespace

TEST_CASE("hermitian forms") {
    Hermitian11Form f(4);
    f(0, 0) = Gauss(3);
    f(1, 3) = Gauss(1, -2);
    CHECK(frame_conj(f.form(), 4) == f.form());
    CHECK(Hermitian11Form::from_real(4, f.to_real()).x == f.x);
    CHECK(f.to_real().size() == 16);
    CHECK(top_power(f).is_zero());
    // F^4 = 24 det-like expression for a diagonal form
    CHECK(top_power(standard_kahler()) == Gauss(24));
}

TEST_CASE("closed forms in the weakly non-nilpotent family") {
    for (int d : {-1, 1})
        for (auto [a, B] : std::vector<std::pair<Rational, Gauss>>{{0, 0}, {0, 1}, {1, 0}, {1, Gauss(2, 3)}}) {
            auto prm = wnn(0, d, 1, a, B);
            INFO(prm.str());
            auto p = build_wnn(prm);
            auto rep = pk_solve(p);
            CHECK(rep.kernel_dim() == 4);
            REQUIRE(rep.exists());
            CHECK(rep.witness->signature.positive == 4);
            CHECK(rep.witness->signature.negative == 4);
            const Subspace closed = Subspace::span(16, rep.closed_space);
            for (auto [u, v, r, s] : std::vector<std::array<int, 4>>{{1, 0, 1, -1}, {0, 2, -3, 1}, {5, -1, 2, 7}}) {
                auto h = wnn_pk_form(prm, u, v, r, s);
                CHECK(closed.contains(h.to_real()));
                CHECK(is_closed(p, h));
                const Rational rr(r), ss(s);
                CHECK(top_power(h) == Gauss(-24 * d) * Gauss(rr * ss * (rr * rr + ss * ss)));
            }
            CHECK_THROWS_AS(metric_and_signature(p, wnn_pk_form(prm, 1, 1, 0, 1)), Degenerate);
        }
    auto rep = pk_solve(build_wnn(wnn(0, 1, 1, 1, 0)));
    REQUIRE(rep.exists());
    const auto& x = rep.witness->form;
    CHECK(x(0, 3) == Gauss(1, -1));
    CHECK(x(1, 1) == Gauss(1));
    CHECK(x(1, 2).is_zero());
    CHECK(x(3, 3).is_zero());
}

TEST_CASE("no pseudo-Kahler structure elsewhere") {
    for (auto prm : {wnn(1, 1, 1, 1, 0), wnn(1, -1, 1, 2, Gauss(1, -1)), wnn(0, 1, 0, 0, 0), wnn(0, -1, 0, 1, 1),
                     wnn(1, 1, 0, 1, 2)}) {
        INFO(prm.str());
        auto rep = pk_solve(build_wnn(prm));
        CHECK(!rep.exists());
        CHECK(rep.certified_none());
    }
    for (int d : {-1, 1})
        for (int e : {0, 1})
            for (int nu : {0, 1}) {
                SnNParams s;
                s.delta = d;
                s.eps = e;
                s.nu = nu;
                s.a = Rational(1);
                s.b = Rational(-2);
                auto rep = pk_solve(build_snn(s));
                CHECK(rep.certified_none());
            }
}

TEST_CASE("pseudo-Kahler structures on the strongly non-nilpotent case") {
    auto p = build_snn(snn_pk_params());
    auto rep = pk_solve(p);
    CHECK(rep.kernel_dim() == 4);
    REQUIRE(rep.exists());
    auto h = snn_pk_form(1, 2, 3, -1);
    CHECK(Subspace::span(16, rep.closed_space).contains(h.to_real()));
    CHECK(top_power(h) == Gauss(-24 * 1 * 8));
    auto c = levi_civita(p, h);
    CHECK(c.torsion_free);
    CHECK(c.metric);
    CHECK(c.parallel_J);
    auto cv = curvature(p, c);
    CHECK(cv.ricci_flat);
    CHECK(parallel_volume_check(c));

    auto other = snn_pk_params();
    other.a = Rational(1);
    CHECK(pk_solve(build_snn(other)).certified_none());
}

TEST_CASE("metric matrix matches the printed neutral metrics") {
    for (int d : {-1, 1})
        for (int a : {0, 1})
            for (auto [u, v, r, s] : std::vector<std::array<int, 4>>{{0, 0, 1, -1}, {1, 0, 2, -1}, {3, -2, 1, 5}}) {
                auto prm = wnn(0, d, 1, a, a ? Gauss(1, 1) : Gauss(0));
                auto p = build_wnn(prm);
                CHECK(metric_matrix(p, wnn_pk_form(prm, u, v, r, s)) == neutral_g(d, a, u, v, r, s));
            }
    auto p = build_wnn(wnn(0, 1, 1, 0, 0));
    auto sol = metric_and_signature(p, wnn_pk_form(wnn(0, 1, 1, 0, 0), 0, 0, 1, -1));
    CHECK(sol.signature == Inertia{4, 4, 0});
    sol = metric_and_signature(p, wnn_pk_form(wnn(0, 1, 1, 0, 0), 0, 0, 1, 1));
    CHECK(sol.signature == Inertia{2, 6, 0});
    auto p1 = build_wnn(wnn(0, 1, 1, 1, Gauss(0, 2)));
    sol = metric_and_signature(p1, wnn_pk_form(wnn(0, 1, 1, 1, Gauss(0, 2)), 1, 0, 1, -1));
    CHECK(sol.signature == Inertia{4, 4, 0});
    // leading principal minors 2, 4, -8s, 16s^2
    QMatrix g = sol.metric;
    std::vector<Rational> minors;
    for (std::size_t k = 1; k <= 4; ++k) {
        QMatrix m(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) m(i, j) = g(i, j);
        minors.push_back(determinant(m));
    }
    CHECK(minors == std::vector<Rational>{2, 4, 8, 16});
    // g(J., J.) = g
    auto J = realify(p1).J.matrix();
    CHECK(J.transpose() * g * J == g);
}

TEST_CASE("levi-civita connection and curvature") {
    for (int d : {-1, 1}) {
        const Rational r(2), s(1), u(0), v(3);
        auto prm = wnn(0, d, 1, 1, Gauss(1, 1));
        auto p = build_wnn(prm);
        auto h = wnn_pk_form(prm, u, v, r, s);
        auto c = levi_civita(p, h);
        CHECK(c.torsion_free);
        CHECK(c.metric);
        CHECK(c.parallel_J);
        // frame indices: Z1..Z4 = 0..3, conjugates 4..7
        std::vector<Gauss> z3(8);
        z3[2] = -I * Gauss(d);
        CHECK(c.nabla(4, 1) == z3);
        CHECK(c.nabla(0, 1) == std::vector<Gauss>(8));
        CHECK(c.nabla(3, 1) == std::vector<Gauss>(8));
        CHECK(c.nabla(7, 1) == std::vector<Gauss>(8));
        std::vector<Gauss> e(8);
        e[1] = -I * Gauss(r / s);
        e[3] = I * Gauss(r * v) / (Gauss(s) * Gauss(r, -s));
        CHECK(c.nabla(0, 2) == e);
        CHECK(c.g(1, 5) == Gauss(s));

        auto cv = curvature(p, c);
        CHECK(cv.at(0, 4, 1, 5) == Gauss(-Rational(d) * r));
        CHECK(cv.ricci_flat);
        CHECK(!cv.flat);
        CHECK(cv.symmetries_hold());
        CHECK(cv.first_bianchi_holds());
        CHECK(parallel_volume_check(c));
    }
    auto p = build_wnn(wnn(0, 1, 1, 0, 0));
    auto cv = curvature(p, levi_civita(p, wnn_pk_form(wnn(0, 1, 1, 0, 0), 0, 0, 2, 1)));
    CHECK(cv.at(0, 4, 1, 5) == Gauss(-2));

    CoframePresentation torus(4);
    auto ct = levi_civita(torus, standard_kahler());
    auto ft = curvature(torus, ct);
    CHECK(ft.flat);
    CHECK(ft.ricci_flat);
    CHECK(parallel_volume_check(ct));
}

TEST_CASE("non-closed forms break parallelism of J") {
    auto p = build_wnn(wnn(0, 1, 1, 0, 0));
    auto c = levi_civita(p, standard_kahler());
    CHECK(c.torsion_free);
    CHECK(c.metric);
    CHECK(!c.parallel_J);
}

TEST_CASE("complex symplectic forms") {
    CoframePresentation torus(4);
    auto t = complex_symplectic_solve(torus);
    CHECK(t.nondegenerate);
    CHECK(t.closed_space.size() == 6);
    REQUIRE(t.witness);
    CHECK(!t.witness->pfaffian().is_zero());
    CHECK(ce_differential(torus.full(), t.witness->form()).is_zero());

    for (auto prm : {wnn(0, 1, 0, 0, 0), wnn(1, -1, 1, 2, Gauss(1, -1)), wnn(0, 1, 1, 1, I), wnn(1, 1, 0, 1, 2)}) {
        INFO(prm.str());
        auto s = complex_symplectic_solve(build_wnn(prm));
        CHECK(!s.nondegenerate);
        CHECK(!s.witness);
        for (const char* name : {"tau", "theta", "xi"})
            CHECK(std::find(s.forced_zero.begin(), s.forced_zero.end(), name) != s.forced_zero.end());
    }
    CHECK(!complex_symplectic_solve(build_snn(snn_pk_params())).nondegenerate);
    SnNParams one;
    one.a = Rational(1);
    CHECK(!complex_symplectic_solve(build_snn(one)).nondegenerate);
}

TEST_CASE("algebras carrying pseudo-Kahler structures") {
    std::set<std::string> names;
    for (const auto& e : pk_survey())
        if (e.pk) names.insert(e.algebra);
    CHECK(names == std::set<std::string>{"f5^0", "f5^1", "f7^0", "f7^1", "g10^0"});
}

TEST_CASE("report json") {
    auto j = to_json(pk_solve(build_wnn(wnn(0, 1, 1, 1, 0))));
    CHECK(j["pk_exists"] == true);
    CHECK(j["kernel_dim"] == 4);
    CHECK(j["signature"] == nlohmann::json::array({4, 4}));
    auto none = to_json(pk_solve(build_wnn(wnn(1, 1, 1, 1, 0))));
    CHECK(none["pk_exists"] == false);
    CHECK(none["witness"].is_null());
}
