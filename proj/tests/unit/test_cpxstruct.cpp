#include "doctest.h"

#include "nla/catalog/catalog.hpp"
#include "nla/cpxstruct/cpxstruct.hpp"
#include "nla/liealg/dsl.hpp"

using namespace nla;

namespace {

const Gauss I = Gauss::i();

QVec unit(int n, int i) {
    QVec v(static_cast<std::size_t>(n));
    v[static_cast<std::size_t>(i)] = Rational(1);
    return v;
}

// J e_a = e_b, J e_b = -e_a for each pair (1-based).
RealJ pairing(int n, std::initializer_list<std::pair<int, int>> pairs) {
    QMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (auto [a, b] : pairs) {
        m(static_cast<std::size_t>(b - 1), static_cast<std::size_t>(a - 1)) = Rational(1);
        m(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1)) = Rational(-1);
    }
    return RealJ(m);
}

WnNParams wnn(int e, int d, int n, Rational a, Gauss B) { return WnNParams{e, d, n, std::move(a), std::move(B)}; }

std::vector<Gauss> zvec(int n, std::initializer_list<std::pair<int, Gauss>> t) {
    std::vector<Gauss> v(static_cast<std::size_t>(2 * n));
    for (const auto& [k, c] : t) v[static_cast<std::size_t>(k)] = c;
    return v;
}

}  // namespace

TEST_CASE("almost complex structures") {
    QMatrix bad = QMatrix::identity(2);
    CHECK_THROWS_AS(RealJ{bad}, NotAlmostComplex);
    CHECK_THROWS_AS(RealJ::standard(3), NotAlmostComplex);
    auto j = RealJ::standard(4);
    CHECK(j.apply(unit(4, 0)) == unit(4, 1));
    CHECK(j.preserves(Subspace::span(4, {unit(4, 2), unit(4, 3)})));
    CHECK(!j.preserves(Subspace::span(4, {unit(4, 1), unit(4, 2)})));
}

TEST_CASE("nijenhuis tensor") {
    CHECK(nijenhuis(abelian(8), pairing(8, {{1, 5}, {2, 3}, {4, 8}, {6, 7}})).empty());
    auto f1 = builtin_algebra("f1");
    auto rot = pairing(8, {{1, 3}, {2, 5}, {4, 6}, {7, 8}});
    auto n = nijenhuis(f1, rot);
    CHECK(!n.empty());
    CHECK_THROWS_AS(to_presentation(f1, rot), NotIntegrable);
    auto t = realify_table1(wnn(0, 1, 0, 0, 0));
    CHECK(t.name == "f1");
    CHECK(is_integrable(t.real.g, t.real.J));
}

TEST_CASE("realify and back") {
    auto torus = realify(CoframePresentation(4));
    CHECK(torus.g == abelian(8));
    CHECK(torus.J == RealJ::standard(8));

    auto p = build_wnn(wnn(1, 1, 1, 2, Gauss(3, 1)));
    auto rf = realify(p);
    CHECK(rf.J == RealJ::standard(8));
    CHECK(is_integrable(rf.g, rf.J));
    auto back = to_presentation(rf.g, rf.J);
    CHECK(back.p == p);
    CHECK(back.M == rf.M);

    // pure rescaling of the frame
    std::vector<Rational> s{Rational(4), Rational(1), Rational(1), Rational(1)};
    auto q = rescale_frame(p, s);
    CHECK(q.d[1] == wmono(4, {1, 3}, Gauss(2)) + wmono(4, {1, -3}, Gauss(2)));
    s[0] = Rational(2);
    CHECK_THROWS_AS(rescale_frame(p, s), IrrationalRotation);
}

TEST_CASE("presentation validation") {
    CoframePresentation p(2);
    p.d[1] = wmono(2, {-1, -2});
    CHECK_THROWS_AS(p.validate(), NotIntegrable);
    CoframePresentation q(2);
    q.d[1] = wmono(2, {1, -1});
    CHECK_NOTHROW(q.validate());
    CHECK(q.render()[1] == "w1~1");
    CHECK(build_wnn(wnn(0, 1, 0, 0, 0)).d[3].is_zero());
}

TEST_CASE("ascending J-compatible series") {
    auto ab = j_compatible_series(abelian(8), RealJ::standard(8));
    CHECK(ab.type.tag == JTag::Nilpotent);
    CHECK(ab.type.series_dims == std::vector<int>{8});

    for (auto prm : {wnn(0, 1, 0, 0, 0), wnn(1, -1, 0, 1, 2), wnn(0, 1, 1, 1, Gauss(2, 3)), wnn(1, 1, 1, 3, Gauss(0, -1))}) {
        INFO(prm.str());
        auto rf = realify(build_wnn(prm));
        auto s = j_compatible_series(rf.g, rf.J);
        CHECK(s.type.tag == JTag::WeaklyNonNilpotent);
        CHECK(s.type.series_dims == std::vector<int>{2, 2});
        CHECK(s.type.t == 1);
        CHECK(s.at(1) == Subspace::span(8, {unit(8, 6), unit(8, 7)}));
        auto lcs_upper = upper_central_series(rf.g);
        CHECK(lcs_upper.at(1).contains(s.at(1)));
    }

    SnNParams sp;
    sp.family = SnNParams::II;
    sp.eps = 1;
    auto rf = realify(build_snn(sp));
    auto s = j_compatible_series(rf.g, rf.J);
    CHECK(s.type.tag == JTag::StronglyNonNilpotent);
    CHECK(s.type.series_dims == std::vector<int>{0});
    CHECK(to_string(s.type.tag) == "SnN");
}

TEST_CASE("induced quotient structures") {
    auto kt = parse_algebra("(0,0,0,12)");
    auto j = RealJ::standard(4);
    REQUIRE(is_integrable(kt, j));
    auto s = j_compatible_series(kt, j);
    CHECK(s.type.tag == JTag::Nilpotent);
    auto q = induced_quotient(kt, j, 1);
    CHECK(q.q.algebra == abelian(2));
    CHECK_THROWS_AS(induced_quotient(kt, j, 2), QuotientIsZero);

    for (int e : {0, 1})
        for (int d : {-1, 1}) {
            auto rf = realify(build_wnn(wnn(e, d, 1, 1, Gauss(0, 1))));
            auto iq = induced_quotient(rf.g, rf.J, 1);
            CHECK(iq.q.algebra.dim() == 6);
            CHECK(j_compatible_series(iq.q.algebra, iq.J).type.tag == JTag::StronglyNonNilpotent);
            auto six = build_snn6(e, d);
            CHECK(iq.q.algebra == six.g);
            CHECK(iq.J == six.J);
        }
}

TEST_CASE("brackets of the six-dimensional family") {
    for (int e : {0, 1})
        for (int d : {-1, 1}) {
            auto p = snn6_presentation(e, d);
            // Z1, Z2, Z3 = 0, 1, 2 and conjugates 3, 4, 5
            CHECK(complex_bracket(p, 0, 2) == zvec(3, {{1, Gauss(-1)}}));
            CHECK(complex_bracket(p, 0, 5) == zvec(3, {{1, Gauss(-1)}}));
            CHECK(complex_bracket(p, 0, 3) == zvec(3, {{2, -I * Gauss(e)}, {5, -I * Gauss(e)}}));
            CHECK(complex_bracket(p, 0, 4) == zvec(3, {{2, -I * Gauss(d)}, {5, I * Gauss(d)}}));
            CHECK(complex_bracket(p, 1, 2) == zvec(3, {}));
        }
}

TEST_CASE("intertwiner checks") {
    auto p = build_wnn(wnn(0, 1, 1, 1, Gauss(2)));
    CHECK(check_intertwiner(p, p, Matrix::identity(4)).valid);
    CHECK_THROWS_AS(check_intertwiner(p, p, Matrix(4, 4)), SingularLambda);

    auto pd = build_wnn(wnn(0, -1, 1, 1, Gauss(2)));
    auto c = check_intertwiner(p, pd, Matrix::identity(4));
    CHECK(!c.valid);
    CHECK(c.residuals[0].is_zero());
    CHECK(c.residuals[1].is_zero());
    CHECK(c.residuals[3].is_zero());
    CHECK(c.residuals[2].coefficient(std::vector<int>{0, 5}) == I * Gauss(2));
}

TEST_CASE("unit-circle rotation between same-type tuples") {
    const Gauss rot(Rational(3, 5), Rational(4, 5));
    for (int e : {0, 1}) {
        const Rational a(e ? 2 : 1);
        const Gauss B(1, 1);
        auto p = build_wnn(wnn(e, 1, 1, a, B));
        Matrix L = Matrix::identity(4);
        L(0, 0) = rot;
        L(1, 1) = rot;  // lambda e^{i theta} with lambda = 1
        L(3, 3) = rot;  // nu' = nu lambda44 / (lambda11 lambda33^2) = 1
        GenericExtParams gp{e, 1, 1, Gauss(a) * L(3, 3) / (rot * rot), B * L(3, 3)};
        auto pp = build_generic(gp);
        CHECK(check_intertwiner(p, pp, L).valid);
    }
}

TEST_CASE("bounded intertwiner search") {
    auto p = build_wnn(wnn(0, 1, 1, 1, Gauss(0, 1)));
    SearchOptions o;
    o.limit = 4;
    auto hits = search_intertwiners(p, p, o);
    REQUIRE(!hits.empty());
    auto rf = realify(p);
    auto sj = j_compatible_series(rf.g, rf.J);
    for (const auto& L : hits) {
        CHECK(check_intertwiner(p, p, L).valid);
        // triangular shape
        CHECK(L(0, 1).is_zero());
        CHECK(L(0, 2).is_zero());
        CHECK(L(0, 3).is_zero());
        CHECK(L(1, 2).is_zero());
        CHECK(L(1, 3).is_zero());
        CHECK(L(2, 0).is_zero());
        CHECK(L(2, 1).is_zero());
        CHECK(L(2, 3).is_zero());
        QMatrix f = transport(rf, rf, L);
        CHECK(f * rf.J.matrix() == rf.J.matrix() * f);
        for (int k = 1; k <= 2; ++k) {
            std::vector<QVec> img;
            Subspace ak = sj.at(k);
            for (const auto& b : ak.basis()) img.push_back(f.apply(b));
            CHECK(Subspace::span(8, img) == sj.at(k));
        }
    }
    auto other = build_wnn(wnn(0, -1, 1, 1, Gauss(0, 1)));
    CHECK(search_intertwiners(p, other).empty());
    auto eps1 = build_wnn(wnn(1, 1, 1, 1, Gauss(0, 1)));
    CHECK(search_intertwiners(p, eps1).empty());
}
