#include "doctest.h"

#include "nla/catalog/catalog.hpp"
#include "nla/liealg/dsl.hpp"
#include "nla/liealg/series.hpp"

using namespace nla;

namespace {

const Gauss I = Gauss::i();

WnNParams wnn(int e, int d, int n, Rational a, Gauss B) { return WnNParams{e, d, n, std::move(a), std::move(B)}; }

}  // namespace

TEST_CASE("normal form constructor") {
    auto p0 = build_wnn(wnn(0, 1, 0, 0, 0));
    CHECK(p0.d[3].is_zero());
    auto p = build_wnn(wnn(1, 1, 1, 2, Gauss(3, 1)));
    KForm expect = wmono(4, {1, 2}, Gauss(2)) + wmono(4, {1, -1}, Gauss(3, 1)) + wmono(4, {2, 3}) +
                   wmono(4, {1, -3}, Gauss(2)) + wmono(4, {2, -3});
    CHECK(p.d[3] == expect);
    CHECK(p.render()[3] == "2*w12+(3+i)*w1~1+2*w1~3+w23+w2~3");

    try {
        build_wnn(wnn(0, 1, 1, 2, 0));
        FAIL("expected InadmissibleParams");
    } catch (const InadmissibleParams& e) {
        CHECK(std::string(e.what()).find("a in {0,1}") != std::string::npos);
    }
    CHECK_THROWS_AS(build_wnn(wnn(0, 1, 0, 1, 2)), InadmissibleParams);
    CHECK_THROWS_AS(build_wnn(wnn(0, 1, 0, 0, 2)), InadmissibleParams);
    CHECK_THROWS_AS(build_wnn(wnn(1, 1, 1, 0, Gauss(1, 1))), InadmissibleParams);
    CHECK_THROWS_AS(build_wnn(wnn(0, 1, 1, 1, Gauss(1, -1))), InadmissibleParams);
    CHECK_THROWS_AS(build_wnn(wnn(0, 2, 0, 0, 0)), InadmissibleParams);
    CHECK(admissible_branch(wnn(0, 1, 0, 0, 0)) == 1);
    CHECK(admissible_branch(wnn(1, -1, 0, 0, 1)) == 2);
    CHECK(admissible_branch(wnn(1, -1, 0, 1, Rational(7, 3))) == 3);
    CHECK(admissible_branch(wnn(1, -1, 1, Rational(1, 2), Gauss(-1, -1))) == 4);
}

TEST_CASE("generic extension and the coefficient probe") {
    CHECK(build_generic({0, 1, 0, 0, 0}) == build_wnn(wnn(0, 1, 0, 0, 0)));
    CHECK_NOTHROW(build_generic({1, 1, 0, Gauss(0, 3), Gauss(2)}));

    ExtensionCoefficients c;
    c.eps = 1;
    c.delta = -1;
    c.A[0][1] = Gauss(2, 1);
    c.A[0][2] = Gauss(1);
    c.A[1][2] = Gauss(0, 2);
    c.B[0][0] = Gauss(3);
    c.B[0][1] = Gauss(1, 1);
    c.B[1][0] = -c.B[0][1];
    c.B[1][2] = c.A[1][2];
    c.B[0][2] = c.A[0][2] + Gauss(2 * c.delta * c.eps) * c.A[1][2];
    auto ext = build_extension(c);
    CHECK_NOTHROW(ext.validate());
    auto red = extension_to_generic(c);
    CHECK(red.params.nu == 1);
    auto gen = build_generic(red.params);
    CHECK(check_intertwiner(ext, gen, red.lambda).valid);

    c.A[1][2] = Gauss(0);
    c.B[1][2] = Gauss(0);
    c.B[0][2] = c.A[0][2];
    red = extension_to_generic(c);
    CHECK(red.params.nu == 0);
    CHECK(check_intertwiner(build_extension(c), build_generic(red.params), red.lambda).valid);

    c.B[1][1] = Gauss(1);
    CHECK_THROWS_AS(build_extension(c).validate(), JacobiViolation);
    CHECK_THROWS_AS(extension_to_generic(c), JacobiViolation);
}

TEST_CASE("reduction to normal form") {
    struct Case {
        GenericExtParams in;
        WnNParams out;
    };
    const Gauss z(Rational(3, 5), Rational(4, 5));
    std::vector<Case> cases = {
        {{0, 1, 0, 0, 3}, wnn(0, 1, 0, 0, 1)},
        {{1, -1, 0, 0, 3}, wnn(1, -1, 0, 0, 1)},
        {{1, 1, 1, 2, 0}, wnn(1, 1, 1, 2, 0)},
        {{1, -1, 1, 2, 0}, wnn(1, -1, 1, 2, 0)},
        {{0, 1, 0, 0, 0}, wnn(0, 1, 0, 0, 0)},
        {{1, 1, 0, Gauss(0, 2), 0}, wnn(1, 1, 0, 1, 0)},
        {{1, 1, 0, Gauss(0, 2), Gauss(0, -4)}, wnn(1, 1, 0, 1, 2)},
        {{0, 1, 0, Gauss(-7, 24), 1}, wnn(0, 1, 0, 1, 1)},
        {{0, 1, 1, 0, Gauss(0, 4)}, wnn(0, 1, 1, 0, 1)},
        {{1, 1, 1, 0, Gauss(3, 4)}, wnn(1, 1, 1, 0, 5)},
        {{0, -1, 1, Gauss(0, 5), Gauss(1, 0)}, wnn(0, -1, 1, 1, Gauss(0, Rational(1, 25)))},
        {{1, 1, 1, Gauss(-3, 4), Gauss(1, 2)}, wnn(1, 1, 1, 5, Gauss(1, 2) * Gauss(Rational(-3, 5), Rational(4, 5)))},
        {{1, 1, 1, z, 0}, wnn(1, 1, 1, 1, 0)},
    };
    for (const auto& c : cases) {
        INFO(c.in.str());
        auto r = reduce_to_normal_form(c.in);
        CHECK(r.params == c.out);
        CHECK(check_intertwiner(build_generic(c.in), build_wnn(r.params), r.lambda).valid);
        // idempotent on normal parameters
        auto again = reduce_to_normal_form({r.params.eps, r.params.delta, r.params.nu, Gauss(r.params.a), r.params.B});
        CHECK(again.params == r.params);
        CHECK(again.lambda == Matrix::identity(4));
    }
    CHECK_THROWS_AS(reduce_to_normal_form({1, 1, 1, Gauss(1, 1), 0}), IrrationalRotation);
    CHECK_THROWS_AS(reduce_to_normal_form({0, 1, 1, 0, Gauss(2)}), IrrationalRotation);
    CHECK_THROWS_AS(reduce_to_normal_form({1, 1, 0, Gauss(1), Gauss(0, 1)}), IrrationalRotation);
}

TEST_CASE("table rows realify to the named algebras") {
    CHECK(realify_table1(wnn(0, 1, 0, 0, 0)).name == "f1");
    CHECK(realify_table1(wnn(0, -1, 1, 1, Gauss(2, 3))).name == "f7^1");
    CHECK(realify_table1(wnn(1, 1, 0, 0, 1)).name == "f2");
    CHECK(realify_table1(wnn(1, -1, 0, 0, 0)).name == "f2");
    auto f8 = realify_table1(wnn(1, 1, 1, Rational(1, 2), Gauss(0, -3)));
    CHECK(f8.name == "f8");
    CHECK(f8.real.g == builtin_algebra("f8"));
    CHECK(is_integrable(f8.real.g, f8.real.J));
    CHECK(table1_row(wnn(0, 1, 1, 0, 1)).name == "f5^1");
}

TEST_CASE("strongly non-nilpotent families") {
    SnNParams two;
    two.family = SnNParams::II;
    two.eps = 1;
    auto p = build_snn(two);
    CHECK(p.d[3] == wmono(4, {1, -3}, I) - wmono(4, {3, -1}, I));
    CHECK(p.d[1] == wmono(4, {1, 4}) + wmono(4, {1, -4}));

    SnNParams one;
    one.a = Rational(1);
    CHECK_NOTHROW(build_snn(one));
    one.a = Rational(0);
    CHECK_THROWS_AS(build_snn(one), InadmissibleParams);
    two.eps = 0;
    CHECK_THROWS_AS(build_snn(two), InadmissibleParams);
    two.mu = 1;
    two.nu = 1;
    CHECK_THROWS_AS(build_snn(two), InadmissibleParams);

    for (int e : {0, 1})
        for (int d : {-1, 1}) {
            auto six = build_snn6(e, d);
            CHECK(six.g.dim() == 6);
            auto s = j_compatible_series(six.g, six.J);
            CHECK(s.type.tag == JTag::StronglyNonNilpotent);
            auto rf = realify(build_wnn(wnn(e, d, 0, 1, 0)));
            auto a1 = j_compatible_series(rf.g, rf.J).at(1);
            CHECK(quotient(rf.g, a1).algebra == six.g);
        }
}

TEST_CASE("pseudo-Kahler SnN structure lives on g10^0") {
    auto g = snn_pk_real_form();
    CHECK(g == builtin_algebra("g10^0"));
    CHECK(ascending_type(g).size() == 4);
}

TEST_CASE("builtins and references") {
    for (const auto& n : wnn_algebra_names()) CHECK(builtin_algebra(n).dim() == 8);
    CHECK(builtin_algebra("R5") == abelian(5));
    CHECK(direct_sum(builtin_algebra("h19^-"), abelian(2)) == builtin_algebra("f1"));
    CHECK(direct_sum(builtin_algebra("h26^+"), abelian(2)) == builtin_algebra("f2"));
    CHECK_THROWS_AS(builtin_algebra("f9"), UnknownAlgebra);
    CHECK(resolve_algebra(" (0,0,12) ").dim() == 3);
    CHECK(resolve_algebra("f6").name() == "f6");

    auto j = parse_jref("wnn(1, 1, 1, 2, 3+i)");
    CHECK(j.kind == "wnn");
    CHECK(j.p == build_wnn(wnn(1, 1, 1, 2, Gauss(3, 1))));
    CHECK(parse_jref("snn2(1,0,0,0,0)").p == [] {
        SnNParams s;
        s.family = SnNParams::II;
        s.eps = 1;
        return build_snn(s);
    }());
    CHECK(parse_jref("snn6(1,-1)").p.n == 3);
    CHECK_THROWS_AS(parse_jref("wnn(0,1,1)"), ParseError);
    CHECK_THROWS_AS(parse_jref("wnn(0,1,1,x,0)"), ParseError);
    CHECK_THROWS_AS(parse_jref("foo(1)"), ParseError);
    CHECK_THROWS_AS(parse_jref("wnn(0,1,1,2,0)"), InadmissibleParams);
}
