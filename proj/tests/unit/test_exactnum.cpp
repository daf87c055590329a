#include "doctest.h"

#include "nla/exactnum/matrix.hpp"
#include "nla/exactnum/subspace.hpp"

using namespace nla;

namespace {

using QVec = std::vector<Rational>;

QMatrix qm(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<Rational>> v;
    std::size_t cols = 0;
    for (auto r : rows) {
        v.emplace_back();
        for (long x : r) v.back().push_back(Rational(x));
        cols = v.back().size();
    }
    return QMatrix::from_rows(v, cols);
}

QVec qv(std::initializer_list<long> xs) {
    QVec v;
    for (long x : xs) v.push_back(Rational(x));
    return v;
}

}  // namespace

TEST_CASE("rationals are canonical") {
    Rational a(6, -4);
    CHECK(a.num() == -3);
    CHECK(a.den() == 2);
    CHECK(Rational(0, 5) == Rational(0));
    CHECK(Rational(0, 5).den() == 1);
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
    CHECK(Rational(9, 4).sqrt() == Rational(3, 2));
    CHECK(!Rational(2).sqrt());
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("gaussian rationals") {
    Gauss i = Gauss::i();
    CHECK(i * i == Gauss(-1));
    Gauss z(Rational(3, 5), Rational(4, 5));
    CHECK(z.norm() == Rational(1));
    CHECK(z * z.conj() == Gauss(1));
    CHECK(z.conj().conj() == z);
    Gauss a(2, 3), b(Rational(-1, 2), 7);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a + b).conj() == a.conj() + b.conj());
    CHECK(a / b * b == a);
    CHECK(Gauss::parse("1/2-3/4i") == Gauss(Rational(1, 2), Rational(-3, 4)));
    CHECK(Gauss::parse("-i") == Gauss(0, -1));
    CHECK(Gauss::parse("2i") == Gauss(0, 2));
    CHECK(Gauss::parse(Gauss(Rational(-7, 3), 1).str()) == Gauss(Rational(-7, 3), 1));
    CHECK(Gauss(-4).sqrt() == Gauss(0, 2));
    CHECK(Gauss(0, 2).sqrt() == Gauss(1, 1));
    CHECK(Gauss(Rational(7, 25), Rational(24, 25)).sqrt() == Gauss(Rational(4, 5), Rational(3, 5)));
    CHECK(!Gauss(2).sqrt());
    CHECK(!Gauss(0, 1).sqrt());
}

TEST_CASE("rank") {
    CHECK(rank(QMatrix::identity(4)) == 4);
    CHECK(rank(qm({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}})) == 2);
    CHECK(rank(QMatrix(3, 5)) == 0);
    auto m = qm({{0, 1, 2, 3}, {0, 2, 4, 7}, {1, 1, 1, 1}});
    CHECK(rank(m) == rank(m.transpose()));
    Matrix c(2, 2);
    c(0, 0) = Gauss(1);
    c(0, 1) = Gauss::i();
    c(1, 0) = Gauss::i();
    c(1, 1) = Gauss(-1);
    CHECK(rank(c) == 1);
}

TEST_CASE("solve_linear") {
    auto s0 = solve_linear(QMatrix(2, 3), qv({0, 0}));
    REQUIRE(s0.particular);
    CHECK(*s0.particular == qv({0, 0, 0}));
    CHECK(s0.kernel.size() == 3);

    auto s1 = solve_linear(qm({{1, 1}, {0, 1}}), qv({2, 1}));
    REQUIRE(s1.particular);
    CHECK(*s1.particular == qv({1, 1}));
    CHECK(s1.kernel.empty());

    auto s2 = solve_linear(qm({{1, 1}, {2, 2}}), qv({1, 3}));
    CHECK(!s2.particular);

    auto a = qm({{1, 2, 0, -1}, {0, 0, 1, 3}});
    auto s3 = solve_linear(a, qv({4, 5}));
    REQUIRE(s3.particular);
    CHECK(a.apply(*s3.particular) == qv({4, 5}));
    CHECK(s3.kernel.size() == 2);
    for (const auto& k : s3.kernel) CHECK(a.apply(k) == qv({0, 0}));
}

TEST_CASE("inverse and determinant") {
    auto m = qm({{2, 1}, {5, 3}});
    CHECK(determinant(m) == Rational(1));
    auto inv = inverse(m);
    REQUIRE(inv);
    CHECK(m * *inv == QMatrix::identity(2));
    CHECK(!inverse(qm({{1, 2}, {2, 4}})));
}

TEST_CASE("signature") {
    Inertia expect{1, 1, 1};
    CHECK(signature_symmetric(qm({{1, 0, 0}, {0, -1, 0}, {0, 0, 0}})) == expect);
    // zero diagonal forces the symmetric row/column update
    Inertia hyperbolic{1, 1, 0};
    CHECK(signature_symmetric(qm({{0, 1}, {1, 0}})) == hyperbolic);
    Inertia three{2, 1, 0};
    CHECK(signature_symmetric(qm({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}})) == Inertia{1, 2, 0});
    CHECK(signature_symmetric(qm({{2, 1, 0}, {1, 2, 0}, {0, 0, -3}})) == three);
    CHECK_THROWS_AS(signature_symmetric(qm({{1, 2}, {3, 1}})), NotSymmetric);
    Matrix c(1, 1);
    c(0, 0) = Gauss::i();
    CHECK_THROWS_AS(signature_symmetric(c), NotReal);
}

TEST_CASE("subspaces") {
    auto e = [](int i) {
        QVec v(3);
        v[static_cast<std::size_t>(i)] = Rational(1);
        return v;
    };
    auto s1 = Subspace::span(3, {e(0)});
    auto s2 = Subspace::span(3, {e(1)});
    CHECK((s1 + s2).dim() == 2);
    auto a = Subspace::span(3, {e(0), e(1)});
    auto b = Subspace::span(3, {e(1), e(2)});
    CHECK(intersect(a, b) == Subspace::span(3, {e(1)}));
    CHECK(a.contains(qv({3, -2, 0})));
    CHECK(!a.contains(qv({0, 0, 1})));
    auto c = Subspace::span(3, {qv({1, 1, 0})});
    CHECK(c.quotient_coords(qv({2, 5, 7})) == qv({3, 7}));
    CHECK(c.annihilator().dim() == 2);
    CHECK_THROWS_AS(a + Subspace(4), AmbientMismatch);
    // echelon canonical form makes equality literal
    CHECK(Subspace::span(3, {qv({2, 2, 0}), qv({0, 1, 1})}) == Subspace::span(3, {qv({1, 0, -1}), qv({1, 2, 1})}));
}
