#include "doctest.h"

#include "nla/forms/differential.hpp"

using namespace nla;

namespace {

KForm e(int n, std::initializer_list<int> idx, Gauss c = Gauss(1)) {
    std::vector<int> v;
    for (int i : idx) v.push_back(i - 1);
    return KForm::basis(n, v, c);
}

// f1 = (0,0,0,12,23,14-35,0,0)
StructureEquations f1_eqs() {
    StructureEquations s(8);
    s.d[3] = e(8, {1, 2});
    s.d[4] = e(8, {2, 3});
    s.d[5] = e(8, {1, 4}) - e(8, {3, 5});
    return s;
}

}  // namespace

TEST_CASE("wedge signs and graded commutativity") {
    CHECK(wedge(e(4, {2}), e(4, {1})) == -e(4, {1, 2}));
    CHECK(wedge(e(4, {1, 3}), e(4, {2})) == -e(4, {1, 2, 3}));
    CHECK(wedge(e(4, {1}), e(4, {1})).is_zero());
    KForm a = e(5, {1, 2}) + e(5, {3, 4}, Gauss(2));
    KForm b = e(5, {5}) - e(5, {2}, Gauss::i());
    CHECK(wedge(a, b) == wedge(b, a));
    CHECK(wedge(b, b).is_zero());
    CHECK(e(4, {3, 1, 2}) == e(4, {1, 2, 3}));
}

TEST_CASE("square of e14-e35") {
    KForm a = e(8, {1, 4}) - e(8, {3, 5});
    CHECK(wedge(a, a) == e(8, {1, 3, 4, 5}, Gauss(2)));
}

TEST_CASE("CE differential on f1") {
    auto s = f1_eqs();
    CHECK(ce_differential(s, e(8, {6})) == e(8, {1, 4}) - e(8, {3, 5}));
    CHECK(ce_differential(s, e(8, {1})).is_zero());
    // d(e4 ^ e5) = e12^e5 - e4^e23
    CHECK(ce_differential(s, e(8, {4, 5})) == e(8, {1, 2, 5}) - e(8, {2, 3, 4}));
    for (int k = 1; k <= 8; ++k) CHECK(ce_differential(s, ce_differential(s, e(8, {k}))).is_zero());
}

TEST_CASE("frame conjugation and bidegree") {
    const int n = 4;
    // w^{1 bar3} -> conj is w^{bar1 3} = -w^{3 bar1}
    KForm w13b = KForm::basis(8, {0, 6}, Gauss::i());
    KForm c = frame_conj(w13b, n);
    CHECK(c == KForm::basis(8, {2, 4}, Gauss(0, 1)));
    CHECK(frame_conj(frame_conj(w13b, n), n) == w13b);
    CHECK(bidegree(indices_mask({0, 6}), n) == std::make_pair(1, 1));
    CHECK(render_frame(w13b, n) == "i*w1~3");
    CHECK(render_frame(KForm::basis(8, {0, 6}), n) == "w1~3");
    CHECK(render_frame_tex(KForm::basis(8, {0, 6}), n) == "\\omega^{1\\bar{3}}");
    CHECK(render_real(e(8, {1, 2}) + e(8, {3, 4}, Gauss(-2))) == "e12-2*e34");
}

TEST_CASE("del and delbar split d on a complex frame") {
    // dw1 = 0, dw2 = w1^w1bar  (rank 2 frame, ambient 4)
    StructureEquations s(4);
    s.d[1] = KForm::basis(4, {0, 2});
    s.d[3] = frame_conj(s.d[1], 2);
    KForm a = KForm::basis(4, {1});
    auto [del, delbar] = del_delbar(s, 2, a);
    CHECK(del.is_zero());
    CHECK(delbar == KForm::basis(4, {0, 2}));
    CHECK(del + delbar == ce_differential(s, a));

    StructureEquations bad(4);
    bad.d[1] = KForm::basis(4, {2, 3});
    bad.d[3] = frame_conj(bad.d[1], 2);
    CHECK_THROWS_AS(del_delbar(bad, 2, a), NotIntegrable);
}

TEST_CASE("substitution and evaluation") {
    // e1 -> f1 + f2, e2 -> f2
    std::vector<KForm> images{e(2, {1}) + e(2, {2}), e(2, {2})};
    CHECK(substitute(e(2, {1, 2}), images, 2) == e(2, {1, 2}));
    KForm f = e(3, {1, 2}, Gauss(3));
    std::vector<std::vector<Gauss>> args{{Gauss(1), Gauss(0), Gauss(0)}, {Gauss(0), Gauss(1), Gauss(0)}};
    CHECK(f.evaluate(args) == Gauss(3));
    std::swap(args[0], args[1]);
    CHECK(f.evaluate(args) == Gauss(-3));
}
