#pragma once

#include "nla/cpxstruct/cpxstruct.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nla {

struct WnNParams {
    int eps = 0;    // 0 or 1
    int delta = 1;  // -1 or 1
    int nu = 0;     // 0 or 1
    Rational a;
    Gauss B;

    std::string str() const;  // "(eps,delta,nu,a,B)"
    friend bool operator==(const WnNParams&, const WnNParams&) = default;
};

// Branch 1..4 of the admissible (nu, a, B) list; InadmissibleParams otherwise.
int admissible_branch(const WnNParams& p);

// Normal-form equations:
//   d w1 = 0, d w2 = w13 + w1~3, d w3 = i eps w1~1 + i delta (w1~2 - w2~1),
//   d w4 = a w12 + B w1~1 + nu (w23 + 2 delta eps w1~3 + w2~3).
CoframePresentation build_wnn(const WnNParams& p);

struct GenericExtParams {
    int eps = 0;
    int delta = 1;
    int nu = 0;
    Gauss A;
    Gauss B;

    std::string str() const;
};

// Same shape with arbitrary complex (A, B) in place of (a, B).
CoframePresentation build_generic(const GenericExtParams& p);

// Central extension of the 6-dimensional SnN family by tau^4 with free
// coefficients A_ij (i<j<=3) and B_rs (r,s<=3). Not validated.
struct ExtensionCoefficients {
    int eps = 0;
    int delta = 1;
    Gauss A[3][3];  // A[i][j] for i < j, 0-based
    Gauss B[3][3];  // coefficient of tau^{r bar s}
};

CoframePresentation build_extension(const ExtensionCoefficients& c);

struct GenericReduction {
    GenericExtParams params;
    Matrix lambda;  // eta^i = sum_j lambda(i,j) tau^j
};

// Basis eta^4 = (tau^4 - A13 tau^2 + i delta B12 tau^3) / A23 (A23 omitted when zero).
// Requires the d^2 = 0 constraints on the coefficients.
GenericReduction extension_to_generic(const ExtensionCoefficients& c);

struct NormalReduction {
    WnNParams params;
    Matrix lambda;  // omega^i = sum_j lambda(i,j) eta^j
};

// Explicit rotations and rescalings into the normal form; IrrationalRotation
// when a needed modulus, phase or square root leaves Q(i).
NormalReduction reduce_to_normal_form(const GenericExtParams& p);

struct Table1Row {
    std::string name;  // target algebra, e.g. "f7^1"
    Matrix P;          // 4 x 8 coefficients of the rescaled coframe
    std::vector<Rational> radicands;
};

Table1Row table1_row(const WnNParams& p);

struct Table1Result {
    RealForm real;
    std::string name;
};

// Realifies through the row's basis; RowMismatch unless the constants equal the named algebra.
Table1Result realify_table1(const WnNParams& p);

struct SnNParams {
    enum Family { I = 1, II = 2 } family = I;
    int delta = 1;
    int eps = 0;
    int nu = 0;
    int mu = 0;
    Rational a;
    Rational b;

    std::string str() const;
};

void check_snn(const SnNParams& p);
CoframePresentation build_snn(const SnNParams& p);

// d t1 = 0, d t2 = t13 + t1~3, d t3 = i eps t1~1 + i delta (t1~2 - t2~1).
CoframePresentation snn6_presentation(int eps, int delta);
RealForm build_snn6(int eps, int delta);

// Standard realification of the pseudo-Kahler SnN structure carried to the
// basis in which it reads (0,0,0,13,23,14+25,15+24,16+27).
LieAlgebra snn_pk_real_form();

// Builtin names: f1..f8 variants, g10^0, h19^-, h26^+, R<n>.
std::vector<std::string> builtin_names();
bool is_builtin(std::string_view name);
LieAlgebra builtin_algebra(std::string_view name);

// The eleven eight-dimensional algebras in table order.
const std::vector<std::string>& wnn_algebra_names();

// Builtin name or bracket notation.
LieAlgebra resolve_algebra(std::string_view ref);

struct JRef {
    std::string kind;  // "wnn", "generic", "snn1", "snn2", "snn6"
    CoframePresentation p;
    std::string label;
    std::optional<WnNParams> wnn;
    std::optional<GenericExtParams> generic;
    std::optional<SnNParams> snn;
};

// wnn(e,d,n,a,B), generic(e,d,n,A,B), snn1(d,e,n,a,b), snn2(e,m,n,a,b), snn6(e,d).
JRef parse_jref(std::string_view text);

}  // namespace nla
