#pragma once

#include "nla/exactnum/subspace.hpp"
#include "nla/liealg/lie_algebra.hpp"

#include <vector>

namespace nla {

// [A, B] as a subspace.
Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b);

// {X : [M X, g] subset of target for every M in maps}; maps empty means {identity}.
Subspace bracket_preimage(const LieAlgebra& g, const Subspace& target, const std::vector<QMatrix>& maps = {});

Subspace center(const LieAlgebra& g);

// g^0 = g, g^k = [g^{k-1}, g], stopping at the first repeated term.
std::vector<Subspace> lower_central_series(const LieAlgebra& g);
// g_0 = 0, g_k = {X : [X,g] in g_{k-1}}, stopping at the first repeated term.
std::vector<Subspace> upper_central_series(const LieAlgebra& g);

bool is_nilpotent(const LieAlgebra& g);
// Nilpotency step s (g^s = 0, g^{s-1} != 0); 0 for the zero algebra. Throws if not nilpotent.
int nilpotency_step(const LieAlgebra& g);

// Dimensions of g_1, ..., g_s (up to the whole algebra).
std::vector<int> ascending_type(const LieAlgebra& g);
// Dimensions of g^0, ..., g^{s-1} (nonzero terms).
std::vector<int> descending_type(const LieAlgebra& g);

struct Quotient {
    LieAlgebra algebra;
    QMatrix projection;               // dim(q) x dim(g)
    std::vector<std::size_t> section; // basis e_j of g lifting the quotient basis
};

// Throws NotAnIdeal if [ideal, g] is not contained in ideal.
Quotient quotient(const LieAlgebra& g, const Subspace& ideal);

}  // namespace nla
