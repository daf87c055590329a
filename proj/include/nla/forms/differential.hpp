#pragma once

#include "nla/errors.hpp"
#include "nla/forms/kform.hpp"

#include <utility>
#include <vector>

namespace nla {

// d of each generator of the dual; each entry is a 2-form.
struct StructureEquations {
    int dim = 0;
    std::vector<KForm> d;

    explicit StructureEquations(int n = 0);
    explicit StructureEquations(std::vector<KForm> dgens);
};

// Chevalley-Eilenberg differential extended by the graded Leibniz rule.
KForm ce_differential(const StructureEquations& eqs, const KForm& a);

// Matrix of d : Lambda^k -> Lambda^{k+1} over Q(i), in lexicographic bases.
std::vector<Mask> degree_basis(int ambient, int k);

// Complex frame of rank n: generators 0..n-1 are w^1..w^n, n..2n-1 their conjugates.
int frame_conj_index(int i, int n);
KForm frame_conj(const KForm& f, int n);
// (p,q) type of a monomial in a frame of rank n.
std::pair<int, int> bidegree(Mask m, int n);
KForm bidegree_part(const KForm& f, int n, int p, int q);

// (del, delbar) of a form in a frame whose structure equations are eqs.
std::pair<KForm, KForm> del_delbar(const StructureEquations& frame_eqs, int n, const KForm& a);

}  // namespace nla
