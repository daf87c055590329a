#include "nla/forms/differential.hpp"
#include "nla/errors.hpp"

#include <algorithm>
#include <bit>

namespace nla {

StructureEquations::StructureEquations(int n) : dim(n) {
    for (int i = 0; i < n; ++i) d.emplace_back(n, 2);
}

StructureEquations::StructureEquations(std::vector<KForm> dgens)
    : dim(static_cast<int>(dgens.size())), d(std::move(dgens)) {
    for (const auto& f : d)
        if (f.ambient() != dim || f.degree() != 2) throw AmbientMismatch("structure equation is not a 2-form on the algebra");
}

KForm ce_differential(const StructureEquations& eqs, const KForm& a) {
    if (a.ambient() != eqs.dim) throw AmbientMismatch("form ambient differs from algebra dimension");
    const int n = eqs.dim;
    if (a.degree() >= n) return KForm(n, std::min(n, a.degree() + 1));
    KForm out(n, a.degree() + 1);
    for (const auto& [m, c] : a.terms()) {
        auto idx = mask_indices(m);
        Mask before = 0;
        for (std::size_t pos = 0; pos < idx.size(); ++pos) {
            Mask bit = Mask(1) << idx[pos];
            Mask rest = m & ~bit;
            const KForm& dg = eqs.d[static_cast<std::size_t>(idx[pos])];
            Gauss base = (pos % 2 == 0) ? c : -c;
            Mask after = rest & ~before;
            for (const auto& [mm, cc] : dg.terms()) {
                if (mm & rest) continue;
                int s = merge_sign(before, mm) * merge_sign(before | mm, after);
                Gauss v = base * cc;
                out.add_term(rest | mm, s < 0 ? -v : v);
            }
            before |= bit;
        }
    }
    return out;
}

std::vector<Mask> degree_basis(int ambient, int k) {
    std::vector<Mask> out;
    for (Mask m = 0; m < (Mask(1) << ambient); ++m)
        if (std::popcount(m) == k) out.push_back(m);
    std::sort(out.begin(), out.end(), LexMaskLess{});
    return out;
}

int frame_conj_index(int i, int n) { return i < n ? i + n : i - n; }

KForm frame_conj(const KForm& f, int n) {
    if (f.ambient() != 2 * n) throw AmbientMismatch("form is not on a complex frame of rank " + std::to_string(n));
    std::vector<int> perm;
    for (int i = 0; i < 2 * n; ++i) perm.push_back(frame_conj_index(i, n));
    return f.relabel(perm, [](const Gauss& c) { return c.conj(); });
}

std::pair<int, int> bidegree(Mask m, int n) {
    Mask low = (Mask(1) << n) - 1;
    return {std::popcount(m & low), std::popcount(m & ~low)};
}

KForm bidegree_part(const KForm& f, int n, int p, int q) {
    KForm out(f.ambient(), f.degree());
    for (const auto& [m, c] : f.terms())
        if (bidegree(m, n) == std::make_pair(p, q)) out.add_term(m, c);
    return out;
}

std::pair<KForm, KForm> del_delbar(const StructureEquations& frame_eqs, int n, const KForm& a) {
    if (frame_eqs.dim != 2 * n) throw AmbientMismatch("frame equations have wrong rank");
    for (int k = 0; k < 2 * n; ++k) {
        const auto& dk = frame_eqs.d[static_cast<std::size_t>(k)];
        bool holo = k < n;
        if (!bidegree_part(dk, n, holo ? 0 : 2, holo ? 2 : 0).is_zero())
            throw NotIntegrable("d of generator " + std::to_string(k + 1) + " has a component of type " +
                                (holo ? "(0,2)" : "(2,0)"));
    }
    const int deg = std::min(a.ambient(), a.degree() + 1);
    KForm del(a.ambient(), deg), delbar(a.ambient(), deg);
    for (const auto& [m, c] : a.terms()) {
        auto [p, q] = bidegree(m, n);
        KForm single(a.ambient(), a.degree());
        single.add_term(m, c);
        KForm ds = ce_differential(frame_eqs, single);
        del += bidegree_part(ds, n, p + 1, q);
        delbar += bidegree_part(ds, n, p, q + 1);
    }
    return {del, delbar};
}

}  // namespace nla
