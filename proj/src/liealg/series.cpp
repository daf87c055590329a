#include "nla/liealg/series.hpp"

namespace nla {

namespace {

QVec unit(int n, int i) {
    QVec v(static_cast<std::size_t>(n));
    v[static_cast<std::size_t>(i)] = Rational(1);
    return v;
}

}  // namespace

Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
    const auto n = static_cast<std::size_t>(g.dim());
    if (a.ambient() != n || b.ambient() != n) throw AmbientMismatch("subspaces are not in the algebra");
    std::vector<QVec> gens;
    for (const auto& x : a.basis())
        for (const auto& y : b.basis()) gens.push_back(g.bracket(x, y));
    return Subspace::span(n, gens);
}

Subspace bracket_preimage(const LieAlgebra& g, const Subspace& target, const std::vector<QMatrix>& maps) {
    const int n = g.dim();
    const auto un = static_cast<std::size_t>(n);
    if (target.ambient() != un) throw AmbientMismatch("target is not in the algebra");
    std::vector<QMatrix> ms = maps;
    if (ms.empty()) ms.push_back(QMatrix::identity(un));
    auto ann = target.annihilator().basis();
    // rows: phi([M e_i, e_j]) as a functional of x, one per (phi, M, j)
    std::vector<QVec> rows;
    for (const auto& m : ms) {
        for (int j = 0; j < n; ++j) {
            std::vector<QVec> br;  // [M e_i, e_j] for each i
            for (int i = 0; i < n; ++i) br.push_back(g.bracket(m.apply(unit(n, i)), unit(n, j)));
            for (const auto& phi : ann) {
                QVec row(un);
                bool nz = false;
                for (std::size_t i = 0; i < un; ++i) {
                    Rational s;
                    for (std::size_t k = 0; k < un; ++k)
                        if (!phi[k].is_zero() && !br[i][k].is_zero()) s += phi[k] * br[i][k];
                    nz = nz || !s.is_zero();
                    row[i] = s;
                }
                if (nz) rows.push_back(std::move(row));
            }
        }
    }
    if (rows.empty()) return Subspace::whole(un);
    return Subspace::span(un, kernel(QMatrix::from_rows(rows, un)));
}

Subspace center(const LieAlgebra& g) {
    return bracket_preimage(g, Subspace(static_cast<std::size_t>(g.dim())));
}

std::vector<Subspace> lower_central_series(const LieAlgebra& g) {
    const auto n = static_cast<std::size_t>(g.dim());
    Subspace whole = Subspace::whole(n);
    std::vector<Subspace> out{whole};
    while (true) {
        Subspace next = bracket_span(g, out.back(), whole);
        if (next == out.back()) break;
        out.push_back(std::move(next));
        if (out.back().dim() == 0) break;
    }
    return out;
}

std::vector<Subspace> upper_central_series(const LieAlgebra& g) {
    const auto n = static_cast<std::size_t>(g.dim());
    std::vector<Subspace> out{Subspace(n)};
    while (true) {
        Subspace next = bracket_preimage(g, out.back());
        if (next == out.back()) break;
        out.push_back(std::move(next));
        if (out.back().dim() == n) break;
    }
    return out;
}

bool is_nilpotent(const LieAlgebra& g) { return lower_central_series(g).back().dim() == 0; }

int nilpotency_step(const LieAlgebra& g) {
    auto lcs = lower_central_series(g);
    if (lcs.back().dim() != 0) throw Error("algebra is not nilpotent");
    return static_cast<int>(lcs.size()) - 1;
}

std::vector<int> ascending_type(const LieAlgebra& g) {
    std::vector<int> out;
    auto ucs = upper_central_series(g);
    for (std::size_t k = 1; k < ucs.size(); ++k) out.push_back(static_cast<int>(ucs[k].dim()));
    return out;
}

std::vector<int> descending_type(const LieAlgebra& g) {
    std::vector<int> out;
    for (const auto& s : lower_central_series(g))
        if (s.dim() > 0) out.push_back(static_cast<int>(s.dim()));
    return out;
}

Quotient quotient(const LieAlgebra& g, const Subspace& ideal) {
    const int n = g.dim();
    const auto un = static_cast<std::size_t>(n);
    if (ideal.ambient() != un) throw AmbientMismatch("ideal is not in the algebra");
    Subspace whole = Subspace::whole(un);
    if (!ideal.contains(bracket_span(g, ideal, whole))) throw NotAnIdeal("[I, g] is not contained in I");
    auto comp = ideal.complement_indices();
    const int m = static_cast<int>(comp.size());
    Quotient q{LieAlgebra(m), QMatrix(comp.size(), un), comp};
    for (std::size_t j = 0; j < un; ++j) {
        auto coords = ideal.quotient_coords(unit(n, static_cast<int>(j)));
        for (std::size_t a = 0; a < comp.size(); ++a) q.projection(a, j) = coords[a];
    }
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            auto br = g.bracket_basis(static_cast<int>(comp[static_cast<std::size_t>(a)]),
                                      static_cast<int>(comp[static_cast<std::size_t>(b)]));
            auto coords = ideal.quotient_coords(br);
            for (int k = 0; k < m; ++k)
                if (!coords[static_cast<std::size_t>(k)].is_zero()) q.algebra.set(k, a, b, -coords[static_cast<std::size_t>(k)]);
        }
    q.algebra.check_jacobi();
    q.algebra.set_name(g.name().empty() ? std::string() : g.name() + "/I");
    return q;
}

}  // namespace nla
