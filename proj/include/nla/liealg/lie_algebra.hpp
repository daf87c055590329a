#pragma once

#include "nla/errors.hpp"
#include "nla/exactnum/matrix.hpp"
#include "nla/forms/differential.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nla {

// Raised when d^2 e^k != 0 for some generator; carries the first residual.
struct JacobiViolation : Error {
    JacobiViolation(int gen, KForm residual);
    int generator;  // 0-based
    KForm residual;
};

using QVec = std::vector<Rational>;

// Real Lie algebra given by de^k = sum_{i<j} c^k_ij e^i ^ e^j on the dual basis.
// Brackets follow [e_i, e_j] = -sum_k c^k_ij e_k.
class LieAlgebra {
public:
    explicit LieAlgebra(int n = 0);

    // Validates antisymmetry/reality and the Jacobi identity.
    static LieAlgebra from_equations(const StructureEquations& eqs, std::string name = {});

    int dim() const { return n_; }
    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    const Rational& c(int k, int i, int j) const { return c_[idx(k, i, j)]; }
    // Sets c^k_ij and c^k_ji = -value.
    void set(int k, int i, int j, const Rational& value);

    KForm d(int k) const;
    const StructureEquations& equations() const { return eqs_; }

    QVec bracket_basis(int i, int j) const;
    QVec bracket(const QVec& x, const QVec& y) const;

    // First generator with d^2 e^k != 0, with its residual.
    std::optional<std::pair<int, KForm>> jacobi_residual() const;
    void check_jacobi() const;

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) { return a.n_ == b.n_ && a.c_ == b.c_; }

private:
    std::size_t idx(int k, int i, int j) const {
        return (static_cast<std::size_t>(k) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(i)) *
                   static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
    }
    void rebuild_equations();

    int n_;
    std::vector<Rational> c_;
    StructureEquations eqs_;
    std::string name_;
};

// New coframe f^i = sum_j P_ij e^j.
LieAlgebra change_coframe(const LieAlgebra& g, const QMatrix& p);

// Coframe E^m = sqrt(r_m) * e^m for positive rationals r_m; throws if a
// structure constant would become irrational.
LieAlgebra rescale_coframe(const LieAlgebra& g, const std::vector<Rational>& radicands);

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

// Abelian algebra R^n.
LieAlgebra abelian(int n);

}  // namespace nla
