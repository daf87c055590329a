#pragma once

#include "nla/exactnum/subspace.hpp"
#include "nla/liealg/lie_algebra.hpp"
#include "nla/liealg/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nla {

// Endomorphism of g acting on coordinate columns; J^2 = -Id is enforced.
class RealJ {
public:
    RealJ() = default;
    explicit RealJ(QMatrix m);

    // J e_{2k-1} = e_{2k}, so that e^{2k-1} + i e^{2k} has type (1,0).
    static RealJ standard(int dim);

    const QMatrix& matrix() const { return m_; }
    int dim() const { return static_cast<int>(m_.rows()); }
    QVec apply(const QVec& v) const { return m_.apply(v); }
    bool preserves(const Subspace& s) const;

    friend bool operator==(const RealJ& a, const RealJ& b) { return a.m_ == b.m_; }

private:
    QMatrix m_;
};

struct NijenhuisValue {
    int i = 0, j = 0;  // 0-based, i < j
    QVec value;        // N_J(e_i, e_j)
};

// All nonzero N_J(e_i, e_j); empty iff J is integrable.
std::vector<NijenhuisValue> nijenhuis(const LieAlgebra& g, const RealJ& J);
inline bool is_integrable(const LieAlgebra& g, const RealJ& J) { return nijenhuis(g, J).empty(); }

// Frame monomial on omega^1..omega^n and conjugates: 1-based indices,
// negative for barred, e.g. {1, -3} is omega^{1 bar3}.
KForm wmono(int n, std::initializer_list<int> idx, const Gauss& c = Gauss(1));

// Complex structure equations d omega^k, each a 2-form on the rank-n frame.
struct CoframePresentation {
    int n = 0;
    std::vector<KForm> d;

    CoframePresentation() = default;
    explicit CoframePresentation(int n_);
    CoframePresentation(int n_, std::vector<KForm> dw);

    // Equations for omega^k together with their conjugates.
    StructureEquations full() const;
    // NotIntegrable on a (0,2) part, JacobiViolation if d^2 != 0.
    void validate() const;
    std::vector<std::string> render() const;
    std::vector<std::string> render_tex() const;

    friend bool operator==(const CoframePresentation& a, const CoframePresentation& b) {
        return a.n == b.n && a.d == b.d;
    }
};

struct RealForm {
    LieAlgebra g;
    RealJ J;
    Matrix M;  // theta = M e: rows omega^1..omega^n, then their conjugates
};

// Standard coframe omega^k = e^{2k-1} + i e^{2k}.
RealForm realify(const CoframePresentation& p);
// omega^k = sqrt(radicands[k]) * sum_m P(k,m) e^m; radicands default to 1.
// Throws IrrationalRotation if the rescaled equations leave Q(i).
RealForm realify(const CoframePresentation& p, const Matrix& P, const std::vector<Rational>& radicands = {});

// Rescaled frame omega~^k = omega^k / sqrt(s_k).
CoframePresentation rescale_frame(const CoframePresentation& p, const std::vector<Rational>& s);

struct Presented {
    CoframePresentation p;
    Matrix M;
};

// (1,0)-coframe from the echelon basis of ker(J^T - i); NotIntegrable on a (0,2) part.
Presented to_presentation(const LieAlgebra& g, const RealJ& J);

enum class JTag { Nilpotent, WeaklyNonNilpotent, StronglyNonNilpotent };
std::string to_string(JTag t);

struct JType {
    JTag tag = JTag::Nilpotent;
    std::vector<int> series_dims;  // a_1, a_2, ... up to g or the first repeat
    int t = 0;                     // first k with a_k = a_{k+1}
};

struct JSeries {
    std::vector<Subspace> terms;  // a_1, a_2, ... as in series_dims
    JType type;
    // a_k for any k >= 0, constant past stabilization.
    Subspace at(int k) const;
};

JSeries j_compatible_series(const LieAlgebra& g, const RealJ& J);

struct InducedQuotient {
    Quotient q;
    RealJ J;
};

InducedQuotient induced_quotient(const LieAlgebra& g, const RealJ& J, int q);

// F(omega'^i) = sum_j L(i,j) omega^j.
struct IntertwinerCheck {
    bool valid = false;
    std::vector<KForm> residuals;  // d(F w'^i) - F(d w'^i) on p's frame
};

IntertwinerCheck check_intertwiner(const CoframePresentation& p, const CoframePresentation& pp, const Matrix& lambda);

// Real map f : g -> g' with f J = J' f induced by lambda on standard realifications.
QMatrix transport(const RealForm& a, const RealForm& b, const Matrix& lambda);

// [X_a, X_b] in the frame dual to omega and conjugates (indices 0..2n-1).
std::vector<Gauss> complex_bracket(const CoframePresentation& p, int a, int b);

struct SearchOptions {
    int box = 1;           // kernel coefficients range over [-box, box]
    std::size_t limit = 1; // stop after this many hits
};

// Bounded search for valid intertwiners with first row in {0, +-1, +-i}^n.
// A falsification harness: an empty result proves nothing.
std::vector<Matrix> search_intertwiners(const CoframePresentation& p, const CoframePresentation& pp,
                                        const SearchOptions& opts = {});

}  // namespace nla
