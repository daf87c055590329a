#pragma once

#include "nla/liealg/lie_algebra.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace nla {

// Matrix of d : Lambda^k -> Lambda^{k+1} in lexicographic monomial bases
// (rows index degree k+1, columns degree k).
QMatrix differential_matrix(const LieAlgebra& g, int k);
int betti(const LieAlgebra& g, int k);
// b_0 .. b_dim.
std::vector<int> betti_numbers(const LieAlgebra& g);

struct NdOptions {
    int height = 4;
    std::vector<int> primes{7, 11, 13};
};

struct NdWitness {
    KForm alpha;  // decomposable exact 2-form
    KForm gamma;  // d gamma = alpha
};

struct NdReport {
    int exact_dim = 0;    // dim d(Lambda^1)
    int lower_bound = 0;  // span of rational decomposable points found
    std::vector<NdWitness> witnesses;
    std::vector<std::pair<int, int>> field_dims;  // (p, span dim over F_p)
    bool agree = false;
    std::string confidence;
};

// Two-sided computation; never throws on disagreement.
NdReport nd_analyze(const LieAlgebra& g, const NdOptions& opts = {});
// Value when the oracles agree; OracleDisagreement otherwise.
int nd_invariant(const LieAlgebra& g, const NdOptions& opts = {});

// Entries are linear forms in x_1..x_n: entry(k,i) = sum_j b^j_{ki} x_j with
// b the bracket constants [e_k, e_i] = sum_j b^j_{ki} e_j.
struct CasimirMatrix {
    int n = 0;
    std::vector<std::vector<QVec>> entries;

    QMatrix at(const QVec& x) const;
    std::string entry_str(int k, int i) const;
};

CasimirMatrix casimir_matrix(const LieAlgebra& g);

struct CasimirCount {
    int n_I = 0;
    int rank = 0;
    CasimirMatrix matrix;
    std::vector<QVec> points;
};

CasimirCount casimir_count(const LieAlgebra& g, std::uint64_t seed = 20240611, int draws = 5);

struct Fingerprint {
    std::vector<int> ascending;
    std::vector<int> descending;
    std::array<int, 4> betti{};
    int n_d = 0;  // rational lower bound
    bool n_d_confirmed = false;
    int n_I = 0;
};

Fingerprint fingerprint(const LieAlgebra& g, const NdOptions& opts = {});

struct Separation {
    std::string field;   // "ascending", "descending", "betti", "n_d", "n_I"
    std::string detail;  // e.g. "b3: 13 vs 14"
};

// First differing field; n_d only counts when confirmed on both sides.
std::optional<Separation> distinguish(const Fingerprint& a, const Fingerprint& b);

nlohmann::json to_json(const Fingerprint& f);
nlohmann::json to_json(const NdReport& r);

}  // namespace nla
