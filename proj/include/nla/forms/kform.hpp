#pragma once

#include "nla/exactnum/gauss.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace nla {

using Mask = std::uint32_t;

// Lexicographic order on the increasing index tuples encoded by masks.
struct LexMaskLess {
    bool operator()(Mask a, Mask b) const;
};

std::vector<int> mask_indices(Mask m);
Mask indices_mask(const std::vector<int>& idx);
int popcount(Mask m);

// Homogeneous exterior form over an ambient of dimension <= 32 with
// coefficients in Q(i). Indices are 0-based internally.
class KForm {
public:
    using Terms = std::map<Mask, Gauss, LexMaskLess>;

    KForm() = default;
    KForm(int ambient, int degree);

    static KForm basis(int ambient, const std::vector<int>& idx, const Gauss& c = Gauss(1));
    static KForm one_form(int ambient, int i, const Gauss& c = Gauss(1)) { return basis(ambient, {i}, c); }
    static KForm constant(int ambient, const Gauss& c) { return basis(ambient, {}, c); }

    int ambient() const { return n_; }
    int degree() const { return k_; }
    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    Gauss coefficient(Mask m) const;
    // Coefficient of the monomial with these indices in any order (sign-adjusted).
    Gauss coefficient(const std::vector<int>& idx) const;
    void add_term(Mask m, const Gauss& c);

    KForm& operator+=(const KForm& o);
    KForm& operator-=(const KForm& o);
    friend KForm operator+(KForm a, const KForm& b) { return a += b; }
    friend KForm operator-(KForm a, const KForm& b) { return a -= b; }
    friend KForm operator-(const KForm& a);
    friend KForm operator*(const Gauss& c, const KForm& a);
    friend bool operator==(const KForm& a, const KForm& b) { return a.n_ == b.n_ && a.k_ == b.k_ && a.t_ == b.t_; }

    friend KForm wedge(const KForm& a, const KForm& b);

    // Apply a coefficient map and an index relabelling (with reordering sign).
    KForm relabel(const std::vector<int>& perm, const std::function<Gauss(const Gauss&)>& f) const;

    bool is_real() const;
    KForm real_part() const;
    KForm imag_part() const;

    // Evaluate on vectors given by coordinates in the dual basis.
    Gauss evaluate(const std::vector<std::vector<Gauss>>& vectors) const;

private:
    int n_ = 0;
    int k_ = 0;
    Terms t_;
};

// Sign of merging two disjoint index sets into increasing order.
int merge_sign(Mask a, Mask b);

// Substitute generators: generator j -> images[j] (a 1-form in the new ambient).
KForm substitute(const KForm& f, const std::vector<KForm>& images, int new_ambient);

// Plain rendering of index tuples: labels[i] names generator i.
std::string render_plain(const KForm& f, const std::string& prefix, const std::vector<std::string>& labels);
std::string render_tex(const KForm& f, const std::string& symbol, const std::vector<std::string>& labels);

// Labels "1".."n" for real bases.
std::vector<std::string> real_labels(int n);
// Labels "1".."n","~1".."~n" for complex frames (plain), "\bar{k}" in TeX.
std::vector<std::string> frame_labels_plain(int n);
std::vector<std::string> frame_labels_tex(int n);

std::string render_real(const KForm& f);               // e12+2e34
std::string render_frame(const KForm& f, int n);       // w1~3
std::string render_frame_tex(const KForm& f, int n);   // \omega^{1\bar{3}}

}  // namespace nla
