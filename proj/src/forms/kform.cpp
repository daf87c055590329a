#include "nla/forms/kform.hpp"
#include "nla/errors.hpp"
#include "nla/exactnum/matrix.hpp"

#include <bit>
#include <sstream>

namespace nla {

int popcount(Mask m) { return std::popcount(m); }

std::vector<int> mask_indices(Mask m) {
    std::vector<int> out;
    while (m) {
        int i = std::countr_zero(m);
        out.push_back(i);
        m &= m - 1;
    }
    return out;
}

Mask indices_mask(const std::vector<int>& idx) {
    Mask m = 0;
    for (int i : idx) m |= Mask(1) << i;
    return m;
}

bool LexMaskLess::operator()(Mask a, Mask b) const {
    while (a && b) {
        int ia = std::countr_zero(a), ib = std::countr_zero(b);
        if (ia != ib) return ia < ib;
        a &= a - 1;
        b &= b - 1;
    }
    return !a && b;
}

int merge_sign(Mask a, Mask b) {
    int inversions = 0;
    Mask bb = b;
    while (bb) {
        int j = std::countr_zero(bb);
        bb &= bb - 1;
        inversions += std::popcount(a >> (j + 1));
    }
    return (inversions & 1) ? -1 : 1;
}

KForm::KForm(int ambient, int degree) : n_(ambient), k_(degree) {
    if (ambient < 0 || ambient > 32 || degree < 0)
        throw AmbientMismatch("form of degree " + std::to_string(degree) + " on ambient " + std::to_string(ambient));
}

KForm KForm::basis(int ambient, const std::vector<int>& idx, const Gauss& c) {
    KForm f(ambient, static_cast<int>(idx.size()));
    Mask m = 0;
    int sign = 1;
    for (int i : idx) {
        if (i < 0 || i >= ambient) throw AmbientMismatch("index " + std::to_string(i) + " out of range");
        Mask bit = Mask(1) << i;
        if (m & bit) return f;
        sign *= merge_sign(m, bit);
        m |= bit;
    }
    f.add_term(m, sign < 0 ? -c : c);
    return f;
}

Gauss KForm::coefficient(Mask m) const {
    auto it = t_.find(m);
    return it == t_.end() ? Gauss() : it->second;
}

Gauss KForm::coefficient(const std::vector<int>& idx) const {
    auto b = basis(n_, idx);
    if (b.is_zero()) return Gauss();
    const auto& [m, s] = *b.t_.begin();
    return s * coefficient(m);
}

void KForm::add_term(Mask m, const Gauss& c) {
    if (popcount(m) != k_) throw AmbientMismatch("term degree mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = t_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

KForm& KForm::operator+=(const KForm& o) {
    if (o.n_ != n_ || o.k_ != k_) throw AmbientMismatch("adding forms of different shape");
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
}

KForm& KForm::operator-=(const KForm& o) {
    if (o.n_ != n_ || o.k_ != k_) throw AmbientMismatch("subtracting forms of different shape");
    for (const auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
}

KForm operator-(const KForm& a) {
    KForm r(a.n_, a.k_);
    for (const auto& [m, c] : a.t_) r.t_.emplace(m, -c);
    return r;
}

KForm operator*(const Gauss& s, const KForm& a) {
    KForm r(a.n_, a.k_);
    if (s.is_zero()) return r;
    for (const auto& [m, c] : a.t_) r.t_.emplace(m, s * c);
    return r;
}

KForm wedge(const KForm& a, const KForm& b) {
    if (a.n_ != b.n_) throw AmbientMismatch("wedge of forms on different ambients");
    if (a.k_ + b.k_ > a.n_) return KForm(a.n_, a.n_);
    KForm r(a.n_, a.k_ + b.k_);
    for (const auto& [ma, ca] : a.t_)
        for (const auto& [mb, cb] : b.t_) {
            if (ma & mb) continue;
            Gauss c = ca * cb;
            r.add_term(ma | mb, merge_sign(ma, mb) < 0 ? -c : c);
        }
    return r;
}

KForm KForm::relabel(const std::vector<int>& perm, const std::function<Gauss(const Gauss&)>& f) const {
    KForm r(n_, k_);
    for (const auto& [m, c] : t_) {
        std::vector<int> idx;
        for (int i : mask_indices(m)) idx.push_back(perm.at(static_cast<std::size_t>(i)));
        r += basis(n_, idx, f(c));
    }
    return r;
}

bool KForm::is_real() const {
    for (const auto& [m, c] : t_)
        if (!c.is_real()) return false;
    return true;
}

KForm KForm::real_part() const {
    KForm r(n_, k_);
    for (const auto& [m, c] : t_) r.add_term(m, Gauss(c.re()));
    return r;
}

KForm KForm::imag_part() const {
    KForm r(n_, k_);
    for (const auto& [m, c] : t_) r.add_term(m, Gauss(c.im()));
    return r;
}

Gauss KForm::evaluate(const std::vector<std::vector<Gauss>>& vectors) const {
    const auto k = static_cast<std::size_t>(k_);
    if (vectors.size() != k) throw AmbientMismatch("wrong number of arguments");
    Gauss total;
    for (const auto& [m, c] : t_) {
        auto idx = mask_indices(m);
        Matrix minor(k, k);
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b) minor(a, b) = vectors[b].at(static_cast<std::size_t>(idx[a]));
        total += c * determinant(minor);
    }
    return total;
}

KForm substitute(const KForm& f, const std::vector<KForm>& images, int new_ambient) {
    if (static_cast<int>(images.size()) != f.ambient()) throw AmbientMismatch("substitution needs one image per generator");
    KForm out(new_ambient, f.degree());
    for (const auto& [m, c] : f.terms()) {
        KForm acc = KForm::constant(new_ambient, c);
        for (int i : mask_indices(m)) {
            acc = wedge(acc, images[static_cast<std::size_t>(i)]);
            if (acc.is_zero()) break;
        }
        if (!acc.is_zero()) out += acc;
    }
    return out;
}

namespace {

std::string coeff_prefix(const Gauss& c, bool first) {
    std::string s;
    if (c.is_real()) {
        const Rational& r = c.re();
        if (r.sign() < 0) s += "-";
        else if (!first) s += "+";
        Rational a = r.abs();
        if (a != Rational(1)) s += a.str() + "*";
        return s;
    }
    if (c.re().is_zero()) {
        const Rational& r = c.im();
        if (r.sign() < 0) s += "-";
        else if (!first) s += "+";
        Rational a = r.abs();
        s += (a == Rational(1) ? std::string("i") : a.str() + "i") + "*";
        return s;
    }
    if (!first) s += "+";
    return s + "(" + c.str() + ")*";
}

std::string coeff_prefix_tex(const Gauss& c, bool first) {
    auto frac = [](const Rational& r) {
        if (r.is_integer()) return r.str();
        return "\\tfrac{" + r.num().get_str() + "}{" + r.den().get_str() + "}";
    };
    std::string s;
    auto real_like = [&](const Rational& r, const std::string& unit) {
        if (r.sign() < 0) s += "-";
        else if (!first) s += "+";
        Rational a = r.abs();
        if (a != Rational(1) || !unit.empty()) s += (a == Rational(1) ? std::string() : frac(a)) + unit;
    };
    if (c.is_real()) real_like(c.re(), "");
    else if (c.re().is_zero()) real_like(c.im(), "i");
    else {
        if (!first) s += "+";
        s += "(" + frac(c.re()) + (c.im().sign() > 0 ? "+" : "-") +
             (c.im().abs() == Rational(1) ? std::string() : frac(c.im().abs())) + "i)";
    }
    return s;
}

}  // namespace

std::string render_plain(const KForm& f, const std::string& prefix, const std::vector<std::string>& labels) {
    if (f.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        s += coeff_prefix(c, first);
        s += prefix;
        for (int i : mask_indices(m)) s += labels.at(static_cast<std::size_t>(i));
        first = false;
    }
    return s;
}

std::string render_tex(const KForm& f, const std::string& symbol, const std::vector<std::string>& labels) {
    if (f.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        s += coeff_prefix_tex(c, first);
        s += symbol + "^{";
        for (int i : mask_indices(m)) s += labels.at(static_cast<std::size_t>(i));
        s += "}";
        first = false;
    }
    return s;
}

std::vector<std::string> real_labels(int n) {
    std::vector<std::string> l;
    for (int i = 1; i <= n; ++i) l.push_back(std::to_string(i));
    return l;
}

std::vector<std::string> frame_labels_plain(int n) {
    auto l = real_labels(n);
    for (int i = 1; i <= n; ++i) l.push_back("~" + std::to_string(i));
    return l;
}

std::vector<std::string> frame_labels_tex(int n) {
    auto l = real_labels(n);
    for (int i = 1; i <= n; ++i) l.push_back("\\bar{" + std::to_string(i) + "}");
    return l;
}

std::string render_real(const KForm& f) { return render_plain(f, "e", real_labels(f.ambient())); }
std::string render_frame(const KForm& f, int n) { return render_plain(f, "w", frame_labels_plain(n)); }
std::string render_frame_tex(const KForm& f, int n) { return render_tex(f, "\\omega", frame_labels_tex(n)); }

}  // namespace nla
