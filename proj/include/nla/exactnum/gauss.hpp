#pragma once

#include "nla/exactnum/rational.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace nla {

// Element re + im*i of Q(i).
class Gauss {
public:
    Gauss() = default;
    Gauss(int v) : re_(v) {}
    Gauss(long v) : re_(v) {}
    Gauss(Rational re) : re_(std::move(re)) {}
    Gauss(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Gauss i() { return Gauss(Rational(0), Rational(1)); }

    // Accepts forms such as "3", "-1/2", "i", "-2i", "1/2+3/4i", "1-i".
    static Gauss parse(std::string_view text);

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }
    Gauss conj() const { return Gauss(re_, -im_); }
    Rational norm() const { return re_ * re_ + im_ * im_; }
    Gauss inverse() const;

    // Principal square root inside Q(i), if one exists.
    std::optional<Gauss> sqrt() const;
    // |z| when it is rational.
    std::optional<Rational> abs() const { return norm().sqrt(); }

    std::string str() const;

    Gauss& operator+=(const Gauss& o) { re_ += o.re_; im_ += o.im_; return *this; }
    Gauss& operator-=(const Gauss& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    Gauss& operator*=(const Gauss& o);
    Gauss& operator/=(const Gauss& o) { return *this *= o.inverse(); }

    friend Gauss operator+(Gauss a, const Gauss& b) { return a += b; }
    friend Gauss operator-(Gauss a, const Gauss& b) { return a -= b; }
    friend Gauss operator*(Gauss a, const Gauss& b) { return a *= b; }
    friend Gauss operator/(Gauss a, const Gauss& b) { return a /= b; }
    friend Gauss operator-(const Gauss& a) { return Gauss(-a.re_, -a.im_); }

    friend bool operator==(const Gauss& a, const Gauss& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

    friend std::ostream& operator<<(std::ostream& os, const Gauss& g) { return os << g.str(); }

private:
    Rational re_;
    Rational im_;
};

inline bool is_zero(const Gauss& g) { return g.is_zero(); }
inline Gauss conj(const Gauss& g) { return g.conj(); }

}  // namespace nla
