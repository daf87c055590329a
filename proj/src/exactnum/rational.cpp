#include "nla/exactnum/rational.hpp"
#include "nla/exactnum/gauss.hpp"
#include "nla/errors.hpp"

#include <cctype>

namespace nla {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return Rational(mpq_class(1 / v_));
}

std::optional<Rational> Rational::sqrt() const {
    if (sign() < 0) return std::nullopt;
    mpz_class n = num(), d = den();
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    if (rn * rn != n || rd * rd != d) return std::nullopt;
    return Rational(mpq_class(rn, rd));
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    std::string_view s = text;
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    auto slash = s.find('/');
    std::string_view ns = s.substr(0, slash);
    std::string_view ds = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!all_digits(ns)) throw ParseError(0, "integer in '" + std::string(text) + "'");
    if (!all_digits(ds)) throw ParseError(slash + 1, "positive integer denominator");
    mpz_class n{std::string(ns)}, d{std::string(ds)};
    if (d == 0) throw ParseError(slash + 1, "nonzero denominator");
    mpq_class q(n, d);
    q.canonicalize();
    if (neg) q = -q;
    return Rational(q);
}

Gauss& Gauss::operator*=(const Gauss& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

Gauss Gauss::inverse() const {
    Rational n = norm();
    if (n.is_zero()) throw std::domain_error("inverse of zero");
    return Gauss(re_ / n, -im_ / n);
}

std::optional<Gauss> Gauss::sqrt() const {
    auto m = abs();
    if (!m) return std::nullopt;
    auto x = ((*m + re_) / 2).sqrt();
    auto y = ((*m - re_) / 2).sqrt();
    if (!x || !y) return std::nullopt;
    Rational yy = *y;
    if (im_.sign() < 0) yy = -yy;
    Gauss w(*x, yy);
    if (!(w * w == *this)) return std::nullopt;
    return w;
}

std::string Gauss::str() const {
    if (im_.is_zero()) return re_.str();
    std::string imag;
    if (im_ == Rational(1)) imag = "i";
    else if (im_ == Rational(-1)) imag = "-i";
    else imag = im_.str() + "i";
    if (re_.is_zero()) return imag;
    return re_.str() + (im_.sign() > 0 ? "+" : "") + imag;
}

Gauss Gauss::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError(0, "complex number");
    Gauss total;
    std::size_t pos = 0;
    bool first = true;
    while (pos < s.size()) {
        bool neg = false;
        if (s[pos] == '+' || s[pos] == '-') {
            neg = s[pos] == '-';
            ++pos;
        } else if (!first) {
            throw ParseError(pos, "'+' or '-'");
        }
        std::size_t end = pos;
        while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
        std::string_view tok(s.data() + pos, end - pos);
        if (tok.empty()) throw ParseError(pos, "number");
        Gauss term;
        if (tok.back() == 'i' || tok.back() == 'I') {
            std::string_view mag = tok.substr(0, tok.size() - 1);
            if (!mag.empty() && mag.back() == '*') mag.remove_suffix(1);
            Rational r = mag.empty() ? Rational(1) : Rational::parse(mag);
            term = Gauss(Rational(0), r);
        } else {
            term = Gauss(Rational::parse(tok));
        }
        total += neg ? -term : term;
        pos = end;
        first = false;
    }
    return total;
}

}  // namespace nla
