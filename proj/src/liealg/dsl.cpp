#include "nla/liealg/dsl.hpp"

#include <cctype>
#include <tuple>
#include <vector>

namespace nla {

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    LieAlgebra run(std::string name) {
        expect('(', "'('");
        std::vector<std::vector<std::tuple<int, int, Rational, std::size_t>>> terms;
        while (true) {
            if (terms.size() == 9) throw ParseError(pos(), "')' (at most 9 generators)");
            terms.push_back(term());
            skip();
            if (peek() == ',') { ++i_; continue; }
            expect(')', "',' or ')'");
            break;
        }
        skip();
        if (i_ != s_.size()) throw ParseError(i_, "end of input");
        const int n = static_cast<int>(terms.size());
        std::vector<KForm> d;
        for (int k = 0; k < n; ++k) {
            KForm f(n, 2);
            for (const auto& [a, b, c, at] : terms[static_cast<std::size_t>(k)]) {
                if (a > n || b > n) throw ParseError(at, "generator index <= " + std::to_string(n));
                f += KForm::basis(n, {a - 1, b - 1}, Gauss(c));
            }
            d.push_back(std::move(f));
        }
        return LieAlgebra::from_equations(StructureEquations(std::move(d)), std::move(name));
    }

private:
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    char peek() {
        skip();
        return i_ < s_.size() ? s_[i_] : '\0';
    }
    std::size_t pos() {
        skip();
        return i_;
    }
    void expect(char c, const char* what) {
        if (peek() != c) throw ParseError(i_, what);
        ++i_;
    }
    std::string digits() {
        std::string out;
        skip();
        while (i_ < s_.size()) {
            char c = s_[i_];
            if (std::isdigit(static_cast<unsigned char>(c))) { out.push_back(c); ++i_; }
            else if (std::isspace(static_cast<unsigned char>(c))) { ++i_; }
            else break;
        }
        return out;
    }

    std::vector<std::tuple<int, int, Rational, std::size_t>> term() {
        std::vector<std::tuple<int, int, Rational, std::size_t>> out;
        if (peek() == '0') {
            std::size_t save = i_;
            ++i_;
            char nx = peek();
            if (nx == ',' || nx == ')') return out;
            i_ = save;
        }
        bool neg = false;
        if (peek() == '-') { neg = true; ++i_; }
        else if (peek() == '+') throw ParseError(i_, "summand");
        out.push_back(summand(neg));
        while (peek() == '+' || peek() == '-') {
            bool n = s_[i_] == '-';
            ++i_;
            out.push_back(summand(n));
        }
        return out;
    }

    std::tuple<int, int, Rational, std::size_t> summand(bool neg) {
        std::size_t at = pos();
        std::string a = digits();
        if (a.empty()) throw ParseError(at, "summand");
        Rational coeff(1);
        std::string idx = a;
        if (peek() == '/' || peek() == '.') {
            mpz_class num(a), den(1);
            if (peek() == '/') {
                ++i_;
                std::size_t dp = pos();
                std::string b = digits();
                if (b.empty()) throw ParseError(dp, "positive integer denominator");
                den = mpz_class(b);
                if (den == 0) throw ParseError(dp, "positive integer denominator");
            }
            expect('.', "'.'");
            coeff = Rational(mpq_class(num, den));
            at = pos();
            idx = digits();
        }
        if (idx.size() != 2) throw ParseError(at, "two generator digits");
        int p = idx[0] - '0', q = idx[1] - '0';
        if (p == 0 || q == 0) throw ParseError(at, "generator digits 1-9");
        if (p == q) throw ParseError(at, "distinct generator digits");
        if (neg) coeff = -coeff;
        return {p, q, coeff, at};
    }

    std::string_view s_;
    std::size_t i_ = 0;
};

}  // namespace

LieAlgebra parse_algebra(std::string_view text, std::string name) { return Parser(text).run(std::move(name)); }

std::string render_algebra(const LieAlgebra& g) {
    const int n = g.dim();
    if (n > 9) throw AmbientMismatch("notation supports at most 9 generators");
    std::string out = "(";
    for (int k = 0; k < n; ++k) {
        if (k) out += ",";
        std::string t;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const Rational& c = g.c(k, i, j);
                if (c.is_zero()) continue;
                if (c.sign() < 0) t += "-";
                else if (!t.empty()) t += "+";
                Rational a = c.abs();
                if (a != Rational(1)) t += a.str() + ".";
                t += std::to_string(i + 1) + std::to_string(j + 1);
            }
        out += t.empty() ? "0" : t;
    }
    return out + ")";
}

}  // namespace nla
