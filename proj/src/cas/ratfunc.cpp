#include "rodwave/cas/ratfunc.hpp"

#include "rodwave/errors.hpp"

#include <cctype>
#include <stdexcept>

namespace rodwave::cas {

RatFunc::RatFunc(MPoly n, MPoly d) : num(std::move(n)), den(std::move(d))
{
    if (den.is_zero()) throw DegenerateDenominator("rational function with zero denominator");
    if (den.is_constant()) {
        const Rational c = den.constant();
        num *= MPoly(Rational(1) / c);
        den = MPoly(1L);
    }
}

RatFunc operator+(const RatFunc& a, const RatFunc& b)
{
    if (a.den == b.den) return RatFunc(a.num + b.num, a.den);
    return RatFunc(a.num * b.den + b.num * a.den, a.den * b.den);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num * b.num, a.den * b.den); }

RatFunc operator/(const RatFunc& a, const RatFunc& b)
{
    if (b.num.is_zero()) throw DegenerateDenominator("division by the zero polynomial");
    return RatFunc(a.num * b.den, a.den * b.num);
}

RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num, a.den); }

RatFunc RatFunc::pow(int k) const
{
    if (k >= 0) return RatFunc(num.pow(static_cast<unsigned>(k)), den.pow(static_cast<unsigned>(k)));
    return RatFunc(den, num).pow(-k);
}

std::string RatFunc::to_string() const
{
    if (den == MPoly(1L)) return num.to_string();
    return "(" + num.to_string() + ")/(" + den.to_string() + ")";
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    RatFunc parse()
    {
        RatFunc r = sum();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return r;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const
    {
        throw std::invalid_argument(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    RatFunc sum()
    {
        RatFunc r = product();
        for (;;) {
            if (eat('+'))
                r = r + product();
            else if (eat('-'))
                r = r - product();
            else
                return r;
        }
    }

    RatFunc product()
    {
        RatFunc r = unary();
        for (;;) {
            if (eat('*'))
                r = r * unary();
            else if (eat('/'))
                r = r / unary();
            else
                return r;
        }
    }

    RatFunc unary()
    {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    RatFunc power()
    {
        RatFunc base = atom();
        if (!eat('^')) return base;
        skip();
        bool neg = eat('-');
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer exponent");
        const int k = std::stoi(std::string(s_.substr(start, pos_ - start)));
        return base.pow(neg ? -k : k);
    }

    RatFunc atom()
    {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        if (eat('(')) {
            RatFunc r = sum();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
            return RatFunc(MPoly(parse_rational(s_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            return RatFunc(MPoly::var(s_.substr(start, pos_ - start)));
        }
        fail("unexpected character");
    }
};

// p(v = n/d) * d^k with k = deg_v p, as a polynomial.
MPoly cleared(const MPoly& p, Var v, const MPoly& n, const MPoly& d, int k, int step)
{
    std::vector<MPoly> np{MPoly(1L)}, dp{MPoly(1L)};
    for (int j = 1; j <= k; ++j) {
        np.push_back(np.back() * n);
        dp.push_back(dp.back() * d);
    }
    MPoly out;
    for (int j = 0; j <= k; ++j) {
        const MPoly c = p.coefficient(v, j * step);
        if (c.is_zero()) continue;
        out += c * np[static_cast<std::size_t>(j)] * dp[static_cast<std::size_t>(k - j)];
    }
    return out;
}

RatFunc substitute_impl(const RatFunc& f, Var v, const RatFunc& value, int step)
{
    if (step == 2)
        for (const MPoly* p : {&f.num, &f.den})
            for (const auto& [m, c] : p->terms())
                if (v < static_cast<int>(m.size()) && m[v] % 2)
                    throw std::invalid_argument(symbol_name(v) + " occurs to an odd power");
    const int kn = f.num.degree(v) / step, kd = f.den.degree(v) / step;
    if (kn == 0 && kd == 0) return f;
    const MPoly N = cleared(f.num, v, value.num, value.den, kn, step);
    const MPoly D = cleared(f.den, v, value.num, value.den, kd, step);
    // num/den = (N / d^kn) / (D / d^kd)
    if (kn >= kd) return RatFunc(N, D * value.den.pow(static_cast<unsigned>(kn - kd)));
    return RatFunc(N * value.den.pow(static_cast<unsigned>(kd - kn)), D);
}

}  // namespace

RatFunc parse_expression(std::string_view text) { return Parser(text).parse(); }

RatFunc substitute(const RatFunc& f, Var v, const RatFunc& value) { return substitute_impl(f, v, value, 1); }

RatFunc substitute_square(const RatFunc& f, Var v, const RatFunc& square)
{
    return substitute_impl(f, v, square, 2);
}

}  // namespace rodwave::cas
