#pragma once

#include "rodwave/rational.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace rodwave::cas {

/// Interned symbol index. The table is process-wide and append-only.
using Var = int;

Var symbol(std::string_view name);
const std::string& symbol_name(Var v);

/// Exponent vector indexed by Var, trailing zeros trimmed.
using Monomial = std::vector<int>;

/// Sparse multivariate polynomial with exact rational coefficients. No stored zero terms.
class MPoly {
public:
    MPoly() = default;
    MPoly(long c);
    MPoly(const Rational& c);
    static MPoly var(Var v, int power = 1);
    static MPoly var(std::string_view name, int power = 1) { return var(symbol(name), power); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term value; throws std::logic_error unless is_constant().
    Rational constant() const;
    int degree(Var v) const;
    int total_degree() const;
    /// Coefficient of v^k, free of v.
    MPoly coefficient(Var v, int k) const;
    /// Symbols occurring with non-zero exponent, ascending.
    std::vector<Var> variables() const;
    bool contains(Var v) const { return degree(v) > 0; }
    std::size_t size() const { return terms_.size(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    void add_term(Monomial m, const Rational& c);

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator-(const MPoly& a);
    friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

    MPoly pow(unsigned k) const;
    /// Partial derivative.
    MPoly diff(Var v) const;

    /// Numeric value; every occurring symbol must be bound.
    double evaluate(const std::map<Var, double>& at) const;

    /// Human-readable form such as "2*A0^2*mu - 1/3".
    std::string to_string() const;

private:
    std::map<Monomial, Rational> terms_;
};

/// Replaces s^2 by `square` until s occurs at most linearly.
MPoly reduce_radical(const MPoly& p, Var s, const MPoly& square);

}  // namespace rodwave::cas
