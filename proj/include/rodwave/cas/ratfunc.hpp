#pragma once

#include "rodwave/cas/mpoly.hpp"

#include <string_view>

namespace rodwave::cas {

/// num / den with no common-factor cancellation. The denominator is never the zero polynomial.
struct RatFunc {
    MPoly num;
    MPoly den{1L};

    RatFunc() = default;
    RatFunc(MPoly n) : num(std::move(n)) {}
    RatFunc(MPoly n, MPoly d);

    bool is_zero() const { return num.is_zero(); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    /// Throws DegenerateDenominator when b is identically zero.
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a);
    RatFunc pow(int k) const;

    double evaluate(const std::map<Var, double>& at) const { return num.evaluate(at) / den.evaluate(at); }
    std::string to_string() const;
};

/// Parses + - * / ^ (integer exponents), parentheses, decimal or integer literals and
/// identifiers ([A-Za-z_][A-Za-z0-9_]*). Throws std::invalid_argument with the offset.
RatFunc parse_expression(std::string_view text);

/// Substitutes v := value in f. The result's denominator is a product of the inputs'.
RatFunc substitute(const RatFunc& f, Var v, const RatFunc& value);
/// Substitutes v^2 := square; throws std::invalid_argument if v occurs to an odd power.
RatFunc substitute_square(const RatFunc& f, Var v, const RatFunc& square);

}  // namespace rodwave::cas
