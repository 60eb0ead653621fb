#pragma once

#include "rodwave/cas/mpoly.hpp"

#include <vector>

namespace rodwave::cas {

/// Dense polynomial in one indeterminate with MPoly coefficients (constant MPolys give
/// the plain rational case). Trailing zero coefficients are trimmed; the zero polynomial is empty.
class Poly {
public:
    Poly() = default;
    Poly(std::vector<MPoly> coeffs);
    static Poly constant(MPoly c) { return Poly({std::move(c)}); }
    /// The indeterminate itself.
    static Poly x();

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    /// Coefficient of x^k, zero beyond the degree.
    MPoly operator[](int k) const;
    const std::vector<MPoly>& coefficients() const { return c_; }

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const MPoly& k, const Poly& a);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Poly derivative() const;
    /// Value at x with every coefficient constant.
    double evaluate(double x) const;

private:
    std::vector<MPoly> c_;
    void trim();
};

/// A(c) + s B(c) with c = cos w, s = sin w, s^2 = 1 - c^2, w' = sin w.
struct TrigElement {
    Poly A, B;

    friend TrigElement operator+(const TrigElement& a, const TrigElement& b) { return {a.A + b.A, a.B + b.B}; }
    friend TrigElement operator-(const TrigElement& a, const TrigElement& b) { return {a.A - b.A, a.B - b.B}; }
    friend TrigElement operator*(const TrigElement& a, const TrigElement& b);
    friend bool operator==(const TrigElement& a, const TrigElement& b) { return a.A == b.A && a.B == b.B; }

    /// d/dxi [A + sB] = -(1 - c^2) A'(c) + s [c B(c) - (1 - c^2) B'(c)].
    TrigElement derivative() const;
    double evaluate(double c, double s) const { return A.evaluate(c) + s * B.evaluate(c); }
};

/// P(E) / Q(E) with E = exp(-phi), E' = -(E^2 + tau E + sigma).
struct EElement {
    Poly P, Q;
    MPoly tau, sigma;

    /// -(E^2 + tau E + sigma)
    Poly flow() const;

    friend EElement operator+(const EElement& a, const EElement& b);
    friend EElement operator*(const EElement& a, const EElement& b);
    /// Cross-multiplied equality P_a Q_b = P_b Q_a.
    bool same_as(const EElement& o) const;

    /// (P/Q)' = F (P_E Q - P Q_E) / Q^2.
    EElement derivative() const;
    double evaluate(double E) const { return P.evaluate(E) / Q.evaluate(E); }
};

}  // namespace rodwave::cas
