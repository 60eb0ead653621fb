#pragma once

#include "rodwave/catalog.hpp"
#include "rodwave/errors.hpp"

#include <cmath>

namespace rodwave::detail {

/// Double images of the exact material and small parameters.
struct Medium {
    double n1, beta1, alpha1, alpha2, delta, eps;

    /// delta n1^2 mu^2
    double dm(double mu) const { return delta * n1 * n1 * mu * mu; }
};

Medium medium(const FamilyInputs& in);

/// Principal square root of a real number, +0 imaginary part for r >= 0.
inline Complex csqrt(double r) { return r >= 0 ? Complex(std::sqrt(r), 0.0) : Complex(0.0, std::sqrt(-r)); }

// Elementary operations with pole detection, one set per scalar type.
struct ComplexOps {
    double floor;

    Complex tanh(Complex z) const
    {
        if (std::abs(std::cosh(z)) <= floor) throw DivisionNearPole("tanh pole");
        return std::tanh(z);
    }
    Complex sech(Complex z) const
    {
        const Complex c = std::cosh(z);
        if (std::abs(c) <= floor) throw DivisionNearPole("sech pole");
        return 1.0 / c;
    }
    Complex coth(Complex z) const
    {
        const Complex t = std::tanh(z);
        if (std::abs(t) <= floor) throw DivisionNearPole("coth pole");
        return 1.0 / t;
    }
    Complex csch(Complex z) const
    {
        const Complex s = std::sinh(z);
        if (std::abs(s) <= floor) throw DivisionNearPole("csch pole");
        return 1.0 / s;
    }
    Complex tan(Complex z) const
    {
        if (std::abs(std::cos(z)) <= floor) throw DivisionNearPole("tan pole");
        return std::tan(z);
    }
    Complex exp(Complex z) const { return std::exp(z); }
    Complex div(Complex a, Complex b) const
    {
        if (std::abs(b) <= floor) throw DivisionNearPole("vanishing denominator");
        return a / b;
    }
};

struct JetOps {
    double floor;

    Jet tanh(const Jet& a) const { return rodwave::tanh(a, floor); }
    Jet sech(const Jet& a) const { return rodwave::sech(a, floor); }
    Jet coth(const Jet& a) const { return rodwave::coth(a, floor); }
    Jet csch(const Jet& a) const { return rodwave::csch(a, floor); }
    Jet tan(const Jet& a) const { return rodwave::tan(a, floor); }
    Jet exp(const Jet& a) const { return rodwave::exp(a); }
    Jet div(const Jet& a, const Jet& b) const { return divide(a, b, floor); }
};

/// Value of a RATIONAL-variant family (the ansatz collapses to P1/Q1 = P0/Q0).
Complex constant_value(const CoefficientSet& cs);

/// COTH coefficients regrouped over coth(xi/2) (lp, hp) and tanh(xi/2) (lm, hm).
struct CothSplit {
    Complex lp, lm, hp, hm;
    bool pole_at_zero;  ///< lp or hp non-negligible
};

inline CothSplit coth_split(const CoefficientSet& cs)
{
    const Complex I(0.0, 1.0);
    CothSplit k{(cs.A1 + I * cs.B1) / 2.0, (cs.A1 - I * cs.B1) / 2.0, (cs.A2 + I * cs.B2) / 2.0,
                (cs.A2 - I * cs.B2) / 2.0, false};
    const double size = std::abs(cs.A1) + std::abs(cs.B1) + std::abs(cs.A2) + std::abs(cs.B2);
    k.pole_at_zero = std::abs(k.lp) + std::abs(k.hp) > 1e-12 * size;
    return k;
}

/// u(xi) assembled through the ansatz.
template <class T, class Ops>
T assemble(const CoefficientSet& cs, const T& xi, const Ops& op)
{
    const Complex I(0.0, 1.0);
    if (cs.id.method == Method::SineGordon) {
        if (cs.id.variant == Variant::Tanh) {
            const T c = op.tanh(xi);
            const T s = op.sech(xi);
            return cs.A0 + cs.A1 * c + cs.B1 * s + c * (cs.A2 * c + cs.B2 * s);
        }
        // coth +- csch = coth(xi/2), tanh(xi/2) and coth (coth +- csch) = 1 +- csch^2(xi/2)/2 (sign
        // matched), so the removable pole at xi = 0 never enters as a difference of large terms.
        const CothSplit k = coth_split(cs);
        const T h = 0.5 * xi;
        const T th = op.tanh(h);
        const T sh = op.sech(h);
        T u = cs.A0 + k.lm * th + k.hm * (1.0 - 0.5 * sh * sh);
        if (k.pole_at_zero) {
            const T ct = op.coth(h);
            const T ch = op.csch(h);
            u = u + k.lp * ct + k.hp * (1.0 + 0.5 * ch * ch);
        }
        return u;
    }

    const double tau = cs.tau;
    const double sigma = cs.sigma;
    T E;
    switch (cs.id.variant) {
    case Variant::Rational: return T(constant_value(cs));
    case Variant::Tanh: {
        const double r = std::sqrt(tau * tau - 4 * sigma);
        E = op.div(T(-2 * sigma), r * op.tanh(0.5 * r * (xi + cs.e)) + tau);
        break;
    }
    case Variant::Tan: {
        const double r = std::sqrt(4 * sigma - tau * tau);
        E = op.div(T(2 * sigma), r * op.tan(0.5 * r * (xi + cs.e)) - tau);
        break;
    }
    case Variant::Exp: E = op.div(T(tau), op.exp(tau * (xi + cs.e)) - 1.0); break;
    case Variant::Coth: throw UnknownFamily(to_string(cs.id));
    }
    const T num = cs.P[0] + E * (cs.P[1] + E * (cs.P[2] + E * cs.P[3]));
    return op.div(num, cs.Q0 + cs.Q1 * E);
}

/// The printed closed form; defined in catalog_printed.cpp for (Complex, ComplexOps)
/// and (Jet, JetOps).
template <class T, class Ops>
T printed(const CoefficientSet& cs, const Medium& m, const FamilyInputs& in, const T& xi, const Ops& op);

}  // namespace rodwave::detail
