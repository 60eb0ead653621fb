// Closed forms exactly as printed, including their known slips. Used only to report
// how far each printed form is from the assembled solution.
#include "catalog_detail.hpp"

namespace rodwave::detail {

namespace {

template <class T, class Ops>
T sine_gordon_printed(const CoefficientSet& cs, const Medium& m, double mu, const T& xi, const Ops& op)
{
    const Complex I(0.0, 1.0);
    const double dm = m.dm(mu);
    const double ab = m.alpha1 * m.beta1;
    const double k = dm / (m.alpha2 * m.beta1 * m.eps);
    const bool hyp = cs.id.variant == Variant::Tanh;
    const T c = hyp ? op.tanh(xi) : op.coth(xi);
    const T s = hyp ? op.sech(xi) : op.csch(xi);
    const T c2 = c * c;

    switch (cs.id.case_no) {
    case 1: return dm * (ab - 1) / (6 * m.alpha2 * m.beta1 * m.eps * (0.5 + dm)) * (c2 - 1.0);
    case 2: return -dm * (ab - 1) / (m.alpha2 * m.beta1 * m.eps * (-1 + 2 * dm)) * (c2 - 1.0);
    case 3:
        if (hyp) return k * (ab - 1) * (1.0 - c2 + I * c * s) / (-2 + dm);
        return -k * (ab - 1) * (1.0 - c2 + c * s) / (-2 + dm);
    case 4:
        if (hyp) return -k * (ab - 1) * (c2 + I * c * s - 1.0) / (-2 + dm);
        return -k * (ab - 1) * (c2 - c * s - 1.0) / (-2 + dm);
    case 5:
        if (hyp) return k * (ab - 1) * (c2 + I * c * s - 2.0 / 3) / (2 + dm);
        return k / 3 * (ab - 1) * (3.0 * c2 - 3.0 * c * s - 2.0) / (2 + dm);
    case 6:
        if (hyp) return -k * (ab - 1) * (-1.0 * c2 + I * c * s + 2.0 / 3) / (2 + dm);
        return k / 3 * (ab - 1) * (3.0 * c2 + 3.0 * c * s - 2.0) / (2 + dm);
    default: throw UnknownFamily(to_string(cs.id));
    }
}

template <class T, class Ops>
T mefm_printed(const CoefficientSet& cs, const Medium& m, const FamilyInputs& in, const T& xi, const Ops& op)
{
    const double tau = cs.tau, sigma = cs.sigma, e = cs.e;
    const double D = tau * tau - 4 * sigma;
    const double ab = m.alpha1 * m.beta1;
    const double ae = m.alpha2 * m.eps;
    const double abe = m.alpha2 * m.beta1 * m.eps;
    const double Q0 = in.q0, Q1 = in.q1;
    const double L = std::real(cs.lambda * cs.lambda) - m.alpha1;
    const int n = cs.id.case_no;
    const Variant v = cs.id.variant;

    if (n == 15) return T(-L / (3 * ae));

    if (n == 7 || n == 8) {
        const double pref = 2 * sigma * L / (ae * D);
        const double q = tau * Q0 - 2 * sigma * Q1;
        if (v == Variant::Tanh) {
            const double r = std::sqrt(D);
            const T th = op.tanh(0.5 * r * (xi + e));
            const T lin = r * th + tau;
            const T den = lin * lin * (Q0 * r * th + q);
            if (n == 7) return pref * op.div((Q0 * D * r * th + D * q) * (th * th - 1.0), den);
            const T body = (1.0 / 3) * D * r *
                               (Q0 * (tau * tau + 2 * sigma) * th * th - 6 * Q0 * sigma + 3 * Q0 * tau * tau -
                                4 * Q1 * sigma * tau) *
                               th +
                           D * ((Q0 * tau * tau * tau - 2.0 / 3 * Q1 * tau * tau * sigma - 2 * Q0 * sigma * tau -
                                 4.0 / 3 * Q1 * sigma * sigma) *
                                    th * th +
                                (1.0 / 3) * (tau * tau - 6 * sigma) * q);
            return -L / (ae * D) * op.div(body, den);
        }
        const double r = std::sqrt(-D);
        const T tn = op.tan(0.5 * r * (xi + e));
        const T lin = r * tn + tau;
        const T den = lin * lin * (Q0 * r * tn + q);
        if (n == 7) {
            const T num = -Q0 * r * r * r * tn * tn * tn + (Q0 * r * tn + (tn * tn + 1.0) * q) * D;
            return -pref * op.div(num, den);
        }
        const T body = -(1.0 / 3) * r * r * r * (tau * tau + 2 * sigma) * tn * tn * tn +
                       D * ((Q0 * tau * tau - 4.0 / 3 * Q1 * tau * sigma - 2 * Q0 * sigma) * r * tn) +
                       D * ((Q0 * tau * tau * tau - 2.0 / 3 * Q1 * tau * tau * sigma - 2 * Q0 * tau * sigma -
                             4.0 / 3 * Q1 * sigma * sigma) *
                                tn * tn -
                            (1.0 / 3) * (tau * tau - 6 * sigma) * q);
        return -L / (ae * D) * op.div(body, den);
    }

    if (n == 9 || n == 10) {
        const double dm = m.dm(in.mu);
        const double G = 2 + dm * D;
        const double pre = dm * (ab - 1) / (3 * abe * G);
        if (v == Variant::Rational) return T(pre * D);
        const double r = std::sqrt(D);
        const T th = op.tanh(0.5 * r * xi);
        const double t4 = tau * tau * tau * tau;
        if (n == 9) {
            const double g = tau * tau + r * tau - 4 * sigma;
            return pre * op.div((t4 - 8 * tau * tau * sigma + D * r * tau + 16 * sigma * sigma) * th + D * g,
                                (th + 1.0) * g);
        }
        const double g = tau * tau - r * tau - 4 * sigma;
        return -pre * op.div((-t4 + 8 * tau * tau * sigma + D * r * tau - 16 * sigma * sigma) * th + D * g,
                             (th - 1.0) * g);
    }

    if (n == 11 || n == 12) {
        const T arg_lin = cs.id.variant == Variant::Tanh ? T(0.5 * std::sqrt(D) * xi + e)
                                                         : T(0.5 * std::sqrt(-D) * xi + e);
        const T g = cs.id.variant == Variant::Tanh
                        ? -(std::sqrt(D) / (2 * sigma)) * op.tanh(arg_lin) - tau / (2 * sigma)
                        : -(std::sqrt(-D) / (2 * sigma)) * op.tan(arg_lin) - tau / (2 * sigma);
        const T E = op.div(T(1.0), g);
        return op.div(cs.P[0] + cs.P[1] * E, Q0 + Q1 * E);
    }

    const double dm = m.dm(in.mu);
    const T X = op.exp(tau * (xi + e));
    const T Xm = X - 1.0;
    if (n == 13) return -2 * dm * tau * tau * (ab - 1) / (abe * (dm * tau * tau - 2)) * op.div(X, Xm * Xm);
    if (n == 14)
        return (ab - 1) * dm * tau * tau / (3 * abe * (dm * tau * tau + 2)) * op.div(X * X + 4.0 * X + 1.0, Xm * Xm);
    throw UnknownFamily(to_string(cs.id));
}

}  // namespace

template <class T, class Ops>
T printed(const CoefficientSet& cs, const Medium& m, const FamilyInputs& in, const T& xi, const Ops& op)
{
    if (cs.id.method == Method::SineGordon) return sine_gordon_printed(cs, m, in.mu, xi, op);
    return mefm_printed(cs, m, in, xi, op);
}

template Complex printed<Complex, ComplexOps>(const CoefficientSet&, const Medium&, const FamilyInputs&,
                                              const Complex&, const ComplexOps&);
template Jet printed<Jet, JetOps>(const CoefficientSet&, const Medium&, const FamilyInputs&, const Jet&,
                                  const JetOps&);

}  // namespace rodwave::detail
