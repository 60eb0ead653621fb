#include "rodwave/catalog.hpp"

#include "catalog_detail.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace rodwave {

using detail::csqrt;
using detail::Medium;

namespace detail {

Medium medium(const FamilyInputs& in)
{
    const auto& d = in.material;
    return {to_double(d.n1), to_double(d.beta1), to_double(d.alpha1), to_double(d.alpha2),
            to_double(in.delta), to_double(in.epsilon)};
}

Complex constant_value(const CoefficientSet& cs)
{
    if (std::abs(cs.Q1) > 0) return cs.P[1] / cs.Q1;
    return cs.P[0] / cs.Q0;
}

}  // namespace detail

namespace {

constexpr double kDegenerate = 1e-13;
const Complex I(0.0, 1.0);

template <class V>
void nonzero(V v, const char* what)
{
    if (std::abs(v) <= kDegenerate) throw DegenerateDenominator(std::string(what) + " = 0");
}

void gate(const FamilyId& id, double tau, double sigma)
{
    if (id.method == Method::SineGordon) return;
    const double D = tau * tau - 4 * sigma;
    const std::string name = to_string(id);
    const bool sigma_zero_family = id.variant == Variant::Exp || id.case_no == 15;
    if (sigma_zero_family) {
        if (sigma != 0) throw ConstraintViolated("sigma != 0 for " + name);
        if (tau == 0) throw ConstraintViolated("tau = 0 for " + name);
        return;
    }
    if (sigma == 0) throw ConstraintViolated("sigma = 0 for " + name);
    if (id.variant == Variant::Tanh && !(D > 0)) throw ConstraintViolated("tau^2 - 4 sigma <= 0 for " + name);
    if (id.variant != Variant::Tanh && !(D < 0)) throw ConstraintViolated("tau^2 - 4 sigma >= 0 for " + name);
}

void sine_gordon(CoefficientSet& cs, const Medium& m, double mu)
{
    const double dm = m.dm(mu);
    const double ab = m.alpha1 * m.beta1;
    const double scale = m.alpha2 * m.beta1 * m.eps;
    nonzero(scale, "alpha2 beta1 epsilon");
    const double Dp = dm * (ab - 1) / scale;

    double lambda2 = 0;
    switch (cs.id.case_no) {
    case 1:
        nonzero(1 + 2 * dm, "1 + 2 delta n1^2 mu^2");
        cs.A0 = -Dp / (3 * (1 + 2 * dm));
        cs.A2 = Dp / (1 + 2 * dm);
        lambda2 = -(-ab - 2 * dm) / (m.beta1 * (1 + 2 * dm));
        break;
    case 2:
        nonzero(-1 + 2 * dm, "-1 + 2 delta n1^2 mu^2");
        cs.A0 = Dp / (-1 + 2 * dm);
        cs.A2 = -cs.A0;
        lambda2 = -(ab - 2 * dm) / (-m.beta1 * (1 - 2 * dm));
        break;
    case 3:
    case 4:
        nonzero(dm - 2, "delta n1^2 mu^2 - 2");
        cs.A0 = Dp / (dm - 2);
        cs.A2 = -cs.A0;
        cs.B2 = (cs.id.case_no == 3 ? I : -I) * Dp / (dm - 2);
        lambda2 = -(2 * ab - dm) / (m.beta1 * (-2 + dm));
        break;
    case 5:
    case 6:
        nonzero(dm + 2, "delta n1^2 mu^2 + 2");
        cs.A0 = -2 * Dp / (3 * (dm + 2));
        cs.A2 = Dp / (dm + 2);
        cs.B2 = (cs.id.case_no == 5 ? I : -I) * Dp / (dm + 2);
        lambda2 = -(-2 * ab - dm) / (m.beta1 * (2 + dm));
        break;
    default: throw UnknownFamily(to_string(cs.id));
    }
    cs.lambda = cs.id.sign() * csqrt(lambda2);
    cs.mu = mu;
}

void mefm(CoefficientSet& cs, const Medium& m, const FamilyInputs& in)
{
    const double tau = in.tau, sigma = in.sigma;
    const double D = tau * tau - 4 * sigma;
    const double ab = m.alpha1 * m.beta1;
    const double sgn = cs.id.sign();
    nonzero(m.alpha2 * m.eps, "alpha2 epsilon");
    const double ae = m.alpha2 * m.eps;
    const double abe = m.alpha2 * m.beta1 * m.eps;
    double Q0 = in.q0, Q1 = in.q1;
    auto& P = cs.P;

    switch (cs.id.case_no) {
    case 7:
    case 8: {
        nonzero(D, "tau^2 - 4 sigma");
        const double lam = in.lambda;
        const double L = lam * lam - m.alpha1;
        nonzero(lam * lam * m.beta1 - 1, "lambda^2 beta1 - 1");
        if (cs.id.case_no == 7) {
            P = {2 * Q0 * sigma * L / (ae * D), 2 * L * (Q0 * tau + Q1 * sigma) / (ae * D),
                 2 * L * (Q0 + Q1 * tau) / (ae * D), 2 * Q1 * L / (ae * D)};
        } else {
            P = {-Q0 * (tau * tau + 2 * sigma) * L / (3 * ae * D),
                 -L * (6 * Q0 * tau + (tau * tau + 2 * sigma) * Q1) / (3 * ae * D),
                 -2 * L * (Q0 + Q1 * tau) / (ae * D), -2 * Q1 * L / (ae * D)};
        }
        const Complex mu = std::sqrt(2.0) * csqrt(m.beta1) * csqrt(L) /
                           (m.n1 * csqrt(m.delta) * csqrt(lam * lam * m.beta1 - 1) * csqrt(D));
        cs.mu = sgn * (cs.id.case_no == 8 ? I : Complex(1.0)) * mu;
        cs.lambda = lam;
        break;
    }
    case 9:
    case 10: {
        const double dm = m.dm(in.mu);
        const double G = 2 + dm * D;
        nonzero(G, "2 + delta n1^2 mu^2 (tau^2 - 4 sigma)");
        const Complex sD = csqrt(D);
        const double s9 = cs.id.case_no == 9 ? 1.0 : -1.0;
        P = {dm * Q1 * sD * (ab - 1) * (s9 * tau * tau + sD * tau - s9 * 4 * sigma) / (6 * abe * G),
             dm * Q1 * (ab - 1) * D / (3 * abe * G), 0.0, 0.0};
        cs.Q0 = 0.5 * (tau + s9 * sD) * Q1;
        cs.Q1 = Q1;
        cs.lambda = sgn * csqrt(2 * ab - 4 * dm * sigma + dm * tau * tau) / (csqrt(m.beta1) * csqrt(G));
        cs.mu = in.mu;
        return;
    }
    case 11:
    case 12: {
        const double Lam = -12 * std::pow(Q0, 4) + 24 * std::pow(Q0, 3) * Q1 * tau +
                           24 * std::pow(Q1, 3) * Q0 * sigma * tau - 12 * Q0 * Q0 * Q1 * Q1 * tau * tau -
                           24 * Q0 * Q0 * Q1 * Q1 * sigma - 8 * std::pow(Q1, 4) * tau * tau * sigma +
                           4 * std::pow(Q1, 4) * sigma * sigma + std::pow(Q1, 4) * std::pow(tau, 4);
        nonzero(Lam, "Lambda");
        const Complex sL = csqrt(Lam);
        const double q12 = Q1 * Q1, q14 = q12 * q12;
        if (cs.id.case_no == 11) {
            P[0] = (ab - 1) / (12 * abe * Lam) *
                   (-12 * std::pow(Q0, 5) + 24 * Q1 * tau * std::pow(Q0, 4) +
                    (-24 * q12 * sigma + 6.0 * sL - 12 * q12 * tau * tau) * std::pow(Q0, 3) +
                    (-12.0 * Q1 * tau * sL + 24 * sigma * tau * q12 * Q1) * Q0 * Q0 +
                    (5.0 * q12 * tau * tau * sL + 10.0 * q12 * sigma * sL + 4 * q14 * sigma * sigma +
                     q14 * std::pow(tau, 4) - 8 * q14 * tau * tau * sigma) *
                        Q0 -
                    6.0 * q12 * Q1 * sigma * tau * sL);
            P[1] = Q1 * (ab - 1) * (sL - q12 * tau * tau - 2 * q12 * sigma + 6 * Q0 * Q1 * tau - 6 * Q0 * Q0) /
                   (12.0 * abe * sL);
        } else {
            P[0] = -(ab - 1) / (12 * abe * Lam) *
                   (12 * std::pow(Q0, 5) - 24 * Q1 * tau * std::pow(Q0, 4) +
                    (24 * q12 * sigma + 6.0 * sL + 12 * q12 * tau * tau) * std::pow(Q0, 3) +
                    (-12.0 * Q1 * tau * sL - 24 * sigma * tau * q12 * Q1) * Q0 * Q0 +
                    (5.0 * q12 * tau * tau * sL + 10.0 * q12 * sigma * sL - 4 * q14 * sigma * sigma -
                     q14 * std::pow(tau, 4) + 8 * q14 * tau * tau * sigma) *
                        Q0 -
                    6.0 * q12 * Q1 * sigma * tau * sL);
            P[1] = Q1 * (ab - 1) * (sL + q12 * tau * tau + 2 * q12 * sigma - 6 * Q0 * Q1 * tau + 6 * Q0 * Q0) /
                   (12.0 * abe * sL);
        }
        P[2] = P[3] = 0.0;
        cs.Lambda = Lam;
        cs.lambda = sgn * std::sqrt(2.0) * csqrt(ab + 1) / (2.0 * csqrt(m.beta1));
        const Complex mu = std::sqrt(2.0) * Q1 / (csqrt(m.delta) * m.n1 * std::sqrt(sL));
        cs.mu = sgn * (cs.id.case_no == 11 ? I : Complex(1.0)) * mu;
        break;
    }
    case 13: {
        const double dm = m.dm(in.mu);
        nonzero(dm * tau * tau - 2, "delta n1^2 mu^2 tau^2 - 2");
        const double den = abe * (dm * tau * tau - 2);
        P = {0.0, -2 * Q0 * dm * tau * (ab - 1) / den, -2 * dm * (Q0 + tau * Q1) * (ab - 1) / den,
             -2 * Q1 * dm * (ab - 1) / den};
        cs.lambda = sgn * csqrt(-(2 * ab - dm * tau * tau) / (dm * tau * tau * m.beta1 - 2 * m.beta1));
        cs.mu = in.mu;
        break;
    }
    case 14: {
        const double dm = m.dm(in.mu);
        nonzero(dm * tau * tau + 2, "delta n1^2 mu^2 tau^2 + 2");
        const double den = abe * (dm * tau * tau + 2);
        P = {Q0 * dm * tau * tau * (ab - 1) / (3 * den),
             dm * tau * (-6 * Q0 - Q1 * tau + Q1 * ab * tau + 6 * Q0 * ab) / (3 * den),
             2 * dm * (Q0 + Q1 * tau) * (ab - 1) / den, 2 * Q1 * dm * (ab - 1) / den};
        cs.lambda = sgn * csqrt(-(-2 * ab - dm * tau * tau) / (dm * tau * tau * m.beta1 + 2 * m.beta1));
        cs.mu = in.mu;
        break;
    }
    case 15: {
        const double L = in.lambda * in.lambda - m.alpha1;
        P = {Q0 * (-L) / (3 * ae), Q1 * (-L) / (3 * ae), 0.0, 0.0};
        cs.lambda = in.lambda;
        cs.mu = in.mu;
        break;
    }
    default: throw UnknownFamily(to_string(cs.id));
    }
    cs.Q0 = Q0;
    cs.Q1 = Q1;
}

// Loci of tanh(z) = v, z = (r/2)(xi + e).
Locus tanh_locus(Complex v, double r, double e, const std::string& what)
{
    const double tol = 1e-12;
    if (std::abs(v - 1.0) < tol || std::abs(v + 1.0) < tol)
        return {LocusKind::Asymptotic, std::numeric_limits<double>::infinity(), 0.0,
                what + " (tanh -> " + (v.real() > 0 ? "+1" : "-1") + ")"};
    const Complex z = std::atanh(v);
    return {LocusKind::Periodic, 2.0 * z / r - e, Complex(0.0, 2 * std::numbers::pi / r), what};
}

// Loci of tan(z) = v, z = (r/2)(xi + e).
Locus tan_locus(Complex v, double r, double e, const std::string& what)
{
    if (std::abs(v - I) < 1e-12 || std::abs(v + I) < 1e-12)
        return {LocusKind::Asymptotic, std::numeric_limits<double>::infinity(), 0.0, what + " (tan -> +-i)"};
    const Complex z = std::atan(v);
    return {LocusKind::Periodic, 2.0 * z / r - e, Complex(2 * std::numbers::pi / r, 0.0), what};
}

// Loci of exp(tau (xi + e)) = v.
Locus exp_locus(Complex v, double tau, double e, const std::string& what)
{
    if (std::abs(v) < 1e-12)
        return {LocusKind::Asymptotic, std::numeric_limits<double>::infinity(), 0.0, what + " (exp -> 0)"};
    return {LocusKind::Periodic, std::log(v) / tau - e, Complex(0.0, 2 * std::numbers::pi / tau), what};
}

std::vector<Locus> compute_loci(const CoefficientSet& cs)
{
    const double pi = std::numbers::pi;
    std::vector<Locus> out;
    if (cs.id.method == Method::SineGordon) {
        if (cs.id.variant == Variant::Tanh)
            out.push_back({LocusKind::Periodic, Complex(0.0, pi / 2), Complex(0.0, pi), "tanh/sech poles"});
        else if (detail::coth_split(cs).pole_at_zero)
            out.push_back({LocusKind::Periodic, 0.0, Complex(0.0, pi), "coth/csch poles at xi = 0"});
        else
            out.push_back({LocusKind::Periodic, Complex(0.0, pi), Complex(0.0, 2 * pi),
                           "removable at xi = 0; poles at xi = i pi (2k + 1)"});
        return out;
    }
    if (cs.id.variant == Variant::Rational) return out;

    const double tau = cs.tau, sigma = cs.sigma, e = cs.e;
    // E* with Q0 + Q1 E* = 0, if any.
    std::optional<Complex> e_star;
    if (std::abs(cs.Q1) > 0) e_star = -cs.Q0 / cs.Q1;

    switch (cs.id.variant) {
    case Variant::Tanh: {
        const double r = std::sqrt(tau * tau - 4 * sigma);
        out.push_back({LocusKind::Periodic, Complex(0.0, pi / r) - e, Complex(0.0, 2 * pi / r), "tanh poles"});
        out.push_back(tanh_locus(-tau / r, r, e, "pole of E"));
        if (e_star && std::abs(*e_star) > 1e-12)
            out.push_back(tanh_locus((-2 * sigma / *e_star - tau) / r, r, e, "zero of Q0 + Q1 E"));
        break;
    }
    case Variant::Tan: {
        const double r = std::sqrt(4 * sigma - tau * tau);
        out.push_back({LocusKind::Periodic, pi / r - e, Complex(2 * pi / r, 0.0), "tan poles"});
        out.push_back(tan_locus(tau / r, r, e, "pole of E"));
        if (e_star && std::abs(*e_star) > 1e-12)
            out.push_back(tan_locus((tau + 2 * sigma / *e_star) / r, r, e, "zero of Q0 + Q1 E"));
        break;
    }
    case Variant::Exp:
        out.push_back({LocusKind::Periodic, -e, Complex(0.0, 2 * pi / tau), "exp(tau (xi + e)) = 1"});
        if (e_star && std::abs(*e_star) > 1e-12)
            out.push_back(exp_locus(1.0 + tau / *e_star, tau, e, "zero of Q0 + Q1 E"));
        break;
    default: break;
    }
    return out;
}

}  // namespace

double Locus::distance(Complex xi) const
{
    if (kind == LocusKind::Asymptotic) return std::numeric_limits<double>::infinity();
    if (kind == LocusKind::Point || std::abs(period) == 0) return std::abs(xi - xi0);
    const Complex r = (xi - xi0) / period;
    const double k0 = std::round(r.real());
    double best = std::numeric_limits<double>::infinity();
    for (double k = k0 - 1; k <= k0 + 1; ++k) best = std::min(best, std::abs(xi - xi0 - k * period));
    return best;
}

double singular_distance(const std::vector<Locus>& loci, Complex xi)
{
    double best = std::numeric_limits<double>::infinity();
    for (const auto& l : loci) best = std::min(best, l.distance(xi));
    return best;
}

std::string to_string(LocusKind k)
{
    switch (k) {
    case LocusKind::Point: return "point";
    case LocusKind::Periodic: return "periodic";
    case LocusKind::Asymptotic: return "asymptotic";
    }
    return "?";
}

FamilyInputs inputs_from(const MaterialConstants& mc)
{
    FamilyInputs in;
    in.material = derive_parameters(mc);
    in.delta = mc.delta;
    in.epsilon = mc.epsilon;
    return in;
}

FamilyInputs default_inputs(const FamilyId& id)
{
    FamilyInputs in = inputs_from(figure_set_a());
    if (id.variant == Variant::Exp || id.case_no == 15) {
        in.tau = 2.5;
        in.sigma = 0.0;
    } else if (id.variant == Variant::Tan || id.variant == Variant::Rational) {
        in.tau = 1.25;
        in.sigma = 2.25;
    }
    return in;
}

CoefficientSet coefficient_set(const FamilyId& id, const FamilyInputs& in)
{
    if (!find_family(id)) throw UnknownFamily(to_string(id));
    gate(id, in.tau, in.sigma);
    const Medium m = detail::medium(in);

    CoefficientSet cs;
    cs.id = id;
    cs.tau = in.tau;
    cs.sigma = in.sigma;
    cs.e = in.e;
    if (id.method == Method::SineGordon) {
        sine_gordon(cs, m, in.mu);
    } else {
        if (in.q0 == 0 && in.q1 == 0) throw DegenerateDenominator("Q0 = Q1 = 0");
        mefm(cs, m, in);
    }
    return cs;
}

double mu_for_lambda(const FamilyInputs& in, double lambda)
{
    const Medium m = detail::medium(in);
    const double D = in.tau * in.tau - 4 * in.sigma;
    const double l2 = lambda * lambda;
    nonzero(D * (l2 * m.beta1 - 1), "(tau^2 - 4 sigma)(lambda^2 beta1 - 1)");
    const double dm = 2 * m.beta1 * (m.alpha1 - l2) / (D * (l2 * m.beta1 - 1));
    const double mu2 = dm / (m.delta * m.n1 * m.n1);
    if (!(mu2 > 0)) throw ConstraintViolated("no real mu gives lambda = " + std::to_string(lambda));
    return std::sqrt(mu2);
}

Family::Family(const FamilyId& id, const FamilyInputs& in, double pole_floor)
    : in_(in), cs_(coefficient_set(id, in)), floor_(pole_floor), loci_(compute_loci(cs_))
{
}

void Family::check_point(Complex xi) const
{
    if (singular_distance(loci_, xi) <= floor_)
        throw SingularPoint(to_string(id()) + " at xi = " + std::to_string(xi.real()) + "+" +
                            std::to_string(xi.imag()) + "i");
}

namespace {

template <class F>
auto guarded(const FamilyId& id, Complex xi, F&& f)
{
    try {
        return f();
    } catch (const DivisionNearPole& err) {
        throw SingularPoint(to_string(id) + " at xi = " + std::to_string(xi.real()) + "+" +
                            std::to_string(xi.imag()) + "i: " + err.what());
    } catch (const DomainError& err) {
        throw SingularPoint(to_string(id) + " at xi = " + std::to_string(xi.real()) + "+" +
                            std::to_string(xi.imag()) + "i: " + err.what());
    }
}

}  // namespace

Complex Family::value_at_xi(Complex xi) const
{
    check_point(xi);
    return guarded(id(), xi, [&] { return detail::assemble(cs_, xi, detail::ComplexOps{floor_}); });
}

Jet Family::jet_at_xi(Complex xi) const
{
    check_point(xi);
    return guarded(id(), xi, [&] { return detail::assemble(cs_, Jet::variable(xi), detail::JetOps{floor_}); });
}

Complex Family::printed_at_xi(Complex xi) const
{
    const Medium m = detail::medium(in_);
    return guarded(id(), xi, [&] { return detail::printed(cs_, m, in_, xi, detail::ComplexOps{floor_}); });
}

Jet Family::printed_jet_at_xi(Complex xi) const
{
    const Medium m = detail::medium(in_);
    return guarded(id(), xi,
                   [&] { return detail::printed(cs_, m, in_, Jet::variable(xi), detail::JetOps{floor_}); });
}

std::vector<InnerArgument> Family::inner_arguments() const
{
    const Complex mu = cs_.mu, lam = cs_.lambda;
    std::vector<InnerArgument> out{{"xi", {mu, -mu * lam, 0.0}}};
    auto scaled = [&](const std::string& name, Complex k, Complex shift) {
        out.push_back({name, {k * mu, -k * mu * lam, shift}});
    };
    const int n = cs_.id.case_no;
    if (cs_.id.method == Method::SineGordon) {
        if (n >= 3) scaled(n <= 4 ? "xi1" : "xi2", 1.0, 0.0);
        return out;
    }
    const double D = cs_.tau * cs_.tau - 4 * cs_.sigma;
    const double r = std::sqrt(std::abs(D)) / 2;
    switch (cs_.id.variant) {
    case Variant::Tanh:
    case Variant::Tan: {
        if (n == 7) scaled(cs_.id.variant == Variant::Tanh ? "xi3" : "xi4", r, r * cs_.e);
        if (n == 8) scaled(cs_.id.variant == Variant::Tanh ? "xi5" : "xi6", r, r * cs_.e);
        if (n == 9 || n == 10) scaled("xi7", r, 0.0);
        if (n == 11 || n == 12) scaled("printed_argument", r, cs_.e);
        scaled("phase", r, r * cs_.e);
        break;
    }
    case Variant::Exp:
        scaled(n == 13 ? "xi8" : "xi9", 1.0, 0.0);
        scaled("phase", cs_.tau, cs_.tau * cs_.e);
        break;
    default: break;
    }
    return out;
}

Complex evaluate(const FamilyId& id, const FamilyInputs& in, double x, double t)
{
    return Family(id, in).value(x, t);
}

Complex evaluate_at_xi(const FamilyId& id, const FamilyInputs& in, Complex xi)
{
    return Family(id, in).value_at_xi(xi);
}

Jet evaluate_jet(const FamilyId& id, const FamilyInputs& in, double x, double t)
{
    return Family(id, in).jet(x, t);
}

Complex evaluate_printed(const FamilyId& id, const FamilyInputs& in, double x, double t)
{
    return Family(id, in).printed_value(x, t);
}

std::vector<Locus> singularities(const FamilyId& id, const FamilyInputs& in)
{
    return Family(id, in).singularities();
}

}  // namespace rodwave
