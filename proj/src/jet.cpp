#include "rodwave/jet.hpp"

#include "rodwave/errors.hpp"

#include <cmath>
#include <sstream>

namespace rodwave {

namespace {

constexpr std::size_t N = Jet::kOrder;

std::string describe(Complex z)
{
    std::ostringstream os;
    os.precision(17);
    os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    return os.str();
}

// Solves y' = g * a' for y given g's coefficients up to k-1 at each step:
// k y_k = sum_{j=1..k} j a_j g_{k-j}. `update` refreshes g_k once y_k is known.
template <class Update>
Jet integrate_chain(const Jet& a, Complex y0, Jet& g, Update update)
{
    Jet y;
    y[0] = y0;
    for (std::size_t k = 1; k <= N; ++k) {
        Complex s = 0.0;
        for (std::size_t j = 1; j <= k; ++j) s += double(j) * a[j] * g[k - j];
        y[k] = s / double(k);
        update(y, k);
    }
    return y;
}

// sech(z) and csch(z) through w = exp(-|Re z| sign), stable for large |Re z|.
// Returns {2w, 1+w^2, 1-w^2, sign}.
struct HyperbolicParts {
    Complex two_w;
    Complex one_plus;
    Complex one_minus;
    double sign;
};

HyperbolicParts hyperbolic_parts(Complex z)
{
    const double sign = z.real() >= 0 ? 1.0 : -1.0;
    const Complex w = std::exp(-sign * z);
    return {2.0 * w, 1.0 + w * w, 1.0 - w * w, sign};
}

}  // namespace

Complex Jet::derivative(std::size_t k) const
{
    double factorial = 1.0;
    for (std::size_t i = 2; i <= k; ++i) factorial *= double(i);
    return factorial * c_[k];
}

Jet& Jet::operator+=(const Jet& o)
{
    for (std::size_t k = 0; k <= N; ++k) c_[k] += o.c_[k];
    return *this;
}

Jet& Jet::operator-=(const Jet& o)
{
    for (std::size_t k = 0; k <= N; ++k) c_[k] -= o.c_[k];
    return *this;
}

Jet& Jet::operator*=(const Jet& o) { return *this = *this * o; }
Jet& Jet::operator/=(const Jet& o) { return *this = divide(*this, o); }

Jet operator+(Jet a, const Jet& b) { return a += b; }
Jet operator-(Jet a, const Jet& b) { return a -= b; }

Jet operator*(const Jet& a, const Jet& b)
{
    Jet r;
    for (std::size_t k = 0; k <= N; ++k) {
        Complex s = 0.0;
        for (std::size_t j = 0; j <= k; ++j) s += a[j] * b[k - j];
        r[k] = s;
    }
    return r;
}

Jet operator/(const Jet& a, const Jet& b) { return divide(a, b); }

Jet operator-(const Jet& a)
{
    Jet r;
    for (std::size_t k = 0; k <= N; ++k) r[k] = -a[k];
    return r;
}

Jet divide(const Jet& a, const Jet& b, double floor)
{
    if (!(std::abs(b[0]) > floor))
        throw DivisionNearPole("divisor value " + describe(b[0]) + " is within the pole floor");
    Jet r;
    for (std::size_t k = 0; k <= N; ++k) {
        Complex s = a[k];
        for (std::size_t j = 1; j <= k; ++j) s -= b[j] * r[k - j];
        r[k] = s / b[0];
    }
    return r;
}

Jet jet_arith(const Jet& a, const Jet& b, ArithOp op, double floor)
{
    switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return divide(a, b, floor);
    }
    return {};
}

Jet exp(const Jet& a)
{
    Jet r;
    r[0] = std::exp(a[0]);
    for (std::size_t k = 1; k <= N; ++k) {
        Complex s = 0.0;
        for (std::size_t j = 1; j <= k; ++j) s += double(j) * a[j] * r[k - j];
        r[k] = s / double(k);
    }
    return r;
}

Jet log(const Jet& a)
{
    if (a[0].imag() == 0.0 && a[0].real() <= 0.0)
        throw DomainError("ln of " + describe(a[0]) + " (non-positive real)");
    Jet r;
    r[0] = std::log(a[0]);
    for (std::size_t k = 1; k <= N; ++k) {
        Complex s = 0.0;
        for (std::size_t j = 1; j < k; ++j) s += double(j) * r[j] * a[k - j];
        r[k] = (a[k] - s / double(k)) / a[0];
    }
    return r;
}

Jet sqrt(const Jet& a)
{
    if (a[0].imag() == 0.0 && a[0].real() <= 0.0)
        throw DomainError("sqrt of " + describe(a[0]) + " (non-positive real)");
    Jet r;
    r[0] = std::sqrt(a[0]);
    for (std::size_t k = 1; k <= N; ++k) {
        Complex s = 0.0;
        for (std::size_t j = 1; j < k; ++j) s += r[j] * r[k - j];
        r[k] = (a[k] - s) / (2.0 * r[0]);
    }
    return r;
}

Jet sinh(const Jet& a)
{
    Jet s, c;
    s[0] = std::sinh(a[0]);
    c[0] = std::cosh(a[0]);
    for (std::size_t k = 1; k <= N; ++k) {
        Complex ss = 0.0, cc = 0.0;
        for (std::size_t j = 1; j <= k; ++j) {
            ss += double(j) * a[j] * c[k - j];
            cc += double(j) * a[j] * s[k - j];
        }
        s[k] = ss / double(k);
        c[k] = cc / double(k);
    }
    return s;
}

Jet cosh(const Jet& a)
{
    Jet s, c;
    s[0] = std::sinh(a[0]);
    c[0] = std::cosh(a[0]);
    for (std::size_t k = 1; k <= N; ++k) {
        Complex ss = 0.0, cc = 0.0;
        for (std::size_t j = 1; j <= k; ++j) {
            ss += double(j) * a[j] * c[k - j];
            cc += double(j) * a[j] * s[k - j];
        }
        s[k] = ss / double(k);
        c[k] = cc / double(k);
    }
    return c;
}

Jet tanh(const Jet& a, double floor)
{
    const auto p = hyperbolic_parts(a[0]);
    if (!(std::abs(p.one_plus) > floor)) throw DomainError("tanh pole at " + describe(a[0]));
    const Complex sech0 = p.two_w / p.one_plus;

    // t' = q a' with q = 1 - t^2; q0 = sech^2 evaluated directly to keep the tails accurate.
    Jet q;
    q[0] = sech0 * sech0;
    return integrate_chain(a, p.sign * p.one_minus / p.one_plus, q, [&](const Jet& t, std::size_t k) {
        Complex s = 0.0;
        for (std::size_t j = 0; j <= k; ++j) s += t[j] * t[k - j];
        q[k] = -s;
    });
}

Jet coth(const Jet& a, double floor)
{
    const auto p = hyperbolic_parts(a[0]);
    if (!(std::abs(p.one_minus) > floor)) throw DomainError("coth pole at " + describe(a[0]));
    const Complex csch0 = p.sign * p.two_w / p.one_minus;

    Jet q;
    q[0] = -csch0 * csch0;
    return integrate_chain(a, p.sign * p.one_plus / p.one_minus, q, [&](const Jet& c, std::size_t k) {
        Complex s = 0.0;
        for (std::size_t j = 0; j <= k; ++j) s += c[j] * c[k - j];
        q[k] = -s;
    });
}

Jet sech(const Jet& a, double floor)
{
    const auto p = hyperbolic_parts(a[0]);
    if (!(std::abs(p.one_plus) > floor)) throw DomainError("sech pole at " + describe(a[0]));

    // y = sech, t = tanh: y' = -y t a', t' = y^2 a'.
    Jet y, t, yt, yy;
    y[0] = p.two_w / p.one_plus;
    t[0] = p.sign * p.one_minus / p.one_plus;
    yt[0] = y[0] * t[0];
    yy[0] = y[0] * y[0];
    for (std::size_t k = 1; k <= N; ++k) {
        Complex sy = 0.0, st = 0.0;
        for (std::size_t j = 1; j <= k; ++j) {
            sy += double(j) * a[j] * yt[k - j];
            st += double(j) * a[j] * yy[k - j];
        }
        y[k] = -sy / double(k);
        t[k] = st / double(k);
        Complex pyt = 0.0, pyy = 0.0;
        for (std::size_t j = 0; j <= k; ++j) {
            pyt += y[j] * t[k - j];
            pyy += y[j] * y[k - j];
        }
        yt[k] = pyt;
        yy[k] = pyy;
    }
    return y;
}

Jet csch(const Jet& a, double floor)
{
    const auto p = hyperbolic_parts(a[0]);
    if (!(std::abs(p.one_minus) > floor)) throw DomainError("csch pole at " + describe(a[0]));

    // y = csch, c = coth: y' = -y c a', c' = -y^2 a'.
    Jet y, c, yc, yy;
    y[0] = p.sign * p.two_w / p.one_minus;
    c[0] = p.sign * p.one_plus / p.one_minus;
    yc[0] = y[0] * c[0];
    yy[0] = y[0] * y[0];
    for (std::size_t k = 1; k <= N; ++k) {
        Complex sy = 0.0, sc = 0.0;
        for (std::size_t j = 1; j <= k; ++j) {
            sy += double(j) * a[j] * yc[k - j];
            sc += double(j) * a[j] * yy[k - j];
        }
        y[k] = -sy / double(k);
        c[k] = -sc / double(k);
        Complex pyc = 0.0, pyy = 0.0;
        for (std::size_t j = 0; j <= k; ++j) {
            pyc += y[j] * c[k - j];
            pyy += y[j] * y[k - j];
        }
        yc[k] = pyc;
        yy[k] = pyy;
    }
    return y;
}

Jet tan(const Jet& a, double floor)
{
    const Complex cos0 = std::cos(a[0]);
    if (!(std::abs(cos0) > floor)) throw DomainError("tan pole at " + describe(a[0]));
    Jet q;
    q[0] = 1.0 / (cos0 * cos0);
    return integrate_chain(a, std::sin(a[0]) / cos0, q, [&](const Jet& t, std::size_t k) {
        Complex s = 0.0;
        for (std::size_t j = 0; j <= k; ++j) s += t[j] * t[k - j];
        q[k] = s;
    });
}

Jet jet_elementary(Elementary f, const Jet& a, double floor)
{
    switch (f) {
    case Elementary::exp: return exp(a);
    case Elementary::ln: return log(a);
    case Elementary::sqrt: return sqrt(a);
    case Elementary::tanh: return tanh(a, floor);
    case Elementary::coth: return coth(a, floor);
    case Elementary::sech: return sech(a, floor);
    case Elementary::csch: return csch(a, floor);
    case Elementary::tan: return tan(a, floor);
    }
    return {};
}

}  // namespace rodwave
