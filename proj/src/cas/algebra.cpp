#include "rodwave/cas/algebra.hpp"

#include <stdexcept>

namespace rodwave::cas {

Poly::Poly(std::vector<MPoly> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::x() { return Poly({MPoly(0L), MPoly(1L)}); }

void Poly::trim()
{
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

MPoly Poly::operator[](int k) const
{
    if (k < 0 || k >= static_cast<int>(c_.size())) return MPoly();
    return c_[static_cast<std::size_t>(k)];
}

Poly operator+(const Poly& a, const Poly& b)
{
    std::vector<MPoly> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[static_cast<int>(i)] + b[static_cast<int>(i)];
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b)
{
    std::vector<MPoly> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[static_cast<int>(i)] - b[static_cast<int>(i)];
    return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<MPoly> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
}

Poly operator*(const MPoly& k, const Poly& a) { return Poly::constant(k) * a; }

Poly Poly::derivative() const
{
    std::vector<MPoly> c;
    for (std::size_t i = 1; i < c_.size(); ++i) c.push_back(MPoly(static_cast<long>(i)) * c_[i]);
    return Poly(std::move(c));
}

double Poly::evaluate(double x) const
{
    double v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + to_double(it->constant());
    return v;
}

namespace {

Poly one_minus_c2() { return Poly({MPoly(1L), MPoly(0L), MPoly(-1L)}); }

}  // namespace

TrigElement operator*(const TrigElement& a, const TrigElement& b)
{
    return {a.A * b.A + one_minus_c2() * a.B * b.B, a.A * b.B + a.B * b.A};
}

TrigElement TrigElement::derivative() const
{
    const Poly q = one_minus_c2();
    const Poly zero;
    return {zero - q * A.derivative(), Poly::x() * B - q * B.derivative()};
}

Poly EElement::flow() const { return Poly({-sigma, -tau, MPoly(-1L)}); }

EElement operator+(const EElement& a, const EElement& b)
{
    return {a.P * b.Q + b.P * a.Q, a.Q * b.Q, a.tau, a.sigma};
}

EElement operator*(const EElement& a, const EElement& b) { return {a.P * b.P, a.Q * b.Q, a.tau, a.sigma}; }

bool EElement::same_as(const EElement& o) const { return P * o.Q == o.P * Q; }

EElement EElement::derivative() const
{
    return {flow() * (P.derivative() * Q - P * Q.derivative()), Q * Q, tau, sigma};
}

}  // namespace rodwave::cas
