#include "rodwave/errors.hpp"
#include "rodwave/jet.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

using namespace rodwave;

namespace {

void expect_coeffs(const Jet& j, std::initializer_list<Complex> want, double tol)
{
    std::size_t k = 0;
    for (const Complex& w : want) {
        EXPECT_LE(std::abs(j[k] - w), tol) << "coefficient " << k << ": " << j[k] << " vs " << w;
        ++k;
    }
}

double max_diff(const Jet& a, const Jet& b)
{
    double m = 0;
    for (std::size_t k = 0; k <= Jet::kOrder; ++k) m = std::max(m, std::abs(a[k] - b[k]));
    return m;
}

double max_rel_diff(const Jet& a, const Jet& b)
{
    double scale = 0;
    for (std::size_t k = 0; k <= Jet::kOrder; ++k) scale = std::max(scale, std::abs(b[k]));
    return max_diff(a, b) / scale;
}

/// Fornberg weights for the m-th derivative at 0 on nodes x (m <= 4).
std::vector<double> fornberg(const std::vector<double>& x, int m)
{
    const int n = static_cast<int>(x.size());
    std::vector<std::vector<std::vector<double>>> c(
        n, std::vector<std::vector<double>>(n, std::vector<double>(m + 1, 0.0)));
    c[0][0][0] = 1.0;
    double c1 = 1.0;
    for (int i = 1; i < n; ++i) {
        double c2 = 1.0;
        for (int j = 0; j < i; ++j) {
            const double c3 = x[i] - x[j];
            c2 *= c3;
            for (int k = 0; k <= std::min(i, m); ++k) {
                c[i][j][k] = (x[i] * c[i - 1][j][k] - (k > 0 ? k * c[i - 1][j][k - 1] : 0.0)) / c3;
            }
        }
        for (int k = 0; k <= std::min(i, m); ++k) {
            c[i][i][k] = c1 / c2 *
                         ((k > 0 ? k * c[i - 1][i - 1][k - 1] : 0.0) - x[i - 1] * c[i - 1][i - 1][k]);
        }
        c1 = c2;
    }
    std::vector<double> w(n);
    for (int j = 0; j < n; ++j) w[j] = c[n - 1][j][m];
    return w;
}

}  // namespace

TEST(JetArith, VariableSquared)
{
    const Jet x = Jet::variable(0.0);
    expect_coeffs(jet_arith(x, x, ArithOp::mul), {0, 0, 1, 0, 0}, 0);
}

TEST(JetArith, SelfQuotientIsOne)
{
    const Jet a(Jet::Coefficients{Complex(1.5, -2), 3, Complex(0, 1), -4, 0.25});
    expect_coeffs(jet_arith(a, a, ArithOp::div), {1, 0, 0, 0, 0}, 1e-15);
}

TEST(JetArith, GeometricQuotient)
{
    const Jet num(Jet::Coefficients{1, 1, 0, 0, 0});
    const Jet den(Jet::Coefficients{1, -1, 0, 0, 0});
    expect_coeffs(jet_arith(num, den, ArithOp::div), {1, 2, 2, 2, 2}, 1e-15);
}

TEST(JetArith, AddSubInverse)
{
    const Jet a(Jet::Coefficients{1, 2, 3, 4, 5});
    const Jet b(Jet::Coefficients{Complex(0, 1), -1, 0.5, 0, 7});
    EXPECT_EQ(max_diff(jet_arith(jet_arith(a, b, ArithOp::add), b, ArithOp::sub), a), 0.0);
}

TEST(JetArith, DivisionNearPole)
{
    const Jet a = Jet::variable(1.0);
    const Jet b(Jet::Coefficients{1e-13, 1, 0, 0, 0});
    EXPECT_THROW(jet_arith(a, b, ArithOp::div), DivisionNearPole);
    EXPECT_NO_THROW(jet_arith(a, b, ArithOp::div, 1e-14));
}

TEST(JetArith, DerivativeExtraction)
{
    const Jet j(Jet::Coefficients{1, 2, 3, 4, 5});
    EXPECT_EQ(j.derivative(0), Complex(1));
    EXPECT_EQ(j.derivative(2), Complex(6));
    EXPECT_EQ(j.derivative(3), Complex(24));
    EXPECT_EQ(j.derivative(4), Complex(120));
}

TEST(JetElementary, ExpMaclaurin)
{
    expect_coeffs(jet_elementary(Elementary::exp, Jet::variable(0.0)), {1, 1, 0.5, 1.0 / 6, 1.0 / 24}, 1e-16);
}

TEST(JetElementary, TanhMaclaurin)
{
    expect_coeffs(jet_elementary(Elementary::tanh, Jet::variable(0.0)), {0, 1, 0, -1.0 / 3, 0}, 1e-16);
}

TEST(JetElementary, TanMaclaurin)
{
    expect_coeffs(jet_elementary(Elementary::tan, Jet::variable(0.0)), {0, 1, 0, 1.0 / 3, 0}, 1e-16);
}

TEST(JetElementary, LogSqrtMaclaurin)
{
    expect_coeffs(jet_elementary(Elementary::ln, Jet::variable(1.0)), {0, 1, -0.5, 1.0 / 3, -0.25}, 1e-15);
    expect_coeffs(jet_elementary(Elementary::sqrt, Jet::variable(1.0)), {1, 0.5, -0.125, 1.0 / 16, -5.0 / 128},
                  1e-15);
}

TEST(JetElementary, SechSquaredPlusTanhSquared)
{
    std::mt19937_64 rng(0);
    std::uniform_real_distribution<double> re(-4, 4), im(-0.5, 0.5), pert(-1, 1);
    double worst = 0;
    for (int i = 0; i < 100; ++i) {
        Jet a(Jet::Coefficients{Complex(re(rng), im(rng)), Complex(pert(rng), pert(rng)), pert(rng), pert(rng),
                                pert(rng)});
        const Jet s = sech(a), t = tanh(a);
        worst = std::max(worst, max_diff(s * s + t * t, Jet(1.0)));
    }
    EXPECT_LT(worst, 1e-12);
}

TEST(JetElementary, ReciprocalsAgreeWithRecurrences)
{
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> re(0.2, 3), im(-0.4, 0.4);
    for (int i = 0; i < 50; ++i) {
        const Complex z(re(rng) * (i % 2 ? 1 : -1), im(rng));
        const Jet x = Jet::variable(z);
        EXPECT_LT(max_rel_diff(sech(x), 1.0 / cosh(x)), 1e-12) << z;
        EXPECT_LT(max_rel_diff(csch(x), 1.0 / sinh(x)), 1e-12) << z;
        EXPECT_LT(max_rel_diff(coth(x), 1.0 / tanh(x)), 1e-12) << z;
        const Complex I(0, 1);
        EXPECT_LT(max_rel_diff(tan(x), sinh(I * x) / (I * cosh(I * x))), 1e-12) << z;
    }
}

TEST(JetElementary, ExpLogRoundTrip)
{
    const Jet a(Jet::Coefficients{Complex(2, 1), 0.5, -1, 0.25, 2});
    EXPECT_LT(max_diff(exp(log(a)), a), 1e-13);
    EXPECT_LT(max_diff(sqrt(a) * sqrt(a), a), 1e-13);
}

TEST(JetElementary, DomainErrors)
{
    EXPECT_THROW(log(Jet::variable(-1.0)), DomainError);
    EXPECT_THROW(log(Jet::variable(0.0)), DomainError);
    EXPECT_THROW(sqrt(Jet::variable(-2.0)), DomainError);
    EXPECT_THROW(coth(Jet::variable(1e-13)), DomainError);
    EXPECT_THROW(csch(Jet::variable(0.0)), DomainError);
    EXPECT_THROW(tan(Jet::variable(M_PI / 2)), DomainError);
    EXPECT_THROW(tanh(Jet::variable(Complex(0, M_PI / 2))), DomainError);
    EXPECT_NO_THROW(log(Jet::variable(Complex(-1.0, 0.5))));
    try {
        log(Jet::variable(-1.0));
    } catch (const DomainError& e) {
        EXPECT_NE(std::string(e.what()).find("ln"), std::string::npos);
    }
}

TEST(JetElementary, LargeArgumentsStayFinite)
{
    for (double z : {-40.0, -25.0, 25.0, 40.0, 400.0}) {
        for (const Jet& j : {tanh(Jet::variable(z)), sech(Jet::variable(z)), coth(Jet::variable(z)),
                             csch(Jet::variable(z))}) {
            for (std::size_t k = 0; k <= 4; ++k) EXPECT_TRUE(std::isfinite(std::abs(j[k]))) << z;
        }
        EXPECT_NEAR(tanh(Jet::variable(z))[0].real(), z > 0 ? 1.0 : -1.0, 1e-15);
    }
}

TEST(JetProperties, TaylorPredictionIsFifthOrder)
{
    auto f = [](const Jet& x) { return tanh(x) * sech(x) + exp(0.3 * x); };
    const Complex x0(0.4, 0.1);
    const Jet j0 = f(Jet::variable(x0));
    auto err = [&](double h) {
        Complex pred = 0;
        for (int k = 4; k >= 0; --k) pred = pred * h + j0[k];
        return std::abs(f(Jet::variable(x0 + h))[0] - pred);
    };
    const double e1 = err(0.1), e2 = err(0.05), e3 = err(0.025);
    EXPECT_NEAR(e1 / e2, 32.0, 4.0);
    EXPECT_NEAR(e2 / e3, 32.0, 4.0);
}

TEST(JetProperties, AgreesWithEighthOrderFiniteDifferences)
{
    const double h = 0.05;
    std::vector<double> nodes;
    for (int i = -5; i <= 5; ++i) nodes.push_back(i * h);
    std::vector<std::vector<double>> w;
    for (int m = 1; m <= 4; ++m) w.push_back(fornberg(nodes, m));

    double worst = 0;
    for (double xi = -3.0; xi <= 3.0 + 1e-12; xi += 0.25) {
        const Jet j = tanh(Jet::variable(xi));
        for (int m = 1; m <= 4; ++m) {
            double fd = 0;
            for (std::size_t i = 0; i < nodes.size(); ++i) fd += w[m - 1][i] * std::tanh(xi + nodes[i]);
            const double exact = j.derivative(m).real();
            worst = std::max(worst, std::abs(exact - fd) / std::max(std::abs(exact), 1e-3));
        }
    }
    EXPECT_LT(worst, 1e-6);
}
