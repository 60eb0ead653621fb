#pragma once

#include <array>
#include <complex>
#include <cstddef>

namespace rodwave {

using Complex = std::complex<double>;

/// Default magnitude below which a divisor (or a pole argument) is rejected.
inline constexpr double kDefaultPoleFloor = 1e-12;

/// Order-4 truncated Taylor expansion in the traveling coordinate:
/// coefficients [f, f', f''/2!, f'''/3!, f''''/4!] about an expansion point.
class Jet {
public:
    static constexpr std::size_t kOrder = 4;
    using Coefficients = std::array<Complex, kOrder + 1>;

    constexpr Jet() = default;
    constexpr Jet(Complex value) : c_{value, 0.0, 0.0, 0.0, 0.0} {}
    constexpr Jet(double value) : Jet(Complex(value)) {}
    constexpr explicit Jet(const Coefficients& c) : c_(c) {}

    /// The identity jet ξ expanded about `at`: [at, 1, 0, 0, 0].
    static constexpr Jet variable(Complex at) { return Jet(Coefficients{at, 1.0, 0.0, 0.0, 0.0}); }

    constexpr const Complex& operator[](std::size_t k) const { return c_[k]; }
    constexpr Complex& operator[](std::size_t k) { return c_[k]; }
    constexpr const Coefficients& coefficients() const { return c_; }

    constexpr Complex value() const { return c_[0]; }
    /// k-th derivative, k! * coefficient[k].
    Complex derivative(std::size_t k) const;

    Jet& operator+=(const Jet& o);
    Jet& operator-=(const Jet& o);
    Jet& operator*=(const Jet& o);
    Jet& operator/=(const Jet& o);

private:
    Coefficients c_{};
};

Jet operator+(Jet a, const Jet& b);
Jet operator-(Jet a, const Jet& b);
Jet operator*(const Jet& a, const Jet& b);
Jet operator/(const Jet& a, const Jet& b);
Jet operator-(const Jet& a);

/// Truncated quotient; throws DivisionNearPole if |b[0]| <= floor.
Jet divide(const Jet& a, const Jet& b, double floor = kDefaultPoleFloor);

enum class ArithOp { add, sub, mul, div };
Jet jet_arith(const Jet& a, const Jet& b, ArithOp op, double floor = kDefaultPoleFloor);

// Elementary functions. Each throws DomainError naming the function when the value
// coefficient sits on a branch cut or within `floor` of a pole.
Jet exp(const Jet& a);
Jet log(const Jet& a);
Jet sqrt(const Jet& a);
Jet sinh(const Jet& a);
Jet cosh(const Jet& a);
Jet tanh(const Jet& a, double floor = kDefaultPoleFloor);
Jet coth(const Jet& a, double floor = kDefaultPoleFloor);
Jet sech(const Jet& a, double floor = kDefaultPoleFloor);
Jet csch(const Jet& a, double floor = kDefaultPoleFloor);
Jet tan(const Jet& a, double floor = kDefaultPoleFloor);

enum class Elementary { exp, ln, sqrt, tanh, coth, sech, csch, tan };
Jet jet_elementary(Elementary f, const Jet& a, double floor = kDefaultPoleFloor);

}  // namespace rodwave
