#pragma once

#include "rodwave/rational.hpp"

namespace rodwave {

/// Physical inputs of a compressible Murnaghan rod.
struct MaterialConstants {
    Rational lambda1;  ///< Lamé first coefficient
    Rational mu1;      ///< Lamé second (shear) coefficient
    Rational nu1, nu2, nu4;
    Rational rho;
    Rational c;        ///< characteristic speed
    Rational delta;    ///< small dispersion parameter
    Rational epsilon;  ///< small nonlinearity parameter
};

/// Coefficients entering the rod equation, all exact.
struct DerivedParameters {
    Rational n1;
    Rational beta1;
    Rational alpha1;
    Rational alpha2;
    Rational c1, c2;
    Rational kappa1, kappa3, kappa5, kappa6;
};

/// Derives n1, beta1, alpha1, alpha2 (and the intermediate c's and kappa's).
///
/// Throws ZeroPoissonRatio when lambda1 = 0 (the kappa6/n1 term of c2 is undefined)
/// and InvalidConstants, naming the field, for any other violated precondition.
DerivedParameters derive_parameters(const MaterialConstants& mc);

/// The two parameter sets used for the published figures.
MaterialConstants figure_set_a();  // lambda1=3/2, mu1=5/2, nu=(2,3,5), rho=3, c=4, delta=5/2, eps=7/2
MaterialConstants figure_set_b();  // lambda1=3/4, mu1=5/4, nu=(1,2,4), rho=5/2, c=7/2, delta=1, eps=2

}  // namespace rodwave
