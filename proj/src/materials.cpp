#include "rodwave/materials.hpp"

#include "rodwave/errors.hpp"

namespace rodwave {

DerivedParameters derive_parameters(const MaterialConstants& mc)
{
    if (mc.mu1 <= 0) throw InvalidConstants("mu1 must be positive");
    if (mc.rho <= 0) throw InvalidConstants("rho must be positive");
    if (mc.c == 0) throw InvalidConstants("c must be non-zero");
    if (mc.lambda1 + mc.mu1 == 0) throw InvalidConstants("lambda1 + mu1 must be non-zero");
    if (mc.delta == 0) throw InvalidConstants("delta must be non-zero");
    if (mc.epsilon == 0) throw InvalidConstants("epsilon must be non-zero");
    if (mc.lambda1 == 0) throw ZeroPoissonRatio("lambda1 = 0 gives n1 = 0 and kappa6/n1 is undefined");

    const Rational& l = mc.lambda1;
    const Rational& m = mc.mu1;

    DerivedParameters d;
    d.n1 = l / (2 * (l + m));
    d.kappa1 = 2 * (l + m + 2 * mc.nu1 + Rational(4, 3) * mc.nu2 + Rational(1, 3) * mc.nu4);
    d.kappa3 = l + 2 * mc.nu1 + 4 * mc.nu2;
    d.kappa5 = l + 2 * mc.nu1 + 2 * mc.nu2;
    d.kappa6 = l / 2 + m + mc.nu1 + mc.nu2 / 3 + mc.nu4 / 3;

    const Rational& n = d.n1;
    d.c1 = 2 * (l + m) * n * n - 2 * l * n + l / 2 + m;
    d.c2 = -d.kappa1 * n * n + d.kappa3 * n - d.kappa5 + d.kappa6 / n;

    d.beta1 = mc.rho * mc.c * mc.c / m;
    d.alpha1 = 2 * d.c1 / (d.beta1 * m);
    d.alpha2 = d.c2 / (d.beta1 * m);

    for (Rational* r : {&d.n1, &d.beta1, &d.alpha1, &d.alpha2, &d.c1, &d.c2, &d.kappa1, &d.kappa3,
                        &d.kappa5, &d.kappa6})
        r->canonicalize();
    return d;
}

MaterialConstants figure_set_a()
{
    return {Rational(3, 2), Rational(5, 2), 2, 3, 5, 3, 4, Rational(5, 2), Rational(7, 2)};
}

MaterialConstants figure_set_b()
{
    return {Rational(3, 4), Rational(5, 4), 1, 2, 4, Rational(5, 2), Rational(7, 2), 1, 2};
}

}  // namespace rodwave
