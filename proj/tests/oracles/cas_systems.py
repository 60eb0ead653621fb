"""Golden coefficient maps for the reduced-ODE algebraic systems.

Independent of the C++ derivation rules: u is built from sympy functions of xi and
differentiated by the chain rule, then the auxiliary flow is substituted.
Run from the repository root: python3 tests/oracles/cas_systems.py
"""
import json
import pathlib

import sympy as sp

xi = sp.Symbol("xi")
n1, delta, beta1, alpha1, alpha2, epsilon = sp.symbols("n1 delta beta1 alpha1 alpha2 epsilon")
lam, mu, tau, sigma = sp.symbols("lambda mu tau sigma")
MATERIAL = [n1, delta, beta1, alpha1, alpha2, epsilon]


def scaled_ode(u):
    """2 beta1 times K u'' + 3 a2 eps u^2 + (lambda^2 - a1) u."""
    K2 = n1**2 * mu**2 * delta * (1 - beta1 * lam**2)
    return K2 * sp.diff(u, xi, 2) + 6 * alpha2 * epsilon * beta1 * u**2 + 2 * beta1 * (lam**2 - alpha1) * u


def coeff_map(expr, variables):
    poly = sp.Poly(sp.expand(expr), *variables)
    return {json.dumps(list(m), separators=(",", ":")): str(sp.Rational(c)) for m, c in poly.terms()}


def sg_system():
    A0, A1, A2, B1, B2 = sp.symbols("A0 A1 A2 B1 B2")
    w = sp.Function("w")(xi)
    u = A0 + A1 * sp.cos(w) + A2 * sp.cos(w) ** 2 + sp.sin(w) * (B1 + B2 * sp.cos(w))
    r = scaled_ode(u)
    r = r.subs(sp.Derivative(w, (xi, 2)), sp.cos(w) * sp.sin(w)).subs(sp.Derivative(w, xi), sp.sin(w))
    c, s = sp.symbols("c s")
    r = sp.expand(r.subs({sp.cos(w): c, sp.sin(w): s}))
    # s^2 -> 1 - c^2
    poly = sp.Poly(r, s)
    even, odd = 0, 0
    for (k,), coef in poly.terms():
        term = coef * (1 - c**2) ** (k // 2)
        if k % 2 == 0:
            even += term
        else:
            odd += term
    unknowns = [A0, A1, A2, B1, B2, lam, mu]
    variables = unknowns + MATERIAL
    eqs = []
    even, odd = sp.Poly(sp.expand(even), c), sp.Poly(sp.expand(odd), c)
    for k in range(5):
        eqs.append({"label": f"cos^{k}", "terms": coeff_map(even.coeff_monomial(c**k), variables)})
    for k in range(4):
        eqs.append({"label": f"sin*cos^{k}", "terms": coeff_map(odd.coeff_monomial(c**k), variables)})
    return {"name": "sine-gordon N=2", "variables": [str(v) for v in variables], "equations": eqs}


def mefm_system(M, aux):
    N = M + 2
    P = sp.symbols(f"P0:{N + 1}")
    Q = sp.symbols(f"Q0:{M + 1}")
    t, s = {"FULL": (tau, sigma), "SIGMA0": (tau, 0), "DISCRIM0": (tau, tau**2 / 4), "BOTH0": (0, 0)}[aux]
    E = sp.Function("E")(xi)
    num = sum(P[i] * E**i for i in range(N + 1))
    den = sum(Q[j] * E**j for j in range(M + 1))
    r = scaled_ode(num / den) * den**3
    flow = -(E**2 + t * E + s)
    r = r.subs(sp.Derivative(E, (xi, 2)), sp.diff(flow, xi)).subs(sp.Derivative(E, xi), flow)
    r = r.subs(sp.Derivative(E, xi), flow)
    e = sp.Symbol("e")
    r = sp.Poly(sp.cancel(sp.expand(r.subs(E, e))), e)
    params = MATERIAL + {"FULL": [tau, sigma], "SIGMA0": [tau], "DISCRIM0": [tau], "BOTH0": []}[aux]
    variables = list(P) + list(Q) + [lam, mu] + params
    eqs = [{"label": f"E^{k}", "terms": coeff_map(r.coeff_monomial(e**k), variables)} for k in range(r.degree() + 1)]
    return {"name": f"mefm M={M} {aux}", "variables": [str(v) for v in variables], "equations": eqs}


def main():
    out = pathlib.Path(__file__).resolve().parent.parent / "golden"
    out.mkdir(exist_ok=True)
    systems = {"sg_system.json": sg_system(),
               "mefm_m1_full.json": mefm_system(1, "FULL"),
               "mefm_m1_sigma0.json": mefm_system(1, "SIGMA0"),
               "mefm_m2_discrim0.json": mefm_system(2, "DISCRIM0"),
               "mefm_m3_both0.json": mefm_system(3, "BOTH0")}
    for name, sys in systems.items():
        (out / name).write_text(json.dumps(sys, indent=1, sort_keys=True) + "\n")
        print(name, len(sys["equations"]), "equations")


if __name__ == "__main__":
    main()
