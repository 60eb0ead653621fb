#include "rodwave/cas/published.hpp"

#include <array>
#include <stdexcept>

namespace rodwave::cas {

namespace {

using S = std::string;

const S dm = "(delta*n1^2*mu^2)";
const S ab = "(alpha1*beta1)";
const S abe = "(alpha2*beta1*epsilon)";
const S ae = "(alpha2*epsilon)";
const S Dp = "(" + dm + "*(" + ab + "-1)/" + abe + ")";
const S L = "(lambda^2-alpha1)";
const S D = "(tau^2-4*sigma)";

PublishedCase sg(int n, S A0, S A2, S B2, S lambda2)
{
    PublishedCase c{n, "sg.case" + std::to_string(n), true, AuxKind::Full, {}};
    c.assignment.values = {{"A0", A0}, {"A1", "0"}, {"A2", A2}, {"B1", "0"}, {"B2", B2},
                           {"lambda", "sqrt(" + lambda2 + ")"}, {"mu", "mu"}};
    if (B2 != "0") c.assignment.radicals = {{"I", "-1"}};
    return c;
}

PublishedCase mefm(int n, AuxKind aux, std::array<S, 4> P, S Q0, S lambda, S mu)
{
    PublishedCase c{n, "mefm.case" + std::to_string(n), false, aux, {}};
    c.assignment.values = {{"P0", P[0]}, {"P1", P[1]}, {"P2", P[2]}, {"P3", P[3]}, {"Q0", Q0},
                           {"Q1", "Q1"},  {"lambda", lambda}, {"mu", mu}};
    return c;
}

std::vector<PublishedCase> build()
{
    std::vector<PublishedCase> out;
    out.push_back(sg(1, "-" + Dp + "/(3*(1+2*" + dm + "))", Dp + "/(1+2*" + dm + ")", "0",
                     "-(-" + ab + "-2*" + dm + ")/(beta1*(1+2*" + dm + "))"));
    out.push_back(sg(2, Dp + "/(-1+2*" + dm + ")", "-" + Dp + "/(-1+2*" + dm + ")", "0",
                     "-(" + ab + "-2*" + dm + ")/(-beta1*(1-2*" + dm + "))"));
    for (int n : {3, 4}) {
        const S sign = n == 3 ? "" : "-";
        out.push_back(sg(n, Dp + "/(" + dm + "-2)", "-" + Dp + "/(" + dm + "-2)", sign + "I*" + Dp + "/(" + dm + "-2)",
                         "-(2*" + ab + "-" + dm + ")/(beta1*(-2+" + dm + "))"));
    }
    for (int n : {5, 6}) {
        const S sign = n == 5 ? "" : "-";
        out.push_back(sg(n, "-2*" + Dp + "/(3*(" + dm + "+2))", Dp + "/(" + dm + "+2)",
                         sign + "I*" + Dp + "/(" + dm + "+2)", "-(-2*" + ab + "-" + dm + ")/(beta1*(2+" + dm + "))"));
    }

    const S mu78 = "2*beta1*" + L + "/(n1^2*delta*(lambda^2*beta1-1)*" + D + ")";
    out.push_back(mefm(7, AuxKind::Full,
                       {"2*Q0*sigma*" + L + "/(" + ae + "*" + D + ")",
                        "2*" + L + "*(Q0*tau+Q1*sigma)/(" + ae + "*" + D + ")",
                        "2*" + L + "*(Q0+Q1*tau)/(" + ae + "*" + D + ")", "2*Q1*" + L + "/(" + ae + "*" + D + ")"},
                       "Q0", "lambda", "sqrt(" + mu78 + ")"));
    out.push_back(mefm(8, AuxKind::Full,
                       {"-Q0*(tau^2+2*sigma)*" + L + "/(3*" + ae + "*" + D + ")",
                        "-" + L + "*(6*Q0*tau+(tau^2+2*sigma)*Q1)/(3*" + ae + "*" + D + ")",
                        "-2*" + L + "*(Q0+Q1*tau)/(" + ae + "*" + D + ")", "-2*Q1*" + L + "/(" + ae + "*" + D + ")"},
                       "Q0", "lambda", "sqrt(-" + mu78 + ")"));

    // r stands for sqrt(tau^2 - 4 sigma); sigma is rewritten in terms of it.
    const S G = "(2+" + dm + "*" + D + ")";
    for (int n : {9, 10}) {
        const S inner = n == 9 ? "(tau^2+r*tau-4*sigma)" : "(-tau^2+r*tau+4*sigma)";
        auto c = mefm(n, AuxKind::Full,
                      {dm + "*Q1*r*(" + ab + "-1)*" + inner + "/(6*" + abe + "*" + G + ")",
                       dm + "*Q1*(" + ab + "-1)*" + D + "/(3*" + abe + "*" + G + ")", "0", "0"},
                      n == 9 ? "(tau+r)*Q1/2" : "(tau-r)*Q1/2",
                      "sqrt((2*" + ab + "-4*" + dm + "*sigma+" + dm + "*tau^2)/(beta1*" + G + "))", "mu");
        c.assignment.rewrites = {{"sigma", "(tau^2-r^2)/4"}};
        out.push_back(c);
    }

    // sL stands for sqrt(Lambda).
    const S Lam = "(-12*Q0^4+24*Q0^3*Q1*tau+24*Q1^3*Q0*sigma*tau-12*Q0^2*Q1^2*tau^2-24*Q0^2*Q1^2*sigma"
                  "-8*Q1^4*tau^2*sigma+4*Q1^4*sigma^2+Q1^4*tau^4)";
    const S lam1112 = "sqrt((" + ab + "+1)/(2*beta1))";
    {
        auto c = mefm(11, AuxKind::Full,
                      {"(" + ab + "-1)/(12*" + abe + "*" + Lam +
                           ")*(-12*Q0^5+24*Q1*tau*Q0^4+(-24*Q1^2*sigma+6*sL-12*Q1^2*tau^2)*Q0^3"
                           "+(-12*Q1*tau*sL+24*sigma*tau*Q1^3)*Q0^2"
                           "+(5*Q1^2*tau^2*sL+10*Q1^2*sigma*sL+4*Q1^4*sigma^2+Q1^4*tau^4-8*Q1^4*tau^2*sigma)*Q0"
                           "-6*Q1^3*sigma*tau*sL)",
                       "Q1*(" + ab + "-1)*(sL-Q1^2*tau^2-2*Q1^2*sigma+6*Q0*Q1*tau-6*Q0^2)/(12*" + abe + "*sL)", "0",
                       "0"},
                      "Q0", lam1112, "sqrt(-2*Q1^2/(delta*n1^2*sL))");
        c.assignment.radicals = {{"sL", Lam}};
        out.push_back(c);
    }
    {
        auto c = mefm(12, AuxKind::Full,
                      {"-(" + ab + "-1)/(12*" + abe + "*" + Lam +
                           ")*(12*Q0^5-24*Q1*tau*Q0^4+(24*Q1^2*sigma+6*sL+12*Q1^2*tau^2)*Q0^3"
                           "+(-12*Q1*tau*sL-24*sigma*tau*Q1^3)*Q0^2"
                           "+(5*Q1^2*tau^2*sL+10*Q1^2*sigma*sL-4*Q1^4*sigma^2-Q1^4*tau^4+8*Q1^4*tau^2*sigma)*Q0"
                           "-6*Q1^3*sigma*tau*sL)",
                       "Q1*(" + ab + "-1)*(sL+Q1^2*tau^2+2*Q1^2*sigma-6*Q0*Q1*tau+6*Q0^2)/(12*" + abe + "*sL)", "0",
                       "0"},
                      "Q0", lam1112, "sqrt(2*Q1^2/(delta*n1^2*sL))");
        c.assignment.radicals = {{"sL", Lam}};
        out.push_back(c);
    }

    const S d13 = "(" + abe + "*(" + dm + "*tau^2-2))";
    out.push_back(mefm(13, AuxKind::Sigma0,
                       {"0", "-2*Q0*" + dm + "*tau*(" + ab + "-1)/" + d13,
                        "-2*" + dm + "*(Q0+tau*Q1)*(" + ab + "-1)/" + d13, "-2*Q1*" + dm + "*(" + ab + "-1)/" + d13},
                       "Q0", "sqrt(-(2*" + ab + "-" + dm + "*tau^2)/(" + dm + "*tau^2*beta1-2*beta1))", "mu"));
    const S d14 = "(" + abe + "*(" + dm + "*tau^2+2))";
    out.push_back(mefm(14, AuxKind::Sigma0,
                       {"Q0*" + dm + "*tau^2*(" + ab + "-1)/(3*" + d14 + ")",
                        dm + "*tau*(-6*Q0-Q1*tau+Q1*" + ab + "*tau+6*Q0*" + ab + ")/(3*" + d14 + ")",
                        "2*" + dm + "*(Q0+Q1*tau)*(" + ab + "-1)/" + d14, "2*Q1*" + dm + "*(" + ab + "-1)/" + d14},
                       "Q0", "sqrt(-(-2*" + ab + "-" + dm + "*tau^2)/(" + dm + "*tau^2*beta1+2*beta1))", "mu"));
    out.push_back(mefm(15, AuxKind::Sigma0,
                       {"Q0*(-lambda^2+alpha1)/(3*" + ae + ")", "Q1*(-lambda^2+alpha1)/(3*" + ae + ")", "0", "0"}, "Q0",
                       "lambda", "mu"));
    return out;
}

}  // namespace

const std::vector<PublishedCase>& published_cases()
{
    static const std::vector<PublishedCase> cases = build();
    return cases;
}

const PublishedCase& published_case(const std::string& name)
{
    for (const auto& c : published_cases())
        if (c.name == name) return c;
    throw std::invalid_argument("no published case '" + name + "'");
}

AlgebraicSystem system_for(const PublishedCase& c)
{
    return c.sine_gordon ? build_sg_system() : build_mefm_system(1, c.aux);
}

}  // namespace rodwave::cas
