#include "rodwave/cas/system.hpp"

#include "rodwave/errors.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <set>
#include <stdexcept>

namespace rodwave::cas {

namespace {

const std::vector<std::string> kMaterialSymbols = {"n1", "delta", "beta1", "alpha1", "alpha2", "epsilon"};

MPoly v(std::string_view name, int k = 1) { return MPoly::var(name, k); }

// 2 beta1 times the ODE coefficients: K2 u'' + N2 u^2 + L2 u.
struct ScaledOde {
    MPoly K2 = v("n1", 2) * v("mu", 2) * v("delta") * (MPoly(1L) - v("beta1") * v("lambda", 2));
    MPoly N2 = MPoly(6L) * v("alpha2") * v("epsilon") * v("beta1");
    MPoly L2 = MPoly(2L) * v("beta1") * (v("lambda", 2) - v("alpha1"));
};

}  // namespace

BalanceResult balance(BalanceKind kind, std::optional<int> M)
{
    if (kind == BalanceKind::SineGordon) return {2, std::nullopt};
    const int m = M.value_or(1);
    if (m < 1) throw std::invalid_argument("MEFM balance needs M >= 1");
    return {m + 2, m};
}

std::string to_string(AuxKind a)
{
    switch (a) {
    case AuxKind::Full: return "FULL";
    case AuxKind::Sigma0: return "SIGMA0";
    case AuxKind::Discrim0: return "DISCRIM0";
    case AuxKind::Both0: return "BOTH0";
    }
    return "?";
}

AuxKind parse_aux_kind(std::string_view text)
{
    std::string s(text);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::toupper(c); });
    for (AuxKind a : {AuxKind::Full, AuxKind::Sigma0, AuxKind::Discrim0, AuxKind::Both0})
        if (to_string(a) == s) return a;
    throw std::invalid_argument("unknown auxiliary kind '" + std::string(text) + "'");
}

int AlgebraicSystem::nonzero_equation_count() const
{
    return static_cast<int>(std::count_if(equations.begin(), equations.end(), [](const MPoly& p) { return !p.is_zero(); }));
}

std::vector<std::string> AlgebraicSystem::variables() const
{
    std::vector<std::string> out = unknowns;
    out.insert(out.end(), parameters.begin(), parameters.end());
    return out;
}

AlgebraicSystem build_sg_system()
{
    const ScaledOde ode;
    const TrigElement u{Poly({v("A0"), v("A1"), v("A2")}), Poly({v("B1"), v("B2")})};
    const TrigElement u2 = u.derivative().derivative();
    const TrigElement sq = u * u;
    const Poly even = ode.K2 * u2.A + ode.N2 * sq.A + ode.L2 * u.A;
    const Poly odd = ode.K2 * u2.B + ode.N2 * sq.B + ode.L2 * u.B;

    AlgebraicSystem sys;
    sys.name = "sine-gordon N=2";
    sys.unknowns = {"A0", "A1", "A2", "B1", "B2", "lambda", "mu"};
    sys.parameters = kMaterialSymbols;
    for (int k = 0; k <= 4; ++k) {
        sys.labels.push_back("cos^" + std::to_string(k));
        sys.equations.push_back(even[k]);
    }
    for (int k = 0; k <= 3; ++k) {
        sys.labels.push_back("sin*cos^" + std::to_string(k));
        sys.equations.push_back(odd[k]);
    }
    return sys;
}

AlgebraicSystem build_mefm_system(int M, AuxKind aux)
{
    const int N = balance(BalanceKind::Mefm, M).N;
    const ScaledOde ode;

    std::vector<std::string> unknowns;
    std::vector<MPoly> pc, qc;
    for (int i = 0; i <= N; ++i) {
        unknowns.push_back("P" + std::to_string(i));
        pc.push_back(v(unknowns.back()));
    }
    for (int j = 0; j <= M; ++j) {
        unknowns.push_back("Q" + std::to_string(j));
        qc.push_back(v(unknowns.back()));
    }
    unknowns.push_back("lambda");
    unknowns.push_back("mu");

    MPoly tau, sigma;
    std::vector<std::string> params = kMaterialSymbols;
    switch (aux) {
    case AuxKind::Full:
        tau = v("tau");
        sigma = v("sigma");
        params.push_back("tau");
        params.push_back("sigma");
        break;
    case AuxKind::Sigma0:
        tau = v("tau");
        params.push_back("tau");
        break;
    case AuxKind::Discrim0:
        tau = v("tau");
        sigma = MPoly(Rational(1, 4)) * v("tau", 2);
        params.push_back("tau");
        break;
    case AuxKind::Both0: break;
    }

    const EElement u{Poly(pc), Poly(qc), tau, sigma};
    const Poly& P = u.P;
    const Poly& Q = u.Q;
    const Poly F = u.flow();
    // u' = F W / Q^2, Q^3 u'' = F [(F' W + F W') Q - 2 F W Q'] (primes in E).
    const Poly W = P.derivative() * Q - P * Q.derivative();
    const Poly q3u2 = F * ((F.derivative() * W + F * W.derivative()) * Q - Poly::constant(MPoly(2L)) * F * W * Q.derivative());
    const Poly cleared = ode.K2 * q3u2 + ode.N2 * (P * P * Q) + ode.L2 * (P * Q * Q);

    AlgebraicSystem sys;
    sys.name = "mefm M=" + std::to_string(M) + " " + to_string(aux);
    sys.unknowns = std::move(unknowns);
    sys.parameters = std::move(params);
    for (int k = 0; k <= cleared.degree(); ++k) {
        sys.labels.push_back("E^" + std::to_string(k));
        sys.equations.push_back(cleared[k]);
    }
    return sys;
}

std::pair<int, int> claimed_counts(int M)
{
    if (M < 1) throw std::invalid_argument("claimed counts need M >= 1");
    return {M + 7, 2 * (M + 3)};
}

AlgebraicSystem with_material(const AlgebraicSystem& sys, const DerivedParameters& dp, const Rational& delta,
                              const Rational& epsilon)
{
    const std::pair<const char*, Rational> values[] = {{"n1", dp.n1},         {"beta1", dp.beta1},
                                                       {"alpha1", dp.alpha1}, {"alpha2", dp.alpha2},
                                                       {"delta", delta},      {"epsilon", epsilon}};
    AlgebraicSystem out = sys;
    for (auto& eq : out.equations) {
        RatFunc f(eq);
        for (const auto& [name, value] : values) f = substitute(f, symbol(name), RatFunc(MPoly(value)));
        eq = f.num;  // constant denominators are folded into the numerator
    }
    std::erase_if(out.parameters, [](const std::string& p) {
        return std::find(kMaterialSymbols.begin(), kMaterialSymbols.end(), p) != kMaterialSymbols.end();
    });
    return out;
}

std::map<std::string, std::string> material_rewrites(const DerivedParameters& dp, const Rational& delta,
                                                     const Rational& epsilon)
{
    return {{"n1", rodwave::to_string(dp.n1)},         {"beta1", rodwave::to_string(dp.beta1)},
            {"alpha1", rodwave::to_string(dp.alpha1)}, {"alpha2", rodwave::to_string(dp.alpha2)},
            {"delta", rodwave::to_string(delta)},      {"epsilon", rodwave::to_string(epsilon)}};
}

namespace {

struct Binding {
    RatFunc value;
    bool square;
};

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<CandidateResidual> check_candidate(const AlgebraicSystem& sys, const Assignment& assignment)
{
    std::vector<std::string> missing;
    for (const auto& u : sys.unknowns)
        if (!assignment.values.count(u)) missing.push_back(u);
    if (!missing.empty()) {
        std::string list;
        for (const auto& m : missing) list += (list.empty() ? "" : ", ") + m;
        throw IncompleteAssignment("no value for " + list);
    }

    std::vector<std::pair<Var, RatFunc>> rewrites;
    for (const auto& [name, expr] : assignment.rewrites) rewrites.emplace_back(symbol(name), parse_expression(expr));
    auto rewrite = [&](RatFunc f) {
        for (const auto& [var, value] : rewrites) f = substitute(f, var, value);
        return f;
    };

    static const std::regex root(R"(^[+-]?\s*sqrt\s*\((.*)\)$)");
    std::vector<std::pair<Var, Binding>> bindings;
    std::set<Var> bound;
    for (const auto& u : sys.unknowns) {
        const std::string text = trim(assignment.values.at(u));
        if (text == u) continue;
        std::smatch m;
        Binding b = std::regex_match(text, m, root) ? Binding{parse_expression(m[1].str()), true}
                                                    : Binding{parse_expression(text), false};
        b.value = rewrite(b.value);
        bindings.emplace_back(symbol(u), std::move(b));
        bound.insert(symbol(u));
    }
    for (const auto& [var, b] : bindings)
        for (const MPoly* p : {&b.value.num, &b.value.den})
            for (Var w : p->variables())
                if (bound.count(w))
                    throw std::invalid_argument("value of " + symbol_name(var) + " refers to bound unknown " +
                                                symbol_name(w));

    std::vector<std::pair<Var, MPoly>> radicals;
    for (const auto& [name, expr] : assignment.radicals) {
        const RatFunc sq = rewrite(parse_expression(expr));
        if (!(sq.den == MPoly(1L))) throw std::invalid_argument("radicand of " + name + " must be polynomial");
        radicals.emplace_back(symbol(name), sq.num);
    }

    std::vector<CandidateResidual> out;
    for (std::size_t i = 0; i < sys.equations.size(); ++i) {
        RatFunc f = rewrite(RatFunc(sys.equations[i]));
        for (const auto& [var, b] : bindings) f = b.square ? substitute_square(f, var, b.value) : substitute(f, var, b.value);
        for (const auto& [s, sq] : radicals) f.num = reduce_radical(f.num, s, sq);
        out.push_back({sys.labels[i], f, f.num.is_zero()});
    }
    return out;
}

bool all_zero(const std::vector<CandidateResidual>& residuals)
{
    return std::all_of(residuals.begin(), residuals.end(), [](const CandidateResidual& r) { return r.zero; });
}

nlohmann::json to_json(const MPoly& p, const std::vector<std::string>& variables)
{
    std::vector<Var> order;
    for (const auto& name : variables) order.push_back(symbol(name));
    nlohmann::json terms = nlohmann::json::object();
    for (const auto& [m, c] : p.terms()) {
        std::vector<int> e(order.size(), 0);
        int covered = 0, total = 0;
        for (int x : m) total += x;
        for (std::size_t i = 0; i < order.size(); ++i) {
            const Var w = order[i];
            e[i] = w < static_cast<int>(m.size()) ? m[w] : 0;
            covered += e[i];
        }
        if (covered != total) throw std::invalid_argument("polynomial has a symbol outside the variable list");
        terms[nlohmann::json(e).dump()] = rodwave::to_string(c);
    }
    return terms;
}

nlohmann::json to_json(const AlgebraicSystem& sys)
{
    nlohmann::json j;
    j["name"] = sys.name;
    j["unknowns"] = sys.unknowns;
    j["parameters"] = sys.parameters;
    j["variables"] = sys.variables();
    j["equation_count"] = sys.equation_count();
    j["unknown_count"] = sys.unknown_count();
    nlohmann::json eqs = nlohmann::json::array();
    const auto vars = sys.variables();
    for (std::size_t i = 0; i < sys.equations.size(); ++i)
        eqs.push_back({{"label", sys.labels[i]}, {"terms", to_json(sys.equations[i], vars)}});
    j["equations"] = eqs;
    return j;
}

}  // namespace rodwave::cas
