#pragma once

#include "rodwave/cas/algebra.hpp"
#include "rodwave/cas/ratfunc.hpp"
#include "rodwave/materials.hpp"

#include "json.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rodwave::cas {

enum class BalanceKind { SineGordon, Mefm };

struct BalanceResult {
    int N;
    std::optional<int> M;
};

/// SineGordon: N = 2. Mefm: N = M + 2 (u'' against u^2); throws std::invalid_argument for M < 1.
BalanceResult balance(BalanceKind kind, std::optional<int> M = std::nullopt);

/// Auxiliary flow used for E = exp(-phi).
enum class AuxKind {
    Full,      ///< E' = -(E^2 + tau E + sigma)
    Sigma0,    ///< sigma = 0
    Discrim0,  ///< sigma = tau^2 / 4
    Both0,     ///< tau = sigma = 0
};

std::string to_string(AuxKind a);
/// "FULL", "SIGMA0", "DISCRIM0", "BOTH0" (case-insensitive); throws std::invalid_argument.
AuxKind parse_aux_kind(std::string_view text);

/// Coefficient equations of the reduced ODE, each multiplied by 2 beta1 so that every
/// coefficient is polynomial in the material symbols n1, delta, beta1, alpha1, alpha2, epsilon.
struct AlgebraicSystem {
    std::string name;
    std::vector<std::string> unknowns;
    std::vector<std::string> parameters;
    std::vector<std::string> labels;  ///< one per equation, e.g. "cos^3", "sin*cos^1", "E^5"
    std::vector<MPoly> equations;

    int equation_count() const { return static_cast<int>(equations.size()); }
    int nonzero_equation_count() const;
    int unknown_count() const { return static_cast<int>(unknowns.size()); }
    /// unknowns followed by parameters: the exponent order used in serialization.
    std::vector<std::string> variables() const;
};

/// N = 2 ansatz A0 + A1 c + A2 c^2 + s (B1 + B2 c): coefficients of c^0..c^4 and s c^0..s c^3.
AlgebraicSystem build_sg_system();

/// Quotient ansatz with deg P = M + 2, deg Q = M; the ODE times Q^3, collected in E.
/// Throws std::invalid_argument for M < 1.
AlgebraicSystem build_mefm_system(int M, AuxKind aux);

/// The claimed counts (M + 7, 2(M + 3)).
std::pair<int, int> claimed_counts(int M);

/// Replaces the material symbols by exact values.
AlgebraicSystem with_material(const AlgebraicSystem& sys, const DerivedParameters& dp, const Rational& delta,
                              const Rational& epsilon);

/// Rewrites n1, beta1, alpha1, alpha2, delta, epsilon to exact values, for Assignment::rewrites.
std::map<std::string, std::string> material_rewrites(const DerivedParameters& dp, const Rational& delta,
                                                     const Rational& epsilon);

/// Values for a candidate solution. A value equal to the unknown's own name leaves it free;
/// "sqrt(expr)" (optionally signed) binds only the unknown's square, which is all the systems use
/// for lambda and mu.
struct Assignment {
    std::map<std::string, std::string> values;
    /// Parameter rewrites applied to the system and to the values first (e.g. sigma).
    std::map<std::string, std::string> rewrites;
    /// Symbols standing for square roots: name -> radicand. Residual numerators are reduced
    /// so each occurs at most linearly.
    std::map<std::string, std::string> radicals;
};

struct CandidateResidual {
    std::string label;
    RatFunc residual;  ///< numerator is the exact residual polynomial up to the stated denominator
    bool zero;
};

/// Throws IncompleteAssignment naming any unknown without a value, and std::invalid_argument
/// for a value that refers to another bound unknown.
std::vector<CandidateResidual> check_candidate(const AlgebraicSystem& sys, const Assignment& assignment);
bool all_zero(const std::vector<CandidateResidual>& residuals);

/// {"name", "unknowns", "parameters", "variables", "equations": [{"label", "terms": {"[e0,...]": "p/q"}}]}
nlohmann::json to_json(const AlgebraicSystem& sys);
/// Coefficient map of one polynomial in the given variable order.
nlohmann::json to_json(const MPoly& p, const std::vector<std::string>& variables);

}  // namespace rodwave::cas
