#pragma once

#include "rodwave/catalog.hpp"
#include "rodwave/errors.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rodwave {

enum class Status { Pass, Fail, FlaggedErratum };
std::string to_string(Status s);

/// Sample plan for one family. With random_xi > 0 or a non-empty xi list the (x,t)
/// grid is ignored and residuals are taken directly at xi.
struct GridSpec {
    double x_min = -5, x_max = 5;
    int nx = 10;
    double t_min = -1, t_max = 1;
    int nt = 5;
    std::vector<double> xi_samples;
    int random_xi = 0;  ///< draw this many xi uniformly from [-3, 3]
    std::uint64_t seed = 0;
    double tol = 1e-9;
    double pole_floor = kDefaultPoleFloor;
    /// Residuals above tol are FLAGGED_ERRATUM once they also exceed this (formula-level
    /// error); between tol and this they are FAIL (roundoff floor).
    double erratum_threshold = 1e-6;

    /// Throws std::invalid_argument on non-finite ranges or counts < 1.
    void validate() const;
    int requested() const;
};

/// Rod-equation terms and reduced-ODE terms at one point.
struct Residual {
    Complex value;
    double scale;  ///< max |term|
    double relative() const { return std::abs(value) / std::max(scale, 1e-300); }
};

/// Phi_tt - a1 Phi_xx - (n1^2 d/2) Phi_ttxx + (n1^2 d/(2 b1)) Phi_xxxx + 6 a2 e (Phi_x^2 + Phi Phi_xx)
/// from the xi-jet with d/dx = mu d/dxi, d/dt = -lambda mu d/dxi.
Residual pde_terms(const Family& f, const Jet& u);
/// K u'' + 3 a2 e u^2 + (lambda^2 - a1) u with K = (n1^2 mu^2 d / 2)(1/b1 - lambda^2).
Residual ode_terms(const Family& f, const Jet& u);

/// Relative residuals; throw SingularPoint.
Complex pde_residual(const FamilyId& id, const FamilyInputs& in, double x, double t);
Complex ode_residual(const FamilyId& id, const FamilyInputs& in, double xi);

struct ResidualReport {
    FamilyId family;
    int points_requested = 0;
    int points_sampled = 0;
    int points_skipped_near_singularity = 0;
    double max_abs_pde_residual = 0;  ///< max |R| / max term magnitude over the sample set
    double max_abs_ode_residual = 0;
    double max_pde_absolute = 0;
    double max_ode_absolute = 0;
    Status status = Status::Fail;
    /// First point whose residual exceeded tol: (x, t) or (xi, 0) in xi mode.
    std::optional<std::pair<double, double>> first_failing_point;
    std::string first_failing_equation;  ///< "pde" or "ode"
    double printed_max_deviation = 0;    ///< max |printed - assembled| / |assembled|
    double printed_max_ode_residual = 0;
    std::string notes;
};

ResidualReport verify_family(const FamilyId& id, const FamilyInputs& in, const GridSpec& grid);

/// One report per registry entry at default_inputs, in registry order.
std::vector<ResidualReport> verify_catalog(const GridSpec& grid);

// Auxiliary equation phi' = exp(-phi) + sigma exp(phi) + tau and its closed-form sets.
enum class AuxSet { Set1, Set2, Set3, Set4, Set5 };
/// Inner factor of Sets 1-2: root/2 (consistent with the solution forms) or root/sigma
/// (as the set list is printed).
enum class InnerFactor { Half, PrintedSigma };

std::string to_string(AuxSet s);

/// |phi'(xi) - (exp(-phi) + sigma exp(phi) + tau)| for phi = ln g of the set's closed form.
/// Throws GateViolated when the set's condition fails and SingularPoint at a pole of g.
double aux_residual(AuxSet set, double tau, double sigma, double e, double xi,
                    InnerFactor inner = InnerFactor::Half);

struct AuxCheck {
    enum class Role {
        MustHold,  ///< max residual < 1e-10
        MustFail,  ///< max residual > 1e-2 (the printed /sigma inner factor)
        Verdict,   ///< outcome recorded either way
    };
    std::string name;
    Role role;
    double tau, sigma, e;
    int samples;
    double max_residual;
    bool holds;   ///< max residual < 1e-10
    bool passed;  ///< role satisfied; always true for Verdict
};

/// Sets 1, 2, 3, 5 at `samples` admissible xi in [-3, 3] (each under both gate-symmetric
/// parameter choices where applicable), the printed /sigma variant of Set 1, and Set 4.
std::vector<AuxCheck> aux_suite(int samples = 100, std::uint64_t seed = 0);

struct IdentityCheck {
    std::string name;
    double max_error;
    double tolerance;
    bool passed;
};

std::vector<IdentityCheck> identity_suite();

}  // namespace rodwave
