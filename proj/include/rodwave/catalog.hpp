#pragma once

#include "rodwave/family.hpp"
#include "rodwave/jet.hpp"
#include "rodwave/materials.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace rodwave {

/// Free inputs of a family. Fields a family does not declare free are ignored.
struct FamilyInputs {
    DerivedParameters material;
    Rational delta;
    Rational epsilon;
    double mu = 0.25;
    double lambda = 2.0;
    double tau = 3.0;
    double sigma = 1.0;
    double e = 2.0;
    double q0 = 2.0;
    double q1 = 2.0;
};

/// Material part of FamilyInputs from physical constants; other fields keep defaults.
FamilyInputs inputs_from(const MaterialConstants& mc);

/// Figure set A material with (tau, sigma) chosen so the family's gate holds:
/// (3, 1) for hyperbolic forms, (5/4, 9/4) for trigonometric and the constant
/// Cases 9/10 form, (5/2, 0) for exponential forms and Case 15.
FamilyInputs default_inputs(const FamilyId& id);

struct CoefficientSet {
    FamilyId id;
    // Sine-Gordon ansatz u = A0 + A1 c + B1 s + A2 c^2 + B2 c s.
    Complex A0, A1, A2, B1, B2;
    // Exp-function ansatz u = (P0 + P1 E + P2 E^2 + P3 E^3) / (Q0 + Q1 E), E = exp(-phi).
    std::array<Complex, 4> P{};
    Complex Q0, Q1;
    Complex lambda;
    Complex mu;
    std::optional<Complex> Lambda;  // Cases 11-12 only
    double tau = 0.0;
    double sigma = 0.0;
    double e = 0.0;
};

/// Throws ConstraintViolated when the family's gate fails and DegenerateDenominator
/// when a coefficient formula divides by zero.
CoefficientSet coefficient_set(const FamilyId& id, const FamilyInputs& in);

/// c_x x + c_t t + c_0.
struct AffineForm {
    Complex cx, ct, c0;
    Complex at(double x, double t) const { return cx * x + ct * t + c0; }
};

/// A named inner argument (xi, xi1 ... xi9, or the argument of the Cases 11-12 forms).
struct InnerArgument {
    std::string name;
    AffineForm form;
};

enum class LocusKind { Point, Periodic, Asymptotic };

/// Excluded set in the xi-plane: {xi0 + k period}; Point has period 0; Asymptotic marks
/// a degeneracy approached only as Re(xi) -> +-infinity and has no finite distance.
struct Locus {
    LocusKind kind;
    Complex xi0;
    Complex period;
    std::string description;

    double distance(Complex xi) const;
};

/// Minimum distance from xi to any finite locus; +inf if there is none.
double singular_distance(const std::vector<Locus>& loci, Complex xi);

/// A family bound to its inputs. Coefficients are computed once at construction.
class Family {
public:
    Family(const FamilyId& id, const FamilyInputs& in, double pole_floor = kDefaultPoleFloor);

    const FamilyId& id() const { return cs_.id; }
    const FamilyInputs& inputs() const { return in_; }
    const CoefficientSet& coefficients() const { return cs_; }
    double pole_floor() const { return floor_; }

    /// mu (x - lambda t).
    Complex xi(double x, double t) const { return cs_.mu * (x - cs_.lambda * t); }

    // Assembled from the coefficient set through the ansatz. All throw SingularPoint.
    Complex value_at_xi(Complex xi) const;
    Jet jet_at_xi(Complex xi) const;
    Complex value(double x, double t) const { return value_at_xi(xi(x, t)); }
    Jet jet(double x, double t) const { return jet_at_xi(xi(x, t)); }

    // The closed form as printed, with the same lambda, mu and branch.
    Complex printed_at_xi(Complex xi) const;
    Jet printed_jet_at_xi(Complex xi) const;
    Complex printed_value(double x, double t) const { return printed_at_xi(xi(x, t)); }

    const std::vector<Locus>& singularities() const { return loci_; }
    std::vector<InnerArgument> inner_arguments() const;

private:
    void check_point(Complex xi) const;

    FamilyInputs in_;
    CoefficientSet cs_;
    double floor_;
    std::vector<Locus> loci_;
};

Complex evaluate(const FamilyId& id, const FamilyInputs& in, double x, double t);
Complex evaluate_at_xi(const FamilyId& id, const FamilyInputs& in, Complex xi);
Jet evaluate_jet(const FamilyId& id, const FamilyInputs& in, double x, double t);
Complex evaluate_printed(const FamilyId& id, const FamilyInputs& in, double x, double t);
std::vector<Locus> singularities(const FamilyId& id, const FamilyInputs& in);

/// Cases 9-10 fix lambda through mu; returns the positive mu giving the requested
/// lambda^2. Throws DegenerateDenominator, or ConstraintViolated if mu^2 <= 0.
double mu_for_lambda(const FamilyInputs& in, double lambda);

std::string to_string(LocusKind k);

}  // namespace rodwave
