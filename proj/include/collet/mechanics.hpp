#pragma once

// Castigliano statics of one loading step. The jaw is a curved cantilever
// clamped at theta = gamma. The adaptor pushes on it at the contact angle
// beta with a horizontal force F_X and a vertical force F_Y (both pointing
// inward), and a virtual vertical force V at the tip extracts the tip
// deflection. Only bending energy is counted and the arc element is
// r(theta) d(theta).

#include <cmath>
#include <numbers>

#include "collet/errors.hpp"
#include "collet/geometry.hpp"

namespace collet {

/// Partial derivatives of the internal moment at one station.
template <typename Scalar>
struct MomentArms {
    Scalar dM_dFy;
    Scalar dM_dFx;
    Scalar dM_dV;
};

/// Moment arms of F_Y, F_X and V at station theta for a load applied at beta.
/// The contact-force arms vanish beyond the load point.
template <typename Scalar>
MomentArms<Scalar> moment_terms(Scalar a, Scalar b, Scalar theta, Scalar beta) {
    const Scalar r = radius_at(a, b, theta);
    const Scalar x = r * std::cos(theta);
    if (theta > beta) {
        return {Scalar(0), Scalar(0), x};
    }
    const Scalar rb = radius_at(a, b, beta);
    return {x - rb * std::cos(beta), rb * std::sin(beta) - r * std::sin(theta), x};
}

/// F_Y / F_X for a contact force normal to the ellipse at beta.
template <typename Scalar>
Scalar force_ratio(Scalar a, Scalar b, Scalar beta) {
    detail::require_axes(a, b, "force_ratio");
    if (!(beta >= 0)) {
        throw DomainError("force_ratio: negative contact angle");
    }
    const Scalar ratio = (a * a) / (b * b) * std::tan(beta);
    if (!(beta < std::numbers::pi_v<Scalar> / 2) || !std::isfinite(ratio) || ratio > Scalar(1e12)) {
        throw UnboundedRatio("force_ratio: contact at the apex, force ratio unbounded");
    }
    return ratio;
}

/// Flexibility integrals over [gamma, beta] (mm/N):
///   a_x, a_y give the contact deflection, b_x, b_y the tip deflection,
///   per unit F_X and F_Y respectively.
struct ComplianceCoefficients {
    double a_x = 0;
    double a_y = 0;
    double b_x = 0;
    double b_y = 0;
};

struct ContactForces {
    double F_X = 0;
    double F_Y = 0;
};

/// Per-step contact kinematics and statics.
struct ContactSolution {
    double beta = 0;
    double phi = 0;
    double gap = 0;  ///< imposed contact deflection r(phi) sin(phi) - d/2
    double ratio = 0;
    ComplianceCoefficients coeffs;
    ContactForces forces;
    double delta_tip_step = 0;
};

/// Moment arms with the station range checked against the jaw.
MomentArms<double> moment_terms(const ColletGeometry& geom, const EllipseState& state, double theta,
                                double beta);

ComplianceCoefficients compliance_coefficients(const ColletGeometry& geom, const EllipseState& state,
                                               double beta);

/// Solves F_X a_x + F_Y a_y = gap together with F_Y = ratio F_X.
ContactForces solve_contact_forces(const ComplianceCoefficients& k, double ratio, double gap);

/// Tip deflection produced by imposing `gap` at the contact point.
/// E and t cancel, so the result depends on geometry alone.
double tip_deflection_step(const ComplianceCoefficients& k, double ratio, double gap);

/// Full step: contact angle on the current ellipse, next contact angle after
/// the adaptor slides `delta_step`, imposed gap, forces and tip increment.
ContactSolution solve_step(const ColletGeometry& geom, const EllipseState& state, double delta_step);

/// Bending strain energy U = int M^2 / (2 E I) r d(theta) over [gamma, pi/2]
/// for contact forces at beta and a tip force V.
double strain_energy(const ColletGeometry& geom, const EllipseState& state, double beta,
                     const ContactForces& forces, double V);

}  // namespace collet
