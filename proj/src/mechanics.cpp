#include "collet/mechanics.hpp"

#include <limits>
#include <numbers>

#include "collet/quadrature.hpp"
#include "collet/section.hpp"

namespace collet {

MomentArms<double> moment_terms(const ColletGeometry& geom, const EllipseState& state, double theta,
                                double beta) {
    if (theta < geom.gamma || theta > std::numbers::pi / 2) {
        throw DomainError("moment_terms: station outside [gamma, pi/2]");
    }
    return moment_terms(state.a, state.b, theta, beta);
}

ComplianceCoefficients compliance_coefficients(const ColletGeometry& geom, const EllipseState& state,
                                               double beta) {
    if (beta < geom.gamma) {
        throw DomainError("compliance_coefficients: contact below the jaw base");
    }
    ComplianceCoefficients k;
    if (beta == geom.gamma) {
        return k;
    }
    // R_bar grows with theta, so the section is narrowest at the base.
    (void)section_at(geom, state, geom.gamma);

    const double a = state.a;
    const double b = state.b;
    auto coefficient = [&](auto arm_product) {
        auto integrand = [&](double theta) {
            const MomentArms<double> m = moment_terms(a, b, theta, beta);
            const double EI = geom.E * section_at(geom, state, theta).I_c;
            return arm_product(m) * radius_at(a, b, theta) / EI;
        };
        return integrate(integrand, geom.gamma, beta);
    };
    using Arms = MomentArms<double>;
    k.a_x = coefficient([](const Arms& m) { return m.dM_dFx * m.dM_dFy; });
    k.a_y = coefficient([](const Arms& m) { return m.dM_dFy * m.dM_dFy; });
    k.b_x = coefficient([](const Arms& m) { return m.dM_dFx * m.dM_dV; });
    k.b_y = coefficient([](const Arms& m) { return m.dM_dFy * m.dM_dV; });
    return k;
}

namespace {

double system_denominator(const ComplianceCoefficients& k, double ratio) {
    const double denom = k.a_x + k.a_y * ratio;
    if (!(denom > std::numeric_limits<double>::min()) || !std::isfinite(denom)) {
        throw SingularSystem("contact force system is singular (a_x + a_y * ratio <= 0)");
    }
    return denom;
}

}  // namespace

ContactForces solve_contact_forces(const ComplianceCoefficients& k, double ratio, double gap) {
    if (!(gap >= 0)) {
        throw DomainError("solve_contact_forces: negative contact gap");
    }
    if (gap == 0) {
        return {};
    }
    const double fx = gap / system_denominator(k, ratio);
    return {fx, ratio * fx};
}

double tip_deflection_step(const ComplianceCoefficients& k, double ratio, double gap) {
    if (!(gap >= 0)) {
        throw DomainError("tip_deflection_step: negative contact gap");
    }
    if (gap == 0) {
        return 0.0;
    }
    return gap * (k.b_x + k.b_y * ratio) / system_denominator(k, ratio);
}

ContactSolution solve_step(const ColletGeometry& geom, const EllipseState& state, double delta_step) {
    ContactSolution s;
    s.beta = contact_angle(state.a, state.b, geom.d);
    (void)contact_x_after(state.a, state.b, s.beta, delta_step);
    s.phi = solve_next_contact_angle(state.a, state.b, s.beta, delta_step);
    s.gap = radius_at(state.a, state.b, s.phi) * std::sin(s.phi) - geom.d / 2;
    // The gap is non-negative analytically; clip rounding noise at tiny steps.
    if (s.gap < 0) {
        s.gap = 0;
    }
    s.ratio = force_ratio(state.a, state.b, s.beta);
    s.coeffs = compliance_coefficients(geom, state, s.beta);
    s.forces = solve_contact_forces(s.coeffs, s.ratio, s.gap);
    s.delta_tip_step = tip_deflection_step(s.coeffs, s.ratio, s.gap);
    return s;
}

double strain_energy(const ColletGeometry& geom, const EllipseState& state, double beta,
                     const ContactForces& forces, double V) {
    const double a = state.a;
    const double b = state.b;
    auto density = [&](double theta) {
        const MomentArms<double> m = moment_terms(a, b, theta, beta);
        const double moment = V * m.dM_dV + forces.F_Y * m.dM_dFy + forces.F_X * m.dM_dFx;
        const SectionProperties s = section_at(geom, state, theta);
        return moment * moment / (2 * geom.E * s.I_c) * radius_at(a, b, theta);
    };
    // The moment has a kink at the load point; integrate the two pieces apart.
    const double upper = std::numbers::pi / 2;
    return integrate(density, geom.gamma, beta) + integrate(density, beta, upper);
}

}  // namespace collet
