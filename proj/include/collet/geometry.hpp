#pragma once

// Polar-ellipse description of a collet jaw and the contact kinematics between
// the jaw and the adaptor ring as it is screwed forward.
//
// Angles are radians measured from the +x axis (the jaw base direction); the
// jaw runs from theta = gamma at its base to theta = pi/2 at its tip. Lengths
// are millimetres throughout.

#include <cmath>
#include <numbers>
#include <string>

#include "collet/errors.hpp"
#include "collet/quadrature.hpp"

namespace collet {

/// Design parameters of one jaw plus its adaptor and thread.
struct ColletGeometry {
    double a = 34.0;             ///< ellipse semi-major axis
    double b0 = 26.5;            ///< undeformed semi-minor axis
    double c = 4.0;              ///< chuck slot width
    double d = 34.0;             ///< adaptor inner diameter
    double t = 2.0;              ///< jaw wall thickness
    double gamma = 0.2;          ///< base angle of the jaw arc [rad]
    double E = 1700.0;           ///< elastic modulus [MPa]
    int leaves = 4;              ///< number of jaws
    double rest_opening = 53.0;  ///< knob opening diameter at rest
    double pitch = 1.0;          ///< thread pitch [mm/rev]

    friend bool operator==(const ColletGeometry&, const ColletGeometry&) = default;
};

/// Current deformed ellipse during the incremental march.
struct EllipseState {
    double a;
    double b;
    int step = 0;
};

/// Lower bound on the base angle; keeps the (r sin theta)^3 section term away from zero.
inline constexpr double kMinBaseAngle = 0.05;

/// Throws ValidationError if `geom` violates any design invariant.
void validate(const ColletGeometry& geom);

/// True when the adaptor touches the jaw exactly at the apex (d == 2 b0).
bool apex_contact(const ColletGeometry& geom);

inline EllipseState initial_state(const ColletGeometry& geom) { return {geom.a, geom.b0, 0}; }

namespace detail {

template <typename Scalar>
void require_axes(Scalar a, Scalar b, const char* where) {
    if (!(a > 0) || !(b > 0)) {
        throw DomainError(std::string(where) + ": ellipse axes must be positive");
    }
}

template <typename Scalar>
void require_quadrant(Scalar theta, const char* where) {
    if (!(theta >= 0) || !(theta <= std::numbers::pi_v<Scalar> / 2)) {
        throw DomainError(std::string(where) + ": angle outside [0, pi/2]");
    }
}

}  // namespace detail

/// Polar radius of the ellipse x^2/a^2 + y^2/b^2 = 1 at angle theta.
template <typename Scalar>
Scalar radius_at(Scalar a, Scalar b, Scalar theta) {
    detail::require_axes(a, b, "radius_at");
    detail::require_quadrant(theta, "radius_at");
    const Scalar bc = b * std::cos(theta);
    const Scalar as = a * std::sin(theta);
    return a * b / std::sqrt(bc * bc + as * as);
}

/// Angle at which the ellipse reaches height d/2, i.e. where the adaptor's
/// inner edge touches the jaw. Returns pi/2 for the apex case d == 2b.
template <typename Scalar>
Scalar contact_angle(Scalar a, Scalar b, Scalar d) {
    detail::require_axes(a, b, "contact_angle");
    if (!(d > 0)) {
        throw DomainError("contact_angle: adaptor diameter must be positive");
    }
    if (d > 2 * b) {
        throw DomainError("contact_angle: adaptor diameter exceeds the jaw opening, no contact");
    }
    // beta = acot((a / (b d)) sqrt(4 b^2 - d^2)); atan2 keeps the apex case exact.
    const Scalar cot_beta = a / (b * d) * std::sqrt((2 * b - d) * (2 * b + d));
    return std::atan2(Scalar(1), cot_beta);
}

/// Abscissa of the contact point after the adaptor advances by delta.
template <typename Scalar>
Scalar contact_x_after(Scalar a, Scalar b, Scalar beta, Scalar delta) {
    if (!(delta >= 0)) {
        throw DomainError("contact_x_after: adaptor displacement must be non-negative");
    }
    const Scalar x = radius_at(a, b, beta) * std::cos(beta) - delta;
    if (x < 0) {
        throw NonPhysicalState("contact_x_after: adaptor advanced past the jaw apex");
    }
    return x;
}

/// Semi-minor axis of the ellipse (fixed semi-major a) that passes through the
/// advanced contact point (r(beta) cos(beta) - delta, d/2).
template <typename Scalar>
Scalar update_minor_axis(Scalar a, Scalar b, Scalar beta, Scalar delta, Scalar d) {
    const Scalar x = radius_at(a, b, beta) * std::cos(beta) - delta;
    const Scalar arg = (a - x) * (a + x);
    if (!(arg > 0)) {
        throw DomainError("update_minor_axis: contact abscissa outside the ellipse");
    }
    return a * d / (2 * std::sqrt(arg));
}

/// Arc length along the jaw between two polar angles, integrating r(theta).
template <typename Scalar>
Scalar arc_length(Scalar a, Scalar b, Scalar theta0, Scalar theta1) {
    detail::require_axes(a, b, "arc_length");
    detail::require_quadrant(theta0, "arc_length");
    detail::require_quadrant(theta1, "arc_length");
    if (theta1 < theta0) {
        throw DomainError("arc_length: theta1 < theta0");
    }
    const Scalar a2 = a * a;
    const Scalar b2 = b * b;
    auto r = [=](Scalar th) {
        const Scalar c = std::cos(th);
        const Scalar s = std::sin(th);
        return a * b / std::sqrt(b2 * c * c + a2 * s * s);
    };
    return integrate(r, theta0, theta1);
}

/// Guaranteed absolute residual (mm) on the arc-length equation.
inline constexpr double kArcResidualTol = 1e-9;

/// Residual the bisection actually aims for. Solving well past the guarantee
/// keeps the step response smooth in delta, which the march relies on when
/// it shortens the final step to land on a stop value.
inline constexpr double kArcSolveTol = 1e-13;

/// Angle phi >= beta whose arc distance from beta equals delta. Bisection on
/// [beta, pi/2]; throws NoSolution when delta exceeds the arc left to the apex.
template <typename Scalar>
Scalar solve_next_contact_angle(Scalar a, Scalar b, Scalar beta, Scalar delta) {
    detail::require_quadrant(beta, "solve_next_contact_angle");
    if (!(delta >= 0)) {
        throw DomainError("solve_next_contact_angle: displacement must be non-negative");
    }
    if (delta == 0) {
        return beta;
    }
    const Scalar half_pi = std::numbers::pi_v<Scalar> / 2;
    const Scalar remaining = arc_length(a, b, beta, half_pi);
    if (delta > remaining) {
        throw NoSolution("solve_next_contact_angle: adaptor runs off the jaw (step " +
                         std::to_string(static_cast<double>(delta)) + " mm > remaining arc " +
                         std::to_string(static_cast<double>(remaining)) + " mm)");
    }
    auto residual = [&](Scalar phi) { return arc_length(a, b, beta, phi) - delta; };
    const auto root = bisect(residual, beta, half_pi, Scalar(kArcSolveTol));
    return root.x;
}

}  // namespace collet
