#pragma once

// Cross-section of a jaw at polar station theta: a thin circular arc of mean
// radius R = r(theta) sin(theta) about the collet axis, thickness t, spanning
// the central angle left between two neighbouring slots.

#include <cmath>
#include <limits>
#include <numbers>

#include "collet/errors.hpp"
#include "collet/geometry.hpp"

namespace collet {

struct SectionProperties {
    double theta = 0;  ///< station angle [rad]
    double R_bar = 0;  ///< mean arc radius
    double alpha = 0;  ///< central angle [rad]
    double y_bar = 0;  ///< centroid offset from the collet axis
    double area = 0;   ///< R_bar * alpha * t
    double I_zz = 0;   ///< second moment about the collet axis (thin wall)
    double I_c = 0;    ///< centroidal second moment (thin wall)
};

/// Central angle of one jaw's arc: 2 pi / leaves minus the slot of width c.
template <typename Scalar>
Scalar central_angle(Scalar c, Scalar R_bar, int leaves) {
    if (!(R_bar > 0)) {
        throw DomainError("central_angle: mean radius must be positive");
    }
    if (leaves < 2) {
        throw DomainError("central_angle: at least two leaves required");
    }
    const Scalar sector = 2 * std::numbers::pi_v<Scalar> / leaves;
    if (!(c < 2 * R_bar)) {
        throw SectionVanished("central_angle: slot wider than the section diameter");
    }
    const Scalar alpha = sector - 2 * std::asin(c / (2 * R_bar));
    // Treat a few ulps of the sector as closed so the closure boundary is not
    // decided by rounding in asin.
    if (!(alpha > 64 * std::numeric_limits<Scalar>::epsilon() * sector)) {
        throw SectionVanished("central_angle: slots close the section (alpha <= 0)");
    }
    return alpha;
}

/// Shape factor f(alpha) = (alpha + sin alpha)/2 - 4 sin^2(alpha/2)/alpha, so
/// that the centroidal second moment of a thin arc is R^3 t f(alpha).
template <typename Scalar>
Scalar arc_shape_factor(Scalar alpha) {
    if (std::abs(alpha) < Scalar(1)) {
        // The closed form cancels to O(alpha^5), losing about six digits near
        // alpha = 0.1. Its series sum_{k>=2} (-1)^k (k-1) alpha^(2k+1)/(2k+2)!
        // alternates with rapidly shrinking terms.
        const Scalar a2 = alpha * alpha;
        Scalar power = a2 * a2 * alpha / 720;  // alpha^(2k+1)/(2k+2)! at k = 2
        Scalar sum = power;
        for (int k = 3; k < 40; ++k) {
            power *= a2 / Scalar((2 * k + 1) * (2 * k + 2));
            const Scalar term = (k % 2 == 0 ? 1 : -1) * Scalar(k - 1) * power;
            sum += term;
            if (std::abs(term) <= std::numeric_limits<Scalar>::epsilon() * std::abs(sum)) break;
        }
        return sum;
    }
    const Scalar s = std::sin(alpha / 2);
    return (alpha + std::sin(alpha)) / 2 - 4 * s * s / alpha;
}

/// Thin-wall properties of an arc of mean radius R_bar, central angle alpha
/// and thickness t. theta is left at zero.
template <typename Scalar>
SectionProperties thin_arc_section(Scalar R_bar, Scalar alpha, Scalar t) {
    SectionProperties s;
    s.R_bar = R_bar;
    s.alpha = alpha;
    s.y_bar = 2 * R_bar * std::sin(alpha / 2) / alpha;
    s.area = R_bar * alpha * t;
    const Scalar r3t = R_bar * R_bar * R_bar * t;
    s.I_zz = r3t * (alpha + std::sin(alpha)) / 2;
    s.I_c = r3t * arc_shape_factor(alpha);
    return s;
}

/// Second moment about the collet axis of the annular sector
/// R_bar - t/2 <= R <= R_bar + t/2, without the thin-wall approximation.
template <typename Scalar>
Scalar exact_arc_Izz(Scalar R_bar, Scalar alpha, Scalar t) {
    const Scalar ro = R_bar + t / 2;
    const Scalar ri = R_bar - t / 2;
    return (ro * ro * ro * ro - ri * ri * ri * ri) / 4 * (alpha + std::sin(alpha)) / 2;
}

/// Section of the jaw at station theta on the current ellipse.
SectionProperties section_at(const ColletGeometry& geom, const EllipseState& state, double theta);

}  // namespace collet
