#include "collet/section.hpp"

#include <numbers>

namespace collet {

SectionProperties section_at(const ColletGeometry& geom, const EllipseState& state, double theta) {
    if (theta < geom.gamma || theta > std::numbers::pi / 2) {
        throw DomainError("section_at: station outside [gamma, pi/2]");
    }
    const double r_bar = radius_at(state.a, state.b, theta) * std::sin(theta);
    const double alpha = central_angle(geom.c, r_bar, geom.leaves);
    SectionProperties s = thin_arc_section(r_bar, alpha, geom.t);
    s.theta = theta;
    return s;
}

}  // namespace collet
