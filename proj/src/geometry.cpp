#include "collet/geometry.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "collet/section.hpp"

namespace collet {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw ValidationError("invalid geometry: " + what); }

}  // namespace

void validate(const ColletGeometry& g) {
    auto finite = [](double v) { return std::isfinite(v); };
    if (!finite(g.a) || !(g.a > 0)) invalid("a must be > 0");
    if (!finite(g.b0) || !(g.b0 > 0)) invalid("b0 must be > 0");
    if (!finite(g.c) || !(g.c >= 0)) invalid("c must be >= 0");
    if (!finite(g.t) || !(g.t > 0)) invalid("t must be > 0");
    if (!finite(g.E) || !(g.E > 0)) invalid("E must be > 0");
    if (g.leaves < 2) invalid("leaves must be >= 2");
    if (!finite(g.pitch) || !(g.pitch > 0)) invalid("pitch must be > 0");
    if (!finite(g.rest_opening) || !(g.rest_opening > 0)) invalid("rest_opening must be > 0");
    if (!finite(g.d) || !(g.d > 0) || g.d > 2 * g.b0) invalid("d must satisfy 0 < d <= 2*b0");
    if (!finite(g.gamma) || g.gamma < kMinBaseAngle) {
        std::ostringstream os;
        os << "gamma must be >= " << kMinBaseAngle << " rad";
        invalid(os.str());
    }
    const double beta = contact_angle(g.a, g.b0, g.d);
    if (!(g.gamma < beta)) invalid("gamma must lie below the contact angle");
    const double r_bar = radius_at(g.a, g.b0, g.gamma) * std::sin(g.gamma);
    try {
        (void)central_angle(g.c, r_bar, g.leaves);
    } catch (const SectionVanished&) {
        invalid("slots close the jaw section at the base (alpha(gamma) <= 0)");
    }
}

bool apex_contact(const ColletGeometry& g) { return g.d == 2 * g.b0; }

}  // namespace collet
