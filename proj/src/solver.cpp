#include "collet/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>


namespace collet {

std::string_view to_string(StopReason reason) {
    switch (reason) {
        case StopReason::reached_delta:
            return "reached_delta";
        case StopReason::clearance_reached:
            return "clearance_reached";
        case StopReason::interference:
            return "interference";
        case StopReason::no_solution:
            return "no_solution";
    }
    return "unknown";
}

double DeflectionCurve::max_tip_travel() const {
    double m = 0;
    for (const auto& row : rows) {
        m = std::max(m, row.delta_tip_cum);
    }
    return m;
}

double thread_to_displacement(double pitch, double revolutions) {
    if (!(pitch > 0) || !(revolutions >= 0)) {
        throw DomainError("thread_to_displacement: need pitch > 0 and revolutions >= 0");
    }
    return pitch * revolutions;
}

double interference_limit(const ColletGeometry& geom) {
    return geom.leaves * geom.c / (2 * std::numbers::pi);
}

namespace {

// Tolerance on landing the final shortened step on the stop value.
constexpr double kLandingTol = 1e-12;

CurveRow make_row(double delta_cum, double tip, double b, const ContactSolution& s) {
    return {delta_cum, tip, b, s.beta, s.phi, s.forces.F_X, s.forces.F_Y};
}

}  // namespace

DeflectionCurve march(const ColletGeometry& geom, double delta_total, int n_steps, double clearance) {
    validate(geom);
    if (!(delta_total >= 0)) throw ValidationError("march: delta_total must be >= 0");
    if (n_steps < 1) throw ValidationError("march: n_steps must be >= 1");
    if (!(clearance > 0)) throw ValidationError("march: clearance must be > 0");

    DeflectionCurve curve;
    curve.geometry = geom;
    curve.n_steps = n_steps;

    EllipseState state = initial_state(geom);
    const double beta0 = contact_angle(geom.a, geom.b0, geom.d);
    curve.rows.push_back({0.0, 0.0, geom.b0, beta0, beta0, 0.0, 0.0});

    const double limit = interference_limit(geom);
    const double target = std::min(clearance, limit);
    const StopReason target_reason =
        clearance <= limit ? StopReason::clearance_reached : StopReason::interference;
    if (target <= 0) {
        curve.stop_reason = target_reason;
        return curve;
    }
    if (delta_total == 0) {
        curve.stop_reason = StopReason::reached_delta;
        return curve;
    }

    const double step = delta_total / n_steps;
    double tip = 0;
    for (int k = 0; k < n_steps; ++k) {
        try {
            ContactSolution s = solve_step(geom, state, step);
            double taken = step;
            bool landed = false;
            if (tip + s.delta_tip_step >= target) {
                // Shorten the step so the tip lands on the stop value from below.
                auto overshoot = [&](double trial) {
                    return tip + solve_step(geom, state, trial).delta_tip_step - target;
                };
                double lo = 0.0;
                double hi = step;
                for (int it = 0; it < 200 && hi - lo > 0; ++it) {
                    const double mid = lo + (hi - lo) / 2;
                    if (mid == lo || mid == hi) break;
                    const double f = overshoot(mid);
                    if (f > 0) {
                        hi = mid;
                    } else {
                        lo = mid;
                        if (f > -kLandingTol) break;
                    }
                }
                taken = lo;
                s = solve_step(geom, state, taken);
                landed = true;
            }
            if (taken > 0) {
                const double b_next = update_minor_axis(state.a, state.b, s.beta, taken, geom.d);
                tip += s.delta_tip_step;
                state.b = b_next;
                state.step = k + 1;
                const double delta_cum = landed ? k * step + taken : (k + 1) * step;
                curve.rows.push_back(make_row(delta_cum, tip, b_next, s));
            }
            if (landed) {
                curve.stop_reason = target_reason;
                return curve;
            }
        } catch (const NumericalError& e) {
            std::ostringstream os;
            os << "step " << (k + 1) << " (delta = " << (k + 1) * step << " mm): " << e.what();
            curve.stop_reason = StopReason::no_solution;
            curve.message = os.str();
            return curve;
        }
    }
    curve.stop_reason = StopReason::reached_delta;
    return curve;
}

GripRange grip_range(const ColletGeometry& geom, const DeflectionCurve& curve) {
    return {geom.rest_opening - 2 * curve.max_tip_travel(), geom.rest_opening};
}

double tip_at(const DeflectionCurve& curve, double delta) {
    const auto& rows = curve.rows;
    if (delta <= rows.front().delta_cum) return rows.front().delta_tip_cum;
    if (delta >= rows.back().delta_cum) return rows.back().delta_tip_cum;
    auto it = std::lower_bound(rows.begin(), rows.end(), delta,
                               [](const CurveRow& r, double v) { return r.delta_cum < v; });
    const CurveRow& hi = *it;
    const CurveRow& lo = *(it - 1);
    const double w = (delta - lo.delta_cum) / (hi.delta_cum - lo.delta_cum);
    return lo.delta_tip_cum + w * (hi.delta_tip_cum - lo.delta_tip_cum);
}

}  // namespace collet
