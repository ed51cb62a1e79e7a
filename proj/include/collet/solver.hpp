#pragma once

// Incremental march: the adaptor advances in n equal steps; at each step the
// contact angle is found on the current ellipse, the next contact angle from
// the slid arc length, the tip increment from the Castigliano step, and the
// ellipse's minor axis is updated to pass through the advanced contact point.

#include <string>
#include <string_view>
#include <vector>

#include "collet/geometry.hpp"
#include "collet/mechanics.hpp"

namespace collet {

enum class StopReason { reached_delta, clearance_reached, interference, no_solution };

std::string_view to_string(StopReason reason);

struct CurveRow {
    double delta_cum = 0;      ///< cumulative adaptor displacement
    double delta_tip_cum = 0;  ///< cumulative tip deflection
    double b = 0;              ///< semi-minor axis after the step
    double beta = 0;           ///< contact angle at the start of the step
    double phi = 0;            ///< contact angle reached by the step
    double F_X = 0;
    double F_Y = 0;
};

struct DeflectionCurve {
    ColletGeometry geometry;
    int n_steps = 60;
    std::vector<CurveRow> rows;
    StopReason stop_reason = StopReason::reached_delta;
    std::string message;  ///< failing step and cause when stop_reason is no_solution

    const CurveRow& last() const { return rows.back(); }
    double max_tip_travel() const;
};

inline constexpr double kDefaultClearance = 1.5;
inline constexpr int kDefaultSteps = 60;

/// Adaptor advance for N revolutions of a thread of pitch P.
double thread_to_displacement(double pitch, double revolutions);

/// Radial closing at which the slots between jaws close: leaves * c / (2 pi).
/// A first-order model of tooth interference.
double interference_limit(const ColletGeometry& geom);

/// Runs the march up to delta_total in n_steps equal increments. Stops early
/// when the tip deflection reaches `clearance` or the interference limit;
/// the stopping step is shortened so the curve lands on that value. Numerical
/// failures end the curve with StopReason::no_solution and keep the rows
/// computed so far.
DeflectionCurve march(const ColletGeometry& geom, double delta_total, int n_steps = kDefaultSteps,
                      double clearance = kDefaultClearance);

struct GripRange {
    double min_diameter = 0;
    double max_diameter = 0;
};

/// Knob diameters the collet can clamp: from the fully closed opening to the
/// rest opening.
GripRange grip_range(const ColletGeometry& geom, const DeflectionCurve& curve);

/// Linear interpolation of delta_tip_cum at adaptor displacement `delta`
/// (clamped to the curve's range).
double tip_at(const DeflectionCurve& curve, double delta);

}  // namespace collet
