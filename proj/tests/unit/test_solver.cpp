#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "collet/designspace.hpp"
#include "collet/solver.hpp"

using namespace collet;

namespace {

// Random admissible geometries around the presets, fixed seed.
std::vector<ColletGeometry> random_geometries(int count, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<ColletGeometry> out;
    while (static_cast<int>(out.size()) < count) {
        ColletGeometry g;
        g.a = 30 + 10 * u(rng);
        g.b0 = g.a * (0.7 + 0.15 * u(rng));
        g.d = g.b0 * (1.1 + 0.4 * u(rng));
        g.c = 2 + 4 * u(rng);
        g.gamma = 0.15 + 0.15 * u(rng);
        try {
            validate(g);
            out.push_back(g);
        } catch (const ValidationError&) {
        }
    }
    return out;
}

double ref_radius(double a, double b, double th) {
    const double c = std::cos(th), s = std::sin(th);
    return a * b / std::sqrt(b * b * c * c + a * a * s * s);
}

}  // namespace

TEST(ThreadToDisplacement, Examples) {
    EXPECT_DOUBLE_EQ(thread_to_displacement(1.0, 2.0), 2.0);
    EXPECT_DOUBLE_EQ(thread_to_displacement(1.5, 0.25), 0.375);
    EXPECT_EQ(thread_to_displacement(1.0, 0.0), 0.0);
    EXPECT_THROW(thread_to_displacement(0.0, 1.0), DomainError);
    EXPECT_THROW(thread_to_displacement(1.0, -1.0), DomainError);
}

TEST(InterferenceLimit, Examples) {
    EXPECT_NEAR(interference_limit(preset(Preset::S1)), 6.0 / std::numbers::pi, 1e-15);
    EXPECT_NEAR(interference_limit(preset(Preset::S1)), 1.910, 5e-4);
    EXPECT_NEAR(interference_limit(preset(Preset::S2)), 3.820, 5e-4);
    ColletGeometry g = preset(Preset::S3);
    g.c = 0;
    EXPECT_EQ(interference_limit(g), 0.0);
}

TEST(March, ZeroDisplacementGivesOnlyTheInitialRow) {
    const ColletGeometry g = preset(Preset::S3);
    const DeflectionCurve c = march(g, 0.0);
    ASSERT_EQ(c.rows.size(), 1u);
    EXPECT_EQ(c.rows[0].delta_tip_cum, 0.0);
    EXPECT_EQ(c.rows[0].b, g.b0);
    EXPECT_EQ(c.stop_reason, StopReason::reached_delta);
}

TEST(March, RejectsBadArguments) {
    const ColletGeometry g = preset(Preset::S3);
    EXPECT_THROW(march(g, -1.0), ValidationError);
    EXPECT_THROW(march(g, 1.0, 0), ValidationError);
    EXPECT_THROW(march(g, 1.0, 10, 0.0), ValidationError);
    ColletGeometry bad = g;
    bad.d = 2 * g.b0 + 0.1;
    EXPECT_THROW(march(bad, 1.0), ValidationError);
}

TEST(March, ApexContactEndsWithoutSolution) {
    ColletGeometry g = preset(Preset::S3);
    g.d = 2 * g.b0;
    const DeflectionCurve c = march(g, 1.0);
    EXPECT_EQ(c.stop_reason, StopReason::no_solution);
    EXPECT_EQ(c.rows.size(), 1u);
}

TEST(March, StopsOnClearanceFromBelow) {
    const DeflectionCurve c = march(preset(Preset::S1), 2.0, 60, 1.5);
    EXPECT_EQ(c.stop_reason, StopReason::clearance_reached);
    EXPECT_LE(c.last().delta_tip_cum, 1.5);
    EXPECT_NEAR(c.last().delta_tip_cum, 1.5, 1e-9);
    EXPECT_LT(c.last().delta_cum, 2.0);
}

TEST(March, StopsOnInterference) {
    ColletGeometry g = preset(Preset::S3);
    g.c = 1.0;
    const double limit = interference_limit(g);
    ASSERT_LT(limit, 1.5);
    const DeflectionCurve c = march(g, 2.0, 60, 1.5);
    EXPECT_EQ(c.stop_reason, StopReason::interference);
    EXPECT_LE(c.last().delta_tip_cum, limit);
    EXPECT_NEAR(c.last().delta_tip_cum, limit, 1e-9);
}

TEST(March, ReachesDeltaWhenClearanceIsFar) {
    const DeflectionCurve c = march(preset(Preset::S3), 0.2, 20, 1.5);
    EXPECT_EQ(c.stop_reason, StopReason::reached_delta);
    ASSERT_EQ(c.rows.size(), 21u);
    EXPECT_NEAR(c.last().delta_cum, 0.2, 1e-15);
}

TEST(March, NumericalFailureKeepsPartialCurve) {
    // A single step that slides the adaptor past the apex of the ellipse.
    ColletGeometry g = preset(Preset::S3);
    const DeflectionCurve c = march(g, 30.0, 1, 100.0);
    EXPECT_EQ(c.stop_reason, StopReason::no_solution);
    EXPECT_EQ(c.rows.size(), 1u);
    EXPECT_NE(c.message.find("step 1"), std::string::npos);
}

TEST(March, IsDeterministic) {
    const DeflectionCurve x = march(preset(Preset::S2), 2.0);
    const DeflectionCurve y = march(preset(Preset::S2), 2.0);
    ASSERT_EQ(x.rows.size(), y.rows.size());
    for (std::size_t i = 0; i < x.rows.size(); ++i) {
        EXPECT_EQ(x.rows[i].delta_tip_cum, y.rows[i].delta_tip_cum);
        EXPECT_EQ(x.rows[i].b, y.rows[i].b);
    }
}

TEST(March, RandomGeometriesAreMonotoneAndConsistent) {
    for (const ColletGeometry& g : random_geometries(25, 20261016)) {
        const DeflectionCurve c = march(g, 1.0, 30, 1.5);
        ASSERT_GE(c.rows.size(), 2u);
        for (std::size_t k = 1; k < c.rows.size(); ++k) {
            const CurveRow& prev = c.rows[k - 1];
            const CurveRow& row = c.rows[k];
            EXPECT_GT(row.delta_cum, prev.delta_cum);
            EXPECT_GE(row.delta_tip_cum, prev.delta_tip_cum);
            EXPECT_LE(row.b, prev.b);
            EXPECT_GE(row.phi, row.beta);
            EXPECT_GE(row.F_X, 0.0);
            EXPECT_GE(row.F_Y, 0.0);
            // The updated ellipse passes through the advanced contact point.
            const double x_new = ref_radius(g.a, prev.b, row.beta) * std::cos(row.beta) -
                                 (row.delta_cum - prev.delta_cum);
            const double residual = std::pow(x_new / g.a, 2) + std::pow(g.d / (2 * row.b), 2) - 1;
            EXPECT_NEAR(residual, 0.0, 1e-9);
        }
        EXPECT_LE(c.max_tip_travel(), std::min(1.5, interference_limit(g)) + 1e-12);
    }
}

TEST(March, StepRefinementConverges) {
    const ColletGeometry g = preset(Preset::S3);
    const double coarse = march(g, 0.2, 60, 10.0).last().delta_tip_cum;
    const double fine = march(g, 0.2, 600, 10.0).last().delta_tip_cum;
    EXPECT_NEAR(coarse / fine, 1.0, 5e-3);
}

TEST(GripRange, Examples) {
    ColletGeometry g = preset(Preset::S1);
    DeflectionCurve c;
    c.rows = {{0, 0, 26.5, 0, 0, 0, 0}, {0.1, 1.5, 26.4, 0, 0, 0, 0}};
    const GripRange r = grip_range(g, c);
    EXPECT_DOUBLE_EQ(r.min_diameter, 50.0);
    EXPECT_DOUBLE_EQ(r.max_diameter, 53.0);
    c.rows.resize(1);
    EXPECT_DOUBLE_EQ(grip_range(g, c).min_diameter, 53.0);
}

TEST(TipAt, InterpolatesAndClamps) {
    DeflectionCurve c;
    c.rows = {{0, 0, 0, 0, 0, 0, 0}, {1, 2, 0, 0, 0, 0, 0}, {2, 3, 0, 0, 0, 0, 0}};
    EXPECT_DOUBLE_EQ(tip_at(c, 0.5), 1.0);
    EXPECT_DOUBLE_EQ(tip_at(c, 1.5), 2.5);
    EXPECT_DOUBLE_EQ(tip_at(c, -1.0), 0.0);
    EXPECT_DOUBLE_EQ(tip_at(c, 5.0), 3.0);
}

TEST(StopReason, Names) {
    EXPECT_EQ(to_string(StopReason::clearance_reached), "clearance_reached");
    EXPECT_EQ(to_string(StopReason::no_solution), "no_solution");
}
