#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "collet/designspace.hpp"
#include "collet/section.hpp"

using namespace collet;

namespace {

constexpr double kPi = std::numbers::pi;

// Midpoint-rule area integrals over the annular sector R in [Ri, Ro],
// |lambda| <= alpha/2, with y = R cos(lambda) measured from the collet axis.
struct Moments {
    double area, first, second;
};

Moments sector_moments(double r_bar, double alpha, double t, int nr = 400, int nl = 4000) {
    const double ri = r_bar - t / 2, hr = t / nr, hl = alpha / nl;
    Moments m{0, 0, 0};
    for (int i = 0; i < nr; ++i) {
        const double R = ri + (i + 0.5) * hr;
        for (int j = 0; j < nl; ++j) {
            const double lam = -alpha / 2 + (j + 0.5) * hl;
            const double y = R * std::cos(lam);
            const double dA = R * hr * hl;
            m.area += dA;
            m.first += y * dA;
            m.second += y * y * dA;
        }
    }
    return m;
}

double centroidal_by_quadrature(double r_bar, double alpha, double t) {
    const Moments m = sector_moments(r_bar, alpha, t);
    const double yc = m.first / m.area;
    return m.second - m.area * yc * yc;
}

}  // namespace

TEST(CentralAngle, Examples) {
    EXPECT_DOUBLE_EQ(central_angle(0.0, 10.0, 4), kPi / 2);
    const double alpha = central_angle(3.0, 17.0, 4);
    EXPECT_NEAR(alpha, 1.3941, 5e-5);
    // asin by its Maclaurin series.
    const double x = 3.0 / 34.0;
    double series = 0, term = x;
    for (int n = 0; n < 20; ++n) {
        series += term / (2 * n + 1);
        term *= x * x * (2 * n + 1) / (2 * n + 2);
    }
    EXPECT_NEAR(alpha, kPi / 2 - 2 * series, 1e-14);
    EXPECT_NEAR(central_angle(2.0, 10.0, 2), kPi - 2 * std::asin(0.1), 1e-15);
}

TEST(CentralAngle, ClosureBoundaryIsAnError) {
    const double r = 10.0;
    EXPECT_THROW(central_angle(2 * r * std::sin(kPi / 4), r, 4), SectionVanished);
    EXPECT_THROW(central_angle(15.0, r, 4), SectionVanished);
    EXPECT_THROW(central_angle(25.0, r, 4), SectionVanished);
    EXPECT_THROW(central_angle(1.0, 0.0, 4), DomainError);
}

TEST(ThinArcSection, QuarterArcExample) {
    const SectionProperties s = thin_arc_section(10.0, kPi / 2, 2.0);
    EXPECT_NEAR(s.I_c, 24.32, 5e-3);
    EXPECT_NEAR(s.I_c, 2000.0 * ((kPi / 2 + 1) / 2 - 2 / (kPi / 2)), 1e-9);
    // Area-integral oracle on a genuinely thin wall of the same arc.
    EXPECT_NEAR(thin_arc_section(10.0, kPi / 2, 0.01).I_c / centroidal_by_quadrature(10.0, kPi / 2, 0.01), 1.0, 1e-3);
}

TEST(ThinArcSection, FullRingLimit) {
    const SectionProperties s = thin_arc_section(10.0, 2 * kPi, 1.0);
    EXPECT_NEAR(s.I_c, kPi * 1000.0, 1e-9);
    EXPECT_NEAR(s.y_bar, 0.0, 1e-12);
}

TEST(ThinArcSection, VanishingAngleStaysPositive) {
    double prev = 0;
    for (double alpha : {1e-6, 1e-4, 1e-2, 0.05, 0.0999, 0.1, 0.1001, 0.3}) {
        const SectionProperties s = thin_arc_section(10.0, alpha, 1.0);
        EXPECT_GT(s.I_c, 0.0);
        EXPECT_GT(s.I_c, prev);
        prev = s.I_c;
    }
    // Series and closed form agree across the switch.
    const double below = arc_shape_factor(std::nextafter(1.0, 0.0));
    const double above = arc_shape_factor(1.0);
    EXPECT_NEAR(below / above, 1.0, 1e-12);
    EXPECT_LT(thin_arc_section(10.0, 1e-3, 1.0).I_c, 1e-10);
}

TEST(ThinArcSection, ShapeFactorMatchesExtendedPrecisionClosedForm) {
    for (long double alpha : {0.05L, 0.1L, 0.145L, 0.3L, 0.7L, 0.999L}) {
        const long double s = std::sin(alpha / 2);
        const long double ref = (alpha + std::sin(alpha)) / 2 - 4 * s * s / alpha;
        EXPECT_NEAR(arc_shape_factor(static_cast<double>(alpha)) / static_cast<double>(ref), 1.0, 1e-9)
            << "alpha " << static_cast<double>(alpha);
    }
}

TEST(ThinArcSection, ParallelAxisAndThinWall) {
    for (double alpha : {0.2, 0.8, 1.3, kPi / 2}) {
        for (double r : {5.0, 12.0, 25.0}) {
            const double t = 0.2 * r;
            const SectionProperties s = thin_arc_section(r, alpha, t);
            EXPECT_NEAR(s.I_c + s.area * s.y_bar * s.y_bar, s.I_zz, 1e-9 * s.I_zz);
            EXPECT_LE(s.I_c, s.I_zz);
            EXPECT_GT(s.y_bar, 0.0);
            EXPECT_LE(s.y_bar, r);
            EXPECT_LE(std::abs(exact_arc_Izz(r, alpha, t) - s.I_zz) / exact_arc_Izz(r, alpha, t), 0.02);
        }
    }
}

TEST(ThinArcSection, MatchesAreaIntegralWhenWallIsThin) {
    // The thin-wall form drops the through-thickness term (about R alpha t^3 / 12),
    // so the comparison needs R alpha^2 >> t.
    for (double alpha : {0.8, 1.3, kPi / 2}) {
        for (double r : {5.0, 25.0}) {
            const double t = 1e-3 * r;
            EXPECT_NEAR(thin_arc_section(r, alpha, t).I_c / centroidal_by_quadrature(r, alpha, t), 1.0, 1e-3)
                << "alpha " << alpha << " r " << r;
        }
    }
}

TEST(SectionAt, GridInvariantsOnPresets) {
    for (auto p : {Preset::S1, Preset::S2, Preset::S3, Preset::S4, Preset::S5}) {
        const ColletGeometry g = preset(p);
        const EllipseState st = initial_state(g);
        double prev_ic = 0;
        for (int i = 0; i < 1000; ++i) {
            const double th = g.gamma + (kPi / 2 - g.gamma) * i / 999.0;
            const SectionProperties s = section_at(g, st, th);
            EXPECT_NEAR(s.R_bar, radius_at(g.a, g.b0, th) * std::sin(th), 1e-12);
            EXPECT_GT(s.alpha, 0.0);
            EXPECT_LE(s.alpha, 2 * kPi / g.leaves);
            EXPECT_NEAR(s.I_c + s.area * s.y_bar * s.y_bar, s.I_zz, 1e-9 * s.I_zz);
            EXPECT_GT(s.I_c, prev_ic);  // R_bar grows with theta
            prev_ic = s.I_c;
        }
    }
}

TEST(SectionAt, OutsideJawIsRejected) {
    const ColletGeometry g = preset(Preset::S3);
    EXPECT_THROW(section_at(g, initial_state(g), 0.1), DomainError);
    EXPECT_THROW(section_at(g, initial_state(g), 1.6), DomainError);
}

TEST(SectionAt, IcIncreasesWithMeanRadius) {
    double prev = 0;
    for (double r = 3.0; r < 30.0; r += 0.25) {
        const double ic = thin_arc_section(r, central_angle(2.0, r, 4), 2.0).I_c;
        EXPECT_GT(ic, prev);
        prev = ic;
    }
}
