#pragma once

#include <cmath>
#include <limits>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "collet/errors.hpp"

namespace collet {

/// Relative tolerance used for every integral in the model.
inline constexpr double kQuadratureRelTol = 1e-10;

/// Bisection depth limit. Smooth integrands converge in a handful of levels;
/// the cap bounds the cost when rounding noise in an integrand sits above
/// the tolerance.
inline constexpr unsigned kQuadratureMaxDepth = 18;

/// Adaptive 15-point Gauss-Kronrod integration of f over [lo, hi].
///
/// The tolerance is relative to the L1 norm of the integrand, which equals
/// the relative error of the result for integrands of constant sign.
template <typename Scalar, typename F>
Scalar integrate(F&& f, Scalar lo, Scalar hi, Scalar rel_tol = Scalar(kQuadratureRelTol)) {
    if (lo == hi) {
        return Scalar(0);
    }
    using boost::math::quadrature::gauss_kronrod;
    // Boost compares an unscaled error estimate with a tolerance scaled by the
    // interval width, so very short intervals never converge and recurse to
    // full depth. Integrating over the unit interval keeps the two comparable.
    const Scalar width = hi - lo;
    auto unit = [&](Scalar s) { return f(lo + s * width); };
    Scalar error = 0;
    Scalar l1 = 0;
    const Scalar value = width * gauss_kronrod<Scalar, 15>::integrate(unit, Scalar(0), Scalar(1), kQuadratureMaxDepth, rel_tol, &error, &l1);
    if (!std::isfinite(value)) {
        throw NumericalError("quadrature produced a non-finite value");
    }
    return value;
}

/// Outcome of a bracketed bisection.
template <typename Scalar>
struct BisectionResult {
    Scalar x;
    Scalar residual;
    int iterations;
    bool converged;
};

/// Bisection on [lo, hi] for a continuous f with f(lo) and f(hi) of opposite
/// sign (or zero). Stops when |f(x)| <= abs_tol or after max_iter halvings.
template <typename Scalar, typename F>
BisectionResult<Scalar> bisect(F&& f, Scalar lo, Scalar hi, Scalar abs_tol, int max_iter = 200) {
    Scalar f_lo = f(lo);
    if (std::abs(f_lo) <= abs_tol) {
        return {lo, f_lo, 0, true};
    }
    Scalar f_hi = f(hi);
    if (std::abs(f_hi) <= abs_tol) {
        return {hi, f_hi, 0, true};
    }
    if ((f_lo > 0) == (f_hi > 0)) {
        throw NoSolution("bisection: root not bracketed");
    }
    Scalar mid = lo;
    Scalar f_mid = f_lo;
    for (int it = 1; it <= max_iter; ++it) {
        mid = lo + (hi - lo) / 2;
        f_mid = f(mid);
        if (std::abs(f_mid) <= abs_tol || mid == lo || mid == hi) {
            return {mid, f_mid, it, std::abs(f_mid) <= abs_tol};
        }
        if ((f_mid > 0) == (f_lo > 0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return {mid, f_mid, max_iter, false};
}

}  // namespace collet
