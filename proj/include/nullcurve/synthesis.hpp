#pragma once

#include <span>
#include <vector>

#include "nullcurve/generator.hpp"
#include "nullcurve/minkowski.hpp"

namespace nullcurve {

/// Complete input of the curve integral: generator, orientation, anchor.
struct CurveSpec {
    Generator gen;
    int epsilon; ///< +1 or -1
    double s0;
    Vec3 alpha0;

    CurveSpec(Generator g, int eps, double s0_, Vec3 a0);
};

struct CurveSample {
    double s = 0.0;
    Vec3 pos;
    double err = 0.0; ///< accumulated absolute quadrature error estimate
};

/// Ordered curve samples, strictly increasing in s.
struct SampledCurve {
    CurveSpec spec;
    std::vector<CurveSample> samples;
};

/// Velocity of the generated curve,
///   alpha'(s) = (eps / (2 f')) (2 f, f^2 - 1, f^2 + 1),
/// a null vector by construction. Accepts the domain closure (the one-sided
/// limit is finite wherever the anchor is allowed to sit).
Vec3 integrand(const Generator& gen, int epsilon, double s);

/// Integrates the velocity from spec.s0 to every grid point, accumulating
/// segment-by-segment with an adaptive 15-point Gauss-Kronrod rule. The grid
/// must be strictly increasing and contained in the domain closure; it may
/// extend on both sides of s0. tol is the absolute error target per unit of
/// parameter length. Throws QuadratureFailure when a segment cannot reach its
/// share of tol within the subdivision budget (depth 40).
SampledCurve synthesize(const CurveSpec& spec, std::span<const double> grid, double tol = 1e-10);

/// n equally spaced points, endpoints included. Requires n >= 2, lo < hi.
std::vector<double> linspace(double lo, double hi, std::size_t n);

} // namespace nullcurve
