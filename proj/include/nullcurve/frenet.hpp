#pragma once

#include "nullcurve/generator.hpp"
#include "nullcurve/minkowski.hpp"
#include "nullcurve/synthesis.hpp"

namespace nullcurve {

/// Null frame (L, N, W) along a generated curve: L is the null tangent, W the
/// unit acceleration, N the transversal null field, with g(L,N) = g(W,W) = 1
/// and the remaining pairings zero.
struct FrenetFrame {
    Vec3 L;
    Vec3 N;
    Vec3 W;
};

/// Closed-form frame of the generated curve at s, from the generator jets.
FrenetFrame frame_at(const Generator& gen, int epsilon, double s);

/// Torsion of the generated curve: the Schwarzian derivative of the generator.
/// Independent of the orientation and of the sign of f.
double torsion_schwarzian(const Generator& gen, double s);

/// Torsion from sampled positions: third derivative by a 7-point central
/// stencil (fourth order), then half its self inner product. Requires three
/// uniformly spaced neighbors on each side of index. Error model: O(h^4)
/// truncation plus O(eps/h^3) rounding on the positions.
double torsion_from_acceleration(const SampledCurve& positions, std::size_t index);

/// Max absolute deviation over the six frame pairing conditions.
double gram_residual(const FrenetFrame& fr);

struct FrameDiagnostics {
    double gram_residual = 0.0;    ///< worst pairing deviation at s
    double frenet_residual = 0.0;  ///< worst component residual of the frame ODEs under FD
    double det_value = 0.0;        ///< det[L, N, W]; equals the orientation
    double torsion_mismatch = 0.0; ///< |Schwarzian torsion - acceleration-based torsion|
};

/// Central-difference check of the frame ODEs
///   L' = W,  N' = tau W,  W' = -tau L - N
/// with tau the Schwarzian torsion, plus pairing, orientation, and
/// two-route torsion diagnostics. Requires [s-h, s+h] inside the domain.
FrameDiagnostics frenet_residuals(const Generator& gen, int epsilon, double s, double h = 1e-4);

} // namespace nullcurve
