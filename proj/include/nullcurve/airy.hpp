#pragma once

#include "nullcurve/errors.hpp"
#include "nullcurve/generator.hpp"
#include "nullcurve/minkowski.hpp"

namespace nullcurve {

/// Values of the Airy functions and their derivatives at one point.
struct AiryEval {
    double ai = 0.0;
    double bi = 0.0;
    double aip = 0.0; ///< Ai'
    double bip = 0.0; ///< Bi'
};

/// Evaluates Ai, Bi, Ai', Bi' for |x| <= 25. Throws OverflowRange beyond.
///
/// Strategy: Maclaurin series of the two power-series solutions of y'' = x y,
/// combined with the boundary constants Ai(0), Ai'(0), accumulated in
/// compensated double-double arithmetic for |x| <= 9 (plain double summation
/// loses up to ~e^(4 xi / 3) of relative accuracy to cancellation there);
/// exponential and trigonometric asymptotic expansions for |x| > 9.
AiryEval airy_eval(double x);

enum class AiryBranch { ai, bi };

/// Scaled second-order-ODE residual |y'' - x y| / (1 + |x y|), with y'' taken
/// from a central difference of airy_eval, y in {Ai, Bi}. The scaling keeps the
/// figure meaningful where Bi grows large. Error model: O(h^2) truncation plus
/// O(eps/h^2) rounding.
double airy_ode_residual(double x, AiryBranch branch = AiryBranch::ai, double h = 5e-4);

/// Parameters of the torsion-proportional-to-parameter family.
struct AirySpec {
    double lambda; ///< nonzero constant of the torsion law tau = -2 lambda s
    double mu;     ///< real (sign-preserving) cube root of lambda

    explicit AirySpec(double lambda_);
};

/// Generator f(s) = (pi/mu) Bi(mu s) / Ai(mu s) with analytic jets
///   f'   = 1 / Ai^2(mu s)
///   f''  = -2 mu Ai'(mu s) / Ai^3(mu s)
///   f''' = (6 mu^2 Ai'^2 - 2 mu^2 (mu s) Ai^2) / Ai^4(mu s).
/// Domain: the component of { Ai(mu s) != 0, Bi(mu s) != 0 } containing s = 0,
/// capped at |mu s| <= 25.
Generator airy_generator(const AirySpec& spec);

/// Closed-form position of the curve generated by airy_generator with
/// orientation +1 and the Gamma(1/3)-dependent anchor at s = 0.
Vec3 airy_curve_closed_form(const AirySpec& spec, double s);

/// The anchor position alpha(0) of the closed-form curve.
Vec3 airy_curve_anchor(const AirySpec& spec);

/// Real gamma function, Lanczos approximation (g = 7, 9 terms), relative error
/// around 1e-14 on the real axis away from the poles.
double gamma_real(double x);

/// Embedded high-precision constants, each verified against gamma_real in the
/// test suite.
inline constexpr double kGammaOneThird = 2.6789385347077476;  // Gamma(1/3)
inline constexpr double kGammaTwoThirds = 1.3541179394264005; // Gamma(2/3)

/// Largest zero of Bi; left edge of the zero-free component used for domains.
inline constexpr double kBiLargestZero = -1.1737132227091279;

/// Hard evaluation range of airy_eval.
inline constexpr double kAiryRange = 25.0;

} // namespace nullcurve
