#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nullcurve/frenet.hpp"
#include "nullcurve/generator.hpp"
#include "nullcurve/minkowski.hpp"
#include "nullcurve/synthesis.hpp"

namespace nullcurve {

/// Parameters of the parameterized reference families.
struct CatalogParams {
    double c = 1.0;         ///< helix pitch, c > 0
    double slant_b_a = 2.0; ///< torsion constant of the tan-log family, a > 1
    double slant_c_a = 0.5; ///< torsion constant of the power family, 0 != a < 1, a != -3
    double lambda = 1.0;    ///< Airy family constant, lambda != 0
};

/// One reference curve: generator, anchor, closed form, and expected torsion.
struct CatalogEntry {
    std::string label;
    std::string family; ///< one-line description of the torsion law
    Generator gen;
    int epsilon = 1;
    double s0 = 0.0;
    Vec3 alpha0;
    std::function<Vec3(double)> closed_form;
    std::function<double(double)> expected_torsion;
    bool slant = false;   ///< carries a constant axis vector check
    double slant_a = 0.0; ///< torsion constant of the axis formula, when slant
    Interval default_grid; ///< recommended verification range
};

/// All eight reference curves: the three constant-torsion helices, the four
/// slant-helix families, and the Airy curve.
std::vector<CatalogEntry> catalog_entries(const CatalogParams& params = {});

/// Single entry by label: helix-zero, helix-pos, helix-neg, slant-a, slant-b,
/// slant-c, slant-d, airy. Throws InvalidParam for unknown labels.
CatalogEntry catalog_entry(const std::string& label, const CatalogParams& params = {});

/// Axis vector V = -(a / 2s) L + s N + W of a slant helix with torsion
/// a / (2 s^2). Constant along the curve; g(W, V) = 1. Requires s > 0.
Vec3 slant_axis(const Generator& gen, int epsilon, double a, double s);

struct VerificationThresholds {
    double nullity = 1e-6;
    double pseudo_arc = 1e-5;
    double torsion_law = 1e-9;
    double synthesis = 1e-7;
    double axis = 1e-8;
    double axis_pairing = 1e-8;
};

struct SampleDiagnostics {
    double s = 0.0;
    double nullity = 0.0;         ///< |g(v, v)| of the FD velocity
    double pseudo_arc = 0.0;      ///< |g(a, a) - 1| of the FD acceleration
    double torsion_err = 0.0;     ///< |Schwarzian torsion - expected law|
    double synthesis_dist = 0.0;  ///< distance between quadrature and closed form
};

struct VerificationReport {
    std::string entry;
    double nullity_max = 0.0;
    double pseudo_arc_max = 0.0;
    double torsion_law_max = 0.0;
    double synthesis_vs_closed_max = 0.0;
    std::optional<double> axis_residual;     ///< max deviation of V from its mid-grid value
    std::optional<double> axis_pairing_max;  ///< max |g(W, V) - 1|
    double fd_step = 0.0;
    double quad_tol = 0.0;
    std::vector<SampleDiagnostics> samples;

    bool passed(const VerificationThresholds& t = {}) const;
};

/// Runs the uniform residual suite on one entry over a grid of at least nine
/// points inside the generator domain: closed-form nullity and pseudo-arc by
/// local five-point stencils, the torsion law on exact jets, quadrature versus
/// closed form, and the axis checks for slant entries. Quadrature anchors at
/// (s0, alpha0) when s0 lies in the domain closure, otherwise at the middle
/// grid point with the closed-form position there.
VerificationReport verify_entry(const CatalogEntry& entry, std::span<const double> grid,
                                double tol = 1e-10);

} // namespace nullcurve
