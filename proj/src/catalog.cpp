#include "nullcurve/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "nullcurve/airy.hpp"

namespace nullcurve {

namespace {

CatalogEntry make_helix_zero() {
    // The anchor sits at s = 0 where f(s) = s vanishes, so the identity
    // generator is extended to the whole line; only f' != 0 enters the curve
    // and frame formulas.
    Generator gen([](double s) { return Jet3{s, 1.0, 0.0, 0.0}; }, Interval{},
                  "identity-line", GeneratorDescriptor{"custom", {}});
    return CatalogEntry{
        .label = "helix-zero",
        .family = "null helix, tau = 0",
        .gen = std::move(gen),
        .epsilon = 1,
        .s0 = 0.0,
        .alpha0 = Vec3{0.0, 0.0, 0.0},
        .closed_form =
            [](double s) {
                return Vec3{0.5 * s * s, (s * s * s - 3.0 * s) / 6.0,
                            (s * s * s + 3.0 * s) / 6.0};
            },
        .expected_torsion = [](double) { return 0.0; },
        .slant = false,
        .slant_a = 0.0,
        .default_grid = {-2.0, 2.0},
    };
}

CatalogEntry make_helix_pos(double c) {
    Generator gen = make_generator(CotGen{c});
    const Interval dom = gen.domain();
    const double margin = 0.05 * dom.width();
    return CatalogEntry{
        .label = "helix-pos",
        .family = "null helix, tau = c^2/2",
        .gen = std::move(gen),
        .epsilon = 1,
        .s0 = 0.0,
        .alpha0 = Vec3{1.0 / (c * c), 0.0, 0.0},
        .closed_form =
            [c](double s) {
                return Vec3{std::cos(c * s) / (c * c), std::sin(c * s) / (c * c), s / c};
            },
        .expected_torsion = [c](double) { return 0.5 * c * c; },
        .slant = false,
        .slant_a = 0.0,
        .default_grid = {dom.lo + margin, dom.hi - margin},
    };
}

CatalogEntry make_helix_neg(double c) {
    return CatalogEntry{
        .label = "helix-neg",
        .family = "null helix, tau = -c^2/2",
        .gen = make_generator(ExpGen{c}),
        .epsilon = 1,
        .s0 = 0.0,
        .alpha0 = Vec3{0.0, 1.0 / (c * c), 0.0},
        .closed_form =
            [c](double s) {
                return Vec3{s / c, std::cosh(c * s) / (c * c), std::sinh(c * s) / (c * c)};
            },
        .expected_torsion = [c](double) { return -0.5 * c * c; },
        .slant = false,
        .slant_a = 0.0,
        .default_grid = {-1.0, 1.0},
    };
}

CatalogEntry make_slant_a() {
    return CatalogEntry{
        .label = "slant-a",
        .family = "slant helix, tau = 1/(2 s^2)",
        .gen = make_generator(LogGen{}),
        .epsilon = 1,
        .s0 = 1.0,
        .alpha0 = Vec3{-0.25, -0.125, 0.375},
        .closed_form =
            [](double s) {
                const double l = std::log(s);
                const double q = 0.125 * s * s;
                return Vec3{q * 2.0 * (2.0 * l - 1.0), q * (2.0 * l * l - 2.0 * l - 1.0),
                            q * (2.0 * l * l - 2.0 * l + 3.0)};
            },
        .expected_torsion = [](double s) { return 0.5 / (s * s); },
        .slant = true,
        .slant_a = 1.0,
        .default_grid = {1.05, 3.0},
    };
}

CatalogEntry make_slant_b(double a) {
    if (!(std::isfinite(a) && a > 1.0)) {
        throw InvalidParam("slant-b: requires a > 1");
    }
    const double b = std::sqrt(a - 1.0);
    Generator gen = make_generator(TanLogGen{b});
    const double hi = std::min(3.0, 1.0 + 0.9 * (gen.domain().hi - 1.0));
    return CatalogEntry{
        .label = "slant-b",
        .family = "slant helix, tau = a/(2 s^2), a > 1",
        .gen = std::move(gen),
        .epsilon = 1,
        .s0 = 1.0,
        .alpha0 = Vec3{-1.0 / (b * b + 4.0), -2.0 / (b * (b * b + 4.0)), 0.5 / b},
        .closed_form =
            [b](double s) {
                const double th = b * std::log(s);
                const double q = s * s / b;
                const double den = b * b + 4.0;
                return Vec3{q * (2.0 * std::sin(th) - b * std::cos(th)) / den,
                            -q * (2.0 * std::cos(th) + b * std::sin(th)) / den, 0.5 * q};
            },
        .expected_torsion = [a](double s) { return 0.5 * a / (s * s); },
        .slant = true,
        .slant_a = a,
        .default_grid = {1.05, hi},
    };
}

CatalogEntry make_slant_c(double a) {
    if (!(std::isfinite(a) && a < 1.0 && a != 0.0 && a != -3.0)) {
        throw InvalidParam("slant-c: requires 0 != a < 1 and a != -3");
    }
    const double b = std::sqrt(1.0 - a);
    return CatalogEntry{
        .label = "slant-c",
        .family = "slant helix, tau = a/(2 s^2), a < 1",
        .gen = make_generator(PowerGen{b}),
        .epsilon = 1,
        .s0 = 1.0,
        .alpha0 = Vec3{-0.5 / b, 1.0 / (b * b - 4.0), 2.0 / (b * (b * b - 4.0))},
        .closed_form =
            [b](double s) {
                const double q = s * s / (2.0 * b);
                const double lo = std::pow(s, -b) / (b - 2.0);
                const double hi = std::pow(s, b) / (b + 2.0);
                return Vec3{-q, q * (lo + hi), q * (lo - hi)};
            },
        .expected_torsion = [a](double s) { return 0.5 * a / (s * s); },
        .slant = true,
        .slant_a = a,
        .default_grid = {0.5, 3.0},
    };
}

CatalogEntry make_slant_d() {
    return CatalogEntry{
        .label = "slant-d",
        .family = "slant helix, tau = -3/(2 s^2)",
        .gen = make_generator(InverseSquareGen{}),
        .epsilon = 1,
        .s0 = 1.0,
        .alpha0 = Vec3{-0.25, 0.0625, -0.0625},
        .closed_form =
            [](double s) {
                const double s2 = s * s;
                const double l = std::log(s);
                return Vec3{-0.25 * s2, (s2 * s2 - 4.0 * l) / 16.0,
                            (-s2 * s2 - 4.0 * l) / 16.0};
            },
        .expected_torsion = [](double s) { return -1.5 / (s * s); },
        .slant = true,
        .slant_a = -3.0,
        .default_grid = {0.5, 3.0},
    };
}

CatalogEntry make_airy_entry(double lambda) {
    const AirySpec spec(lambda);
    Generator gen = airy_generator(spec);
    const Interval dom = gen.domain();
    const Interval grid = spec.mu > 0.0
                              ? Interval{0.05, std::min(2.0, 0.8 * dom.hi)}
                              : Interval{std::max(-2.0, 0.8 * dom.lo), 0.85 * dom.hi};
    return CatalogEntry{
        .label = "airy",
        .family = "torsion proportional to the parameter, tau = -2 lambda s",
        .gen = std::move(gen),
        .epsilon = 1,
        .s0 = 0.0,
        .alpha0 = airy_curve_anchor(spec),
        .closed_form = [spec](double s) { return airy_curve_closed_form(spec, s); },
        .expected_torsion = [lambda](double s) { return -2.0 * lambda * s; },
        .slant = false,
        .slant_a = 0.0,
        .default_grid = grid,
    };
}

} // namespace

std::vector<CatalogEntry> catalog_entries(const CatalogParams& p) {
    if (!(std::isfinite(p.c) && p.c > 0.0)) throw InvalidParam("catalog: requires c > 0");
    std::vector<CatalogEntry> entries;
    entries.push_back(make_helix_zero());
    entries.push_back(make_helix_pos(p.c));
    entries.push_back(make_helix_neg(p.c));
    entries.push_back(make_slant_a());
    entries.push_back(make_slant_b(p.slant_b_a));
    entries.push_back(make_slant_c(p.slant_c_a));
    entries.push_back(make_slant_d());
    entries.push_back(make_airy_entry(p.lambda));
    return entries;
}

CatalogEntry catalog_entry(const std::string& label, const CatalogParams& p) {
    if (label == "helix-zero") return make_helix_zero();
    if (label == "helix-pos" || label == "helix-neg") {
        if (!(std::isfinite(p.c) && p.c > 0.0)) throw InvalidParam("catalog: requires c > 0");
        return label == "helix-pos" ? make_helix_pos(p.c) : make_helix_neg(p.c);
    }
    if (label == "slant-a") return make_slant_a();
    if (label == "slant-b") return make_slant_b(p.slant_b_a);
    if (label == "slant-c") return make_slant_c(p.slant_c_a);
    if (label == "slant-d") return make_slant_d();
    if (label == "airy") return make_airy_entry(p.lambda);
    throw InvalidParam("catalog: unknown entry '" + label + "'");
}

Vec3 slant_axis(const Generator& gen, int epsilon, double a, double s) {
    if (!(s > 0.0)) throw DomainError("slant_axis: requires s > 0");
    const FrenetFrame fr = frame_at(gen, epsilon, s);
    return (-0.5 * a / s) * fr.L + s * fr.N + fr.W;
}

bool VerificationReport::passed(const VerificationThresholds& t) const {
    if (nullity_max > t.nullity) return false;
    if (pseudo_arc_max > t.pseudo_arc) return false;
    if (torsion_law_max > t.torsion_law) return false;
    if (synthesis_vs_closed_max > t.synthesis) return false;
    if (axis_residual && *axis_residual > t.axis) return false;
    if (axis_pairing_max && *axis_pairing_max > t.axis_pairing) return false;
    return true;
}

VerificationReport verify_entry(const CatalogEntry& entry, std::span<const double> grid,
                                double tol) {
    if (grid.size() < 9) throw InvalidParam("verify_entry: needs a grid of at least 9 points");

    constexpr double kFdStep = 1e-3;
    const Interval dom = entry.gen.domain();

    VerificationReport rep;
    rep.entry = entry.label;
    rep.fd_step = kFdStep;
    rep.quad_tol = tol;
    rep.samples.resize(grid.size());

    // Quadrature against the closed form. Anchor at the entry anchor when it
    // lies in the domain closure, otherwise at the middle grid point.
    double anchor_s = entry.s0;
    Vec3 anchor_pos = entry.alpha0;
    if (!dom.contains_closure(anchor_s)) {
        anchor_s = grid[grid.size() / 2];
        anchor_pos = entry.closed_form(anchor_s);
    }
    const CurveSpec spec(entry.gen, entry.epsilon, anchor_s, anchor_pos);
    const SampledCurve curve = synthesize(spec, grid, tol);

    std::optional<Vec3> axis_mid;
    if (entry.slant) {
        axis_mid = slant_axis(entry.gen, entry.epsilon, entry.slant_a, grid[grid.size() / 2]);
        rep.axis_residual = 0.0;
        rep.axis_pairing_max = 0.0;
    }

    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double s = grid[i];
        SampleDiagnostics& d = rep.samples[i];
        d.s = s;

        d.torsion_err = std::abs(torsion_schwarzian(entry.gen, s) - entry.expected_torsion(s));
        rep.torsion_law_max = std::max(rep.torsion_law_max, d.torsion_err);

        d.synthesis_dist = euclid_dist(curve.samples[i].pos, entry.closed_form(s));
        rep.synthesis_vs_closed_max = std::max(rep.synthesis_vs_closed_max, d.synthesis_dist);

        // Nullity and pseudo-arc of the closed form by five-point stencils,
        // fourth order, on a dedicated local step.
        if (dom.contains_closure(s - 2.0 * kFdStep) && dom.contains_closure(s + 2.0 * kFdStep)) {
            const Vec3 pm2 = entry.closed_form(s - 2.0 * kFdStep);
            const Vec3 pm1 = entry.closed_form(s - kFdStep);
            const Vec3 p0 = entry.closed_form(s);
            const Vec3 pp1 = entry.closed_form(s + kFdStep);
            const Vec3 pp2 = entry.closed_form(s + 2.0 * kFdStep);
            const Vec3 vel = (pm2 - 8.0 * pm1 + 8.0 * pp1 - pp2) / (12.0 * kFdStep);
            const Vec3 acc =
                (-pm2 + 16.0 * pm1 - 30.0 * p0 + 16.0 * pp1 - pp2) / (12.0 * kFdStep * kFdStep);
            d.nullity = std::abs(mink_inner(vel, vel));
            d.pseudo_arc = std::abs(mink_inner(acc, acc) - 1.0);
            rep.nullity_max = std::max(rep.nullity_max, d.nullity);
            rep.pseudo_arc_max = std::max(rep.pseudo_arc_max, d.pseudo_arc);
        }

        if (entry.slant) {
            const Vec3 v = slant_axis(entry.gen, entry.epsilon, entry.slant_a, s);
            rep.axis_residual = std::max(*rep.axis_residual, euclid_dist(v, *axis_mid));
            const FrenetFrame fr = frame_at(entry.gen, entry.epsilon, s);
            rep.axis_pairing_max =
                std::max(*rep.axis_pairing_max, std::abs(mink_inner(fr.W, v) - 1.0));
        }
    }
    return rep;
}

} // namespace nullcurve
