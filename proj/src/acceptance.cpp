#include "nullcurve/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <random>
#include <sstream>

#include "nullcurve/airy.hpp"
#include "nullcurve/catalog.hpp"
#include "nullcurve/frenet.hpp"
#include "nullcurve/minkowski.hpp"
#include "nullcurve/schwarzian.hpp"
#include "nullcurve/synthesis.hpp"

namespace nullcurve {

namespace {

struct Tracker {
    double worst = 0.0;
    std::string where;

    void update(double value, const std::string& place, double at) {
        if (value > worst) {
            worst = value;
            std::ostringstream os;
            os << place << " at s=" << at;
            where = os.str();
        }
    }
};

// Torsion from sampled closed-form positions around one probe point.
double fd_torsion_at(const CatalogEntry& entry, double s, double h) {
    std::vector<double> grid(7);
    for (int k = -3; k <= 3; ++k) grid[k + 3] = s + k * h;
    SampledCurve curve{CurveSpec(entry.gen, entry.epsilon, grid.front(),
                                 entry.closed_form(grid.front())),
                      {}};
    curve.samples.reserve(7);
    for (double g : grid) curve.samples.push_back({g, entry.closed_form(g), 0.0});
    return torsion_from_acceleration(curve, 3);
}

CriterionResult torsion_identity_criterion(const std::vector<CatalogEntry>& entries) {
    constexpr double kStep = 1e-2;
    constexpr int kPoints = 50;
    CriterionResult res{1, "torsion: Schwarzian vs acceleration", 0.0, 1e-3, false,
                        "50 interior points per entry, 7-point stencil, h=1e-2"};
    Tracker track;
    double polynomial_worst = 0.0;
    for (const auto& entry : entries) {
        const auto grid = linspace(entry.default_grid.lo + 4.0 * kStep,
                                   entry.default_grid.hi - 4.0 * kStep, kPoints);
        for (double s : grid) {
            const double tau_fd = fd_torsion_at(entry, s, kStep);
            const double tau_s = torsion_schwarzian(entry.gen, s);
            const double diff = std::abs(tau_fd - tau_s);
            track.update(diff, entry.label, s);
            if (entry.label == "helix-zero") polynomial_worst = std::max(polynomial_worst, diff);
        }
    }
    res.worst = track.worst;
    res.passed = track.worst <= res.threshold && polynomial_worst <= 1e-5;
    std::ostringstream detail;
    detail << "worst " << track.where << "; polynomial case " << std::scientific
           << std::setprecision(2) << polynomial_worst << " (limit 1e-05)";
    res.detail = detail.str();
    return res;
}

CriterionResult helix_torsion_criterion() {
    CriterionResult res{2, "helix torsion laws on exact jets", 0.0, 1e-9, false,
                        "c in {0.5, 1, 2}, 50 points each"};
    Tracker track;
    for (double c : {0.5, 1.0, 2.0}) {
        const Generator ident = make_generator(IdentityGen{});
        for (double s : linspace(0.5, 8.0, 50)) {
            track.update(std::abs(torsion_schwarzian(ident, s)), "identity", s);
        }
        const Generator cot = make_generator(CotGen{c});
        const Interval cd = cot.domain();
        const double margin = 0.05 * cd.width();
        for (double s : linspace(cd.lo + margin, cd.hi - margin, 50)) {
            track.update(std::abs(torsion_schwarzian(cot, s) - 0.5 * c * c), "cot", s);
        }
        const Generator ex = make_generator(ExpGen{c});
        for (double s : linspace(-4.0, 4.0, 50)) {
            track.update(std::abs(torsion_schwarzian(ex, s) + 0.5 * c * c), "exp", s);
        }
    }
    res.worst = track.worst;
    res.passed = res.worst <= res.threshold;
    res.detail = "worst " + track.where;
    return res;
}

CriterionResult slant_criterion() {
    CriterionResult res{3, "slant-helix torsion law and axis", 0.0, 1e-9, false,
                        "a in {1, 2, 0.5, -3}; tau 2 s^2 = a; V constant; g(W,V) = 1"};
    Tracker law;
    double axis_worst = 0.0;
    const CatalogParams params{}; // a = 2 and a = 0.5 defaults
    for (const char* label : {"slant-a", "slant-b", "slant-c", "slant-d"}) {
        const CatalogEntry entry = catalog_entry(label, params);
        const auto grid = linspace(entry.default_grid.lo, entry.default_grid.hi, 51);
        const Vec3 v_mid = slant_axis(entry.gen, entry.epsilon, entry.slant_a,
                                      grid[grid.size() / 2]);
        for (double s : grid) {
            const double tau = torsion_schwarzian(entry.gen, s);
            law.update(std::abs(tau * 2.0 * s * s - entry.slant_a), label, s);
            const Vec3 v = slant_axis(entry.gen, entry.epsilon, entry.slant_a, s);
            axis_worst = std::max(axis_worst, euclid_dist(v, v_mid));
            const FrenetFrame fr = frame_at(entry.gen, entry.epsilon, s);
            axis_worst = std::max(axis_worst, std::abs(mink_inner(fr.W, v) - 1.0));
        }
    }
    res.worst = std::max(law.worst, axis_worst);
    res.passed = law.worst <= 1e-9 && axis_worst <= 1e-8;
    std::ostringstream detail;
    detail << "law worst " << law.where << "; axis residual " << std::scientific
           << std::setprecision(2) << axis_worst << " (limit 1e-08)";
    res.detail = detail.str();
    return res;
}

CriterionResult airy_criterion(double quad_tol) {
    CriterionResult res{4, "Airy family", 0.0, 1e-7, false, ""};
    // Wronskian on [-8, 8].
    double wronskian_worst = 0.0;
    const double inv_pi = 1.0 / std::numbers::pi;
    for (double x : linspace(-8.0, 8.0, 1000)) {
        const AiryEval e = airy_eval(x);
        wronskian_worst =
            std::max(wronskian_worst, std::abs(e.ai * e.bip - e.aip * e.bi - inv_pi));
    }
    // ODE residual for both branches.
    double ode_worst = 0.0;
    for (double x : linspace(-8.0, 8.0, 401)) {
        ode_worst = std::max(ode_worst, airy_ode_residual(x, AiryBranch::ai));
        ode_worst = std::max(ode_worst, airy_ode_residual(x, AiryBranch::bi));
    }
    // Torsion law over the four lambdas.
    double torsion_worst = 0.0; // scaled residual
    for (double lambda : {1.0, -1.0, 8.0, -8.0}) {
        const Generator gen = airy_generator(AirySpec(lambda));
        const Interval dom = gen.domain();
        const double lo = std::max(dom.lo + 0.05 * dom.width(), -3.0);
        const double hi = std::min(dom.hi - 0.05 * dom.width(), 3.0);
        for (double s : linspace(lo, hi, 50)) {
            const double tau = torsion_schwarzian(gen, s);
            const double want = -2.0 * lambda * s;
            torsion_worst =
                std::max(torsion_worst, std::abs(tau - want) / (1.0 + std::abs(want)));
        }
    }
    // Quadrature against the closed form, lambda = 1, anchored at the
    // Gamma(1/3)-dependent position at s = 0.
    const AirySpec spec(1.0);
    const CurveSpec curve_spec(airy_generator(spec), 1, 0.0, airy_curve_anchor(spec));
    const auto grid = linspace(0.05, 2.0, 51);
    const SampledCurve curve = synthesize(curve_spec, grid, quad_tol);
    double synth_worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        synth_worst = std::max(
            synth_worst, euclid_dist(curve.samples[i].pos, airy_curve_closed_form(spec, grid[i])));
    }

    res.worst = synth_worst;
    res.passed = wronskian_worst <= 1e-12 && ode_worst <= 1e-6 && torsion_worst <= 1e-9 &&
                 synth_worst <= 1e-7;
    std::ostringstream detail;
    detail << std::scientific << std::setprecision(2) << "wronskian " << wronskian_worst
           << " (limit 1e-12); ode " << ode_worst << " (limit 1e-06); torsion " << torsion_worst
           << " (limit 1e-09); synthesis " << synth_worst << " (limit 1e-07)";
    res.detail = detail.str();
    return res;
}

CriterionResult structure_criterion(const std::vector<CatalogEntry>& entries) {
    CriterionResult res{5, "frame structure: pairings, ODEs, orientation", 0.0, 1e-6, false, ""};
    double gram_worst = 0.0;
    double frenet_worst = 0.0;
    double det_worst = 0.0;
    for (const auto& entry : entries) {
        Interval range = entry.default_grid;
        // The h^2 truncation of the frame-ODE check tracks the frame's third
        // derivatives, which grow exponentially along the Airy curve; keep
        // that band where the pinned step h=1e-4 resolves them.
        if (entry.label == "airy") range.hi = std::min(range.hi, 1.2);
        const auto grid = linspace(range.lo + 1e-3, range.hi - 1e-3, 20);
        for (int eps : {1, -1}) {
            for (double s : grid) {
                const FrameDiagnostics diag = frenet_residuals(entry.gen, eps, s, 1e-4);
                gram_worst = std::max(gram_worst, diag.gram_residual);
                frenet_worst = std::max(frenet_worst, diag.frenet_residual);
                det_worst = std::max(det_worst, std::abs(diag.det_value - eps));
            }
        }
    }
    res.worst = frenet_worst;
    res.passed = gram_worst <= 1e-10 && frenet_worst <= 1e-6 && det_worst <= 1e-9;
    std::ostringstream detail;
    detail << std::scientific << std::setprecision(2) << "gram " << gram_worst
           << " (limit 1e-10); frenet " << frenet_worst << " (limit 1e-06); |det - eps| "
           << det_worst << " (limit 1e-09)";
    res.detail = detail.str();
    return res;
}

CriterionResult synthesis_criterion(const std::vector<VerificationReport>& reports) {
    CriterionResult res{6, "quadrature vs closed forms", 0.0, 1e-7, false, ""};
    Tracker track;
    for (const auto& rep : reports) {
        track.update(rep.synthesis_vs_closed_max, rep.entry, 0.0);
    }
    res.worst = track.worst;
    res.passed = res.worst <= res.threshold;
    res.detail = "worst entry " + track.where.substr(0, track.where.find(" at "));
    return res;
}

CriterionResult mobius_criterion(std::uint64_t seed) {
    CriterionResult res{7, "Schwarzian invariance under fractional-linear maps", 0.0, 1e-9,
                        false, "1000 random (map, jet) pairs, seeded"};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-2.0, 2.0);
    std::uniform_real_distribution<double> slope(0.1, 2.0);

    double worst = 0.0;
    int produced = 0;
    while (produced < 1000) {
        const double a = unit(rng), b = unit(rng), c = unit(rng), d = unit(rng);
        if (std::abs(a * d - b * c) < 1e-2) continue;
        Jet3 jet;
        jet.f0 = unit(rng);
        jet.f1 = slope(rng) * (unit(rng) > 0.0 ? 1.0 : -1.0);
        jet.f2 = unit(rng);
        jet.f3 = unit(rng);
        if (std::abs(c * jet.f0 + d) <= 1e-3) continue;
        const MobiusMap map(a, b, c, d);
        const double s_before = schwarzian_of_jet(jet);
        const double s_after = schwarzian_of_jet(mobius_jet(map, jet));
        worst = std::max(worst,
                         std::abs(s_after - s_before) / (1.0 + std::abs(s_before)));
        ++produced;
    }
    res.worst = worst;
    res.passed = worst <= res.threshold;
    return res;
}

CriterionResult kinematics_criterion(const std::vector<VerificationReport>& reports) {
    CriterionResult res{8, "closed-form nullity and pseudo-arc", 0.0, 1e-6, false, ""};
    double nullity_worst = 0.0;
    double arc_worst = 0.0;
    for (const auto& rep : reports) {
        nullity_worst = std::max(nullity_worst, rep.nullity_max);
        arc_worst = std::max(arc_worst, rep.pseudo_arc_max);
    }
    res.worst = std::max(nullity_worst, arc_worst);
    res.passed = nullity_worst <= 1e-6 && arc_worst <= 1e-5;
    std::ostringstream detail;
    detail << std::scientific << std::setprecision(2) << "nullity " << nullity_worst
           << " (limit 1e-06); pseudo-arc " << arc_worst << " (limit 1e-05)";
    res.detail = detail.str();
    return res;
}

} // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt) {
    const std::vector<CatalogEntry> entries = catalog_entries();

    std::vector<VerificationReport> reports;
    reports.reserve(entries.size());
    for (const auto& entry : entries) {
        const auto grid = linspace(entry.default_grid.lo, entry.default_grid.hi, 51);
        reports.push_back(verify_entry(entry, grid, opt.quad_tol));
    }

    std::vector<CriterionResult> results;
    results.push_back(torsion_identity_criterion(entries));
    results.push_back(helix_torsion_criterion());
    results.push_back(slant_criterion());
    results.push_back(airy_criterion(opt.quad_tol));
    results.push_back(structure_criterion(entries));
    results.push_back(synthesis_criterion(reports));
    results.push_back(mobius_criterion(opt.rng_seed));
    results.push_back(kinematics_criterion(reports));
    return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CriterionResult& r) { return r.passed; });
}

void print_results(std::ostream& os, const std::vector<CriterionResult>& results) {
    for (const auto& r : results) {
        os << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << ": worst "
           << std::scientific << std::setprecision(3) << r.worst << " (limit " << r.threshold
           << ")";
        if (!r.detail.empty()) os << " -- " << r.detail;
        os << "\n";
    }
}

} // namespace nullcurve
