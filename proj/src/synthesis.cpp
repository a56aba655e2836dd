#include "nullcurve/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace nullcurve {

namespace {

// 15-point Kronrod extension of 7-point Gauss-Legendre on [-1, 1].
// Nodes are symmetric; listed here for the non-negative half.
constexpr double kKronrodNode[8] = {
    0.99145537112081263921,
    0.94910791234275852453,
    0.86486442335976907279,
    0.74153118559939443986,
    0.58608723546769113029,
    0.40584515137739716691,
    0.20778495500789846760,
    0.0,
};

constexpr double kKronrodWeight[8] = {
    0.022935322010529224964,
    0.063092092629978553291,
    0.104790010322250183840,
    0.140653259715525918745,
    0.169004726639267902827,
    0.190350578064785409913,
    0.204432940075298892414,
    0.209482141084727828013,
};

// Gauss weights attach to Kronrod nodes 1, 3, 5, 7 (the embedded rule).
constexpr double kGaussWeight[4] = {
    0.129484966168869693271,
    0.279705391489276667901,
    0.381830050505118944950,
    0.417959183673469387755,
};

constexpr int kMaxDepth = 40;

struct PanelResult {
    Vec3 integral;
    double err; ///< sup-norm of the Kronrod-Gauss difference
};

template <typename F>
PanelResult gk15(const F& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    Vec3 kron = kKronrodWeight[7] * f(mid);
    Vec3 gauss = kGaussWeight[3] * f(mid);
    for (int i = 0; i < 7; ++i) {
        const double off = half * kKronrodNode[i];
        const Vec3 pair = f(mid - off) + f(mid + off);
        kron += kKronrodWeight[i] * pair;
        if (i % 2 == 1) gauss += kGaussWeight[i / 2] * pair;
    }
    kron *= half;
    gauss *= half;
    return {kron, sup_norm(kron - gauss)};
}

template <typename F>
Vec3 integrate_adaptive(const F& f, double a, double b, double tol_rate, int depth,
                        double& err_acc) {
    const PanelResult r = gk15(f, a, b);
    const double budget = tol_rate * (b - a);
    if (r.err <= budget) {
        err_acc += r.err;
        return r.integral;
    }
    if (depth >= kMaxDepth) {
        std::ostringstream msg;
        msg << "quadrature on [" << a << ", " << b << "] exceeded the subdivision budget; "
            << "error estimate " << r.err << " > target " << budget;
        throw QuadratureFailure(msg.str());
    }
    const double mid = 0.5 * (a + b);
    const Vec3 left = integrate_adaptive(f, a, mid, tol_rate, depth + 1, err_acc);
    const Vec3 right = integrate_adaptive(f, mid, b, tol_rate, depth + 1, err_acc);
    return left + right;
}

} // namespace

CurveSpec::CurveSpec(Generator g, int eps, double s0_, Vec3 a0)
    : gen(std::move(g)), epsilon(eps), s0(s0_), alpha0(a0) {
    if (eps != 1 && eps != -1) throw InvalidParam("CurveSpec: epsilon must be +1 or -1");
    if (!is_finite(a0)) throw InvalidParam("CurveSpec: anchor position must be finite");
    if (!gen.domain().contains_closure(s0_)) {
        std::ostringstream msg;
        msg << "CurveSpec: s0=" << s0_ << " outside the closed domain of '" << gen.label() << "'";
        throw DomainError(msg.str());
    }
}

Vec3 integrand(const Generator& gen, int epsilon, double s) {
    const Jet3 j = gen.eval(s); // throws DomainError outside the closure
    const double scale = epsilon / (2.0 * j.f1);
    const double f2 = j.f0 * j.f0;
    return Vec3{scale * 2.0 * j.f0, scale * (f2 - 1.0), scale * (f2 + 1.0)};
}

SampledCurve synthesize(const CurveSpec& spec, std::span<const double> grid, double tol) {
    if (tol <= 0.0) throw InvalidParam("synthesize: tol must be positive");
    if (grid.empty()) throw InvalidParam("synthesize: empty grid");
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        if (!(grid[i] < grid[i + 1])) {
            throw InvalidParam("synthesize: grid must be strictly increasing");
        }
    }
    for (const double s : grid) {
        if (!spec.gen.domain().contains_closure(s)) {
            std::ostringstream msg;
            msg << "synthesize: grid point " << s << " outside the closed domain of '"
                << spec.gen.label() << "'";
            throw DomainError(msg.str());
        }
    }

    const auto f = [&spec](double s) { return integrand(spec.gen, spec.epsilon, s); };

    SampledCurve curve{spec, {}};
    curve.samples.resize(grid.size());

    // First grid index at or above the anchor.
    const std::size_t split =
        std::lower_bound(grid.begin(), grid.end(), spec.s0) - grid.begin();

    // Rightward accumulation from the anchor.
    {
        Vec3 pos = spec.alpha0;
        double err = 0.0;
        double prev = spec.s0;
        for (std::size_t i = split; i < grid.size(); ++i) {
            if (grid[i] > prev) {
                pos += integrate_adaptive(f, prev, grid[i], tol, 0, err);
                prev = grid[i];
            }
            curve.samples[i] = {grid[i], pos, err};
        }
    }
    // Leftward accumulation from the anchor.
    {
        Vec3 pos = spec.alpha0;
        double err = 0.0;
        double prev = spec.s0;
        for (std::size_t ii = split; ii > 0; --ii) {
            const std::size_t i = ii - 1;
            pos -= integrate_adaptive(f, grid[i], prev, tol, 0, err);
            prev = grid[i];
            curve.samples[i] = {grid[i], pos, err};
        }
    }
    return curve;
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    if (n < 2) throw InvalidParam("linspace: needs n >= 2");
    if (!(lo < hi)) throw InvalidParam("linspace: needs lo < hi");
    std::vector<double> pts(n);
    const double step = (hi - lo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) pts[i] = lo + static_cast<double>(i) * step;
    pts.back() = hi;
    return pts;
}

} // namespace nullcurve
