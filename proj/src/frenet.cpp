#include "nullcurve/frenet.hpp"

#include <cmath>
#include <sstream>

namespace nullcurve {

namespace {

// Basis fields of the frame formulas. Their pairwise inner products are
// constant: g(A,A) = g(A,B) = g(B,C) = g(C,C) = 0, g(B,B) = 1, g(A,C) = -2.
inline Vec3 basis_a(double f) { return {2.0 * f, f * f - 1.0, f * f + 1.0}; }
inline Vec3 basis_b(double f) { return {1.0, f, f}; }
constexpr Vec3 kBasisC{0.0, 1.0, 1.0};

} // namespace

FrenetFrame frame_at(const Generator& gen, int epsilon, double s) {
    if (epsilon != 1 && epsilon != -1) throw InvalidParam("frame_at: epsilon must be +1 or -1");
    const Jet3 j = gen.eval(s);
    const double e = epsilon;
    const Vec3 A = basis_a(j.f0);
    const Vec3 B = basis_b(j.f0);

    FrenetFrame fr;
    fr.L = (e / (2.0 * j.f1)) * A;
    fr.W = (-e * j.f2 / (2.0 * j.f1 * j.f1)) * A + e * B;
    fr.N = (-e * j.f2 * j.f2 / (4.0 * j.f1 * j.f1 * j.f1)) * A + (e * j.f2 / j.f1) * B
           - e * j.f1 * kBasisC;
    return fr;
}

double torsion_schwarzian(const Generator& gen, double s) {
    return schwarzian_of_jet(gen.eval(s));
}

double torsion_from_acceleration(const SampledCurve& positions, std::size_t index) {
    const auto& smp = positions.samples;
    if (index < 3 || index + 3 >= smp.size()) {
        std::ostringstream msg;
        msg << "torsion_from_acceleration: index " << index << " needs 3 neighbors each side in "
            << smp.size() << " samples";
        throw InsufficientStencil(msg.str());
    }
    const double h = smp[index + 1].s - smp[index].s;
    for (std::size_t i = index - 3; i < index + 3; ++i) {
        const double step = smp[i + 1].s - smp[i].s;
        if (std::abs(step - h) > 1e-9 * std::abs(h)) {
            std::ostringstream msg;
            msg << "torsion_from_acceleration: non-uniform spacing near index " << index
                << " (" << step << " vs " << h << ")";
            throw InsufficientStencil(msg.str());
        }
    }

    // Third derivative, central 7-point, fourth order:
    // ( p[-3] - 8 p[-2] + 13 p[-1] - 13 p[+1] + 8 p[+2] - p[+3] ) / (8 h^3)
    const Vec3 d3 = (smp[index - 3].pos - 8.0 * smp[index - 2].pos + 13.0 * smp[index - 1].pos
                     - 13.0 * smp[index + 1].pos + 8.0 * smp[index + 2].pos - smp[index + 3].pos)
                    / (8.0 * h * h * h);
    return 0.5 * mink_inner(d3, d3);
}

double gram_residual(const FrenetFrame& fr) {
    double worst = std::abs(mink_inner(fr.L, fr.N) - 1.0);
    worst = std::max(worst, std::abs(mink_inner(fr.W, fr.W) - 1.0));
    worst = std::max(worst, std::abs(mink_inner(fr.L, fr.L)));
    worst = std::max(worst, std::abs(mink_inner(fr.L, fr.W)));
    worst = std::max(worst, std::abs(mink_inner(fr.N, fr.N)));
    worst = std::max(worst, std::abs(mink_inner(fr.N, fr.W)));
    return worst;
}

FrameDiagnostics frenet_residuals(const Generator& gen, int epsilon, double s, double h) {
    if (h <= 0.0) throw InvalidParam("frenet_residuals: step must be positive");
    if (!gen.domain().contains_closure(s - h) || !gen.domain().contains_closure(s + h)) {
        std::ostringstream msg;
        msg << "frenet_residuals: stencil [" << s - h << ", " << s + h
            << "] leaves the domain of '" << gen.label() << "'";
        throw DomainError(msg.str());
    }

    const FrenetFrame fm = frame_at(gen, epsilon, s - h);
    const FrenetFrame f0 = frame_at(gen, epsilon, s);
    const FrenetFrame fp = frame_at(gen, epsilon, s + h);
    const double tau = torsion_schwarzian(gen, s);

    const double inv2h = 1.0 / (2.0 * h);
    const Vec3 dL = (fp.L - fm.L) * inv2h;
    const Vec3 dN = (fp.N - fm.N) * inv2h;
    const Vec3 dW = (fp.W - fm.W) * inv2h;

    FrameDiagnostics diag;
    diag.frenet_residual = sup_norm(dL - f0.W);
    diag.frenet_residual = std::max(diag.frenet_residual, sup_norm(dN - tau * f0.W));
    diag.frenet_residual = std::max(diag.frenet_residual, sup_norm(dW + tau * f0.L + f0.N));
    diag.gram_residual = gram_residual(f0);
    diag.det_value = det3(f0.L, f0.N, f0.W);
    // dW is the third position derivative; half its self product re-derives tau.
    diag.torsion_mismatch = std::abs(tau - 0.5 * mink_inner(dW, dW));
    return diag;
}

} // namespace nullcurve
