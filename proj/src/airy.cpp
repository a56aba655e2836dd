#include "nullcurve/airy.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace nullcurve {

namespace {

// ---------------------------------------------------------------------------
// Double-double arithmetic (Dekker/Knuth error-free transformations).
// Only the handful of operations the Maclaurin loop needs.
// ---------------------------------------------------------------------------

struct DD {
    double hi = 0.0;
    double lo = 0.0;
};

inline DD two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    const double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline DD quick_two_sum(double a, double b) {
    // requires |a| >= |b|
    const double s = a + b;
    return {s, b - (s - a)};
}

inline DD two_prod(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline DD dd_add(const DD& a, const DD& b) {
    DD s = two_sum(a.hi, b.hi);
    DD t = two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline DD dd_sub(const DD& a, const DD& b) { return dd_add(a, DD{-b.hi, -b.lo}); }

inline DD dd_mul(const DD& a, const DD& b) {
    DD p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline DD dd_mul_d(const DD& a, double b) {
    DD p = two_prod(a.hi, b);
    p.lo += a.lo * b;
    return quick_two_sum(p.hi, p.lo);
}

inline DD dd_div_d(const DD& a, double b) {
    const double q1 = a.hi / b;
    DD p = two_prod(q1, b);
    const double r = (a.hi - p.hi) - p.lo + a.lo;
    const double q2 = r / b;
    return quick_two_sum(q1, q2);
}

// Boundary constants of the y'' = x y solution space, split into
// double-double pairs: c1 = Ai(0) = 3^(-2/3)/Gamma(2/3),
// c2 = -Ai'(0) = 3^(-1/3)/Gamma(1/3), and sqrt(3).
constexpr DD kC1{0.3550280538878172, 2.05233632436212e-17};
constexpr DD kC2{0.2588194037928068, -2.522243111610832e-17};
constexpr DD kSqrt3{1.7320508075688772, 1.0035084221806903e-16};

constexpr double kSeriesLimit = 9.0;

// Maclaurin solutions of y'' = x y:
//   F(x) = sum x^(3k)   / prod, F(0) = 1, F'(0) = 0
//   G(x) = sum x^(3k+1) / prod, G(0) = 0, G'(0) = 1
// accumulated along with their derivatives. Term recurrences follow from the
// ODE coefficient recursion a_{n+2} (n+2)(n+1) = a_{n-1}.
void airy_series(double x, DD& F, DD& G, DD& Fp, DD& Gp) {
    const DD x2 = two_prod(x, x);
    const DD x3 = dd_mul_d(x2, x);

    DD t{1.0, 0.0};                   // F terms
    DD u{x, 0.0};                     // G terms
    DD p = dd_div_d(x2, 2.0);         // F' terms, leading x^2/2
    DD q{1.0, 0.0};                   // G' terms

    F = t;
    G = u;
    Fp = p;
    Gp = q;

    for (int k = 0; k < 200; ++k) {
        const double a = 3.0 * k;
        t = dd_div_d(dd_mul(t, x3), (a + 2.0) * (a + 3.0));
        u = dd_div_d(dd_mul(u, x3), (a + 3.0) * (a + 4.0));
        p = dd_div_d(dd_mul(p, x3), (a + 3.0) * (a + 5.0));
        q = dd_div_d(dd_mul(q, x3), (a + 1.0) * (a + 3.0));
        F = dd_add(F, t);
        G = dd_add(G, u);
        Fp = dd_add(Fp, p);
        Gp = dd_add(Gp, q);

        const double mag = std::max({std::abs(F.hi), std::abs(G.hi),
                                     std::abs(Fp.hi), std::abs(Gp.hi), 1.0});
        const double largest = std::max({std::abs(t.hi), std::abs(u.hi),
                                         std::abs(p.hi), std::abs(q.hi)});
        if (largest < mag * 1e-35) return;
    }
}

AiryEval airy_series_eval(double x) {
    DD F, G, Fp, Gp;
    airy_series(x, F, G, Fp, Gp);

    const DD c1F = dd_mul(kC1, F);
    const DD c2G = dd_mul(kC2, G);
    const DD c1Fp = dd_mul(kC1, Fp);
    const DD c2Gp = dd_mul(kC2, Gp);

    AiryEval e;
    e.ai = dd_sub(c1F, c2G).hi;
    e.aip = dd_sub(c1Fp, c2Gp).hi;
    e.bi = dd_mul(kSqrt3, dd_add(c1F, c2G)).hi;
    e.bip = dd_mul(kSqrt3, dd_add(c1Fp, c2Gp)).hi;
    return e;
}

// Coefficients of the large-|x| expansions:
//   u_k = (6k-5)(6k-3)(6k-1) / ((2k-1) 216 k) u_{k-1},  v_k = -u_k (6k+1)/(6k-1).
// Terms are added until they stop decreasing or drop below 1e-18 relative.
struct AsymptoticSums {
    double sa = 1.0;  // alternating u-sum
    double sb = 1.0;  // plain u-sum
    double sap = 1.0; // alternating v-sum
    double sbp = 1.0; // plain v-sum
};

AsymptoticSums asymptotic_sums(double xi) {
    AsymptoticSums s;
    double u = 1.0;
    double pw = 1.0;
    double prev = 1.0;
    double sign = -1.0;
    for (int k = 1; k <= 60; ++k) {
        u *= (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) / ((2.0 * k - 1.0) * 216.0 * k);
        pw /= xi;
        const double tu = u * pw;
        if (tu > prev) break; // divergent tail reached
        const double tv = -tu * (6.0 * k + 1.0) / (6.0 * k - 1.0);
        s.sa += sign * tu;
        s.sb += tu;
        s.sap += sign * tv;
        s.sbp += tv;
        if (tu < 1e-18) break;
        prev = tu;
        sign = -sign;
    }
    return s;
}

// Even/odd split of the same sums, used by the oscillatory region.
struct OscillatorySums {
    double pu = 1.0; // sum (-1)^k u_{2k}   / z^{2k}
    double qu = 0.0; // sum (-1)^k u_{2k+1} / z^{2k+1}
    double pv = 1.0;
    double qv = 0.0;
};

OscillatorySums oscillatory_sums(double zeta) {
    OscillatorySums s;
    double u = 1.0;
    double pw = 1.0;
    double prev = 1.0;
    for (int k = 1; k <= 60; ++k) {
        u *= (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) / ((2.0 * k - 1.0) * 216.0 * k);
        pw /= zeta;
        const double tu = u * pw;
        if (tu > prev) break;
        const double tv = -tu * (6.0 * k + 1.0) / (6.0 * k - 1.0);
        const int m = k / 2;                      // index within the split sums
        const double sgn = (m % 2 == 0) ? 1.0 : -1.0;
        if (k % 2 == 1) {
            s.qu += sgn * tu;
            s.qv += sgn * tv;
        } else {
            s.pu += sgn * tu;
            s.pv += sgn * tv;
        }
        if (tu < 1e-18) break;
        prev = tu;
    }
    return s;
}

AiryEval airy_asymptotic_pos(double x) {
    const double sqrt_pi = std::sqrt(std::numbers::pi);
    const double root = std::sqrt(x);
    const double x14 = std::sqrt(root);
    const double xi = 2.0 / 3.0 * x * root;
    const AsymptoticSums s = asymptotic_sums(xi);
    const double em = std::exp(-xi);
    const double ep = std::exp(xi);

    AiryEval e;
    e.ai = em / (2.0 * sqrt_pi * x14) * s.sa;
    e.aip = -x14 * em / (2.0 * sqrt_pi) * s.sap;
    e.bi = ep / (sqrt_pi * x14) * s.sb;
    e.bip = x14 * ep / sqrt_pi * s.sbp;
    return e;
}

AiryEval airy_asymptotic_neg(double x) {
    const double z = -x;
    const double sqrt_pi = std::sqrt(std::numbers::pi);
    const double root = std::sqrt(z);
    const double z14 = std::sqrt(root);
    const double zeta = 2.0 / 3.0 * z * root;
    const OscillatorySums s = oscillatory_sums(zeta);
    const double w = zeta - 0.25 * std::numbers::pi;
    const double cw = std::cos(w);
    const double sw = std::sin(w);

    AiryEval e;
    e.ai = (cw * s.pu + sw * s.qu) / (sqrt_pi * z14);
    e.aip = z14 * (sw * s.pv - cw * s.qv) / sqrt_pi;
    e.bi = (-sw * s.pu + cw * s.qu) / (sqrt_pi * z14);
    e.bip = z14 * (cw * s.pv + sw * s.qv) / sqrt_pi;
    return e;
}

} // namespace

AiryEval airy_eval(double x) {
    if (!std::isfinite(x) || std::abs(x) > kAiryRange) {
        std::ostringstream msg;
        msg << "airy_eval: x=" << x << " outside the supported range |x| <= " << kAiryRange;
        throw OverflowRange(msg.str());
    }
    if (std::abs(x) <= kSeriesLimit) return airy_series_eval(x);
    return x > 0.0 ? airy_asymptotic_pos(x) : airy_asymptotic_neg(x);
}

double airy_ode_residual(double x, AiryBranch branch, double h) {
    if (h <= 0.0) throw InvalidParam("airy_ode_residual: step must be positive");
    const AiryEval em = airy_eval(x - h);
    const AiryEval e0 = airy_eval(x);
    const AiryEval ep = airy_eval(x + h);
    const double ym = branch == AiryBranch::ai ? em.ai : em.bi;
    const double y0 = branch == AiryBranch::ai ? e0.ai : e0.bi;
    const double yp = branch == AiryBranch::ai ? ep.ai : ep.bi;
    const double ypp = (yp - 2.0 * y0 + ym) / (h * h);
    const double rhs = x * y0;
    return std::abs(ypp - rhs) / (1.0 + std::abs(rhs));
}

AirySpec::AirySpec(double lambda_) : lambda(lambda_), mu(std::cbrt(lambda_)) {
    if (!std::isfinite(lambda_) || lambda_ == 0.0) {
        throw InvalidParam("AirySpec: lambda must be finite and nonzero");
    }
}

namespace {

Interval airy_domain(double mu) {
    // mu s must stay inside (largest Bi zero, evaluation range).
    const double lo_x = kBiLargestZero;
    const double hi_x = kAiryRange;
    if (mu > 0.0) return Interval{lo_x / mu, hi_x / mu};
    return Interval{hi_x / mu, lo_x / mu};
}

} // namespace

Generator airy_generator(const AirySpec& spec) {
    const double mu = spec.mu;
    const double pi_over_mu = std::numbers::pi / mu;
    auto jet = [mu, pi_over_mu](double s) -> Jet3 {
        const AiryEval e = airy_eval(mu * s);
        const double ai2 = e.ai * e.ai;
        Jet3 j;
        j.f0 = pi_over_mu * e.bi / e.ai;
        j.f1 = 1.0 / ai2;
        j.f2 = -2.0 * mu * e.aip / (ai2 * e.ai);
        j.f3 = (6.0 * mu * mu * e.aip * e.aip - 2.0 * mu * mu * (mu * s) * ai2) / (ai2 * ai2);
        return j;
    };
    std::ostringstream label;
    label << "airy-ratio(lambda=" << spec.lambda << ")";
    GeneratorDescriptor desc{"airy", {{"lambda", spec.lambda}}};
    return Generator(jet, airy_domain(mu), label.str(), desc);
}

Vec3 airy_curve_closed_form(const AirySpec& spec, double s) {
    const double mu = spec.mu;
    const Interval dom = airy_domain(mu);
    if (!dom.contains_closure(s)) {
        std::ostringstream msg;
        msg << "airy_curve_closed_form: s=" << s << " outside domain (" << dom.lo
            << ", " << dom.hi << ")";
        throw DomainError(msg.str());
    }
    const double z = mu * s;
    const AiryEval e = airy_eval(z);
    const double pi = std::numbers::pi;
    const double mu2 = mu * mu;
    const double mu3 = mu2 * mu;
    const double bi_part = pi * pi * (z * e.bi * e.bi - e.bip * e.bip);
    const double ai_part = mu3 * s * e.ai * e.ai - mu2 * e.aip * e.aip;

    Vec3 p;
    p.x = pi / mu2 * (z * e.ai * e.bi - e.aip * e.bip);
    p.y = (bi_part - ai_part) / (2.0 * mu3);
    p.z = (bi_part + ai_part) / (2.0 * mu3);
    return p;
}

Vec3 airy_curve_anchor(const AirySpec& spec) {
    const double mu = spec.mu;
    const double pi = std::numbers::pi;
    const double g13 = kGammaOneThird;
    const double den = 2.0 * std::cbrt(9.0) * mu * mu * mu * g13 * g13;
    return Vec3{2.0 * std::sqrt(3.0) * mu * pi / den,
                (mu * mu - 3.0 * pi * pi) / den,
                (-mu * mu - 3.0 * pi * pi) / den};
}

double gamma_real(double x) {
    // Lanczos, g = 7, 9 coefficients.
    static constexpr double kCoef[9] = {
        0.99999999999980993,
        676.5203681218851,
        -1259.1392167224028,
        771.32342877765313,
        -176.61502916214059,
        12.507343278686905,
        -0.13857109526572012,
        9.9843695780195716e-6,
        1.5056327351493116e-7,
    };
    const double pi = std::numbers::pi;
    if (x < 0.5) {
        // reflection
        return pi / (std::sin(pi * x) * gamma_real(1.0 - x));
    }
    x -= 1.0;
    double acc = kCoef[0];
    for (int i = 1; i < 9; ++i) acc += kCoef[i] / (x + i);
    const double t = x + 7.5;
    return std::sqrt(2.0 * pi) * std::pow(t, x + 0.5) * std::exp(-t) * acc;
}

} // namespace nullcurve
