#include "nullcurve/schwarzian.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace nullcurve {

bool is_finite(const Jet3& j) {
    return std::isfinite(j.f0) && std::isfinite(j.f1) && std::isfinite(j.f2) && std::isfinite(j.f3);
}

double schwarzian_of_jet(const Jet3& j) {
    if (j.f1 == 0.0) {
        throw DomainError("schwarzian_of_jet: f' vanishes at the evaluation point");
    }
    const double r2 = j.f2 / j.f1;
    const double r3 = j.f3 / j.f1;
    return r3 - 1.5 * r2 * r2;
}

double schwarzian_fd(const std::function<double(double)>& f, double s, double h) {
    if (h <= 0.0) {
        // eps^(1/5): near-optimal for the third central difference.
        h = std::pow(std::numeric_limits<double>::epsilon(), 0.2) * std::max(1.0, std::abs(s));
    }

    const double fm2 = f(s - 2.0 * h);
    const double fm1 = f(s - h);
    const double f0 = f(s);
    const double fp1 = f(s + h);
    const double fp2 = f(s + 2.0 * h);

    const double scale = std::max({std::abs(fm2), std::abs(fm1), std::abs(f0),
                                   std::abs(fp1), std::abs(fp2)});
    const double d1 = (fp1 - fm1) / (2.0 * h);
    const double d2 = (fp1 - 2.0 * f0 + fm1) / (h * h);
    const double d3 = (fp2 - 2.0 * fp1 + 2.0 * fm1 - fm2) / (2.0 * h * h * h);

    const double noise_d1 = std::numeric_limits<double>::epsilon() * scale / h;
    if (std::abs(d1) < 10.0 * noise_d1) {
        std::ostringstream msg;
        msg << "schwarzian_fd: f' estimate " << d1 << " at s=" << s
            << " is below 10x its rounding-noise level " << noise_d1;
        throw DomainError(msg.str());
    }

    return schwarzian_of_jet(Jet3{f0, d1, d2, d3});
}

MobiusMap::MobiusMap(double a, double b, double c, double d) : a_(a), b_(b), c_(c), d_(d) {
    if (!(std::isfinite(a) && std::isfinite(b) && std::isfinite(c) && std::isfinite(d))) {
        throw InvalidParam("MobiusMap: coefficients must be finite");
    }
    if (a * d - b * c == 0.0) {
        throw InvalidParam("MobiusMap: singular map, a*d - b*c = 0");
    }
}

double mobius_apply(const MobiusMap& T, double r) {
    const double den = T.c() * r + T.d();
    if (den == 0.0) {
        std::ostringstream msg;
        msg << "mobius_apply: pole at r=" << r;
        throw PoleError(msg.str());
    }
    return (T.a() * r + T.b()) / den;
}

Jet3 mobius_jet(const MobiusMap& T, const Jet3& j) {
    const double den = T.c() * j.f0 + T.d();
    if (den == 0.0) {
        std::ostringstream msg;
        msg << "mobius_jet: pole at f=" << j.f0;
        throw PoleError(msg.str());
    }
    const double det = T.determinant();

    // Derivatives of T at u = f0: T' = det/den^2, T'' = -2c det/den^3,
    // T''' = 6c^2 det/den^4, composed by the chain rule.
    const double t1 = det / (den * den);
    const double t2 = -2.0 * T.c() * det / (den * den * den);
    const double t3 = 6.0 * T.c() * T.c() * det / (den * den * den * den);

    Jet3 out;
    out.f0 = (T.a() * j.f0 + T.b()) / den;
    out.f1 = t1 * j.f1;
    out.f2 = t2 * j.f1 * j.f1 + t1 * j.f2;
    out.f3 = t3 * j.f1 * j.f1 * j.f1 + 3.0 * t2 * j.f1 * j.f2 + t1 * j.f3;
    return out;
}

} // namespace nullcurve
