#pragma once

#include <functional>

#include "nullcurve/errors.hpp"

namespace nullcurve {

/// Value of a scalar function together with its first three derivatives at a point.
struct Jet3 {
    double f0 = 0.0; ///< f
    double f1 = 0.0; ///< f'
    double f2 = 0.0; ///< f''
    double f3 = 0.0; ///< f'''
};

bool is_finite(const Jet3& j);

/// Schwarzian derivative S(f) = f'''/f' - (3/2) (f''/f')^2 evaluated from a 3-jet.
/// Throws DomainError when f' = 0.
double schwarzian_of_jet(const Jet3& j);

/// Schwarzian derivative estimated from central differences of orders 1..3 on
/// a plain scalar function. Step h <= 0 selects the default
/// h = eps^(1/5) * max(1, |s|), balancing the O(h^2) truncation of the third
/// difference against its O(eps/h^3) rounding noise. Throws DomainError when
/// the f' estimate is below 10x its rounding-noise estimate.
double schwarzian_fd(const std::function<double(double)>& f, double s, double h = 0.0);

/// Fractional-linear map r -> (a r + b) / (c r + d) with a d - b c != 0.
class MobiusMap {
public:
    MobiusMap(double a, double b, double c, double d);

    double a() const { return a_; }
    double b() const { return b_; }
    double c() const { return c_; }
    double d() const { return d_; }
    double determinant() const { return a_ * d_ - b_ * c_; }

private:
    double a_, b_, c_, d_;
};

/// Applies T at r. Throws PoleError when c r + d = 0; the map is treated over
/// the reals only, never over the projective line.
double mobius_apply(const MobiusMap& T, double r);

/// 3-jet of the composition s -> T(f(s)), given the 3-jet of f. The Schwarzian
/// of the result equals the Schwarzian of the input in exact arithmetic.
Jet3 mobius_jet(const MobiusMap& T, const Jet3& j);

} // namespace nullcurve
