#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "nullcurve/errors.hpp"
#include "nullcurve/schwarzian.hpp"

namespace nullcurve {

/// Open interval (lo, hi); either endpoint may be infinite.
struct Interval {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();

    bool contains(double s) const { return s > lo && s < hi; }
    bool contains_closure(double s) const { return s >= lo && s <= hi; }
    bool bounded() const { return std::isfinite(lo) && std::isfinite(hi); }
    double width() const { return hi - lo; }
};

/// Reconstructible description of a generator: kind tag plus named parameters.
/// Custom generators carry kind "custom" and are not reconstructible.
struct GeneratorDescriptor {
    std::string kind = "custom";
    std::vector<std::pair<std::string, double>> params;
};

/// Scalar generator function f with analytic 3-jets on an open interval.
/// Admissibility requires f != 0 and f' != 0 on the interval; construction
/// spot-checks both on a 1024-point sample grid. Immutable once built.
class Generator {
public:
    using JetFn = std::function<Jet3(double)>;

    Generator(JetFn eval, Interval domain, std::string label,
              GeneratorDescriptor desc = {}, bool analytic_jets = true,
              std::string admissibility_note = {});

    /// Jet at s. Accepts the closure of the domain: the endpoint limits are
    /// needed by curve anchors that sit on the boundary.
    Jet3 eval(double s) const;
    Jet3 operator()(double s) const { return eval(s); }

    const Interval& domain() const { return domain_; }
    const std::string& label() const { return label_; }
    const GeneratorDescriptor& descriptor() const { return desc_; }
    bool analytic_jets() const { return analytic_jets_; }
    const std::string& admissibility_note() const { return note_; }

    /// Bounded sampling window: the domain with infinite ends clamped.
    Interval sample_window() const;

private:
    JetFn eval_;
    Interval domain_;
    std::string label_;
    GeneratorDescriptor desc_;
    bool analytic_jets_;
    std::string note_;
};

// Generator kinds. Parameter constraints are enforced by make_generator.
struct IdentityGen {};                      ///< f(s) = s on (0, inf)
struct CotGen { double c; };                ///< f(s) = -cot(c s / 2), c > 0
struct ExpGen { double c; };                ///< f(s) = exp(c s), c > 0
struct LogGen {};                           ///< f(s) = ln s on (1, inf)
struct TanLogGen { double b; };             ///< f(s) = tan(b ln(s) / 2), b > 0
struct PowerGen { double b; };              ///< f(s) = s^(-b), b > 0, b != 2
struct InverseSquareGen {};                 ///< f(s) = 1 / s^2
struct AiryRatioGen { double lambda; };     ///< f(s) = (pi/mu) Bi(mu s)/Ai(mu s), mu = cbrt(lambda)
struct CustomGen {
    Generator::JetFn jet;
    Interval domain;
    std::string label = "custom";
    bool analytic_jets = true;
};

using GeneratorKind = std::variant<IdentityGen, CotGen, ExpGen, LogGen, TanLogGen,
                                   PowerGen, InverseSquareGen, AiryRatioGen, CustomGen>;

/// Builds the generator for a kind, with its default domain.
/// Throws InvalidParam for violated parameter constraints and EmptyDomain when
/// no valid interval exists.
Generator make_generator(const GeneratorKind& kind);

/// Result of sampling a generator for admissibility.
struct ValidationReport {
    std::size_t samples = 0;
    Interval window;
    double min_abs_f = 0.0;
    double min_abs_f1 = 0.0;
    bool f1_sign_constant = false;
    int f1_sign = 0;
    double tol = 0.0;
    bool analytic_jets = true;
    std::string note;
    bool passed = false;
};

/// Samples n points of the generator's window and reports min |f|, min |f'|
/// and whether sign(f') is constant. Passes iff both minima exceed tol and the
/// sign is constant. Requires n >= 2.
ValidationReport validate_generator(const Generator& g, std::size_t n, double tol = 1e-12);

} // namespace nullcurve
