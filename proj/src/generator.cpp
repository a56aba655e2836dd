#include "nullcurve/generator.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "nullcurve/airy.hpp"

namespace nullcurve {

namespace {

constexpr std::size_t kSpotCheckSamples = 1024;
constexpr double kWindowHalfWidth = 8.0;

Interval clamp_window(const Interval& dom) {
    const bool lo_fin = std::isfinite(dom.lo);
    const bool hi_fin = std::isfinite(dom.hi);
    if (lo_fin && hi_fin) return dom;
    if (lo_fin) return {dom.lo, dom.lo + 2.0 * kWindowHalfWidth};
    if (hi_fin) return {dom.hi - 2.0 * kWindowHalfWidth, dom.hi};
    return {-kWindowHalfWidth, kWindowHalfWidth};
}

// Midpoint sample positions avoid the interval endpoints, where admissibility
// is allowed to degenerate (anchors may sit on the closure).
double midpoint_sample(const Interval& w, std::size_t i, std::size_t n) {
    return w.lo + (static_cast<double>(i) + 0.5) * w.width() / static_cast<double>(n);
}

void spot_check(const Generator::JetFn& eval, const Interval& dom, const std::string& label) {
    const Interval w = clamp_window(dom);
    for (std::size_t i = 0; i < kSpotCheckSamples; ++i) {
        const double s = midpoint_sample(w, i, kSpotCheckSamples);
        const Jet3 j = eval(s);
        if (!is_finite(j)) {
            std::ostringstream msg;
            msg << "generator '" << label << "': non-finite jet at s=" << s;
            throw InvalidParam(msg.str());
        }
        if (j.f0 == 0.0 || j.f1 == 0.0) {
            std::ostringstream msg;
            msg << "generator '" << label << "': admissibility f != 0, f' != 0 fails at s=" << s;
            throw InvalidParam(msg.str());
        }
    }
}

} // namespace

Generator::Generator(JetFn eval, Interval domain, std::string label, GeneratorDescriptor desc,
                     bool analytic_jets, std::string admissibility_note)
    : eval_(std::move(eval)),
      domain_(domain),
      label_(std::move(label)),
      desc_(std::move(desc)),
      analytic_jets_(analytic_jets),
      note_(std::move(admissibility_note)) {
    if (!(domain_.lo < domain_.hi)) {
        std::ostringstream msg;
        msg << "generator '" << label_ << "': empty domain (" << domain_.lo << ", " << domain_.hi << ")";
        throw EmptyDomain(msg.str());
    }
    spot_check(eval_, domain_, label_);
}

Jet3 Generator::eval(double s) const {
    if (!domain_.contains_closure(s)) {
        std::ostringstream msg;
        msg << "generator '" << label_ << "': s=" << s << " outside domain closure ["
            << domain_.lo << ", " << domain_.hi << "]";
        throw DomainError(msg.str());
    }
    return eval_(s);
}

Interval Generator::sample_window() const { return clamp_window(domain_); }

namespace {

Generator make_identity() {
    return Generator([](double s) { return Jet3{s, 1.0, 0.0, 0.0}; },
                     Interval{0.0, std::numeric_limits<double>::infinity()}, "identity",
                     GeneratorDescriptor{"identity", {}});
}

Generator make_cot(double c) {
    if (!(std::isfinite(c) && c > 0.0)) throw InvalidParam("cot generator: requires c > 0");
    auto jet = [c](double s) -> Jet3 {
        const double t = 0.5 * c * s;
        const double sn = std::sin(t);
        const double cs = std::cos(t);
        const double sn2 = sn * sn;
        Jet3 j;
        j.f0 = -cs / sn;
        j.f1 = 0.5 * c / sn2;
        j.f2 = -0.5 * c * c * cs / (sn2 * sn);
        j.f3 = 0.25 * c * c * c * (1.0 + 2.0 * cs * cs) / (sn2 * sn2);
        return j;
    };
    // zero of f at pi/c, pole at 2 pi/c; in between f > 0 and f' > 0
    std::ostringstream label;
    label << "cot(c=" << c << ")";
    return Generator(jet, Interval{std::numbers::pi / c, 2.0 * std::numbers::pi / c},
                     label.str(), GeneratorDescriptor{"cot", {{"c", c}}});
}

Generator make_exp(double c) {
    if (!(std::isfinite(c) && c > 0.0)) throw InvalidParam("exp generator: requires c > 0");
    auto jet = [c](double s) -> Jet3 {
        const double e = std::exp(c * s);
        return Jet3{e, c * e, c * c * e, c * c * c * e};
    };
    std::ostringstream label;
    label << "exp(c=" << c << ")";
    return Generator(jet, Interval{}, label.str(), GeneratorDescriptor{"exp", {{"c", c}}});
}

Generator make_log() {
    auto jet = [](double s) -> Jet3 {
        return Jet3{std::log(s), 1.0 / s, -1.0 / (s * s), 2.0 / (s * s * s)};
    };
    return Generator(jet, Interval{1.0, std::numeric_limits<double>::infinity()}, "log",
                     GeneratorDescriptor{"log", {}},
                     true, "f -> 0 toward the left closure endpoint s = 1");
}

Generator make_tanlog(double b) {
    if (!(std::isfinite(b) && b > 0.0)) throw InvalidParam("tanlog generator: requires b > 0");
    auto jet = [b](double s) -> Jet3 {
        const double T = std::tan(0.5 * b * std::log(s));
        const double op = 1.0 + T * T;
        Jet3 j;
        j.f0 = T;
        j.f1 = 0.5 * b * op / s;
        j.f2 = 0.5 * b * op * (b * T - 1.0) / (s * s);
        j.f3 = 0.25 * b * op * (3.0 * b * b * T * T - 6.0 * b * T + b * b + 4.0) / (s * s * s);
        return j;
    };
    std::ostringstream label;
    label << "tanlog(b=" << b << ")";
    return Generator(jet, Interval{1.0, std::exp(std::numbers::pi / b)}, label.str(),
                     GeneratorDescriptor{"tanlog", {{"b", b}}},
                     true, "f -> 0 toward the left closure endpoint s = 1");
}

Generator make_power(double b) {
    if (!(std::isfinite(b) && b > 0.0)) throw InvalidParam("power generator: requires b > 0");
    if (b == 2.0) throw InvalidParam("power generator: b = 2 is the inverse-square kind");
    auto jet = [b](double s) -> Jet3 {
        const double f = std::pow(s, -b);
        Jet3 j;
        j.f0 = f;
        j.f1 = -b * f / s;
        j.f2 = b * (b + 1.0) * f / (s * s);
        j.f3 = -b * (b + 1.0) * (b + 2.0) * f / (s * s * s);
        return j;
    };
    std::ostringstream label;
    label << "power(b=" << b << ")";
    return Generator(jet, Interval{0.0, std::numeric_limits<double>::infinity()}, label.str(),
                     GeneratorDescriptor{"power", {{"b", b}}});
}

Generator make_inverse_square() {
    auto jet = [](double s) -> Jet3 {
        const double s2 = s * s;
        return Jet3{1.0 / s2, -2.0 / (s2 * s), 6.0 / (s2 * s2), -24.0 / (s2 * s2 * s)};
    };
    return Generator(jet, Interval{0.0, std::numeric_limits<double>::infinity()},
                     "inverse-square", GeneratorDescriptor{"invsquare", {}});
}

} // namespace

Generator make_generator(const GeneratorKind& kind) {
    return std::visit(
        [](const auto& k) -> Generator {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, IdentityGen>) {
                return make_identity();
            } else if constexpr (std::is_same_v<K, CotGen>) {
                return make_cot(k.c);
            } else if constexpr (std::is_same_v<K, ExpGen>) {
                return make_exp(k.c);
            } else if constexpr (std::is_same_v<K, LogGen>) {
                return make_log();
            } else if constexpr (std::is_same_v<K, TanLogGen>) {
                return make_tanlog(k.b);
            } else if constexpr (std::is_same_v<K, PowerGen>) {
                return make_power(k.b);
            } else if constexpr (std::is_same_v<K, InverseSquareGen>) {
                return make_inverse_square();
            } else if constexpr (std::is_same_v<K, AiryRatioGen>) {
                return airy_generator(AirySpec(k.lambda));
            } else {
                static_assert(std::is_same_v<K, CustomGen>);
                return Generator(k.jet, k.domain, k.label, GeneratorDescriptor{"custom", {}},
                                 k.analytic_jets, k.analytic_jets ? "" : "fd-jet");
            }
        },
        kind);
}

ValidationReport validate_generator(const Generator& g, std::size_t n, double tol) {
    if (n < 2) throw InvalidParam("validate_generator: needs n >= 2");

    ValidationReport rep;
    rep.samples = n;
    rep.window = g.sample_window();
    rep.tol = tol;
    rep.analytic_jets = g.analytic_jets();
    rep.note = g.admissibility_note();
    rep.min_abs_f = std::numeric_limits<double>::infinity();
    rep.min_abs_f1 = std::numeric_limits<double>::infinity();
    rep.f1_sign_constant = true;

    for (std::size_t i = 0; i < n; ++i) {
        const double s = midpoint_sample(rep.window, i, n);
        const Jet3 j = g.eval(s);
        rep.min_abs_f = std::min(rep.min_abs_f, std::abs(j.f0));
        rep.min_abs_f1 = std::min(rep.min_abs_f1, std::abs(j.f1));
        const int sign = j.f1 > 0.0 ? 1 : (j.f1 < 0.0 ? -1 : 0);
        if (rep.f1_sign == 0) {
            rep.f1_sign = sign;
        } else if (sign != rep.f1_sign) {
            rep.f1_sign_constant = false;
        }
    }
    rep.passed = rep.f1_sign_constant && rep.min_abs_f > tol && rep.min_abs_f1 > tol;
    return rep;
}

} // namespace nullcurve
