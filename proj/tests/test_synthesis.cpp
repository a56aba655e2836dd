#include <doctest.h>

#include <cmath>
#include <random>

#include "nullcurve/catalog.hpp"
#include "nullcurve/synthesis.hpp"

using namespace nullcurve;

TEST_CASE("integrand of the identity and exponential generators") {
    const Generator ident = make_generator(IdentityGen{});
    const Vec3 vi = integrand(ident, 1, 1.0);
    CHECK(vi.x == doctest::Approx(1.0));
    CHECK(vi.y == doctest::Approx(0.0));
    CHECK(vi.z == doctest::Approx(1.0));

    const Generator ex = make_generator(ExpGen{1.0});
    const Vec3 ve = integrand(ex, 1, 0.0);
    CHECK(ve.x == doctest::Approx(1.0));
    CHECK(ve.y == doctest::Approx(0.0));
    CHECK(ve.z == doctest::Approx(1.0));
}

TEST_CASE("the velocity is null for every generator and point") {
    std::mt19937_64 rng(59);
    for (const auto& entry : catalog_entries()) {
        const Interval w = entry.default_grid;
        std::uniform_real_distribution<double> unif(w.lo, w.hi);
        for (int i = 0; i < 50; ++i) {
            const double s = unif(rng);
            for (int eps : {1, -1}) {
                const Vec3 v = integrand(entry.gen, eps, s);
                CHECK(std::abs(mink_inner(v, v)) <= 1e-12 * euclid_norm2(v));
            }
        }
    }
}

TEST_CASE("synthesized polynomial helix hits the closed form") {
    const CurveSpec spec(make_generator(IdentityGen{}), 1, 0.0, Vec3{0, 0, 0});
    const auto grid = linspace(0.0, 2.0, 201);
    const SampledCurve curve = synthesize(spec, grid, 1e-10);
    // row at s = 1
    const Vec3 at1 = curve.samples[100].pos;
    CHECK(at1.x == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(at1.y == doctest::Approx(-1.0 / 3.0).epsilon(1e-9));
    CHECK(at1.z == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
    // every grid point against the cubic closed form
    for (const auto& smp : curve.samples) {
        const double s = smp.s;
        const Vec3 want{0.5 * s * s, (s * s * s - 3 * s) / 6.0, (s * s * s + 3 * s) / 6.0};
        CHECK(euclid_dist(smp.pos, want) <= 1e-9);
        CHECK(smp.err <= 1e-10 * (1.0 + std::abs(s)));
    }
}

TEST_CASE("the sample at the anchor is exact") {
    const CurveSpec spec(make_generator(ExpGen{1.0}), 1, 0.0, Vec3{0, 1, 0});
    const auto grid = linspace(-1.0, 1.0, 21);
    const SampledCurve curve = synthesize(spec, grid, 1e-10);
    const CurveSample& mid = curve.samples[10];
    CHECK(mid.s == 0.0);
    CHECK(mid.pos == Vec3{0, 1, 0});
    CHECK(mid.err == 0.0);
}

TEST_CASE("synthesized exponential helix at s = 1") {
    const CurveSpec spec(make_generator(ExpGen{1.0}), 1, 0.0, Vec3{0, 1, 0});
    const auto grid = linspace(0.0, 1.0, 11);
    const SampledCurve curve = synthesize(spec, grid, 1e-10);
    const Vec3 end = curve.samples.back().pos;
    CHECK(end.x == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(end.y == doctest::Approx(std::cosh(1.0)).epsilon(1e-9));
    CHECK(end.z == doctest::Approx(std::sinh(1.0)).epsilon(1e-9));
}

TEST_CASE("integration runs leftward from the anchor as well") {
    // anchor at s0 = 1 with the known closed-form position there, then ask
    // for points at and below zero
    const CurveSpec spec(catalog_entry("helix-zero").gen, 1, 1.0,
                         Vec3{0.5, -1.0 / 3.0, 2.0 / 3.0});
    const auto grid = linspace(-1.0, 1.0, 21);
    const SampledCurve curve = synthesize(spec, grid, 1e-10);
    for (const auto& smp : curve.samples) {
        const double s = smp.s;
        const Vec3 want{0.5 * s * s, (s * s * s - 3 * s) / 6.0, (s * s * s + 3 * s) / 6.0};
        CHECK(euclid_dist(smp.pos, want) <= 1e-9);
    }
}

TEST_CASE("error estimates accumulate along the path") {
    const CurveSpec spec(make_generator(ExpGen{1.0}), 1, 0.0, Vec3{0, 1, 0});
    const auto grid = linspace(0.0, 4.0, 41);
    const double tol = 1e-10;
    const SampledCurve curve = synthesize(spec, grid, tol);
    double prev = -1.0;
    for (const auto& smp : curve.samples) {
        CHECK(smp.err >= prev);
        prev = smp.err;
        CHECK(smp.err <= tol * (1.0 + std::abs(smp.s - spec.s0)));
    }
}

TEST_CASE("input validation") {
    const CurveSpec spec(make_generator(IdentityGen{}), 1, 1.0, Vec3{});
    const std::vector<double> unsorted{1.0, 0.5, 2.0};
    CHECK_THROWS_AS(synthesize(spec, unsorted, 1e-10), InvalidParam);
    const std::vector<double> outside{-1.0, 1.0};
    CHECK_THROWS_AS(synthesize(spec, outside, 1e-10), DomainError);
    const std::vector<double> fine{0.5, 1.5};
    CHECK_THROWS_AS(synthesize(spec, fine, -1.0), InvalidParam);

    CHECK_THROWS_AS(CurveSpec(make_generator(IdentityGen{}), 2, 1.0, Vec3{}), InvalidParam);
    CHECK_THROWS_AS(CurveSpec(make_generator(IdentityGen{}), 1, -1.0, Vec3{}), DomainError);
    const double nan = std::nan("");
    CHECK_THROWS_AS(CurveSpec(make_generator(IdentityGen{}), 1, 1.0, Vec3{nan, 0, 0}),
                    InvalidParam);
}

TEST_CASE("unreachable tolerance reports quadrature failure") {
    // a generator with a sharp interior spike in 1/f'
    const Generator spiky = make_generator(CustomGen{
        [](double s) {
            const double d = s - 0.5;
            const double f1 = 1e-7 + d * d;
            return Jet3{s + 1.0, f1, 2.0 * d, 2.0};
        },
        Interval{0.0, 1.0}, "spiky", false});
    const CurveSpec spec(spiky, 1, 0.0, Vec3{});
    const std::vector<double> grid{0.0, 1.0};
    CHECK_THROWS_AS(synthesize(spec, grid, 1e-25), QuadratureFailure);
}

TEST_CASE("linspace") {
    const auto g = linspace(0.0, 1.0, 5);
    REQUIRE(g.size() == 5);
    CHECK(g.front() == 0.0);
    CHECK(g.back() == 1.0);
    CHECK(g[2] == doctest::Approx(0.5));
    CHECK_THROWS_AS(linspace(0.0, 1.0, 1), InvalidParam);
    CHECK_THROWS_AS(linspace(1.0, 0.0, 5), InvalidParam);
}
