#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "genhankel/quadrature.hpp"
#include "support.hpp"

using namespace genhankel;
using testing::rel_diff;

namespace {

double beta_fn(double a, double b) { return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b)); }

} // namespace

TEST_CASE("integrate_weighted reproduces Beta integrals")
{
    const QuadratureOptions opts;
    for (double wl : {-0.9, -0.5, 0.0, 0.3, 2.5}) {
        for (double wh : {-0.75, 0.0, 0.5, 1.7}) {
            const double got = integrate_weighted([](double) { return 1.0; }, 0.0, 1.0, wl, wh, {}, {}, opts);
            CAPTURE(wl);
            CAPTURE(wh);
            CHECK(rel_diff(got, beta_fn(wl + 1, wh + 1)) < 1e-13);
        }
    }
}

TEST_CASE("integrate_weighted with breaks keeps endpoint weights exact")
{
    const QuadratureOptions opts;
    const std::vector<double> breaks{0.1, 0.5, 0.93};
    // int_0^2 t^{-1/2} (2-t)^{-1/2} dt = pi
    const double got = integrate_weighted([](double) { return 1.0; }, 0.0, 2.0, -0.5, -0.5, breaks, {}, opts);
    CHECK(rel_diff(got, std::numbers::pi) < 1e-13);

    // a kink at t = 1/3: int_0^1 |t - 1/3| dt = 5/18
    const std::vector<double> kink{1.0 / 3.0};
    const double k = integrate_weighted([](double t) { return std::abs(t - 1.0 / 3.0); }, 0.0, 1.0, 0.0, 0.0, kink,
                                        {}, opts);
    CHECK(rel_diff(k, 5.0 / 18.0) < 1e-14);
}

TEST_CASE("graded panels resolve a nearby singularity")
{
    const QuadratureOptions opts;
    for (double eps : {1e-3, 1e-8, 1e-14}) {
        CAPTURE(eps);
        // int_0^1 (t + eps)^{-1/2} dt
        const double left = integrate_weighted([eps](double t) { return 1.0 / std::sqrt(t + eps); }, 0.0, 1.0, 0.0,
                                               0.0, {}, Grading{Grading::Side::Left, eps}, opts);
        const double exact = 2.0 / (std::sqrt(1.0 + eps) + std::sqrt(eps));
        CHECK(rel_diff(left, exact) < 1e-12);
        if (eps < 1e-6) {
            continue; // 1 - t + eps loses eps to the rounding of t near 1
        }
        const double right = integrate_weighted([eps](double t) { return 1.0 / std::sqrt(1.0 - t + eps); }, 0.0, 1.0,
                                                0.0, 0.0, {}, Grading{Grading::Side::Right, eps}, opts);
        CHECK(rel_diff(right, exact) < 1e-12);
    }
}

TEST_CASE("graded panels with zero scale reach the endpoint")
{
    const QuadratureOptions opts;
    // log singularity at the left end with no Jacobi weight to absorb it
    const double got = integrate_weighted([](double t) { return std::log(t); }, 0.0, 1.0, 0.0, 0.0, {},
                                          Grading{Grading::Side::Left, 0.0}, opts);
    CHECK(std::abs(got + 1.0) < 1e-10);
}

TEST_CASE("complex integrands")
{
    const QuadratureOptions opts;
    const auto got = integrate_weighted([](double t) { return std::exp(std::complex<double>(0.0, 3.0 * t)); }, 0.0,
                                        1.0, 0.0, 0.0, {}, {}, opts);
    const std::complex<double> exact = (std::exp(std::complex<double>(0.0, 3.0)) - 1.0) / std::complex<double>(0.0, 3.0);
    CHECK(std::abs(got - exact) < 1e-14);
}

TEST_CASE("cancelling integrand converges against the overall size")
{
    const QuadratureOptions opts;
    // many panels, each integral near zero except in sum
    std::vector<double> breaks;
    for (int k = 1; k < 40; ++k) {
        breaks.push_back(k / 40.0);
    }
    const double got = integrate_weighted([](double t) { return std::sin(80.0 * std::numbers::pi * t) + 1e-3; }, 0.0,
                                          1.0, 0.0, 0.0, breaks, {}, opts);
    CHECK(std::abs(got - 1e-3) < 1e-14);
}

TEST_CASE("active window skips panels")
{
    const QuadratureOptions opts;
    const std::vector<double> breaks{0.5};
    int outside_calls = 0;
    const double got = integrate_weighted(
        [&](double t) {
            if (t > 0.5) {
                ++outside_calls;
            }
            return t <= 0.5 ? 1.0 : 0.0;
        },
        0.0, 1.0, 0.0, 0.0, breaks, {}, opts, -1.0, 0.5);
    CHECK(rel_diff(got, 0.5) < 1e-15);
    CHECK(outside_calls == 0);
}

TEST_CASE("non-convergence raises AccuracyError")
{
    QuadratureOptions opts;
    opts.max_order = 32;
    CHECK_THROWS_AS((void)integrate_weighted([](double t) { return std::cos(400.0 * t); }, 0.0, 1.0, 0.0, 0.0, {},
                                             {}, opts),
                    AccuracyError);
}

TEST_CASE("panel_edges merge and floor")
{
    using detail::panel_edges;
    const std::vector<double> none;
    CHECK(panel_edges(0.0, 1.0, none, {}) == std::vector<double>{0.0, 1.0});

    // breaks outside the interval and duplicates are dropped
    const std::vector<double> b{-1.0, 0.25, 0.25, 0.25 + 1e-17, 2.0};
    CHECK(panel_edges(0.0, 1.0, b, {}) == std::vector<double>{0.0, 0.25, 1.0});

    // a break very near an end survives when it is resolvable there
    const std::vector<double> near{1e-200};
    const auto e = panel_edges(0.0, 1.0, near, {});
    REQUIRE(e.size() == 3);
    CHECK(e[1] == 1e-200);

    // grading stops at the scale and stays ordered
    const auto g = panel_edges(0.0, 1.0, none, Grading{Grading::Side::Left, 1e-6});
    CHECK(g.front() == 0.0);
    CHECK(g.back() == 1.0);
    CHECK(g[1] >= 1e-6);
    CHECK(g[1] < 4e-6);
    for (std::size_t i = 1; i < g.size(); ++i) {
        CHECK(g[i] > g[i - 1]);
    }

    // zero scale grades down to a fixed fraction of the width
    const auto z = panel_edges(0.0, 2.0, none, Grading{Grading::Side::Left, 0.0});
    CHECK(z[1] >= 2e-30);
    CHECK(z[1] < 8e-30);
    CHECK(z.back() == 2.0);
}

TEST_CASE("cached_rule returns the same rule")
{
    const auto a = cached_rule(24, RuleKind::jacobi(0.3, -0.2));
    const auto b = cached_rule(24, RuleKind::jacobi(0.3, -0.2));
    CHECK(a.get() == b.get());
    CHECK(a->nodes == gauss_rule(24, RuleKind::jacobi(0.3, -0.2)).nodes);
}

TEST_CASE("zeroth_moment closed form")
{
    CHECK(zeroth_moment(RuleKind::legendre()) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(rel_diff(zeroth_moment(RuleKind::jacobi(-0.5)), std::numbers::pi) < 1e-15);
    CHECK(rel_diff(zeroth_moment(RuleKind::jacobi(1.0, 0.0)), 2.0) < 1e-15);
}
