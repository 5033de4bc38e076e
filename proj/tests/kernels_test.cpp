#include <doctest.h>

#include <cmath>
#include <numbers>

#include "genhankel/error.hpp"
#include "genhankel/kernels.hpp"
#include "genhankel/specfun.hpp"
#include "genhankel/transform.hpp"
#include "reference/reference_values.hpp"
#include "support.hpp"

using namespace genhankel;
using testing::rel_diff;

namespace {

const double kPi = std::numbers::pi;

struct Case {
    int n;
    double kappa;
};

constexpr Case kAcceptanceSet[] = {{1, 1.0}, {2, 0.8}, {3, 0.7}, {4, 0.6}};

double root_n(double x, int n) { return std::pow(std::abs(x), 1.0 / n); }

} // namespace

TEST_CASE("delta examples")
{
    CHECK(delta(1, 1, 0) == 0.0);
    CHECK(delta(1, 1, kPi) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(delta(3, 4, kPi / 2) == doctest::Approx(5.0).epsilon(1e-15));
    const GeomArgs g = geom_args(1.5, 0.5, 1.2);
    CHECK(g.delta >= 1.0);
    CHECK(g.delta <= 2.0);
    CHECK(g.w == g.delta);
}

TEST_CASE("k_bessel against frozen values")
{
    for (const auto& r : reference::kKBessel) {
        CAPTURE(r.alpha);
        CAPTURE(r.u);
        CAPTURE(r.v);
        CAPTURE(r.w);
        CHECK(std::abs(k_bessel(r.alpha, r.u, r.v, r.w) - r.value) <= 1e-13 * std::max(1.0, std::abs(r.value)));
    }
    CHECK(k_bessel(1.0, 1, 1, 3) == 0.0);
    CHECK_THROWS_AS((void)k_bessel(-0.5, 1, 1, 1), DomainError);
}

TEST_CASE("k_bessel homogeneity and symmetry")
{
    CHECK(rel_diff(k_bessel(0.8, 2, 3, 4), std::pow(2.0, -3.6) * k_bessel(0.8, 1, 1.5, 2)) < 1e-14);
    testing::Sampler s(3);
    for (int i = 0; i < 300; ++i) {
        const double a = s.uniform(-0.4, 3.0);
        const double u = s.uniform(0.1, 3.0);
        const double v = s.uniform(0.1, 3.0);
        const double w = s.uniform(std::abs(u - v), u + v);
        const double t = s.uniform(0.2, 5.0);
        const double k = k_bessel(a, u, v, w);
        CHECK(k >= 0.0);
        CHECK(rel_diff(k, k_bessel(a, v, u, w)) < 1e-13);
        CHECK(rel_diff(k_bessel(a, t * u, t * v, t * w), std::pow(t, -2 * a - 2) * k) < 1e-12);
    }
}

TEST_CASE("bessel_kernel_mass is one")
{
    CHECK(std::abs(bessel_kernel_mass(0.6, 1.2, 0.7) - 1.0) < 1e-9);
    testing::Sampler s(5);
    for (int i = 0; i < 20; ++i) {
        const double a = s.uniform(-0.45, 4.0);
        const double u = s.uniform(0.05, 6.0);
        const double v = s.uniform(0.05, 6.0);
        CAPTURE(a);
        CAPTURE(u);
        CAPTURE(v);
        CHECK(std::abs(bessel_kernel_mass(a, u, v) - 1.0) < 1e-9);
    }
}

TEST_CASE("sigma examples")
{
    CHECK(sigma(3, 4, 5, 1) == 0.0);
    CHECK(sigma(1, 1, 0, 2) == 1.0);
    CHECK(rel_diff(sigma(7, 14, 10.5, 3), sigma(1, 2, 1.5, 3)) < 1e-14);
    CHECK(sigma(-3, 4, -5, 1) == sigma(3, 4, 5, 1));
}

TEST_CASE("xi at the inner edge and sign flip")
{
    const Params p = make_params(3, 0.7);
    const double x = 2.0;
    const double y = 0.5;
    const double z = std::pow(root_n(x, 3) - root_n(y, 3), 3);
    CHECK(std::abs(xi(p, x, y, z) - 1.0) < 1e-12);
    CHECK(xi(p, -x, y, z) == -xi(p, x, y, z));
    CHECK(xi(p, x, -y, 1.1) == -xi(p, x, y, 1.1));
    CHECK_THROWS_AS((void)xi(p, 1.0, 1.0, 100.0), DomainError);
}

TEST_CASE("xi bound in the strong regime")
{
    const Params p = make_params(3, 0.9);
    testing::Sampler s(17);
    for (int i = 0; i < 1000; ++i) {
        const double x = s.signed_uniform(0.05, 5.0);
        const double y = s.signed_uniform(0.05, 5.0);
        const double lo = std::abs(root_n(x, 3) - root_n(y, 3));
        const double hi = root_n(x, 3) + root_n(y, 3);
        const double z = (s.uniform(0, 1) < 0.5 ? -1 : 1) * std::pow(s.uniform(lo, hi), 3);
        CHECK(std::abs(xi(p, x, y, z)) <= 1.0 + 1e-12);
    }
}

TEST_CASE("psi examples")
{
    CHECK(psi(0, 0.8, 1.3, 0.2, 0.4) == 1.0);
    CHECK(psi(1, 0.8, 2, 1, kPi / 3) == doctest::Approx(1.5).epsilon(1e-14));
    // delta = 0 is harmless
    CHECK(std::isfinite(psi(4, 1.1, 1.0, 1.0, 0.0)));
    CHECK(psi(4, 1.1, 1.0, 1.0, 0.0) == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
    // explicit form away from delta = 0
    const double u = 1.4;
    const double v = 0.6;
    const double phi = 1.0;
    const double d = delta(u, v, phi);
    const double direct = gegenbauer_normalized(3, 1.1, (u - v * std::cos(phi)) / d) * d * d * d;
    CHECK(rel_diff(psi(3, 1.1, u, v, phi), direct) < 1e-13);
}

TEST_CASE("psi ladder")
{
    const double h = 1e-5;
    for (int n = 1; n <= 5; ++n) {
        for (double alpha : {0.55, 1.1, 2.3}) {
            const double u = 1.4;
            const double v = 0.6;
            const double phi = 1.0;
            const double fd = (psi(n, alpha, u + h, v, phi) - psi(n, alpha, u - h, v, phi)) / (2 * h);
            CAPTURE(n);
            CAPTURE(alpha);
            CHECK(rel_diff(fd, n * psi(n - 1, alpha, u, v, phi)) < 1e-6);
        }
    }
}

TEST_CASE("kernel_K against frozen values")
{
    for (const auto& r : reference::kKernel) {
        const Params p = make_params(r.n, r.kappa);
        CAPTURE(r.n);
        CAPTURE(r.kappa);
        CAPTURE(r.x);
        CAPTURE(r.y);
        CAPTURE(r.z);
        CHECK(std::abs(kernel_K(p, r.x, r.y, r.z) - r.value) <= 1e-12 * std::max(1.0, std::abs(r.value)));
    }
}

TEST_CASE("kernel_K symmetries on random triples")
{
    testing::Sampler s(23);
    for (const Case c : kAcceptanceSet) {
        const Params p = make_params(c.n, c.kappa);
        const double sign = c.n % 2 ? -1.0 : 1.0;
        for (int i = 0; i < 200; ++i) {
            const double x = s.signed_uniform(0.05, 5.0);
            const double y = s.signed_uniform(0.05, 5.0);
            const double lo = std::abs(root_n(x, c.n) - root_n(y, c.n));
            const double hi = root_n(x, c.n) + root_n(y, c.n);
            const double r = s.uniform(lo + 1e-3 * (hi - lo), hi - 1e-3 * (hi - lo));
            const double z = (s.uniform(0, 1) < 0.5 ? -1 : 1) * std::pow(r, c.n);
            const double k = kernel_K(p, x, y, z);
            const double scale = std::max(1e-12, std::abs(k));
            CAPTURE(c.n);
            CAPTURE(x);
            CAPTURE(y);
            CAPTURE(z);
            CHECK(std::abs(k - kernel_K(p, y, x, z)) <= 1e-12 * scale);
            CHECK(std::abs(k - kernel_K(p, sign * x, z, y)) <= 1e-12 * scale);
            CHECK(std::abs(k - kernel_K(p, z, sign * y, x)) <= 1e-12 * scale);
        }
    }
}

TEST_CASE("kernel_K spot symmetries")
{
    const Params p = make_params(2, 0.8);
    CHECK(rel_diff(kernel_K(p, 1.1, 0.5, 1.3), kernel_K(p, 0.5, 1.1, 1.3)) < 1e-12);
    CHECK(rel_diff(kernel_K(p, 1.1, 0.5, 1.3), kernel_K(p, 1.1, 1.3, 0.5)) < 1e-12);
}

TEST_CASE("kernel_K support")
{
    testing::Sampler s(29);
    for (const Case c : kAcceptanceSet) {
        const Params p = make_params(c.n, c.kappa);
        for (int i = 0; i < 200; ++i) {
            const double x = s.signed_uniform(0.05, 5.0);
            const double y = s.signed_uniform(0.05, 5.0);
            const double lo = std::abs(root_n(x, c.n) - root_n(y, c.n));
            const double hi = root_n(x, c.n) + root_n(y, c.n);
            const double below = s.uniform(0.0, lo);
            const double above = s.uniform(hi, 2 * hi + 1);
            for (double r : {below, above}) {
                for (double sg : {-1.0, 1.0}) {
                    const double z = sg * std::pow(r, c.n);
                    CHECK(kernel_K(p, x, y, z) == 0.0);
                    CHECK_FALSE(in_support(p, x, y, z));
                }
            }
        }
        CHECK(kernel_K(p, 1.0, 1.0, 0.0) == 0.0);
    }
}

TEST_CASE("negativity witness")
{
    const Params p = make_params(2, 0.8);
    const double x = 2.0;
    const double y = 1.0;
    const double k = kernel_K(p, x * x, y * y, -std::pow((x + y) * (1 - 1e-3), 2));
    CHECK(k < 0.0);
    // and away from the edge, on a stretch of the negative branch
    const double mid = kernel_K(p, x * x, y * y, -6.0);
    CHECK(mid < 0.0);
}

TEST_CASE("nu_integrate mass and point masses")
{
    const Params p = make_params(3, 0.7);
    CHECK(std::abs(nu_integrate(p, 1.2, 0.4, constant_function(1.0)) - 1.0) < 1e-8);
    const Function1D sq = make_function([](double z) { return Complex(z * z); }, -10, 10);
    CHECK(nu_integrate(p, 1.7, 0.0, sq) == Complex(1.7 * 1.7));
    CHECK(nu_integrate(p, 0.0, -0.6, sq) == Complex(0.36));
    CHECK(nu_total_variation(p, 0.0, 2.0) == 1.0);
    CHECK(MeasureNu(p, 1.0, 0.0).kind() == MeasureCase::PointMassAtX);
    CHECK(MeasureNu(p, 0.0, 1.0).kind() == MeasureCase::PointMassAtY);
    CHECK(MeasureNu(p, 1.0, 1.0).kind() == MeasureCase::KernelDensity);
}

TEST_CASE("mass and total variation on random pairs")
{
    testing::Sampler s(31);
    for (const Case c : {Case{1, 1.0}, Case{2, 0.8}, Case{3, 0.7}}) {
        const Params p = make_params(c.n, c.kappa);
        for (int i = 0; i < 200; ++i) {
            const double x = s.signed_uniform(0.05, 5.0);
            const double y = s.signed_uniform(0.05, 5.0);
            CAPTURE(c.n);
            CAPTURE(x);
            CAPTURE(y);
            const double tv = nu_total_variation(p, x, y);
            CHECK(tv <= 4.0 + 1e-8);
            CHECK(tv >= 1.0 - 1e-8);
            if (i % 10 == 0) {
                CHECK(std::abs(nu_integrate(p, x, y, constant_function(1.0)) - 1.0) < 1e-8);
            }
        }
    }
}

TEST_CASE("coincident and nearly coincident radii")
{
    struct Pair {
        int n;
        double kappa;
        double x;
        double y;
    };
    const Pair pairs[] = {
        {2, 0.45, 1.0, 1.0},
        {3, 0.5, 1.0, -1.0},
        {4, 0.4, 0.97351072249357551, 0.97351072290582064},
        {3, 0.34, 1.3, 1.3},
        {1, 1.0, 2.0, 2.0 + 1e-12},
        {2, 0.8, -0.5, 0.5},
    };
    for (const Pair& q : pairs) {
        const Params p = make_params(q.n, q.kappa);
        CAPTURE(q.n);
        CAPTURE(q.kappa);
        CAPTURE(q.x);
        CAPTURE(q.y);
        CHECK(std::abs(nu_integrate(p, q.x, q.y, constant_function(1.0)) - 1.0) < 1e-8);
        const double tv = nu_total_variation(p, q.x, q.y);
        CHECK(std::isfinite(tv));
        if (p.strong_regime()) {
            CHECK(tv <= 4.0 + 1e-8);
        }
    }
}

TEST_CASE("nu_integrate reproduces the product formula")
{
    for (const Case c : kAcceptanceSet) {
        const Params p = make_params(c.n, c.kappa);
        for (double lambda : {-2.0, 0.7, 3.1}) {
            const Function1D b = make_function([p, lambda](double z) { return b_kernel(p, lambda, z); }, -1e3, 1e3);
            for (auto [x, y] : {std::pair{1.3, 0.4}, std::pair{-0.8, 2.2}, std::pair{1.5, -1.5}}) {
                const Complex lhs = b_kernel(p, lambda, x) * b_kernel(p, lambda, y);
                CAPTURE(c.n);
                CAPTURE(lambda);
                CAPTURE(x);
                CAPTURE(y);
                CHECK(std::abs(nu_integrate(p, x, y, b) - lhs) < 1e-7);
            }
        }
    }
}

TEST_CASE("check_th0 examples")
{
    CHECK(check_th0(0.9, 0, 1.0, 2.0).abs_err < 1e-10);
    const ResidualRecord zero = check_th0(0.8, 2, 0.0, 1.5);
    CHECK(std::abs(zero.lhs) < 1e-12);
    CHECK(std::abs(zero.rhs) < 1e-12);
    const ResidualRecord r = check_th0(0.7, 3, 1.3, 0.8);
    CHECK(r.abs_err < 1e-9);
    CHECK(rel_diff(r.lhs, std::pow(1.3, 3) * bessel_j_norm(3.7, 1.3) * bessel_j_norm(0.7, 0.8)) < 1e-14);
}

TEST_CASE("check_key1 examples")
{
    CHECK(check_key1(1.1, 0, 0.7, 1.9).abs_err < 1e-10);
    CHECK(check_key1(0.6, 2, 1.0, 1.0).abs_err < 1e-9);
    const ResidualRecord a = check_key1(0.8, 1, 0.5, 2.5);
    const ResidualRecord b = check_key1(0.8, 1, 2.5, 0.5);
    CHECK(rel_diff(a.lhs, b.lhs) < 1e-14);
    CHECK(std::abs(a.rhs - b.rhs) < 1e-12);
}

TEST_CASE("check_sonine_integral")
{
    for (double x : {0.3, 2.0, 9.0}) {
        CHECK(check_sonine_integral(1.7, 0.2, x).abs_err < 1e-10);
        CHECK(check_sonine_integral(0.55, -0.3, x).abs_err < 1e-10);
    }
}

TEST_CASE("make_residual")
{
    const ResidualRecord r = make_residual(2.0, 2.5);
    CHECK(r.abs_err == 0.5);
    CHECK(r.rel_err == doctest::Approx(0.2));
    CHECK(make_residual(0.0, 0.0).rel_err == 0.0);
}
