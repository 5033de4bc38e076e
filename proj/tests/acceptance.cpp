// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Each criterion has a fixed tolerance and a wall-clock budget; exceeding the
// budget is a failure even when the numbers agree.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "genhankel/error.hpp"
#include "genhankel/harmonic_ops.hpp"
#include "genhankel/kernels.hpp"
#include "genhankel/oracle.hpp"
#include "genhankel/quadrature.hpp"
#include "genhankel/specfun.hpp"
#include "genhankel/suites.hpp"
#include "genhankel/transform.hpp"

using namespace genhankel;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
};

// Tracks the worst value of an error measure against its limit.
class Worst {
public:
    explicit Worst(double limit) : limit_(limit) {}
    void add(double err)
    {
        if (!std::isnan(worst_) && (std::isnan(err) || err > worst_)) {
            worst_ = err;
        }
    }
    [[nodiscard]] bool ok() const { return worst_ <= limit_; }
    [[nodiscard]] std::string describe(const char* label) const
    {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s %.3g (limit %.3g)", label, worst_, limit_);
        return buf;
    }

private:
    double limit_;
    double worst_ = 0.0;
};

const std::vector<double> kAlphas{0.55, 1.0, 2.3};
const std::vector<double> kRadii{0.1, 0.5, 1.0, 2.0, 5.0};
const std::vector<std::pair<int, double>> kAcceptanceSet{{1, 1.0}, {2, 0.8}, {3, 0.7}, {4, 0.6}};

double factorial(unsigned m)
{
    double f = 1.0;
    for (unsigned k = 2; k <= m; ++k) {
        f *= k;
    }
    return f;
}

// Seeded coordinate in [-5, 5] with |c| >= 0.05.
double coordinate(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> mag(0.05, 5.0);
    std::uniform_int_distribution<int> sign(0, 1);
    const double m = mag(rng);
    return sign(rng) ? m : -m;
}

Outcome sonine_product()
{
    Worst w(1e-8);
    for (double a : kAlphas) {
        for (double u : kRadii) {
            for (double v : kRadii) {
                w.add(check_th0(a, 0, u, v).abs_err);
            }
        }
    }
    return {w.ok(), w.describe("max abs residual")};
}

Outcome th0_formula()
{
    Worst w(1e-8);
    for (int n = 0; n <= 4; ++n) {
        for (double a : kAlphas) {
            for (double u : kRadii) {
                for (double v : kRadii) {
                    w.add(check_th0(a, n, u, v).abs_err);
                }
            }
        }
    }
    return {w.ok(), w.describe("max abs residual")};
}

Outcome key1_formula()
{
    Worst w(1e-8);
    for (int n = 0; n <= 4; ++n) {
        for (double a : kAlphas) {
            for (double u : kRadii) {
                for (double v : kRadii) {
                    w.add(check_key1(a, n, u, v).abs_err);
                }
            }
        }
    }
    return {w.ok(), w.describe("max abs residual")};
}

Outcome psi_ladder()
{
    Worst w(1e-6);
    const double h = 1e-5;
    struct Point {
        double u, v, phi;
    };
    const Point points[] = {{1.4, 0.6, 1.0}, {0.5, 2.0, 0.3}, {3.0, 2.5, 2.8}, {1.0, 1.0, 1.7}, {2.2, 0.1, 0.05}};
    for (int n = 1; n <= 5; ++n) {
        for (double a : {0.55, 1.1, 2.3}) {
            for (const Point& pt : points) {
                const double fd = (psi(n, a, pt.u + h, pt.v, pt.phi) - psi(n, a, pt.u - h, pt.v, pt.phi)) / (2 * h);
                const double exact = n * psi(n - 1, a, pt.u, pt.v, pt.phi);
                w.add(std::abs(fd - exact) / std::max(std::abs(exact), 1e-300));
            }
        }
    }
    return {w.ok(), w.describe("max rel error")};
}

Outcome gegenbauer_orthogonality()
{
    Worst w(1e-10);
    for (double a : {0.6, 1.5}) {
        const QuadratureRule rule = gauss_rule(16, RuleKind::jacobi(a - 0.5));
        for (unsigned m = 0; m <= 8; ++m) {
            for (unsigned k = 0; k <= 8; ++k) {
                double q = 0.0;
                for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
                    q += rule.weights[i] * gegenbauer(m, a, rule.nodes[i]) * gegenbauer(k, a, rule.nodes[i]);
                }
                const double exact = m != k ? 0.0
                                            : std::numbers::pi * std::pow(2.0, 1.0 - 2.0 * a) * std::tgamma(m + 2 * a) /
                                                  (factorial(m) * (m + a) * std::tgamma(a) * std::tgamma(a));
                w.add(std::abs(q - exact) / std::max(1.0, std::abs(exact)));
            }
        }
    }
    return {w.ok(), w.describe("max error")};
}

Outcome kernel_normalization()
{
    Worst w(1e-9);
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> alpha(-0.45, 4.0);
    std::uniform_real_distribution<double> radius(0.05, 6.0);
    for (int i = 0; i < 20; ++i) {
        const double a = alpha(rng);
        const double u = radius(rng);
        const double v = radius(rng);
        w.add(std::abs(bessel_kernel_mass(a, u, v) - 1.0));
    }
    return {w.ok(), w.describe("max |mass - 1| over 20 triples:")};
}

Outcome product_formula()
{
    Worst w(1e-7);
    std::mt19937_64 rng(42);
    for (auto [n, kappa] : kAcceptanceSet) {
        const Params p = make_params(n, kappa);
        for (int i = 0; i < 100; ++i) {
            const double lambda = coordinate(rng);
            const double x = coordinate(rng);
            const double y = coordinate(rng);
            const Function1D b = make_function([p, lambda](double z) { return b_kernel(p, lambda, z); }, -1e3, 1e3);
            const Complex lhs = b_kernel(p, lambda, x) * b_kernel(p, lambda, y);
            w.add(std::abs(lhs - nu_integrate(p, x, y, b)));
        }
    }
    return {w.ok(), w.describe("max abs residual over 400 cases:")};
}

Outcome measure_properties()
{
    Worst mass(1e-8);
    Worst tv_excess(0.0);
    Worst outside(0.0);
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (auto [n, kappa] : kAcceptanceSet) {
        const Params p = make_params(n, kappa);
        for (int i = 0; i < 50; ++i) {
            const double x = coordinate(rng);
            const double y = coordinate(rng);
            mass.add(std::abs(nu_integrate(p, x, y, constant_function(1.0)) - 1.0));
            tv_excess.add(std::max(0.0, nu_total_variation(p, x, y) - (4.0 + 1e-8)));
            const auto [inner, outer] = MeasureNu(p, x, y).support_radii();
            for (int k = 0; k < 4; ++k) {
                const double r = k < 2 ? inner * unit(rng) : outer * (1.0 + unit(rng));
                const double z = (k % 2 ? -1.0 : 1.0) * std::pow(r, n);
                outside.add(std::abs(kernel_K(p, x, y, z)));
            }
        }
    }
    const Params witness = make_params(2, 0.8);
    const double x = 2.0;
    const double y = 1.0;
    // just inside the outer edge of the support, where the kernel vanishes
    const double k = kernel_K(witness, x * x, y * y, -std::pow((x + y) * (1.0 - 1e-3), 2));
    char buf[64];
    std::snprintf(buf, sizeof buf, "; witness kernel %.3g", k);
    return {mass.ok() && tv_excess.ok() && outside.ok() && k < 0.0,
            mass.describe("mass error") + "; " + tv_excess.describe("TV excess") + "; " +
                outside.describe("kernel outside support") + buf};
}

Outcome decomposition()
{
    Worst w(1e-6);
    const std::vector<std::pair<int, double>> sets{{1, 1.0}, {2, 0.9}, {3, 0.7}};
    const std::vector<Function1D> bumps{polynomial_bump(0.3, 1.2, 4), polynomial_bump(-0.5, 0.9, 6),
                                        add(gaussian_bump(0.8, 0.4), gaussian_bump(-0.2, 0.3, -0.5))};
    for (auto [n, kappa] : sets) {
        const Params p = make_params(n, kappa);
        for (const Function1D& f : bumps) {
            for (double lambda : {0.1, 0.5, 1.2, 2.5, 4.0, -0.7, -3.0}) {
                const Complex direct = transform_F(p, f, lambda);
                if (std::abs(direct) <= 1e-8) {
                    continue;
                }
                w.add(std::abs(direct - decompose_F_via_H(p, f, lambda)) / std::abs(direct));
            }
        }
    }
    return {w.ok(), w.describe("max rel difference")};
}

Outcome translation_convolution()
{
    // tau_0 = id and symmetry at 1e-9, spectral action at 1e-7 (scale 100),
    // commutation with T at 1e-5 (scale 1e4); commutativity at 1e-7 and the
    // convolution theorem at 1e-6 (scale 10), both relative; Young and
    // translation bounds carry their 1e-8 slack in the bound itself.
    struct Run {
        const char* suite;
        double tol;
    };
    Outcome out;
    for (const Run& r : {Run{"translation", 1e-9}, Run{"convolution", 1e-7}, Run{"lp_bounds", 1e-8}}) {
        RunOptions opts;
        opts.tolerance = r.tol;
        const VerificationReport rep = run_suite(r.suite, opts);
        out.ok = out.ok && rep.pass;
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s%s: %zu cases, max scaled error %.3g, %s", out.detail.empty() ? "" : "; ",
                      r.suite, rep.cases.size(), rep.max_error, rep.pass ? "pass" : "fail");
        out.detail += buf;
    }
    return out;
}

Outcome operator_T_convergence()
{
    struct Point {
        int n;
        double kappa, lambda, x;
    };
    const Point points[] = {{2, 0.8, 1.5, 0.9}, {1, 1.0, 1.1, -1.3}, {3, 0.7, -0.7, 2.2}, {4, 0.6, 2.0, 0.6}};
    double lo = 1e300;
    double hi = -1e300;
    for (const Point& pt : points) {
        const Params p = make_params(pt.n, pt.kappa);
        const Function1D b = make_function([p, pt](double z) { return b_kernel(p, pt.lambda, z); }, -1e3, 1e3);
        const Complex exact = -std::pow(std::abs(pt.lambda), 2.0 / pt.n) * b_kernel(p, pt.lambda, pt.x);
        const double h = 1e-2;
        const double coarse = std::abs(operator_T_fd(p, b, pt.x, h) - exact);
        const double fine = std::abs(operator_T_fd(p, b, pt.x, h / 2) - exact);
        lo = std::min(lo, coarse / fine);
        hi = std::max(hi, coarse / fine);
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "error ratio h : h/2 in [%.4g, %.4g] (required [3.2, 4.8])", lo, hi);
    return {lo >= 3.2 && hi <= 4.8, buf};
}

Outcome oracle_agreement()
{
    Worst w(1e-12);
    for (int ia = 0; ia <= 40; ++ia) {
        const double a = -0.45 + ia * (10.45 / 40);
        for (int ix = -40; ix <= 40; ++ix) {
            const double x = 0.5 * ix;
            const double fast = bessel_j_norm(a, x);
            const double slow = static_cast<double>(oracle_bessel_j(a, x));
            w.add(std::abs(fast - slow) / std::abs(slow));
        }
    }
    return {w.ok(), w.describe("max rel error")};
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "Bessel product formula", 5, sonine_product},
        {2, "th0 product formula, n = 0..4", 30, th0_formula},
        {3, "Gegenbauer-weighted kernel integral, n = 0..4", 30, key1_formula},
        {4, "psi ladder", 2, psi_ladder},
        {5, "Gegenbauer orthogonality", 2, gegenbauer_orthogonality},
        {6, "Bessel kernel normalization", 2, kernel_normalization},
        {7, "product formula for B_lambda", 60, product_formula},
        {8, "measure mass, variation, support, non-positivity", 30, measure_properties},
        {9, "even/odd decomposition against the direct transform", 30, decomposition},
        {10, "translation and convolution", 120, translation_convolution},
        {11, "operator T eigenrelation, second-order convergence", 5, operator_T_convergence},
        {12, "double precision Bessel against the oracle", 10, oracle_agreement},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_budget = seconds <= c.budget_s;
        const bool pass = out.ok && in_budget;
        failures += pass ? 0 : 1;
        std::printf("%s criterion %d: %s; %s; %.2f s (budget %.0f s)%s\n", pass ? "PASS" : "FAIL", c.id, c.name,
                    out.detail.c_str(), seconds, c.budget_s, in_budget ? "" : " OVER BUDGET");
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
