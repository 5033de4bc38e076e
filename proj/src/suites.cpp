#include "genhankel/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <thread>

#include "genhankel/error.hpp"
#include "genhankel/function.hpp"
#include "genhankel/harmonic_ops.hpp"
#include "genhankel/kernels.hpp"
#include "genhankel/oracle.hpp"
#include "genhankel/params.hpp"
#include "genhankel/quadrature.hpp"
#include "genhankel/specfun.hpp"
#include "genhankel/transform.hpp"

namespace genhankel {

namespace {

using Task = std::function<std::vector<CaseRecord>()>;
using Grid = std::vector<std::pair<int, double>>;

constexpr double kPi = std::numbers::pi;

struct Context {
    QuadratureOptions quad;
    OracleConfig oracle;
    std::vector<Params> params; // the (n, kappa) sets of a grid suite
    std::mt19937_64 rng;
    std::vector<Task> tasks;

    void add(Task t) { tasks.push_back(std::move(t)); }
    void add_case(CaseRecord c)
    {
        tasks.push_back([c = std::move(c)] { return std::vector<CaseRecord>{c}; });
    }

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

    // A coordinate from [-5, 5] away from 0, where supports degenerate.
    double coordinate()
    {
        for (;;) {
            const double v = uniform(-5.0, 5.0);
            if (std::abs(v) >= 0.05) {
                return v;
            }
        }
    }
};

std::vector<CaseRecord> one(CaseRecord c) { return {std::move(c)}; }

CaseRecord residual_case(std::string check, Inputs inputs, const ResidualRecord& r)
{
    return equality_case(std::move(check), std::move(inputs), r.lhs, r.rhs);
}

Inputs with_params(const Params& p, Inputs rest)
{
    Inputs in{{"n", static_cast<double>(p.n)}, {"kappa", p.kappa}};
    in.insert(in.end(), rest.begin(), rest.end());
    return in;
}

Function1D kernel_function(const Params& p, double lambda)
{
    Function1D f;
    f.eval = [p, lambda](double z) { return b_kernel(p, lambda, z); };
    return f;
}

Function1D gaussian_everywhere()
{
    Function1D f;
    f.eval = [](double z) { return Complex(std::exp(-z * z)); };
    return f;
}

double radius_of(double v, int n) { return std::pow(std::abs(v), 1.0 / n); }

double signed_power(double s, int n, double sign) { return sign * std::pow(s, n); }

// ---------------------------------------------------------------- oracle

HighPrecision hp_pi() { return boost::multiprecision::default_ops::get_constant_pi<HighPrecision::backend_type>(); }

// int_0^inf K_B^a(u,v,w) w^{2a+1} dw in phi = pi/2 (1 + tanh(pi/2 sinh s)),
// which flattens the sin^{2a} endpoint behaviour so midpoint sums converge.
OracleIntegral oracle_kernel_mass(double alpha, double u, double v, const OracleConfig& cfg)
{
    using boost::multiprecision::cosh;
    using boost::multiprecision::pow;
    using boost::multiprecision::sin;
    using boost::multiprecision::cos;
    using boost::multiprecision::sinh;
    using boost::multiprecision::sqrt;
    using boost::multiprecision::tanh;
    using boost::multiprecision::tgamma;
    const HighPrecision a(alpha);
    const HighPrecision hu(u);
    const HighPrecision hv(v);
    const HighPrecision pi = hp_pi();
    const HighPrecision c_alpha = tgamma(a + 1) / (sqrt(pi) * tgamma(a + HighPrecision(0.5)));
    const HighPrecision prefactor = pow(HighPrecision(2), 1 - 2 * a) * c_alpha;
    const auto integrand = [=](const HighPrecision& s) -> HighPrecision {
        const HighPrecision g = pi / 2 * sinh(s);
        const HighPrecision phi = pi / 2 * (1 + tanh(g));
        const HighPrecision ch = cosh(g);
        const HighPrecision dphi = pi * pi / 4 * cosh(s) / (ch * ch);
        const HighPrecision w2 = hu * hu + hv * hv - 2 * hu * hv * cos(phi);
        const HighPrecision w = sqrt(w2);
        const HighPrecision bracket = ((hu + hv) * (hu + hv) - w2) * (w2 - (hu - hv) * (hu - hv));
        if (bracket <= 0 || w == 0) {
            return HighPrecision(0);
        }
        const HighPrecision kernel = prefactor * pow(bracket, a - HighPrecision(0.5)) / pow(hu * hv * w, 2 * a);
        // dw = u v sin(phi) / w dphi
        return kernel * pow(w, 2 * a + 1) * hu * hv * sin(phi) / w * dphi;
    };
    return oracle_integral(integrand, -4.5, 4.5, cfg, 1e-14);
}

void build_oracle(Context& ctx)
{
    const OracleConfig cfg = ctx.oracle;
    for (int ia = 0; ia <= 40; ++ia) {
        const double alpha = 0.25 * ia;
        ctx.add([alpha, cfg] {
            std::vector<CaseRecord> out;
            for (int ix = -80; ix <= 80; ++ix) {
                const double x = 0.25 * ix;
                const double fast = bessel_j_norm(alpha, x);
                const double ref = static_cast<double>(oracle_bessel_j(alpha, x, cfg));
                out.push_back(equality_case("bessel_grid", {{"alpha", alpha}, {"x", x}}, fast, ref));
            }
            return out;
        });
    }
    ctx.add([cfg] {
        const HighPrecision diff = oracle_bessel_j(0.5, 1.0, cfg) - boost::multiprecision::sin(HighPrecision(1));
        const double rel = static_cast<double>(boost::multiprecision::abs(diff) /
                                               boost::multiprecision::sin(HighPrecision(1)));
        return one(bound_case("sin_closed_form_digits", {{"alpha", 0.5}, {"x", 1.0}}, rel, 1e-30));
    });
    ctx.add([cfg] {
        return one(equality_case("oracle_at_zero", {{"alpha", 2.0}, {"x", 0.0}},
                                 static_cast<double>(oracle_bessel_j(2.0, 0.0, cfg)), 1.0));
    });
    ctx.add([cfg] {
        const auto r = oracle_integral([](const HighPrecision& phi) -> HighPrecision {
            const HighPrecision s = boost::multiprecision::sin(phi);
            return HighPrecision(s * s);
        }, 0.0, kPi, cfg);
        return one(equality_case("wallis_integral", {{"alpha", 1.0}}, static_cast<double>(r.value), kPi / 2));
    });
    ctx.add([cfg] {
        const auto r = oracle_integral([](const HighPrecision&) { return HighPrecision(1); }, 0.0, 1.0, cfg);
        return one(equality_case("unit_integral", {}, static_cast<double>(r.value), 1.0));
    });
    ctx.add([cfg] {
        const auto r = oracle_kernel_mass(0.6, 1.2, 0.7, cfg);
        return one(scaled(equality_case("kalpha_mass_oracle", {{"alpha", 0.6}, {"u", 1.2}, {"v", 0.7}},
                                        static_cast<double>(r.value), 1.0),
                          100.0));
    });
}

// ---------------------------------------------------------------- bessel

void build_bessel(Context& ctx)
{
    ctx.add_case(equality_case("value_at_zero", {{"alpha", 0.75}, {"x", 0.0}}, bessel_j_norm(0.75, 0.0), 1.0));
    ctx.add_case(equality_case("half_order_zero", {{"alpha", 0.5}, {"x", kPi}}, bessel_j_norm(0.5, kPi), 0.0));
    ctx.add([] {
        std::vector<CaseRecord> out;
        for (int k = 1; k <= 40; ++k) {
            const double x = 0.5 * k;
            out.push_back(equality_case("closed_form_half", {{"alpha", 0.5}, {"x", x}}, bessel_j_norm(0.5, x),
                                        std::sin(x) / x));
            out.push_back(equality_case("closed_form_three_halves", {{"alpha", 1.5}, {"x", x}},
                                        bessel_j_norm(1.5, x),
                                        3.0 * (std::sin(x) - x * std::cos(x)) / (x * x * x)));
        }
        return out;
    });
    ctx.add([] {
        std::vector<CaseRecord> out;
        const double h = 1e-5;
        for (double alpha : {0.3, 1.0, 2.5}) {
            for (double x : {0.5, 1.7, 3.0, 6.2, 11.0}) {
                const double fd = (bessel_j_norm(alpha, x + h) - bessel_j_norm(alpha, x - h)) / (2.0 * h);
                const double exact = -x * bessel_j_norm(alpha + 1.0, x) / (2.0 * (alpha + 1.0));
                out.push_back(scaled(equality_case("derivative", {{"alpha", alpha}, {"x", x}}, fd, exact), 1e5));
            }
        }
        return out;
    });
    ctx.add([] {
        std::vector<CaseRecord> out;
        for (double alpha : {0.7, 1.6}) {
            for (int n = 1; n <= 4; ++n) {
                for (int k = 0; k <= 20; ++k) {
                    const double u = 0.5 * k;
                    const double a = alpha + n;
                    const double lhs = bessel_j_norm(a - 1.0, u) - bessel_j_norm(a - 2.0, u);
                    const double rhs = u * u * bessel_j_norm(a, u) / (4.0 * (a - 1.0) * a);
                    out.push_back(equality_case("three_term", {{"alpha", alpha}, {"n", double(n)}, {"u", u}}, lhs, rhs));
                }
            }
        }
        return out;
    });
    ctx.add([] {
        std::vector<CaseRecord> out;
        for (double alpha : {-0.3, 0.5, 2.2, 7.0}) {
            for (double x : {0.3, 1.9, 2.0, 2.1, 9.5, 37.0}) {
                out.push_back(equality_case("parity", {{"alpha", alpha}, {"x", x}}, bessel_j_norm(alpha, -x),
                                            bessel_j_norm(alpha, x)));
            }
        }
        return out;
    });
}

// ---------------------------------------------------------------- product formulas

const std::vector<double> kAlphaGrid{0.55, 1.0, 2.3};
const std::vector<double> kRadiusGrid{0.1, 0.5, 1.0, 2.0, 5.0};

void build_sonine(Context& ctx)
{
    const QuadratureOptions q = ctx.quad;
    for (double a : kAlphaGrid) {
        ctx.add([a, q] {
            std::vector<CaseRecord> out;
            for (double u : kRadiusGrid) {
                for (double v : kRadiusGrid) {
                    out.push_back(residual_case("sonine_product", {{"alpha", a}, {"u", u}, {"v", v}},
                                                check_th0(a, 0, u, v, q)));
                }
            }
            return out;
        });
    }
    ctx.add([q] {
        return one(residual_case("sonine_product", {{"alpha", 0.9}, {"u", 1.0}, {"v", 2.0}},
                                 check_th0(0.9, 0, 1.0, 2.0, q)));
    });
    for (auto [a, b] : {std::pair{1.5, 0.25}, std::pair{2.0, 0.5}}) {
        ctx.add([a, b, q] {
            std::vector<CaseRecord> out;
            for (int k = 0; k <= 16; ++k) {
                const double x = 0.5 * k;
                out.push_back(residual_case("sonine_integral", {{"alpha", a}, {"beta", b}, {"x", x}},
                                            check_sonine_integral(a, b, x, q)));
            }
            return out;
        });
    }
}

void build_th0(Context& ctx)
{
    const QuadratureOptions q = ctx.quad;
    const OracleConfig cfg = ctx.oracle;
    for (int n = 0; n <= 4; ++n) {
        for (double a : kAlphaGrid) {
            ctx.add([n, a, q] {
                std::vector<CaseRecord> out;
                for (double u : kRadiusGrid) {
                    for (double v : kRadiusGrid) {
                        out.push_back(residual_case("th0", {{"alpha", a}, {"n", double(n)}, {"u", u}, {"v", v}},
                                                    check_th0(a, n, u, v, q)));
                    }
                }
                return out;
            });
        }
    }
    ctx.add([q] {
        return one(residual_case("th0_sonine", {{"alpha", 0.9}, {"n", 0.0}, {"u", 1.0}, {"v", 2.0}},
                                 check_th0(0.9, 0, 1.0, 2.0, q)));
    });
    ctx.add([q] {
        return one(residual_case("th0_u_zero", {{"alpha", 1.0}, {"n", 2.0}, {"u", 0.0}, {"v", 1.3}},
                                 check_th0(1.0, 2, 0.0, 1.3, q)));
    });
    ctx.add([q, cfg] {
        const double a = 0.7;
        const double u = 1.3;
        const double v = 0.8;
        const HighPrecision lhs = boost::multiprecision::pow(HighPrecision(u), 3) * oracle_bessel_j(a + 3, u, cfg) *
                                  oracle_bessel_j(a, v, cfg);
        const ResidualRecord r = check_th0(a, 3, u, v, q);
        return one(equality_case("th0_oracle_lhs", {{"alpha", a}, {"n", 3.0}, {"u", u}, {"v", v}},
                                 static_cast<double>(lhs), r.rhs));
    });
}

void build_key1(Context& ctx)
{
    const QuadratureOptions q = ctx.quad;
    const OracleConfig cfg = ctx.oracle;
    for (int n = 0; n <= 4; ++n) {
        for (double a : kAlphaGrid) {
            ctx.add([n, a, q] {
                std::vector<CaseRecord> out;
                for (double u : kRadiusGrid) {
                    for (double v : kRadiusGrid) {
                        out.push_back(residual_case("key1", {{"alpha", a}, {"n", double(n)}, {"u", u}, {"v", v}},
                                                    check_key1(a, n, u, v, q)));
                    }
                }
                return out;
            });
        }
    }
    ctx.add([q] {
        return one(residual_case("key1_sonine", {{"alpha", 1.1}, {"n", 0.0}, {"u", 0.7}, {"v", 1.9}},
                                 check_key1(1.1, 0, 0.7, 1.9, q)));
    });
    ctx.add([q, cfg] {
        const double a = 0.6;
        const HighPrecision jn = oracle_bessel_j(a + 2, 1.0, cfg);
        const double lhs = static_cast<double>(jn * jn / 16);
        const ResidualRecord r = check_key1(a, 2, 1.0, 1.0, q);
        return one(equality_case("key1_oracle_lhs", {{"alpha", a}, {"n", 2.0}, {"u", 1.0}, {"v", 1.0}}, lhs, r.rhs));
    });
    ctx.add([q] {
        const ResidualRecord r = check_key1(0.8, 1, 0.5, 2.5, q);
        const ResidualRecord s = check_key1(0.8, 1, 2.5, 0.5, q);
        const Inputs in{{"alpha", 0.8}, {"n", 1.0}, {"u", 0.5}, {"v", 2.5}};
        return std::vector<CaseRecord>{equality_case("key1_swap_lhs", in, r.lhs, s.lhs),
                                       equality_case("key1_swap_rhs", in, r.rhs, s.rhs)};
    });
}

void build_psi_ladder(Context& ctx)
{
    struct Point {
        double u, v, phi;
    };
    const std::vector<Point> points{{1.4, 0.6, 1.0}, {0.7, 1.9, 0.4}, {2.5, 0.3, 2.2}, {1.0, 1.0, 1.5}, {0.2, 1.2, 2.9}};
    for (int n = 1; n <= 5; ++n) {
        ctx.add([n, points] {
            std::vector<CaseRecord> out;
            const double h = 1e-5;
            for (double a : {0.55, 1.1, 2.3}) {
                for (const Point& pt : points) {
                    const double fd = (psi(n, a, pt.u + h, pt.v, pt.phi) - psi(n, a, pt.u - h, pt.v, pt.phi)) / (2.0 * h);
                    const double ladder = n * psi(n - 1, a, pt.u, pt.v, pt.phi);
                    // Near a zero of psi_{n-1} only an absolute comparison means anything.
                    if (std::abs(ladder) < 1e-3) {
                        continue;
                    }
                    out.push_back(equality_case(
                        "psi_ladder", {{"n", double(n)}, {"alpha", a}, {"u", pt.u}, {"v", pt.v}, {"phi", pt.phi}}, fd,
                        ladder));
                }
            }
            return out;
        });
    }
}

// ---------------------------------------------------------------- gegenbauer

double gegenbauer_explicit(unsigned m, double alpha, double t)
{
    double sum = 0.0;
    for (unsigned k = 0; 2 * k <= m; ++k) {
        const double term = pochhammer(alpha, m - k) / (std::tgamma(k + 1.0) * std::tgamma(m - 2.0 * k + 1.0)) *
                            std::pow(2.0 * t, static_cast<double>(m - 2 * k));
        sum += (k % 2 == 0) ? term : -term;
    }
    return sum;
}

void build_gegenbauer(Context& ctx)
{
    for (double a : {0.6, 1.5}) {
        ctx.add([a] {
            const QuadratureRule rule = gauss_rule(16, RuleKind::jacobi(a - 0.5));
            std::vector<CaseRecord> out;
            for (unsigned m = 0; m <= 8; ++m) {
                for (unsigned k = 0; k <= 8; ++k) {
                    double quad = 0.0;
                    for (int i = 0; i < rule.order; ++i) {
                        quad += rule.weights[i] * gegenbauer(m, a, rule.nodes[i]) * gegenbauer(k, a, rule.nodes[i]);
                    }
                    const double exact = m != k ? 0.0
                                                : kPi * std::pow(2.0, 1.0 - 2.0 * a) * std::tgamma(m + 2.0 * a) /
                                                      (std::tgamma(m + 1.0) * (m + a) * std::pow(std::tgamma(a), 2));
                    out.push_back(equality_case("orthogonality", {{"alpha", a}, {"m", double(m)}, {"k", double(k)}},
                                                quad, exact));
                }
            }
            return out;
        });
    }
    std::vector<std::tuple<unsigned, double, double>> draws;
    for (int i = 0; i < 200; ++i) {
        const auto m = static_cast<unsigned>(std::uniform_int_distribution<int>(0, 12)(ctx.rng));
        double a = 0.0;
        while (a == 0.0) {
            a = ctx.uniform(0.0, 5.0);
        }
        draws.emplace_back(m, a, ctx.uniform(-1.0, 1.0));
    }
    ctx.add([draws] {
        std::vector<CaseRecord> out;
        for (auto [m, a, t] : draws) {
            out.push_back(equality_case("explicit_sum", {{"m", double(m)}, {"alpha", a}, {"t", t}},
                                        gegenbauer(m, a, t), gegenbauer_explicit(m, a, t)));
        }
        return out;
    });
    ctx.add([] {
        std::vector<CaseRecord> out;
        for (double a : {0.6, 0.9, 1.5, 3.0}) {
            for (unsigned m = 0; m <= 10; ++m) {
                const double at_one = pochhammer(2.0 * a, m) / std::tgamma(m + 1.0);
                const Inputs in{{"m", double(m)}, {"alpha", a}};
                out.push_back(equality_case("value_at_one", in, gegenbauer(m, a, 1.0), at_one));
                out.push_back(
                    equality_case("value_at_minus_one", in, gegenbauer(m, a, -1.0), (m % 2 ? -1.0 : 1.0) * at_one));
            }
        }
        out.push_back(equality_case("degree_zero", {{"m", 0.0}, {"alpha", 1.5}, {"t", -0.2}}, gegenbauer(0, 1.5, -0.2), 1.0));
        out.push_back(equality_case("degree_one", {{"m", 1.0}, {"alpha", 2.0}, {"t", 0.3}}, gegenbauer(1, 2.0, 0.3), 1.2));
        out.push_back(equality_case("value_at_one", {{"m", 5.0}, {"alpha", 0.9}}, gegenbauer(5, 0.9, 1.0),
                                    pochhammer(1.8, 5) / 120.0));
        return out;
    });
    ctx.add([] {
        std::vector<CaseRecord> out;
        for (double a : {0.6, 1.5, 3.0}) {
            for (unsigned m = 1; m <= 10; ++m) {
                double peak = 0.0;
                for (int i = -1000; i <= 1000; ++i) {
                    peak = std::max(peak, std::abs(gegenbauer(m, a, 1e-3 * i)));
                }
                out.push_back(bound_case("bound", {{"m", double(m)}, {"alpha", a}}, peak,
                                         gegenbauer(m, a, 1.0) * (1.0 + 1e-12)));
            }
        }
        return out;
    });
    ctx.add([] {
        const QuadratureRule rule = gauss_rule(8, RuleKind::jacobi(0.7));
        double total = 0.0;
        for (double w : rule.weights) {
            total += w;
        }
        const QuadratureRule mid = gauss_rule(1, RuleKind::legendre());
        return std::vector<CaseRecord>{
            equality_case("zeroth_moment", {{"order", 8.0}, {"alpha", 1.2}}, total,
                          std::sqrt(kPi) * std::tgamma(1.7) / std::tgamma(2.2)),
            equality_case("midpoint_node", {{"order", 1.0}}, mid.nodes[0], 0.0),
            equality_case("midpoint_weight", {{"order", 1.0}}, mid.weights[0], 2.0),
            equality_case("pochhammer", {{"a", 3.7}, {"m", 0.0}}, pochhammer(3.7, 0), 1.0),
            equality_case("pochhammer", {{"a", 1.0}, {"m", 4.0}}, pochhammer(1.0, 4), 24.0),
            equality_case("pochhammer", {{"a", 2.0}, {"m", 3.0}}, pochhammer(2.0, 3), 24.0),
        };
    });
}

// ---------------------------------------------------------------- kernels

// A random (x, y, z) with z strictly inside the support of nu_{x,y}.
std::tuple<double, double, double> admissible_triple(Context& ctx, int n)
{
    const double x = ctx.coordinate();
    const double y = ctx.coordinate();
    const double rx = radius_of(x, n);
    const double ry = radius_of(y, n);
    const double lo = std::abs(rx - ry);
    const double hi = rx + ry;
    const double r = ctx.uniform(lo + 1e-3 * (hi - lo), hi - 1e-3 * (hi - lo));
    const double sign = ctx.uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0;
    return {x, y, signed_power(r, n, sign)};
}

void build_kernel_props(Context& ctx)
{
    const QuadratureOptions q = ctx.quad;
    std::vector<std::tuple<double, double, double>> triples{{0.6, 1.2, 0.7}};
    while (triples.size() < 20) {
        triples.emplace_back(ctx.uniform(0.55, 3.0), ctx.uniform(0.1, 5.0), ctx.uniform(0.1, 5.0));
    }
    ctx.add([triples, q] {
        std::vector<CaseRecord> out;
        for (auto [a, u, v] : triples) {
            out.push_back(equality_case("kalpha_mass", {{"alpha", a}, {"u", u}, {"v", v}},
                                        bessel_kernel_mass(a, u, v, q), 1.0));
        }
        return out;
    });
    ctx.add([] {
        std::vector<CaseRecord> out;
        for (auto [a, u, v, w] : {std::tuple{0.8, 1.0, 1.5, 2.0}, std::tuple{0.3, 0.7, 0.6, 0.9},
                                  std::tuple{2.1, 2.0, 1.1, 1.5}}) {
            out.push_back(equality_case("homogeneity", {{"alpha", a}, {"u", u}, {"v", v}, {"w", w}},
                                        k_bessel(a, 2 * u, 2 * v, 2 * w) * std::pow(2.0, 2 * a + 2),
                                        k_bessel(a, u, v, w)));
        }
        out.push_back(equality_case("k_bessel_outside", {{"alpha", 1.0}, {"u", 1.0}, {"v", 1.0}, {"w", 3.0}},
                                    k_bessel(1.0, 1.0, 1.0, 3.0), 0.0));
        out.push_back(equality_case("delta", {{"u", 1.0}, {"v", 1.0}, {"phi", 0.0}}, delta(1, 1, 0), 0.0));
        out.push_back(equality_case("delta", {{"u", 1.0}, {"v", 1.0}, {"phi", kPi}}, delta(1, 1, kPi), 2.0));
        out.push_back(equality_case("delta", {{"u", 3.0}, {"v", 4.0}, {"phi", kPi / 2}}, delta(3, 4, kPi / 2), 5.0));
        out.push_back(equality_case("sigma", {{"x", 3.0}, {"y", 4.0}, {"z", 5.0}, {"n", 1.0}}, sigma(3, 4, 5, 1), 0.0));
        out.push_back(equality_case("sigma", {{"x", 1.0}, {"y", 1.0}, {"z", 0.0}, {"n", 2.0}}, sigma(1, 1, 0, 2), 1.0));
        out.push_back(equality_case("sigma_scale", {{"x", 1.0}, {"y", 2.0}, {"z", 1.5}, {"n", 3.0}, {"lambda", 7.0}},
                                    sigma(7.0, 14.0, 10.5, 3), sigma(1.0, 2.0, 1.5, 3)));
        out.push_back(equality_case("psi", {{"n", 0.0}, {"u", 0.8}, {"v", 1.7}, {"phi", 2.0}}, psi(0, 1.3, 0.8, 1.7, 2.0), 1.0));
        out.push_back(equality_case("psi", {{"n", 1.0}, {"u", 2.0}, {"v", 1.0}, {"phi", kPi / 3}},
                                    psi(1, 1.3, 2.0, 1.0, kPi / 3), 1.5));
        return out;
    });
    ctx.add([] {
        std::vector<CaseRecord> out;
        for (auto [n, kappa] : {std::pair{2, 0.8}, std::pair{3, 0.9}}) {
            const Params p = make_params(n, kappa);
            const double x = 2.0;
            const double y = 0.5;
            const double z = std::pow(std::abs(radius_of(x, n) - radius_of(y, n)), n);
            out.push_back(equality_case("xi_at_sigma_one", with_params(p, {{"x", x}, {"y", y}, {"z", z}}),
                                        xi(p, x, y, z), 1.0));
            out.push_back(equality_case("xi_sign_flip", with_params(p, {{"x", 1.1}, {"y", 0.5}, {"z", 1.3}}),
                                        xi(p, -1.1, 0.5, 1.3), -xi(p, 1.1, 0.5, 1.3)));
        }
        return out;
    });
    {
        const Params p = make_params(3, 0.9);
        std::vector<std::tuple<double, double, double>> draws;
        for (int i = 0; i < 1000; ++i) {
            draws.push_back(admissible_triple(ctx, p.n));
        }
        ctx.add([p, draws] {
            double peak = 0.0;
            for (auto [x, y, z] : draws) {
                peak = std::max(peak, std::abs(xi(p, x, y, z)));
            }
            return one(bound_case("xi_bound", with_params(p, {{"samples", 1000.0}}), peak, 1.0 + 1e-12));
        });
    }
    std::vector<std::pair<Params, std::tuple<double, double, double>>> sym{{make_params(2, 0.8), {1.1, 0.5, 1.3}}};
    for (const Params& p : ctx.params) {
        for (int i = 0; i < 50; ++i) {
            sym.emplace_back(p, admissible_triple(ctx, p.n));
        }
    }
    ctx.add([sym] {
        std::vector<CaseRecord> out;
        for (const auto& [p, t] : sym) {
            const auto [x, y, z] = t;
            const double s = p.n % 2 == 0 ? 1.0 : -1.0;
            const double k = kernel_K(p, x, y, z);
            const Inputs in = with_params(p, {{"x", x}, {"y", y}, {"z", z}});
            out.push_back(equality_case("kernel_symmetry_xy", in, k, kernel_K(p, y, x, z)));
            out.push_back(equality_case("kernel_symmetry_exchange", in, k, kernel_K(p, s * x, z, y)));
            out.push_back(equality_case("kernel_symmetry_cycle", in, k, kernel_K(p, z, s * y, x)));
        }
        return out;
    });
}

// ---------------------------------------------------------------- measures

void build_product_formula(Context& ctx)
{
    const QuadratureOptions q = ctx.quad;
    for (const Params& p : ctx.params) {
        std::vector<std::tuple<double, double, double>> draws;
        for (int i = 0; i < 100; ++i) {
            const double lambda = ctx.uniform(-5.0, 5.0);
            const double x = ctx.coordinate();
            draws.emplace_back(lambda, x, ctx.coordinate());
        }
        for (std::size_t start = 0; start < draws.size(); start += 10) {
            std::vector<std::tuple<double, double, double>> chunk(draws.begin() + start, draws.begin() + start + 10);
            ctx.add([p, chunk, q] {
                std::vector<CaseRecord> out;
                for (auto [lambda, x, y] : chunk) {
                    const Complex lhs = b_kernel(p, lambda, x) * b_kernel(p, lambda, y);
                    const Complex rhs = nu_integrate(p, x, y, kernel_function(p, lambda), q);
                    out.push_back(equality_case("product_formula", with_params(p, {{"lambda", lambda}, {"x", x}, {"y", y}}),
                                                lhs, rhs));
                }
                return out;
            });
        }
    }
}

// A point strictly inside the support where the kernel is negative.  The
// classical witness -(x +- y)^n sits on the support boundary, so step 1e-3
// (relative) inward.
double negativity_witness(int n, double x, double y)
{
    return n % 2 == 0 ? -std::pow((x + y) * (1.0 - 1e-3), n) : -std::pow((x - y) * (1.0 + 1e-3), n);
}

void build_measure_props(Context& ctx)
{
    const QuadratureOptions q = ctx.quad;
    {
        const Params p = make_params(3, 0.7);
        ctx.add([p, q] {
            return one(equality_case("mass", with_params(p, {{"x", 1.2}, {"y", 0.4}}),
                                     nu_integrate(p, 1.2, 0.4, constant_function(1.0), q), 1.0));
        });
    }
    for (const Params& p : ctx.params) {
        std::vector<std::pair<double, double>> pairs;
        for (int i = 0; i < 25; ++i) {
            const double x = ctx.coordinate();
            pairs.emplace_back(x, ctx.coordinate());
        }
        ctx.add([p, pairs, q] {
            std::vector<CaseRecord> out;
            for (auto [x, y] : pairs) {
                out.push_back(equality_case("mass", with_params(p, {{"x", x}, {"y", y}}),
                                            nu_integrate(p, x, y, constant_function(1.0), q), 1.0));
            }
            return out;
        });
        std::vector<std::pair<double, double>> tv_pairs;
        for (int i = 0; i < 200; ++i) {
            const double x = ctx.coordinate();
            tv_pairs.emplace_back(x, ctx.coordinate());
        }
        for (std::size_t start = 0; start < tv_pairs.size(); start += 20) {
            std::vector<std::pair<double, double>> chunk(tv_pairs.begin() + start, tv_pairs.begin() + start + 20);
            ctx.add([p, chunk, q] {
                std::vector<CaseRecord> out;
                for (auto [x, y] : chunk) {
                    out.push_back(bound_case("total_variation", with_params(p, {{"x", x}, {"y", y}}),
                                             nu_total_variation(p, x, y, q), 4.0 + 1e-8));
                }
                return out;
            });
        }
        std::vector<std::tuple<double, double, double>> outside;
        for (int i = 0; i < 10; ++i) {
            const double x = ctx.coordinate();
            const double y = ctx.coordinate();
            const double rx = radius_of(x, p.n);
            const double ry = radius_of(y, p.n);
            const double sign = i % 2 == 0 ? 1.0 : -1.0;
            if (std::abs(rx - ry) > 1e-6) {
                outside.emplace_back(x, y, signed_power(std::abs(rx - ry) * ctx.uniform(0.0, 0.999), p.n, sign));
            }
            outside.emplace_back(x, y, signed_power((rx + ry) * ctx.uniform(1.001, 2.0), p.n, -sign));
        }
        ctx.add([p, outside] {
            std::vector<CaseRecord> out;
            for (auto [x, y, z] : outside) {
                const Inputs in = with_params(p, {{"x", x}, {"y", y}, {"z", z}});
                out.push_back(equality_case("support_outside_kernel", in, kernel_K(p, x, y, z), 0.0));
                out.push_back(equality_case("support_outside_density", in, MeasureNu(p, x, y).density(z), 0.0));
            }
            return out;
        });
        ctx.add([p] {
            std::vector<CaseRecord> out;
            for (double x : {-2.3, 0.7, 3.1}) {
                Function1D sq;
                sq.eval = [](double z) { return Complex(z * z); };
                out.push_back(equality_case("point_mass_x", with_params(p, {{"x", x}, {"y", 0.0}}),
                                            nu_integrate(p, x, 0.0, sq), x * x));
                out.push_back(equality_case("point_mass_y", with_params(p, {{"x", 0.0}, {"y", x}}),
                                            nu_integrate(p, 0.0, x, sq), x * x));
            }
            // Remark variables: the kernel is evaluated at (x^n, y^n, z).
            const double x = 2.0;
            const double y = 1.0;
            const double z = negativity_witness(p.n, x, y);
            out.push_back(strict_case("negativity_witness",
                                      with_params(p, {{"x", std::pow(x, p.n)}, {"y", std::pow(y, p.n)}, {"z", z}}),
                                      kernel_K(p, std::pow(x, p.n), std::pow(y, p.n), z), 0.0));
            return out;
        });
    }
}

// ---------------------------------------------------------------- transform

const std::vector<double> kDecompLambdas{-2.5, -0.6, 0.1, 0.5, 1.0, 2.0, 4.0};

std::vector<std::pair<std::string, Function1D>> decomposition_functions()
{
    const Function1D bump = polynomial_bump(0.4, 1.2, 4);
    const Function1D gauss = gaussian_bump(-0.3, 0.5);
    return {{"bump", bump}, {"gaussian", gauss}, {"sum", add(bump, gauss)}};
}

void build_transform_decomp(Context& ctx)
{
    const QuadratureOptions q = ctx.quad;
    for (const Params& p : ctx.params) {
        for (const auto& [label, f] : decomposition_functions()) {
            const double fid = label == "bump" ? 0.0 : label == "gaussian" ? 1.0 : 2.0;
            ctx.add([p, f, fid, q] {
                std::vector<CaseRecord> out;
                const SpectralSamples direct = transform_F(p, f, kDecompLambdas, q);
                const double l1 = lp_norm(p, f, NormSpec::of(1.0), q);
                for (std::size_t k = 0; k < kDecompLambdas.size(); ++k) {
                    const double lambda = kDecompLambdas[k];
                    const Inputs in = with_params(p, {{"function", fid}, {"lambda", lambda}});
                    out.push_back(bound_case("l1_linf_bound", in, std::abs(direct.values[k]), l1 + 1e-10));
                    // Relative agreement is only meaningful away from zeros of F f.
                    if (std::abs(direct.values[k]) <= 1e-8) {
                        continue;
                    }
                    out.push_back(equality_case("decomposition", in, decompose_F_via_H(p, f, lambda, q),
                                                direct.values[k]));
                }
                out.push_back(equality_case("lambda_zero", with_params(p, {{"function", fid}}), transform_F(p, f, 0.0, q),
                                            integrate_mu(p, f, q)));
                return out;
            });
        }
        ctx.add([p, q] {
            std::vector<CaseRecord> out;
            const auto fs = decomposition_functions();
            const Function1D& f = fs[0].second;
            const Function1D& g = fs[1].second;
            const Function1D combo = add(f, scale(g, 2.0));
            for (double lambda : {-1.7, 0.8, 3.3}) {
                out.push_back(equality_case("linearity", with_params(p, {{"lambda", lambda}}),
                                            transform_F(p, combo, lambda, q),
                                            transform_F(p, f, lambda, q) + 2.0 * transform_F(p, g, lambda, q)));
            }
            if (p.n % 2 == 0) {
                const Function1D even = gaussian_bump(0.0, 0.7);
                for (double lambda : {-1.7, 0.8, 3.3}) {
                    out.push_back(bound_case("even_real", with_params(p, {{"lambda", lambda}}),
                                             std::abs(transform_F(p, even, lambda, q).imag()), 1e-12));
                }
            }
            const Function1D odd = odd_part(f);
            const Function1D even = even_part(f);
            out.push_back(equality_case("odd_has_no_even_term", with_params(p, {{"lambda", 1.3}}),
                                        transform_H(p.alpha, decomposition_even(p, odd), 1.3, q), 0.0));
            out.push_back(equality_case("even_has_no_odd_term", with_params(p, {{"lambda", 1.3}}),
                                        transform_H(p.alpha, decomposition_odd(p, even, q), 1.3, q), 0.0));
            double peak = 0.0;
            for (int i = -20; i <= 20; ++i) {
                for (int j = -20; j <= 20; ++j) {
                    peak = std::max(peak, std::abs(b_kernel(p, 0.5 * i, 0.5 * j)));
                }
            }
            out.push_back(bound_case("kernel_bound", with_params(p, {{"grid_step", 0.5}}), peak, 1.0 + 1e-10));
            out.push_back(equality_case("kernel_lambda_zero", with_params(p, {{"x", 5.3}}), b_kernel(p, 0.0, 5.3), 1.0));
            return out;
        });
    }
    ctx.add([] {
        std::vector<CaseRecord> out;
        const Params p1 = make_params(1, 1.0);
        const Complex closed = std::sin(2.0) / 2.0 - Complex(0.0, 2.0 / 3.0) * 3.0 * (std::sin(2.0) - 2.0 * std::cos(2.0)) / 8.0;
        out.push_back(equality_case("kernel_closed_form", with_params(p1, {{"lambda", 1.0}, {"x", 2.0}}),
                                    b_kernel(p1, 1.0, 2.0), closed));
        const Params p3 = make_params(3, 0.7);
        out.push_back(equality_case("kernel_conjugation", with_params(p3, {{"lambda", 1.3}, {"x", 0.8}}),
                                    b_kernel(p3, -1.3, 0.8), std::conj(b_kernel(p3, 1.3, 0.8))));
        out.push_back(equality_case("mu_weight_zero", with_params(p1, {{"x", 0.0}}), mu_weight(p1, 0.0), 0.0));
        const Params p2 = make_params(2, 0.8);
        out.push_back(equality_case("mu_weight_scaling", with_params(p2, {{"x", 1.0}}),
                                    mu_weight(p2, 2.0) / mu_weight(p2, 1.0), std::pow(2.0, 2 * 0.8 + 1.0 - 2.0)));
        const Params p34 = make_params(2, 0.75);
        // exponent 2 kappa + 2/n - 2 = 1/2, so the weight at 4 is 2/M
        out.push_back(equality_case("mu_weight_value", with_params(p34, {{"x", 4.0}}), mu_weight(p34, 4.0),
                                    2.0 / p34.M));
        return out;
    });
}

// ---------------------------------------------------------------- translation & convolution

const std::vector<double> kSpectralLambdas{-1.3, 0.4, 1.1, 2.5};

void build_translation(Context& ctx)
{
    const QuadratureOptions q = ctx.quad;
    {
        const Params p = make_params(2, 0.8);
        ctx.add([p, q] {
            const Function1D g = gaussian_everywhere();
            return one(equality_case("symmetry", with_params(p, {{"x", 1.0}, {"y", 0.3}}), translate(p, g, 1.0, 0.3, q),
                                     translate(p, g, 0.3, 1.0, q)));
        });
    }
    for (const Params& p : ctx.params) {
        const Function1D f = polynomial_bump(0.5, 1.0, 6);
        ctx.add([p, f, q] {
            std::vector<CaseRecord> out;
            for (double y : {-1.2, -0.3, 0.4, 0.9, 1.4}) {
                out.push_back(equality_case("tau_zero", with_params(p, {{"y", y}}), translate(p, f, 0.0, y, q), f(y)));
                out.push_back(equality_case("tau_at_zero", with_params(p, {{"x", y}}), translate(p, f, y, 0.0, q), f(y)));
            }
            return out;
        });
        std::vector<std::pair<double, double>> pairs;
        for (int i = 0; i < 5; ++i) {
            const double x = ctx.coordinate();
            pairs.emplace_back(x, ctx.coordinate());
        }
        ctx.add([p, pairs, q] {
            std::vector<CaseRecord> out;
            const Function1D g = gaussian_everywhere();
            for (auto [x, y] : pairs) {
                out.push_back(equality_case("symmetry", with_params(p, {{"x", x}, {"y", y}}), translate(p, g, x, y, q),
                                            translate(p, g, y, x, q)));
            }
            return out;
        });
        const double reflect = p.n % 2 == 0 ? 1.0 : -1.0;
        for (double x : {0.7, -1.1}) {
            ctx.add([p, f, x, reflect, q] {
                std::vector<CaseRecord> out;
                const SpectralSamples lhs = transform_F(p, translated(p, f, x, q), kSpectralLambdas, q);
                const SpectralSamples base = transform_F(p, f, kSpectralLambdas, q);
                for (std::size_t k = 0; k < kSpectralLambdas.size(); ++k) {
                    const double lambda = kSpectralLambdas[k];
                    out.push_back(scaled(equality_case("spectral", with_params(p, {{"x", x}, {"lambda", lambda}}),
                                                       lhs.values[k], b_kernel(p, lambda, reflect * x) * base.values[k]),
                                         100.0));
                }
                return out;
            });
        }
        ctx.add([p, reflect, q] {
            // T h for a bump h supported away from 0, then F(tau_x T h) = -|lambda|^{2/n} B_lambda((-1)^n x) F h.
            const Function1D h = polynomial_bump(1.2, 0.8, 6);
            const Function1D th = make_function(
                [p, h](double y) { return y == 0.0 ? Complex{} : operator_T(p, h, y); }, -2.0, 2.0, {-0.4, 0.0, 0.4});
            const double x = 0.8;
            const std::vector<double> lambdas{0.6, 1.4, 2.2};
            const SpectralSamples lhs = transform_F(p, translated(p, th, x, q), lambdas, q);
            const SpectralSamples base = transform_F(p, h, lambdas, q);
            std::vector<CaseRecord> out;
            for (std::size_t k = 0; k < lambdas.size(); ++k) {
                const double lambda = lambdas[k];
                const Complex rhs =
                    -std::pow(std::abs(lambda), 2.0 / p.n) * b_kernel(p, lambda, reflect * x) * base.values[k];
                out.push_back(scaled(
                    equality_case("commutes_with_T", with_params(p, {{"x", x}, {"lambda", lambda}}), lhs.values[k], rhs),
                    1e4));
            }
            return out;
        });
    }
}

Function1D conv_f() { return polynomial_bump(0.3, 0.9, 5); }
Function1D conv_g() { return polynomial_bump(-0.4, 0.8, 6); }

// Largest |.|^{1/n} on the support of f.
double radial_reach(const Function1D& f, int n)
{
    return std::max(radius_of(f.support_lo, n), radius_of(f.support_hi, n));
}

void build_convolution(Context& ctx)
{
    const QuadratureOptions q = ctx.quad;
    {
        const Params p = make_params(3, 0.7);
        ctx.add([p, q] {
            return one(equality_case("commutativity", with_params(p, {{"x", 0.5}}), convolve(p, conv_f(), conv_g(), 0.5, q),
                                     convolve(p, conv_g(), conv_f(), 0.5, q)));
        });
    }
    const std::vector<double> lambdas{0.2, 0.9, 1.7, 3.0};
    for (const Params& p : ctx.params) {
        ctx.add([p, q] {
            std::vector<CaseRecord> out;
            for (double x : {-0.4, 0.9}) {
                out.push_back(equality_case("commutativity", with_params(p, {{"x", x}}),
                                            convolve(p, conv_f(), conv_g(), x, q), convolve(p, conv_g(), conv_f(), x, q)));
            }
            const double reach = std::pow(radial_reach(conv_f(), p.n) + radial_reach(conv_g(), p.n), p.n);
            for (double x : {1.05 * reach, -1.05 * reach, 1.5 * reach, -1.5 * reach}) {
                out.push_back(equality_case("support_outside", with_params(p, {{"x", x}}),
                                            convolve(p, conv_f(), conv_g(), x, q), 0.0));
            }
            return out;
        });
        ctx.add([p, lambdas, q] {
            std::vector<CaseRecord> out;
            const SpectralSamples fg = transform_F(p, convolution(p, conv_f(), conv_g(), q), lambdas, q);
            const SpectralSamples ff = transform_F(p, conv_f(), lambdas, q);
            const SpectralSamples gg = transform_F(p, conv_g(), lambdas, q);
            for (std::size_t k = 0; k < lambdas.size(); ++k) {
                out.push_back(scaled(equality_case("convolution_theorem", with_params(p, {{"lambda", lambdas[k]}}),
                                                   fg.values[k], ff.values[k] * gg.values[k]),
                                     10.0));
            }
            return out;
        });
    }
}

// ---------------------------------------------------------------- operator T

void build_operator_T(Context& ctx)
{
    struct Point {
        int n;
        double kappa, lambda, x;
    };
    std::vector<Point> points{{2, 0.8, 1.5, 0.9}};
    for (const Params& p : ctx.params) {
        points.push_back({p.n, p.kappa, 1.1, -1.3});
        points.push_back({p.n, p.kappa, -0.7, 2.2});
    }
    for (const Point& pt : points) {
        ctx.add([pt] {
            const Params p = make_params(pt.n, pt.kappa);
            const Function1D b = kernel_function(p, pt.lambda);
            const Complex exact = -std::pow(std::abs(pt.lambda), 2.0 / p.n) * b(pt.x);
            const double coarse = std::abs(operator_T_fd(p, b, pt.x, 1e-2) - exact);
            const double fine = std::abs(operator_T_fd(p, b, pt.x, 5e-3) - exact);
            const double ratio = coarse / fine;
            const Inputs in = with_params(p, {{"lambda", pt.lambda}, {"x", pt.x}, {"h", 1e-2}});
            return std::vector<CaseRecord>{
                bound_case("fd_ratio_lower", in, 3.2, ratio),
                bound_case("fd_ratio_upper", in, ratio, 4.8),
                equality_case("eigenrelation", with_params(p, {{"lambda", pt.lambda}, {"x", pt.x}}), operator_T(p, b, pt.x),
                              exact),
            };
        });
    }
    for (const Params& p : ctx.params) {
        ctx.add([p] {
            std::vector<CaseRecord> out;
            const Function1D g = gaussian_bump(0.0, 1.0);
            const Function1D bump = polynomial_bump(0.5, 1.5, 6);
            for (double x : {-1.4, -0.6, 0.3, 1.1, 1.8}) {
                const double e = std::exp(-x * x);
                const double reduced = std::pow(std::abs(x), 2.0 - 2.0 / p.n) *
                                       ((4.0 * x * x - 2.0) * e + 2.0 * p.kappa / x * (-2.0 * x * e));
                out.push_back(equality_case("even_reduction", with_params(p, {{"x", x}}), operator_T(p, g, x), reduced));
                out.push_back(equality_case("fd_vs_analytic", with_params(p, {{"x", x}}),
                                            operator_T_fd(p, bump, x, 1e-4 * std::max(1.0, std::abs(x))),
                                            operator_T(p, bump, x)));
            }
            return out;
        });
        ctx.add([p] {
            const Function1D f = add(polynomial_bump(1.0, 0.6, 6), polynomial_bump(-1.6, 0.8, 5));
            const Function1D g = add(polynomial_bump(1.3, 0.9, 6), polynomial_bump(-1.0, 0.5, 6));
            // T mixes f(y) with f(-y), so support edges are kinks at both signs.
            std::vector<double> breaks;
            for (const Function1D* h : {&f, &g}) {
                for (double e : h->singular_points()) {
                    breaks.push_back(e);
                    breaks.push_back(-e);
                }
            }
            const auto pairing = [&](const Function1D& a, const Function1D& b) {
                return integrate_mu(p, make_function([p, a, b](double y) { return y == 0.0 ? Complex{} : operator_T(p, a, y) * b(y); },
                                                     -2.5, 2.5, breaks));
            };
            return one(equality_case("bilinear_symmetry", with_params(p, {}), pairing(f, g), pairing(g, f)));
        });
    }
}

// ---------------------------------------------------------------- L^p

void build_lp_bounds(Context& ctx)
{
    const QuadratureOptions q = ctx.quad;
    const std::vector<double> exponents{1.0, 2.0, std::numeric_limits<double>::infinity()};
    const auto exponent_input = [](double e) { return std::isinf(e) ? -1.0 : e; }; // -1 encodes infinity
    for (const Params& p : ctx.params) {
        const Function1D f = polynomial_bump(0.5, 1.0, 6);
        std::vector<double> shifts;
        for (int i = 0; i < 2; ++i) {
            shifts.push_back(ctx.uniform(-2.0, 2.0));
        }
        for (double x : shifts) {
            for (double e : exponents) {
                ctx.add([p, f, x, e, q, exponent_input] {
                    const NormSpec spec = NormSpec::of(e);
                    return one(bound_case("trans_bound", with_params(p, {{"x", x}, {"p", exponent_input(e)}}),
                                          lp_norm(p, translated(p, f, x, q), spec, q), 4.0 * lp_norm(p, f, spec, q) + 1e-8));
                });
            }
        }
        ctx.add([p, q, exponent_input] {
            std::vector<CaseRecord> out;
            const Function1D conv = radial_interpolant(p, convolution(p, conv_f(), conv_g(), q));
            for (auto [a, b, c] : {std::tuple{1.0, 1.0, 1.0}, std::tuple{1.0, 2.0, 2.0},
                                   std::tuple{2.0, 2.0, std::numeric_limits<double>::infinity()}}) {
                const double lhs = lp_norm(p, conv, NormSpec::of(c), q);
                const double rhs =
                    4.0 * lp_norm(p, conv_f(), NormSpec::of(a), q) * lp_norm(p, conv_g(), NormSpec::of(b), q) + 1e-8;
                out.push_back(bound_case("young", with_params(p, {{"p", a}, {"q", b}, {"r", exponent_input(c)}}), lhs, rhs));
            }
            return out;
        });
        ctx.add([p, f, q, exponents, exponent_input] {
            std::vector<CaseRecord> out;
            for (double e : exponents) {
                const NormSpec spec = NormSpec::of(e);
                out.push_back(equality_case("scaling", with_params(p, {{"p", exponent_input(e)}, {"c", 3.0}}),
                                            lp_norm(p, scale(f, 3.0), spec, q), 3.0 * lp_norm(p, f, spec, q)));
                out.push_back(equality_case("zero", with_params(p, {{"p", exponent_input(e)}}),
                                            lp_norm(p, scale(f, 0.0), spec, q), 0.0));
            }
            return out;
        });
    }
}

// ---------------------------------------------------------------- registry

struct SuiteEntry {
    SuiteInfo info;
    Grid default_grid;
    std::function<void(Context&)> build;
};

const Grid kAcceptanceGrid{{1, 1.0}, {2, 0.8}, {3, 0.7}, {4, 0.6}};
// The acceptance sets plus one in the gap zone (n-1)/(2n) < kappa <= (n-1)/n.
const Grid kWithGapZone{{1, 1.0}, {2, 0.8}, {3, 0.7}, {4, 0.6}, {2, 0.45}};
const Grid kHarmonicGrid{{1, 1.0}, {2, 0.8}, {3, 0.7}};

const std::vector<SuiteEntry>& registry()
{
    static const std::vector<SuiteEntry> entries{
        {{"oracle", 1e-12, ErrorMetric::Relative, "double-precision Bessel and quadrature against the mpfr oracle", false},
         {},
         build_oracle},
        {{"bessel", 1e-11, ErrorMetric::Mixed, "closed forms, derivative, three-term relation and parity of j_alpha", false},
         {},
         build_bessel},
        {{"sonine", 1e-9, ErrorMetric::Absolute, "Bessel product formula and Sonine's integral", false}, {}, build_sonine},
        {{"th0", 1e-8, ErrorMetric::Absolute, "product formula for u^n j_{a+n}(u) j_a(v)", false}, {}, build_th0},
        {{"key1", 1e-8, ErrorMetric::Absolute, "Gegenbauer-weighted Bessel kernel integral", false}, {}, build_key1},
        {{"psi_ladder", 1e-6, ErrorMetric::Relative, "d/du psi_n = n psi_{n-1} by central differences", false},
         {},
         build_psi_ladder},
        {{"gegenbauer", 1e-10, ErrorMetric::Mixed, "Gegenbauer orthogonality, explicit sum, special values, bound", false},
         {},
         build_gegenbauer},
        {{"kernel_props", 1e-9, ErrorMetric::Mixed, "Bessel kernel mass and homogeneity, sigma, xi, kernel symmetries", true},
         kWithGapZone,
         build_kernel_props},
        {{"product_formula", 1e-7, ErrorMetric::Absolute, "B_lambda(x) B_lambda(y) = int B_lambda d nu_{x,y}", true},
         kAcceptanceGrid,
         build_product_formula},
        {{"measure_props", 1e-8, ErrorMetric::Absolute, "mass, total variation, support and sign of nu_{x,y}", true},
         kWithGapZone,
         build_measure_props},
        {{"transform_decomp", 1e-6, ErrorMetric::Relative, "direct transform against the Hankel-transform decomposition",
          true},
         {{1, 1.0}, {2, 0.9}, {3, 0.7}, {2, 0.45}},
         build_transform_decomp},
        {{"translation", 1e-9, ErrorMetric::Absolute, "translation operator: identity, symmetry, spectral action", true},
         kHarmonicGrid,
         build_translation},
        {{"convolution", 1e-7, ErrorMetric::Relative, "convolution: commutativity, support, convolution theorem", true},
         kHarmonicGrid,
         build_convolution},
        {{"operator_T", 1e-6, ErrorMetric::Absolute, "eigenrelation and symmetry of the operator T", true},
         kHarmonicGrid,
         build_operator_T},
        {{"lp_bounds", 1e-8, ErrorMetric::Absolute, "translation and Young bounds, norm scaling", true},
         kHarmonicGrid,
         build_lp_bounds},
    };
    return entries;
}

const SuiteEntry& entry(const std::string& name)
{
    for (const SuiteEntry& e : registry()) {
        if (e.info.name == name) {
            return e;
        }
    }
    std::string known;
    for (const SuiteEntry& e : registry()) {
        known += (known.empty() ? "" : ", ") + e.info.name;
    }
    throw DomainError("unknown suite '" + name + "' (known: " + known + ")");
}

std::vector<std::vector<CaseRecord>> run_tasks(const std::vector<Task>& tasks, int jobs)
{
    std::vector<std::vector<CaseRecord>> results(tasks.size());
    std::vector<std::exception_ptr> errors(tasks.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                results[i] = tasks[i]();
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    for (std::thread& t : pool) {
        t.join();
    }
    for (const std::exception_ptr& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return results;
}

} // namespace

const std::vector<SuiteInfo>& suite_catalog()
{
    static const std::vector<SuiteInfo> infos = [] {
        std::vector<SuiteInfo> out;
        for (const SuiteEntry& e : registry()) {
            out.push_back(e.info);
        }
        return out;
    }();
    return infos;
}

const SuiteInfo& suite_info(const std::string& name) { return entry(name).info; }

VerificationReport run_suite(const std::string& name, const RunOptions& opts)
{
    const SuiteEntry& e = entry(name);
    if (opts.jobs < 1) {
        throw DomainError("run_suite: jobs must be at least 1");
    }
    const auto start = std::chrono::steady_clock::now();

    Context ctx;
    ctx.quad = opts.config.quadrature;
    ctx.oracle = opts.config.oracle;
    ctx.rng.seed(opts.seed);
    if (e.info.takes_grid) {
        for (auto [n, kappa] : opts.grid.empty() ? e.default_grid : opts.grid) {
            ctx.params.push_back(make_params(n, kappa));
        }
    }
    e.build(ctx);

    VerificationReport report;
    report.suite = name;
    report.params = ctx.params;
    report.tolerance = opts.tolerance ? *opts.tolerance : opts.config.tolerance_for(name);
    if (!(report.tolerance > 0.0)) {
        throw DomainError("run_suite: tolerance must be positive");
    }
    report.seed = opts.seed;
    report.metric = e.info.metric;
    for (std::vector<CaseRecord>& batch : run_tasks(ctx.tasks, opts.jobs)) {
        std::move(batch.begin(), batch.end(), std::back_inserter(report.cases));
    }
    report.finalize();
    report.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::vector<VerificationReport> run_all(const RunOptions& opts)
{
    std::vector<VerificationReport> out;
    for (const SuiteInfo& s : suite_catalog()) {
        out.push_back(run_suite(s.name, opts));
    }
    return out;
}

} // namespace genhankel
