#include "genhankel/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "genhankel/error.hpp"
#include "genhankel/specfun.hpp"

namespace genhankel {

namespace {

constexpr double kSigmaClamp = 1e-12;

double sgn(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

double radius(double v, int n) { return n == 1 ? std::abs(v) : std::pow(std::abs(v), 1.0 / n); }

double clamp_sigma(double s)
{
    if (std::abs(s) <= 1.0) {
        return s;
    }
    if (std::abs(s) <= 1.0 + kSigmaClamp) {
        return s > 0.0 ? 1.0 : -1.0;
    }
    throw DomainError("xi: sigma = " + std::to_string(s) + " outside [-1, 1]");
}

// psi_n as a polynomial in p = u - v cos(phi) and q = delta^2:
// n!/(2a)_n sum_k (-1)^k 2^{n-2k} (a)_{n-k} / (k! (n-2k)!) p^{n-2k} q^k
double psi_poly(int n, double alpha, double p, double q)
{
    if (n == 0) {
        return 1.0;
    }
    double sum = 0.0;
    double kfact = 1.0;
    for (int k = 0; 2 * k <= n; ++k) {
        if (k > 0) {
            kfact *= k;
        }
        double nk_fact = 1.0;
        for (int i = 2; i <= n - 2 * k; ++i) {
            nk_fact *= i;
        }
        const double coeff = std::pow(2.0, n - 2 * k) * pochhammer(alpha, n - k) / (kfact * nk_fact);
        const double term = coeff * std::pow(p, n - 2 * k) * std::pow(q, k);
        sum += (k % 2 == 0) ? term : -term;
    }
    double nfact = 1.0;
    for (int i = 2; i <= n; ++i) {
        nfact *= i;
    }
    return nfact / pochhammer(2.0 * alpha, n) * sum;
}

// The density of nu_{x,y} on one sign branch, parametrized by u = 1 - cos(phi)
// so that the end phi = 0 keeps full precision: z = branch * delta^n with
// delta^2 = (a-b)^2 + 2ab u.  brace() is
// {1 + (-1)^n xi(x,y,z) + xi(z,x,y) + xi(y,z,x)}.
struct BranchGeometry {
    const Params& p;
    double x;
    double y;
    double a;
    double b;
    double branch;

    [[nodiscard]] double delta_at(double u) const
    {
        const double d2 = (a - b) * (a - b) + 2.0 * a * b * u;
        return std::sqrt(std::max(d2, 0.0));
    }

    [[nodiscard]] double z_at(double d) const { return branch * (p.n == 1 ? d : std::pow(d, p.n)); }

    [[nodiscard]] double brace(double u, double d) const
    {
        const auto norm_c = [&](double s) {
            return gegenbauer_normalized(static_cast<unsigned>(p.n), p.alpha, std::clamp(s, -1.0, 1.0));
        };
        // sigma_{x,y,z} = 1 - u; the law of cosines with d^2 substituted gives
        // the other two without cancellation.  Clamped silently: |sigma| <= 1
        // holds by the triangle inequality.  d = 0 only at a == b, u = 0,
        // where both ratios tend to 0.
        const double t = 1.0 - u;
        const double s2 = d == 0.0 ? 0.0 : ((a - b) + b * u) / d;
        const double s3 = d == 0.0 ? 0.0 : ((b - a) + a * u) / d;
        const double xi1 = sgn(x * y) * norm_c(t);
        const double xi2 = branch * sgn(x) * norm_c(s2);
        const double xi3 = branch * sgn(y) * norm_c(s3);
        const double parity = (p.n % 2 == 0) ? 1.0 : -1.0;
        return 1.0 + parity * xi1 + xi2 + xi3;
    }

    [[nodiscard]] double u_of_radius(double d) const { return (d - (a - b)) * (d + (a - b)) / (2.0 * a * b); }
};

Grading grading_for(double a, double b)
{
    const double eps = (a - b) * (a - b) / (2.0 * a * b);
    if (eps < 0.5) {
        return {Grading::Side::Left, eps};
    }
    return {};
}

// Sign changes of the brace along u in (0, 2), located by sampling in phi
// and bisection.  When |x|^{1/n} and |y|^{1/n} nearly coincide the brace
// varies on a scale ~ (a-b)^2/(2ab) in u, so phi is also sampled
// geometrically toward 0.  Two roots closer than the sample spacing show up
// as a local extremum of |brace|; a golden-section search on the extremum
// separates them, and an extremum that does not cross zero is returned as a
// break as well.
std::vector<double> brace_roots(const BranchGeometry& g)
{
    constexpr int samples = 512;
    const auto value = [&](double phi) {
        const double s = std::sin(0.5 * phi);
        const double u = 2.0 * s * s;
        return g.brace(u, g.delta_at(u));
    };
    const auto to_u = [](double phi) {
        const double s = std::sin(0.5 * phi);
        return 2.0 * s * s;
    };
    std::vector<double> phis{0.0};
    for (int k = 1; k <= samples; ++k) {
        phis.push_back(M_PI * k / samples);
    }
    const double eps = (g.a - g.b) * (g.a - g.b) / (2.0 * g.a * g.b);
    const double phi_min = std::max(0.1 * std::sqrt(eps), 1e-150);
    for (double phi = 0.9 * M_PI / samples; phi > phi_min; phi *= 0.9) {
        phis.push_back(phi);
    }
    std::sort(phis.begin(), phis.end());
    std::vector<double> vals(phis.size());
    for (std::size_t i = 0; i < phis.size(); ++i) {
        vals[i] = value(phis[i]);
    }

    std::vector<double> roots;
    const auto bisect = [&](double lo, double hi) {
        const bool lo_neg = value(lo) < 0.0;
        for (int it = 0; it < 60; ++it) {
            const double mid = 0.5 * (lo + hi);
            if ((value(mid) < 0.0) == lo_neg) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        roots.push_back(to_u(0.5 * (lo + hi)));
    };
    for (std::size_t i = 1; i < phis.size(); ++i) {
        if ((vals[i - 1] < 0.0) != (vals[i] < 0.0)) {
            bisect(phis[i - 1], phis[i]);
        }
    }
    for (std::size_t i = 1; i + 1 < phis.size(); ++i) {
        const double m = std::abs(vals[i]);
        const bool same_sign = (vals[i - 1] < 0.0) == (vals[i] < 0.0) && (vals[i + 1] < 0.0) == (vals[i] < 0.0);
        if (!same_sign || !(m < std::abs(vals[i - 1]) && m <= std::abs(vals[i + 1]))) {
            continue;
        }
        // minimize |brace| with the sign of the samples, allowing it to cross
        const double sign = vals[i] < 0.0 ? -1.0 : 1.0;
        const auto h = [&](double phi) { return sign * value(phi); };
        double lo = phis[i - 1];
        double hi = phis[i + 1];
        const double r = 0.5 * (std::sqrt(5.0) - 1.0);
        double c = hi - r * (hi - lo);
        double d = lo + r * (hi - lo);
        double hc = h(c);
        double hd = h(d);
        for (int it = 0; it < 80 && hc >= 0.0 && hd >= 0.0; ++it) {
            if (hc < hd) {
                hi = d;
                d = c;
                hd = hc;
                c = hi - r * (hi - lo);
                hc = h(c);
            } else {
                lo = c;
                c = d;
                hc = hd;
                d = lo + r * (hi - lo);
                hd = h(d);
            }
        }
        const double dip = hc < hd ? c : d;
        if (h(dip) < 0.0) {
            bisect(phis[i - 1], dip);
            bisect(dip, phis[i + 1]);
        } else {
            // a near miss is still a sharp feature of |brace|
            roots.push_back(to_u(dip));
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::string where(double x, double y, const char* what)
{
    char buf[96];
    std::snprintf(buf, sizeof buf, " (%s at x = %.17g, y = %.17g)", what, x, y);
    return buf;
}

} // namespace

GeomArgs geom_args(double u, double v, double phi)
{
    GeomArgs g{u, v, phi, 0.0, delta(u, v, phi)};
    g.w = g.delta;
    return g;
}

double delta(double u, double v, double phi)
{
    // (u-v)^2 + 4uv sin^2(phi/2) avoids cancellation near phi = 0.
    const double s = std::sin(0.5 * phi);
    return std::sqrt((u - v) * (u - v) + 4.0 * u * v * s * s);
}

double k_bessel(double alpha, double u, double v, double w)
{
    if (!(alpha > -0.5)) {
        throw DomainError("k_bessel: alpha must exceed -1/2");
    }
    if (!(u > 0.0 && v > 0.0 && w > 0.0)) {
        throw DomainError("k_bessel: u, v, w must be positive");
    }
    const double diff = std::abs(u - v);
    const double sum = u + v;
    if (w < diff || w > sum) {
        return 0.0;
    }
    const double bracket = (sum - w) * (sum + w) * (w - diff) * (w + diff);
    return std::pow(2.0, 1.0 - 2.0 * alpha) * sonine_constant(alpha) * std::pow(bracket, alpha - 0.5) /
           std::pow(u * v * w, 2.0 * alpha);
}

double sigma(double x, double y, double z, int n)
{
    if (x == 0.0 || y == 0.0) {
        throw DomainError("sigma: x and y must be nonzero");
    }
    if (n < 1) {
        throw DomainError("sigma: n must be positive");
    }
    const double e = 2.0 / n;
    return (std::pow(std::abs(x), e) + std::pow(std::abs(y), e) - std::pow(std::abs(z), e)) /
           (2.0 * std::pow(std::abs(x * y), 1.0 / n));
}

double xi(const Params& p, double x, double y, double z)
{
    const double s = clamp_sigma(sigma(x, y, z, p.n));
    return sgn(x * y) * gegenbauer_normalized(static_cast<unsigned>(p.n), p.alpha, s);
}

double psi(int n, double alpha, double u, double v, double phi)
{
    if (n < 0) {
        throw DomainError("psi: n must be nonnegative");
    }
    if (n > 0 && !(alpha > 0.0)) {
        throw DomainError("psi: alpha must be positive");
    }
    const double c = std::cos(phi);
    const double d = delta(u, v, phi);
    return psi_poly(n, alpha, u - v * c, d * d);
}

bool in_support(const Params& p, double x, double y, double z)
{
    const double a = radius(x, p.n);
    const double b = radius(y, p.n);
    const double c = radius(z, p.n);
    return std::abs(a - b) < c && c < a + b;
}

double kernel_K(const Params& p, double x, double y, double z)
{
    if (x == 0.0 || y == 0.0) {
        throw DomainError("kernel_K: x and y must be nonzero");
    }
    if (z == 0.0 || !in_support(p, x, y, z)) {
        return 0.0;
    }
    const double parity = (p.n % 2 == 0) ? 1.0 : -1.0;
    const double brace = 1.0 + parity * xi(p, x, y, z) + xi(p, z, x, y) + xi(p, y, z, x);
    return p.M / (2.0 * p.n) * k_bessel(p.alpha, radius(x, p.n), radius(y, p.n), radius(z, p.n)) * brace;
}

MeasureNu::MeasureNu(const Params& p, double x, double y)
    : p_(p), x_(x), y_(y),
      kind_(y == 0.0 ? MeasureCase::PointMassAtX : (x == 0.0 ? MeasureCase::PointMassAtY : MeasureCase::KernelDensity))
{
}

double MeasureNu::density(double z) const
{
    return kind_ == MeasureCase::KernelDensity ? kernel_K(p_, x_, y_, z) : 0.0;
}

std::pair<double, double> MeasureNu::support_radii() const
{
    const double a = radius(x_, p_.n);
    const double b = radius(y_, p_.n);
    switch (kind_) {
    case MeasureCase::PointMassAtX:
        return {a, a};
    case MeasureCase::PointMassAtY:
        return {b, b};
    case MeasureCase::KernelDensity:
        break;
    }
    return {std::abs(a - b), a + b};
}

Complex MeasureNu::integrate(const Function1D& f, const QuadratureOptions& opts) const
{
    if (kind_ == MeasureCase::PointMassAtX) {
        return f(x_);
    }
    if (kind_ == MeasureCase::PointMassAtY) {
        return f(y_);
    }
    const double a = radius(x_, p_.n);
    const double b = radius(y_, p_.n);
    const double beta = p_.alpha - 0.5;
    const Grading grading = grading_for(a, b);
    const std::vector<double> singular = f.singular_points();

    // Both sign branches share u, so they are integrated as one sum; the
    // relative tolerance then applies to the total rather than to a branch
    // that may nearly cancel on its own.
    const BranchGeometry geo[2] = {{p_, x_, y_, a, b, 1.0}, {p_, x_, y_, a, b, -1.0}};
    bool active[2] = {false, false};
    double u_lo = 2.0;
    double u_hi = 0.0;
    std::vector<double> breaks;
    for (int k = 0; k < 2; ++k) {
        const BranchGeometry& g = geo[k];
        // |z| range of f's support on this branch
        const double zmin = g.branch > 0.0 ? std::max(f.support_lo, 0.0) : std::max(-f.support_hi, 0.0);
        const double zmax = g.branch > 0.0 ? f.support_hi : -f.support_lo;
        if (!(zmax > zmin)) {
            continue;
        }
        const double lo = g.u_of_radius(radius(zmin, p_.n));
        const double hi = std::isfinite(zmax) ? g.u_of_radius(radius(zmax, p_.n)) : 3.0;
        if (hi <= 0.0 || lo >= 2.0) {
            continue;
        }
        active[k] = true;
        u_lo = std::min(u_lo, lo);
        u_hi = std::max(u_hi, hi);
        for (double e : singular) {
            if (e * g.branch > 0.0) {
                const double u = g.u_of_radius(radius(e, p_.n));
                if (u > 0.0 && u < 2.0) {
                    breaks.push_back(u);
                }
            }
        }
    }
    if (!active[0] && !active[1]) {
        return {};
    }
    const auto integrand = [&](double u) {
        const double d = geo[0].delta_at(u);
        Complex sum{};
        for (int k = 0; k < 2; ++k) {
            if (!active[k]) {
                continue;
            }
            const double br = geo[k].brace(u, d);
            if (br != 0.0) {
                sum += f(geo[k].z_at(d)) * br;
            }
        }
        return sum;
    };
    Complex total{};
    try {
        total = integrate_weighted(integrand, 0.0, 2.0, beta, beta, breaks, grading, opts, u_lo, u_hi);
    } catch (const AccuracyError& e) {
        throw AccuracyError(e.what() + where(x_, y_, "nu_integrate"));
    }
    return 0.5 * p_.C_alpha * total;
}

double MeasureNu::total_variation(const QuadratureOptions& opts) const
{
    if (kind_ != MeasureCase::KernelDensity) {
        return 1.0;
    }
    const double a = radius(x_, p_.n);
    const double b = radius(y_, p_.n);
    const double beta = p_.alpha - 0.5;
    const Grading grading = grading_for(a, b);
    double total = 0.0;
    for (const double branch : {1.0, -1.0}) {
        const BranchGeometry g{p_, x_, y_, a, b, branch};
        const std::vector<double> roots = brace_roots(g);
        try {
            total += integrate_weighted([&](double u) { return std::abs(g.brace(u, g.delta_at(u))); }, 0.0, 2.0, beta,
                                        beta, roots, grading, opts);
        } catch (const AccuracyError& e) {
            throw AccuracyError(e.what() + where(x_, y_, "total_variation"));
        }
    }
    return 0.5 * p_.C_alpha * total;
}

Complex nu_integrate(const Params& p, double x, double y, const Function1D& f, const QuadratureOptions& opts)
{
    return MeasureNu(p, x, y).integrate(f, opts);
}

double nu_total_variation(const Params& p, double x, double y, const QuadratureOptions& opts)
{
    return MeasureNu(p, x, y).total_variation(opts);
}

ResidualRecord make_residual(double lhs, double rhs)
{
    const double abs_err = std::abs(lhs - rhs);
    const double denom = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
    return {lhs, rhs, abs_err, abs_err / denom};
}

ResidualRecord check_th0(double alpha, int n, double u, double v, const QuadratureOptions& opts)
{
    if (n < 0) {
        throw DomainError("check_th0: n must be nonnegative");
    }
    if (n == 0 ? !(alpha > -0.5) : !(alpha > 0.0)) {
        throw DomainError("check_th0: alpha out of range");
    }
    if (u < 0.0 || v < 0.0) {
        throw DomainError("check_th0: u, v must be nonnegative");
    }
    const double lhs = std::pow(u, n) * bessel_j_norm(alpha + n, u) * bessel_j_norm(alpha, v);
    const auto integrand = [&](double t) {
        const double q = (u - v) * (u - v) + 2.0 * u * v * (1.0 - t);
        const double d = std::sqrt(std::max(q, 0.0));
        return bessel_j_norm(alpha + n, d) * psi_poly(n, alpha, u - v * t, q);
    };
    const double rhs = sonine_constant(alpha) * integrate_gegenbauer_weight(integrand, alpha - 0.5, {}, {}, opts);
    return make_residual(lhs, rhs);
}

ResidualRecord check_key1(double alpha, int n, double u, double v, const QuadratureOptions& opts)
{
    if (n < 0) {
        throw DomainError("check_key1: n must be nonnegative");
    }
    if (n == 0 ? !(alpha > -0.5) : !(alpha > 0.0)) {
        throw DomainError("check_key1: alpha out of range");
    }
    if (!(u > 0.0 && v > 0.0)) {
        throw DomainError("check_key1: u, v must be positive");
    }
    const double lhs = std::pow(u * v, n) / std::pow(4.0, n) * bessel_j_norm(alpha + n, u) *
                       bessel_j_norm(alpha + n, v);
    // (u^2 + v^2 - w^2)/(2uv) = cos(phi) = t under w = delta(u, v, phi)
    const auto integrand = [&](double t) {
        const double q = (u - v) * (u - v) + 2.0 * u * v * (1.0 - t);
        const double c = n == 0 ? 1.0 : gegenbauer(static_cast<unsigned>(n), alpha, t);
        return bessel_j_norm(alpha, std::sqrt(std::max(q, 0.0))) * c;
    };
    double factor = sonine_constant(alpha);
    if (n > 0) {
        double nfact = 1.0;
        for (int i = 2; i <= n; ++i) {
            nfact *= i;
        }
        const double rising = pochhammer(alpha + 1.0, static_cast<unsigned>(n));
        factor *= nfact * rising * rising / pochhammer(2.0 * alpha, static_cast<unsigned>(n));
    }
    const double rhs = factor * integrate_gegenbauer_weight(integrand, alpha - 0.5, {}, {}, opts);
    return make_residual(lhs, rhs);
}

ResidualRecord check_sonine_integral(double alpha, double beta, double x, const QuadratureOptions& opts)
{
    if (!(beta > -0.5) || !(alpha > beta)) {
        throw DomainError("check_sonine_integral: -1/2 < beta < alpha required");
    }
    const double lhs = bessel_j_norm(alpha, x);
    const double c = std::exp(std::lgamma(alpha + 1.0) - std::lgamma(beta + 1.0) - std::lgamma(alpha - beta));
    const auto integrand = [&](double s) { return bessel_j_norm(beta, x * std::sqrt(s)); };
    const double rhs = c * integrate_weighted(integrand, 0.0, 1.0, beta, alpha - beta - 1.0, {}, {}, opts);
    return make_residual(lhs, rhs);
}

double bessel_kernel_mass(double alpha, double u, double v, const QuadratureOptions& opts)
{
    if (!(u > 0.0 && v > 0.0)) {
        throw DomainError("bessel_kernel_mass: u, v must be positive");
    }
    const double beta = alpha - 0.5;
    const auto integrand = [&](double t) {
        const double w = std::sqrt((u - v) * (u - v) + 2.0 * u * v * (1.0 - t));
        // the weight (1-t^2)^{alpha-1/2} is taken out of K_B and given to the rule
        return k_bessel(alpha, u, v, w) * std::pow(w, 2.0 * alpha) * u * v / std::pow(1.0 - t * t, beta);
    };
    return integrate_gegenbauer_weight(integrand, beta, {}, {}, opts);
}

} // namespace genhankel
