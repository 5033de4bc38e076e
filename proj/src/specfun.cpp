#include "genhankel/specfun.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "genhankel/error.hpp"

namespace genhankel {

namespace {

// Neumaier-compensated running sum.
struct CompensatedSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double v)
    {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v)) {
            carry += (sum - t) + v;
        } else {
            carry += (v - t) + sum;
        }
        sum = t;
    }
    [[nodiscard]] double value() const { return sum + carry; }
};

double bessel_series(double alpha, double x)
{
    const double q = -0.25 * x * x;
    CompensatedSum s;
    s.add(1.0);
    double term = 1.0;
    for (int k = 1; k < 500; ++k) {
        term *= q / (k * (alpha + k));
        s.add(term);
        if (std::abs(term) < 1e-17 * std::abs(s.value())) {
            return s.value();
        }
    }
    throw AccuracyError("bessel_j_norm: power series did not converge");
}

// Extended (x87) precision for the recurrence: near a zero of J_alpha the
// result is a difference of terms of the envelope's size, and the extra bits
// keep the relative error there near double rounding.
double bessel_miller(double alpha, double x)
{
    using Wide = long double;
    int top = static_cast<int>(std::ceil(x + 8.0 * std::sqrt(x) + 25.0));
    top += top % 2;

    // ys[m] is proportional to J_{alpha+m}(x).
    std::vector<Wide> ys(static_cast<std::size_t>(top) + 1, 0.0L);
    const Wide a = alpha;
    const Wide wx = x;
    Wide above = 0.0L;
    Wide cur = 1e-280L;
    ys[top] = cur;
    for (int m = top; m > 0; --m) {
        const Wide below = 2.0L * (a + m) / wx * cur - above;
        above = cur;
        cur = below;
        ys[m - 1] = cur;
        if (std::abs(cur) > 1e250L) {
            for (int i = m - 1; i <= top; ++i) {
                ys[i] *= 1e-250L;
            }
            above *= 1e-250L;
            cur *= 1e-250L;
        }
    }

    // j_alpha = y_0 / (y_0 + sum_{k>=1} (alpha+2k) d_k y_{2k}),  d_k = (alpha+1)_{k-1}/k!
    Wide norm = ys[0];
    Wide d = 1.0L;
    for (int k = 1; 2 * k <= top; ++k) {
        if (k > 1) {
            d *= (a + k - 1) / k;
        }
        norm += (a + 2.0L * k) * d * ys[2 * k];
    }
    return static_cast<double>(ys[0] / norm);
}

} // namespace

double gamma_fn(double x)
{
    if (x <= 0.0 && x == std::nearbyint(x)) {
        throw DomainError("gamma_fn: pole at nonpositive integer " + std::to_string(x));
    }
    return std::tgamma(x);
}

double pochhammer(double a, unsigned m)
{
    double r = 1.0;
    for (unsigned k = 0; k < m; ++k) {
        const double f = a + k;
        if (f == 0.0) {
            throw DomainError("pochhammer: Gamma(a) pole, a = " + std::to_string(a));
        }
        r *= f;
    }
    return r;
}

double bessel_j_norm(double alpha, double x)
{
    if (!(alpha > -0.5)) {
        throw DomainError("bessel_j_norm: alpha must exceed -1/2");
    }
    const double ax = std::abs(x);
    if (!(ax <= kBesselMaxArgument) || alpha > kBesselMaxOrder) {
        throw AccuracyError("bessel_j_norm: (alpha, x) = (" + std::to_string(alpha) + ", " + std::to_string(x) +
                            ") outside the validated region");
    }
    if (ax == 0.0) {
        return 1.0;
    }
    if (ax <= kBesselSeriesSwitch) {
        return bessel_series(alpha, ax);
    }
    return bessel_miller(alpha, ax);
}

double gegenbauer(unsigned m, double alpha, double t)
{
    if (!(alpha > 0.0)) {
        throw DomainError("gegenbauer: alpha must be positive");
    }
    if (m > kGegenbauerMaxDegree) {
        throw AccuracyError("gegenbauer: degree above kGegenbauerMaxDegree");
    }
    if (m == 0) {
        return 1.0;
    }
    double prev = 1.0;
    double cur = 2.0 * alpha * t;
    for (unsigned k = 2; k <= m; ++k) {
        const double next = (2.0 * (k + alpha - 1.0) * t * cur - (k + 2.0 * alpha - 2.0) * prev) / k;
        prev = cur;
        cur = next;
    }
    return cur;
}

double gegenbauer_normalized(unsigned m, double alpha, double t)
{
    if (!(alpha > -0.5)) {
        throw DomainError("gegenbauer_normalized: alpha must exceed -1/2");
    }
    if (m > kGegenbauerMaxDegree) {
        throw AccuracyError("gegenbauer_normalized: degree above kGegenbauerMaxDegree");
    }
    if (m == 0) {
        return 1.0;
    }
    // (2 alpha + k - 1) R_k = 2 (k + alpha - 1) t R_{k-1} - (k - 1) R_{k-2}
    double prev = 1.0;
    double cur = t;
    for (unsigned k = 2; k <= m; ++k) {
        const double next = (2.0 * (k + alpha - 1.0) * t * cur - (k - 1.0) * prev) / (2.0 * alpha + k - 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

} // namespace genhankel
