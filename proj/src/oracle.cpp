#include "genhankel/oracle.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "genhankel/error.hpp"

namespace genhankel {

void OracleConfig::validate() const
{
    if (precision_digits < 30 || precision_digits > kOracleWorkingDigits - 10) {
        throw DomainError("OracleConfig: precision_digits must lie in [30, " +
                          std::to_string(kOracleWorkingDigits - 10) + "]");
    }
    if (series_terms < 40) {
        throw DomainError("OracleConfig: series_terms must be at least 40");
    }
    if (integration_panels < 1 || integration_levels < 1 || integration_levels > 24) {
        throw DomainError("OracleConfig: integration_panels >= 1 and integration_levels in [1, 24] required");
    }
}

HighPrecision oracle_bessel_j(double alpha, double x, const OracleConfig& cfg)
{
    cfg.validate();
    if (!(alpha > -0.5)) {
        throw DomainError("oracle_bessel_j: alpha must exceed -1/2");
    }
    if (!std::isfinite(x)) {
        throw DomainError("oracle_bessel_j: x must be finite");
    }
    const HighPrecision a(alpha);
    const HighPrecision hx(x);
    const HighPrecision q = -(hx * hx) / 4;

    HighPrecision term(1);
    HighPrecision sum(1);
    HighPrecision largest(1);
    for (int k = 1; k < cfg.series_terms; ++k) {
        term *= q / (HighPrecision(k) * (a + k));
        sum += term;
        largest = std::max(largest, HighPrecision(abs(term)));
    }
    const int n = cfg.series_terms;
    const HighPrecision next = term * q / (HighPrecision(n) * (a + n));
    // The tail is alternating with decreasing magnitude once the term ratio
    // (x^2/4)/(k (alpha+k)) drops below 1 at k = n.
    const bool decreasing = (hx * hx) / 4 < HighPrecision(n) * (a + n);
    const HighPrecision target = pow(HighPrecision(10), -cfg.precision_digits);
    if (!decreasing || abs(next) > target * abs(sum)) {
        throw AccuracyError("oracle_bessel_j: " + std::to_string(cfg.series_terms) +
                            " terms do not certify the remainder at alpha = " + std::to_string(alpha) +
                            ", x = " + std::to_string(x));
    }
    // digits lost to cancellation among terms of size `largest`
    if (sum == 0 || log10(largest / abs(sum)) > kOracleWorkingDigits - cfg.precision_digits - 5) {
        throw AccuracyError("oracle_bessel_j: cancellation exceeds the working precision at x = " +
                            std::to_string(x));
    }
    return sum;
}

OracleIntegral oracle_integral(const HighPrecisionFn& f, double a, double b, const OracleConfig& cfg,
                               double tolerance)
{
    cfg.validate();
    if (!(a <= b)) {
        throw DomainError("oracle_integral: a must not exceed b");
    }
    if (a == b) {
        return {HighPrecision(0), HighPrecision(0), 0};
    }
    const HighPrecision lo(a);
    const HighPrecision width = HighPrecision(b) - lo;
    const auto midpoint = [&](long panels) -> HighPrecision {
        const HighPrecision h = width / panels;
        HighPrecision acc(0);
        for (long k = 0; k < panels; ++k) {
            acc += f(lo + (HighPrecision(k) + HighPrecision(0.5)) * h);
        }
        return acc * h;
    };

    // table[j] holds the level-i row of the Richardson tableau
    std::vector<HighPrecision> prev;
    long panels = cfg.integration_panels;
    HighPrecision previous_best(0);
    for (int level = 0; level <= cfg.integration_levels; ++level, panels *= 2) {
        std::vector<HighPrecision> row{midpoint(panels)};
        HighPrecision factor(4);
        for (std::size_t j = 1; j <= prev.size(); ++j) {
            row.push_back(row[j - 1] + (row[j - 1] - prev[j - 1]) / (factor - 1));
            factor *= 4;
        }
        const HighPrecision best = row.back();
        if (level >= 2) {
            const HighPrecision err = abs(best - previous_best);
            const HighPrecision scale = std::max(HighPrecision(1), HighPrecision(abs(best)));
            if (err <= tolerance * scale) {
                return {best, err, static_cast<int>(panels)};
            }
        }
        previous_best = best;
        prev = std::move(row);
    }
    throw AccuracyError("oracle_integral: no convergence after " + std::to_string(cfg.integration_levels) +
                        " panel doublings");
}

} // namespace genhankel
