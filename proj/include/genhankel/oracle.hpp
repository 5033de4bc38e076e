#ifndef GENHANKEL_ORACLE_HPP
#define GENHANKEL_ORACLE_HPP

#include <functional>

#include <boost/multiprecision/mpfr.hpp>

namespace genhankel {

/// 100 significant decimal digits of working precision.  Fixed at compile
/// time so concurrent oracle calls never share a mutable precision setting.
using HighPrecision = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<100>>;

inline constexpr int kOracleWorkingDigits = 100;

struct OracleConfig {
    int precision_digits = 40;    // certified relative accuracy, >= 30
    int series_terms = 60;        // power-series terms available, >= 40
    int integration_panels = 64;  // midpoint panels on the coarsest level
    int integration_levels = 14;  // panel doublings before giving up

    /// Throws DomainError when a field is out of range.
    void validate() const;
};

/// j_alpha(x) from its power series in extended precision.
///
/// After series_terms terms the first omitted term bounds the remainder (the
/// tail alternates with decreasing terms); it must fall below
/// 10^{-precision_digits} |sum|, and the digits lost to cancellation must
/// leave precision_digits intact.  Otherwise AccuracyError.
[[nodiscard]] HighPrecision oracle_bessel_j(double alpha, double x, const OracleConfig& cfg = {});

struct OracleIntegral {
    HighPrecision value;
    HighPrecision error_estimate;
    int panels = 0;
};

using HighPrecisionFn = std::function<HighPrecision(const HighPrecision&)>;

/// Composite midpoint sums on doubling panel counts, extrapolated with a
/// Richardson table in powers of h^2.  Stops when successive diagonal entries
/// agree to `tolerance` relative (absolute below magnitude 1); AccuracyError
/// after cfg.integration_levels doublings.  f must be smooth on [a, b];
/// singular weights are the caller's to substitute away.
[[nodiscard]] OracleIntegral oracle_integral(const HighPrecisionFn& f, double a, double b,
                                             const OracleConfig& cfg = {}, double tolerance = 1e-20);

} // namespace genhankel

#endif
