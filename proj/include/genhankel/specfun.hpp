#ifndef GENHANKEL_SPECFUN_HPP
#define GENHANKEL_SPECFUN_HPP

namespace genhankel {

/// |x| beyond which bessel_j_norm refuses to evaluate.
inline constexpr double kBesselMaxArgument = 100.0;
/// Largest Bessel index accepted by bessel_j_norm.
inline constexpr double kBesselMaxOrder = 60.0;
/// Below this |x| the power series is used; above it, Miller's algorithm.
inline constexpr double kBesselSeriesSwitch = 2.0;
/// Largest Gegenbauer degree accepted before signalling an accuracy error.
inline constexpr unsigned kGegenbauerMaxDegree = 200;

/// Gamma function; DomainError at the poles.
[[nodiscard]] double gamma_fn(double x);

/// Rising factorial (a)_m = a (a+1) ... (a+m-1) = Gamma(a+m)/Gamma(a).
/// DomainError when a factor vanishes (Gamma(a) has a pole there).
[[nodiscard]] double pochhammer(double a, unsigned m);

/// Normalized Bessel function j_alpha(x) = Gamma(alpha+1) (x/2)^{-alpha} J_alpha(x).
///
/// Even in x, j_alpha(0) = 1.  For |x| <= kBesselSeriesSwitch the power series
/// sum_k (-x^2/4)^k / (k! (alpha+1)_k) is summed with compensation; above it
/// the ratios J_{alpha+m}/J_alpha come from Miller's backward recurrence and
/// are normalized with the Neumann sum
///     (x/2)^alpha = sum_k (alpha+2k) Gamma(alpha+k)/k! J_{alpha+2k}(x),
/// which avoids the cancellation the series suffers for large |x|.
///
/// DomainError for alpha <= -1/2, AccuracyError outside the validated region
/// |x| <= kBesselMaxArgument, alpha <= kBesselMaxOrder.
[[nodiscard]] double bessel_j_norm(double alpha, double x);

/// Gegenbauer polynomial C_m^alpha(t) by forward three-term recurrence, alpha > 0.
[[nodiscard]] double gegenbauer(unsigned m, double alpha, double t);

/// m!/(2 alpha)_m * C_m^alpha(t), i.e. C_m^alpha(t)/C_m^alpha(1).
///
/// Uses the recurrence of the normalized family, which stays finite for
/// alpha in (-1/2, 0] (Chebyshev limit at alpha = 0).
[[nodiscard]] double gegenbauer_normalized(unsigned m, double alpha, double t);

} // namespace genhankel

#endif
