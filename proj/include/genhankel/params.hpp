#ifndef GENHANKEL_PARAMS_HPP
#define GENHANKEL_PARAMS_HPP

namespace genhankel {

/// Parameter pair (n, kappa) of the generalized Hankel transform together with
/// the derived quantities every other module needs.
///
/// alpha   = kappa*n - n/2          (Bessel index of the even part)
/// M       = 2 (2/n)^alpha Gamma(alpha+1)   (normalization of mu_{kappa,n})
/// C_alpha = Gamma(alpha+1) / (sqrt(pi) Gamma(alpha+1/2))
///
/// Construct through make_params(); it enforces kappa > (n-1)/(2n).
struct Params {
    int n = 1;
    double kappa = 1.0;
    double alpha = 0.5;
    double M = 0.0;
    double C_alpha = 0.0;

    /// True when kappa > (n-1)/n, the stronger hypothesis under which the
    /// decomposition and translation propositions are stated.
    [[nodiscard]] bool strong_regime() const noexcept;
};

/// Throws DomainError when n < 1 or kappa <= (n-1)/(2n).
[[nodiscard]] Params make_params(int n, double kappa);

/// C_alpha = Gamma(alpha+1) / (sqrt(pi) Gamma(alpha+1/2)), alpha > -1/2.
[[nodiscard]] double sonine_constant(double alpha);

} // namespace genhankel

#endif
