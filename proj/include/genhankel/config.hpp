#ifndef GENHANKEL_CONFIG_HPP
#define GENHANKEL_CONFIG_HPP

#include <map>
#include <string>

#include "genhankel/oracle.hpp"
#include "genhankel/quadrature.hpp"

namespace genhankel {

/// Settings shared by the verification suites: a default tolerance per
/// suite, quadrature parameters and oracle settings.
///
/// JSON layout (every key optional):
///   {"tolerances": {"th0": 1e-8, ...},
///    "quadrature": {"initial_order": 64, "max_order": 512, "tol": 1e-12, "abs_tol": 1e-15},
///    "oracle": {"precision_digits": 40, "series_terms": 60, "integration_panels": 64,
///               "integration_levels": 14}}
struct HarnessConfig {
    std::map<std::string, double> tolerances;
    QuadratureOptions quadrature;
    OracleConfig oracle;

    /// Tolerance for `suite`; DomainError for an unknown suite.
    [[nodiscard]] double tolerance_for(const std::string& suite) const;
};

[[nodiscard]] HarnessConfig default_config();

/// Overlays a JSON document on the defaults.  Unknown keys, wrong types and
/// out-of-range values are DomainErrors.
[[nodiscard]] HarnessConfig parse_config(const std::string& json_text);
[[nodiscard]] HarnessConfig load_config(const std::string& path);

} // namespace genhankel

#endif
