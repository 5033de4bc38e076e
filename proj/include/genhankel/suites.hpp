#ifndef GENHANKEL_SUITES_HPP
#define GENHANKEL_SUITES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "genhankel/config.hpp"
#include "genhankel/report.hpp"

namespace genhankel {

struct SuiteInfo {
    std::string name;
    double default_tolerance = 0.0;
    ErrorMetric metric = ErrorMetric::Absolute;
    std::string description;
    /// Whether the suite sweeps an (n, kappa) grid that RunOptions::grid replaces.
    bool takes_grid = false;
};

/// Every suite in execution order.
[[nodiscard]] const std::vector<SuiteInfo>& suite_catalog();
[[nodiscard]] const SuiteInfo& suite_info(const std::string& name);

struct RunOptions {
    std::optional<double> tolerance; // overrides the configured per-suite tolerance
    std::uint64_t seed = 42;
    int jobs = 1;
    /// (n, kappa) pairs replacing a grid suite's default parameter sets.
    std::vector<std::pair<int, double>> grid;
    HarnessConfig config = default_config();
};

/// Runs one suite.  Cases are generated serially from the seed and evaluated
/// on `jobs` threads; the report lists them in generation order, so equal
/// options give equal reports apart from runtime_ms.
///
/// DomainError for an unknown name or a bad grid; AccuracyError propagates
/// from the first case (in order) whose quadrature failed.
[[nodiscard]] VerificationReport run_suite(const std::string& name, const RunOptions& opts = {});
[[nodiscard]] std::vector<VerificationReport> run_all(const RunOptions& opts = {});

} // namespace genhankel

#endif
