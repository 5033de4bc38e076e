#ifndef GENHANKEL_REPORT_HPP
#define GENHANKEL_REPORT_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "genhankel/function.hpp"
#include "genhankel/params.hpp"

namespace genhankel {

enum class ErrorMetric { Absolute, Relative, Mixed };

/// Equality: lhs should equal rhs.  Bound: lhs <= rhs, the error is the
/// excess.  Strict: lhs < rhs; a violation is scored 1 + (lhs - rhs).  Any
/// slack belongs in rhs, so a violated bound or strict case fails the report
/// whatever the tolerance.
enum class CaseKind { Equality, Bound, Strict };

[[nodiscard]] const char* to_string(ErrorMetric m);
[[nodiscard]] const char* to_string(CaseKind k);
[[nodiscard]] ErrorMetric parse_metric(const std::string& name);

using Inputs = std::vector<std::pair<std::string, double>>;

struct CaseRecord {
    std::string check;
    CaseKind kind = CaseKind::Equality;
    Inputs inputs;
    Complex lhs;
    Complex rhs;
    double abs_err = 0.0;
    double rel_err = 0.0;
    // Equality cases whose quantity is inherently less accurate (a nested
    // integral, a finite difference) are compared against tolerance * tol_scale.
    double tol_scale = 1.0;
};

/// Returns `c` with its tolerance scale set.
[[nodiscard]] CaseRecord scaled(CaseRecord c, double tol_scale);

[[nodiscard]] CaseRecord equality_case(std::string check, Inputs inputs, Complex lhs, Complex rhs);
[[nodiscard]] CaseRecord bound_case(std::string check, Inputs inputs, double value, double bound);
[[nodiscard]] CaseRecord strict_case(std::string check, Inputs inputs, double value, double bound);

/// |lhs - rhs| / max(1, |lhs|, |rhs|).
[[nodiscard]] double mixed_error(const CaseRecord& c);

/// The case's error under `metric` (bound cases always use the excess).
[[nodiscard]] double case_error(const CaseRecord& c, ErrorMetric metric);

struct VerificationReport {
    std::string suite;
    std::vector<Params> params;
    double tolerance = 0.0;
    std::uint64_t seed = 0;
    ErrorMetric metric = ErrorMetric::Absolute;
    std::vector<CaseRecord> cases;
    double max_abs_err = 0.0;
    double max_rel_err = 0.0;
    double max_error = 0.0; // max over equality cases of error / tol_scale under `metric`
    bool pass = false;
    std::int64_t runtime_ms = 0;

    /// Fills the maxima and `pass`: nonempty, all errors finite,
    /// max_error <= tolerance, and every bound and strict case satisfied.
    void finalize();
};

/// JSON with the keys suite, params, tolerance, seed, metric, cases,
/// max_abs_err, max_rel_err, max_error, pass, runtime_ms; numbers printed
/// with 17 significant digits.  Each params entry lists n, kappa, alpha and
/// strong_regime.
void write_json(std::ostream& out, const VerificationReport& r);
[[nodiscard]] std::string to_json(const VerificationReport& r);

/// Several reports as {"reports": [...], "pass": all-pass}.
void write_json(std::ostream& out, const std::vector<VerificationReport>& rs);

} // namespace genhankel

#endif
