#include "genhankel/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "genhankel/error.hpp"

namespace genhankel {

namespace {

std::string number(double v)
{
    if (!std::isfinite(v)) {
        // JSON has no infinities; null marks a value that did not compute.
        return "null";
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string quoted(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
        case '"':
            out += "\\\"";
            break;
        case '\\':
            out += "\\\\";
            break;
        case '\n':
            out += "\\n";
            break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", c);
                out += buf;
            } else {
                out += c;
            }
        }
    }
    return out + "\"";
}

void write_report(std::ostream& out, const VerificationReport& r, const std::string& indent)
{
    const std::string in1 = indent + "  ";
    const std::string in2 = in1 + "  ";
    out << "{\n";
    out << in1 << "\"suite\": " << quoted(r.suite) << ",\n";
    out << in1 << "\"params\": [";
    for (std::size_t k = 0; k < r.params.size(); ++k) {
        const Params& p = r.params[k];
        out << (k ? ", " : "") << "{\"n\": " << p.n << ", \"kappa\": " << number(p.kappa)
            << ", \"alpha\": " << number(p.alpha) << ", \"strong_regime\": " << (p.strong_regime() ? "true" : "false")
            << "}";
    }
    out << "],\n";
    out << in1 << "\"tolerance\": " << number(r.tolerance) << ",\n";
    out << in1 << "\"seed\": " << r.seed << ",\n";
    out << in1 << "\"metric\": " << quoted(to_string(r.metric)) << ",\n";
    out << in1 << "\"cases\": [";
    for (std::size_t k = 0; k < r.cases.size(); ++k) {
        const CaseRecord& c = r.cases[k];
        out << (k ? ",\n" : "\n") << in2 << "{\"check\": " << quoted(c.check) << ", \"kind\": " << quoted(to_string(c.kind))
            << ", \"inputs\": {";
        for (std::size_t i = 0; i < c.inputs.size(); ++i) {
            out << (i ? ", " : "") << quoted(c.inputs[i].first) << ": " << number(c.inputs[i].second);
        }
        out << "}, \"lhs\": " << number(c.lhs.real()) << ", \"lhs_im\": " << number(c.lhs.imag())
            << ", \"rhs\": " << number(c.rhs.real()) << ", \"rhs_im\": " << number(c.rhs.imag())
            << ", \"abs_err\": " << number(c.abs_err) << ", \"rel_err\": " << number(c.rel_err)
            << ", \"tol_scale\": " << number(c.tol_scale) << "}";
    }
    out << (r.cases.empty() ? "],\n" : "\n" + in1 + "],\n");
    out << in1 << "\"max_abs_err\": " << number(r.max_abs_err) << ",\n";
    out << in1 << "\"max_rel_err\": " << number(r.max_rel_err) << ",\n";
    out << in1 << "\"max_error\": " << number(r.max_error) << ",\n";
    out << in1 << "\"pass\": " << (r.pass ? "true" : "false") << ",\n";
    out << in1 << "\"runtime_ms\": " << r.runtime_ms << "\n";
    out << indent << "}";
}

} // namespace

const char* to_string(ErrorMetric m)
{
    switch (m) {
    case ErrorMetric::Absolute:
        return "abs";
    case ErrorMetric::Relative:
        return "rel";
    case ErrorMetric::Mixed:
        return "mixed";
    }
    return "abs";
}

const char* to_string(CaseKind k)
{
    switch (k) {
    case CaseKind::Equality:
        return "equality";
    case CaseKind::Bound:
        return "bound";
    case CaseKind::Strict:
        return "strict";
    }
    return "equality";
}

ErrorMetric parse_metric(const std::string& name)
{
    if (name == "abs") {
        return ErrorMetric::Absolute;
    }
    if (name == "rel") {
        return ErrorMetric::Relative;
    }
    if (name == "mixed") {
        return ErrorMetric::Mixed;
    }
    throw DomainError("unknown error metric '" + name + "' (expected abs, rel or mixed)");
}

CaseRecord equality_case(std::string check, Inputs inputs, Complex lhs, Complex rhs)
{
    CaseRecord c{std::move(check), CaseKind::Equality, std::move(inputs), lhs, rhs, 0.0, 0.0, 1.0};
    c.abs_err = std::abs(lhs - rhs);
    c.rel_err = c.abs_err / std::max({std::abs(lhs), std::abs(rhs), 1e-300});
    return c;
}

CaseRecord bound_case(std::string check, Inputs inputs, double value, double bound)
{
    CaseRecord c{std::move(check), CaseKind::Bound, std::move(inputs), value, bound, 0.0, 0.0, 1.0};
    c.abs_err = std::max(0.0, value - bound);
    c.rel_err = c.abs_err / std::max(std::abs(bound), 1e-300);
    return c;
}

CaseRecord strict_case(std::string check, Inputs inputs, double value, double bound)
{
    CaseRecord c{std::move(check), CaseKind::Strict, std::move(inputs), value, bound, 0.0, 0.0, 1.0};
    c.abs_err = value < bound ? 0.0 : 1.0 + (value - bound);
    c.rel_err = c.abs_err;
    return c;
}

CaseRecord scaled(CaseRecord c, double tol_scale)
{
    if (!(tol_scale > 0.0)) {
        throw DomainError("scaled: tol_scale must be positive");
    }
    c.tol_scale = tol_scale;
    return c;
}

double mixed_error(const CaseRecord& c)
{
    return std::abs(c.lhs - c.rhs) / std::max({1.0, std::abs(c.lhs), std::abs(c.rhs)});
}

double case_error(const CaseRecord& c, ErrorMetric metric)
{
    if (c.kind != CaseKind::Equality) {
        return c.abs_err;
    }
    switch (metric) {
    case ErrorMetric::Absolute:
        return c.abs_err;
    case ErrorMetric::Relative:
        return c.rel_err;
    case ErrorMetric::Mixed:
        return mixed_error(c);
    }
    return c.abs_err;
}

void VerificationReport::finalize()
{
    max_abs_err = 0.0;
    max_rel_err = 0.0;
    max_error = 0.0;
    bool bounds_ok = true;
    bool finite = true;
    for (const CaseRecord& c : cases) {
        max_abs_err = std::max(max_abs_err, c.abs_err);
        max_rel_err = std::max(max_rel_err, c.rel_err);
        const double e = case_error(c, metric);
        finite = finite && std::isfinite(e) && std::isfinite(std::abs(c.lhs)) && std::isfinite(std::abs(c.rhs));
        if (c.kind == CaseKind::Equality) {
            max_error = std::max(max_error, e / c.tol_scale);
        } else if (!(c.abs_err == 0.0)) {
            bounds_ok = false;
        }
    }
    pass = !cases.empty() && finite && max_error <= tolerance && bounds_ok;
}

void write_json(std::ostream& out, const VerificationReport& r)
{
    write_report(out, r, "");
    out << "\n";
}

std::string to_json(const VerificationReport& r)
{
    std::ostringstream ss;
    write_json(ss, r);
    return ss.str();
}

void write_json(std::ostream& out, const std::vector<VerificationReport>& rs)
{
    bool all = !rs.empty();
    out << "{\n  \"reports\": [";
    for (std::size_t k = 0; k < rs.size(); ++k) {
        out << (k ? ",\n    " : "\n    ");
        write_report(out, rs[k], "    ");
        all = all && rs[k].pass;
    }
    out << (rs.empty() ? "],\n" : "\n  ],\n");
    out << "  \"pass\": " << (all ? "true" : "false") << "\n}\n";
}

} // namespace genhankel
