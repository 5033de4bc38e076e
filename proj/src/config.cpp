#include "genhankel/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "genhankel/error.hpp"
#include "genhankel/suites.hpp"

namespace genhankel {

namespace {

using nlohmann::json;

double positive_number(const json& v, const std::string& key)
{
    if (!v.is_number()) {
        throw DomainError("config: '" + key + "' must be a number");
    }
    const double d = v.get<double>();
    if (!(d > 0.0)) {
        throw DomainError("config: '" + key + "' must be positive");
    }
    return d;
}

int positive_int(const json& v, const std::string& key)
{
    if (!v.is_number_integer() || v.get<long long>() < 1) {
        throw DomainError("config: '" + key + "' must be a positive integer");
    }
    return v.get<int>();
}

void require_object(const json& v, const std::string& key)
{
    if (!v.is_object()) {
        throw DomainError("config: '" + key + "' must be an object");
    }
}

} // namespace

double HarnessConfig::tolerance_for(const std::string& suite) const
{
    const auto it = tolerances.find(suite);
    if (it == tolerances.end()) {
        throw DomainError("unknown suite '" + suite + "'");
    }
    return it->second;
}

HarnessConfig default_config()
{
    HarnessConfig c;
    for (const SuiteInfo& s : suite_catalog()) {
        c.tolerances[s.name] = s.default_tolerance;
    }
    return c;
}

HarnessConfig parse_config(const std::string& json_text)
{
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw DomainError(std::string("config: invalid JSON: ") + e.what());
    }
    require_object(doc, "<root>");
    HarnessConfig c = default_config();
    for (const auto& [key, value] : doc.items()) {
        if (key == "tolerances") {
            require_object(value, key);
            for (const auto& [suite, tol] : value.items()) {
                if (!c.tolerances.count(suite)) {
                    throw DomainError("config: unknown suite '" + suite + "' in tolerances");
                }
                c.tolerances[suite] = positive_number(tol, "tolerances." + suite);
            }
        } else if (key == "quadrature") {
            require_object(value, key);
            for (const auto& [name, v] : value.items()) {
                if (name == "initial_order") {
                    c.quadrature.initial_order = positive_int(v, "quadrature.initial_order");
                } else if (name == "max_order") {
                    c.quadrature.max_order = positive_int(v, "quadrature.max_order");
                } else if (name == "tol") {
                    c.quadrature.tol = positive_number(v, "quadrature.tol");
                } else if (name == "abs_tol") {
                    c.quadrature.abs_tol = positive_number(v, "quadrature.abs_tol");
                } else {
                    throw DomainError("config: unknown key 'quadrature." + name + "'");
                }
            }
            if (c.quadrature.max_order < c.quadrature.initial_order) {
                throw DomainError("config: quadrature.max_order is below quadrature.initial_order");
            }
        } else if (key == "oracle") {
            require_object(value, key);
            for (const auto& [name, v] : value.items()) {
                if (name == "precision_digits") {
                    c.oracle.precision_digits = positive_int(v, "oracle.precision_digits");
                } else if (name == "series_terms") {
                    c.oracle.series_terms = positive_int(v, "oracle.series_terms");
                } else if (name == "integration_panels") {
                    c.oracle.integration_panels = positive_int(v, "oracle.integration_panels");
                } else if (name == "integration_levels") {
                    c.oracle.integration_levels = positive_int(v, "oracle.integration_levels");
                } else {
                    throw DomainError("config: unknown key 'oracle." + name + "'");
                }
            }
            c.oracle.validate();
        } else {
            throw DomainError("config: unknown key '" + key + "'");
        }
    }
    return c;
}

HarnessConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw DomainError("config: cannot open " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

} // namespace genhankel
