// genhankel: evaluate kernels, tabulate product-formula kernels, transform
// sampled functions and run the verification suites.
//
// Exit codes: 0 success / all suites pass, 1 a suite failed, 2 usage or
// domain error, 3 numerical non-convergence.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "genhankel/config.hpp"
#include "genhankel/error.hpp"
#include "genhankel/kernels.hpp"
#include "genhankel/params.hpp"
#include "genhankel/report.hpp"
#include "genhankel/specfun.hpp"
#include "genhankel/suites.hpp"
#include "genhankel/transform.hpp"

namespace {

using namespace genhankel;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitAccuracy = 3;

std::string fmt(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<double> linspace(double lo, double hi, int steps)
{
    if (steps < 1) {
        throw DomainError("--steps must be at least 1");
    }
    if (steps == 1) {
        return {lo};
    }
    std::vector<double> out(steps);
    for (int k = 0; k < steps; ++k) {
        out[k] = lo + (hi - lo) * k / (steps - 1);
    }
    return out;
}

// "2:0.8,3:0.7" -> {(2, 0.8), (3, 0.7)}
std::vector<std::pair<int, double>> parse_grid(const std::string& text)
{
    std::vector<std::pair<int, double>> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) {
            throw DomainError("--grid entries must look like n:kappa, got '" + item + "'");
        }
        try {
            std::size_t used = 0;
            const int n = std::stoi(item.substr(0, colon), &used);
            const std::string ktext = item.substr(colon + 1);
            std::size_t kused = 0;
            const double kappa = std::stod(ktext, &kused);
            if (used != colon || kused != ktext.size()) {
                throw std::invalid_argument(item);
            }
            out.emplace_back(n, kappa);
        } catch (const std::logic_error&) {
            throw DomainError("--grid entry '" + item + "' is not n:kappa");
        }
    }
    if (out.empty()) {
        throw DomainError("--grid is empty");
    }
    return out;
}

struct Output {
    std::ofstream file;
    std::ostream* stream = &std::cout;

    explicit Output(const std::string& path)
    {
        if (!path.empty()) {
            file.open(path);
            if (!file) {
                throw DomainError("cannot write " + path);
            }
            stream = &file;
        }
    }
};

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Generalized Hankel transform toolkit: kernels, product formulas and verification suites"};
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path, "JSON file with suite tolerances, quadrature and oracle settings")
        ->check(CLI::ExistingFile);

    // eval
    auto* eval = app.add_subcommand("eval", "Evaluate a single function value");
    eval->require_subcommand(1);
    double alpha = 0.0;
    double x = 0.0;
    auto* eval_bessel = eval->add_subcommand("bessel", "Normalized Bessel function j_alpha(x)");
    eval_bessel->add_option("--alpha", alpha, "Bessel index (> -1/2)")->required();
    eval_bessel->add_option("--x", x, "Argument")->required();

    int n = 1;
    double kappa = 1.0;
    double lambda = 0.0;
    auto* eval_bkernel = eval->add_subcommand("bkernel", "Generalized Hankel kernel B_lambda(x), printed as 're im'");
    eval_bkernel->add_option("--n", n, "Positive integer n")->required();
    eval_bkernel->add_option("--kappa", kappa, "kappa > (n-1)/(2n)")->required();
    eval_bkernel->add_option("--lambda", lambda, "Spectral parameter")->required();
    eval_bkernel->add_option("--x", x, "Argument")->required();

    // table kernel
    auto* table = app.add_subcommand("table", "Tabulate a kernel");
    table->require_subcommand(1);
    auto* table_kernel = table->add_subcommand("kernel", "Product-formula kernel K(x, y, z) over a z-grid");
    double y = 0.0;
    double z_min = -1.0;
    double z_max = 1.0;
    int steps = 101;
    std::string format = "csv";
    std::string out_path;
    table_kernel->add_option("--n", n)->required();
    table_kernel->add_option("--kappa", kappa)->required();
    table_kernel->add_option("--x", x)->required();
    table_kernel->add_option("--y", y)->required();
    table_kernel->add_option("--z-min", z_min)->required();
    table_kernel->add_option("--z-max", z_max)->required();
    table_kernel->add_option("--steps", steps)->capture_default_str();
    table_kernel->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    table_kernel->add_option("--out", out_path, "Output file (default stdout)");

    // transform
    auto* transform = app.add_subcommand("transform", "Generalized Hankel transform of a sampled function (CSV x,re[,im])");
    std::string input_path;
    double lambda_min = 0.0;
    double lambda_max = 1.0;
    bool inverse = false;
    transform->add_option("--input", input_path, "CSV with header and columns x,re[,im]")->required()->check(CLI::ExistingFile);
    transform->add_option("--n", n)->required();
    transform->add_option("--kappa", kappa)->required();
    transform->add_option("--lambda-min", lambda_min)->required();
    transform->add_option("--lambda-max", lambda_max)->required();
    transform->add_option("--steps", steps)->capture_default_str();
    transform->add_option("--out", out_path, "Output CSV (default stdout)");
    transform->add_flag("--inverse", inverse, "Evaluate the inverse transform at the grid points instead");

    // verify
    auto* verify = app.add_subcommand("verify", "Run verification suites and write a JSON report");
    std::string suite;
    bool all = false;
    bool list = false;
    std::optional<double> tol;
    std::uint64_t seed = 42;
    int jobs = 1;
    std::string grid_text;
    std::optional<int> max_order;
    auto* suite_opt = verify->add_option("--suite", suite, "Suite name (see --list)");
    auto* all_opt = verify->add_flag("--all", all, "Run every suite");
    verify->add_flag("--list", list, "List the suites and exit");
    suite_opt->excludes(all_opt);
    verify->add_option("--tol", tol, "Tolerance overriding the configured one");
    verify->add_option("--seed", seed, "Seed for sampled cases")->capture_default_str();
    verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 256))->capture_default_str();
    verify->add_option("--grid", grid_text, "(n, kappa) sets as n:kappa,n:kappa for grid suites");
    verify->add_option("--max-order", max_order, "Quadrature order cap")->check(CLI::Range(2, 1 << 16));
    verify->add_option("--out", out_path, "Report file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        HarnessConfig config = config_path.empty() ? default_config() : load_config(config_path);

        if (eval_bessel->parsed()) {
            std::cout << fmt(bessel_j_norm(alpha, x)) << "\n";
            return 0;
        }
        if (eval_bkernel->parsed()) {
            const Complex b = b_kernel(make_params(n, kappa), lambda, x);
            std::cout << fmt(b.real()) << " " << fmt(b.imag()) << "\n";
            return 0;
        }
        if (table_kernel->parsed()) {
            const Params p = make_params(n, kappa);
            Output out(out_path);
            std::ostream& os = *out.stream;
            const std::vector<double> zs = linspace(z_min, z_max, steps);
            if (format == "csv") {
                os << "z,kernel\n";
                for (double z : zs) {
                    os << fmt(z) << "," << fmt(kernel_K(p, x, y, z)) << "\n";
                }
            } else {
                os << "{\"n\": " << n << ", \"kappa\": " << fmt(kappa) << ", \"x\": " << fmt(x) << ", \"y\": " << fmt(y)
                   << ", \"rows\": [";
                for (std::size_t k = 0; k < zs.size(); ++k) {
                    os << (k ? ", " : "") << "{\"z\": " << fmt(zs[k]) << ", \"kernel\": " << fmt(kernel_K(p, x, y, zs[k]))
                       << "}";
                }
                os << "]}\n";
            }
            return 0;
        }
        if (transform->parsed()) {
            const Params p = make_params(n, kappa);
            const SampledFunction f = read_sampled_csv(input_path);
            const std::vector<double> grid = linspace(lambda_min, lambda_max, steps);
            const SpectralSamples s =
                inverse ? inverse_F(p, f, grid, config.quadrature) : transform_F(p, f, grid, config.quadrature);
            Output out(out_path);
            write_spectral_csv(*out.stream, s, inverse ? "x" : "lambda");
            return 0;
        }
        if (verify->parsed()) {
            if (list) {
                for (const SuiteInfo& s : suite_catalog()) {
                    std::cout << s.name << "  tol=" << fmt(config.tolerance_for(s.name)) << " metric=" << to_string(s.metric)
                              << "  " << s.description << "\n";
                }
                return 0;
            }
            if (!all && suite.empty()) {
                throw DomainError("verify needs --suite NAME, --all or --list");
            }
            if (max_order) {
                config.quadrature.max_order = *max_order;
            }
            RunOptions opts;
            opts.tolerance = tol;
            opts.seed = seed;
            opts.jobs = jobs;
            opts.config = config;
            if (!grid_text.empty()) {
                opts.grid = parse_grid(grid_text);
            }
            std::vector<VerificationReport> reports;
            if (all) {
                reports = run_all(opts);
            } else {
                reports.push_back(run_suite(suite, opts));
            }
            bool pass = true;
            for (const VerificationReport& r : reports) {
                pass = pass && r.pass;
                std::cerr << (r.pass ? "PASS " : "FAIL ") << r.suite << "  max_error=" << fmt(r.max_error)
                          << " tol=" << fmt(r.tolerance) << " cases=" << r.cases.size() << " " << r.runtime_ms << " ms\n";
            }
            Output out(out_path);
            if (all) {
                write_json(*out.stream, reports);
            } else {
                write_json(*out.stream, reports.front());
            }
            return pass ? 0 : kExitFail;
        }
    } catch (const AccuracyError& e) {
        std::cerr << "genhankel: numerical non-convergence: " << e.what() << "\n";
        return kExitAccuracy;
    } catch (const DomainError& e) {
        std::cerr << "genhankel: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
