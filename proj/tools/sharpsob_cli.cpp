// Command-line front end: exact constants tables, verification suites with
// machine-readable reports, and SVG diagnostics.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sharpsob/constants.hpp"
#include "sharpsob/kernel.hpp"
#include "sharpsob/quadrature.hpp"
#include "sharpsob/serialize.hpp"
#include "sharpsob/svg.hpp"
#include "sharpsob/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;   // verification or internal assertion failure
constexpr int kExitUsage = 2;  // malformed flags or inputs

int default_digits() {
    if (const char* env = std::getenv("SHARPSOB_DIGITS")) {
        try {
            const int d = std::stoi(env);
            if (d >= 1) return d;
        } catch (...) {
        }
        std::cerr << "warning: ignoring invalid SHARPSOB_DIGITS\n";
    }
    return 12;
}

bool write_output(const std::string& content, const std::string& path) {
    if (path.empty()) {
        std::cout << content;
        return true;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out << content;
    return static_cast<bool>(out);
}

std::optional<sharpsob::NodeSet> parse_nodes(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::vector<sharpsob::Rational> nodes;
    std::string item;
    std::istringstream in(text);
    bool converted_decimal = false;
    while (std::getline(in, item, ',')) {
        nodes.push_back(sharpsob::parse_rational(item));
        converted_decimal = converted_decimal || item.find('.') != std::string::npos;
    }
    if (converted_decimal)
        std::cerr << "note: decimal node literals were converted to exact rationals\n";
    return sharpsob::NodeSet(std::move(nodes));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification toolkit for the sharp W^{k,2}_0(-1,1) -> L^1 embedding"};
    app.require_subcommand(1);

    std::string format = "csv";
    int digits = default_digits();
    std::string out_path;
    std::uint64_t seed = 0;
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--digits", digits, "significant digits for decimal columns");
    app.add_option("--out", out_path, "write output to this path instead of stdout");
    app.add_option("--seed", seed, "seed for randomized probes and node sets");

    auto* cmd_constants = app.add_subcommand("constants", "emit the cross-check constants table");
    int kmax = 3;
    cmd_constants->add_option("--kmax", kmax, "largest derivative order k");

    auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite = "all";
    int k = 1;
    std::string nodes_text;
    std::string mode_text = "sampled";
    int size = 8;
    int trials = 200;
    cmd_verify->add_option("--suite", suite, "suite to run")
        ->check(CLI::IsMember({"kernel", "lemma", "galerkin", "bvp", "all"}));
    cmd_verify->add_option("--k", k, "derivative order");
    cmd_verify->add_option("--nodes", nodes_text, "comma-separated rational nodes");
    cmd_verify->add_option("--mode", mode_text, "sign certification mode")
        ->check(CLI::IsMember({"sampled", "exact"}));
    cmd_verify->add_option("--size", size, "largest Galerkin trial-space size");
    cmd_verify->add_option("--trials", trials, "random trials for the lemma suite");

    auto* cmd_plot = app.add_subcommand("plot", "render an SVG diagnostic");
    std::string kind = "kernel_heatmap";
    int plot_k = 2;
    std::string plot_nodes_text;
    cmd_plot->add_option("--kind", kind, "diagnostic to draw")
        ->check(CLI::IsMember({"kernel_heatmap", "landau", "convergence"}));
    cmd_plot->add_option("--k", plot_k, "derivative order");
    cmd_plot->add_option("--nodes", plot_nodes_text,
                         "nodes for the heatmap (default: Legendre roots)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (cmd_constants->parsed()) {
            if (kmax < 1 || digits < 1) {
                std::cerr << "usage error: --kmax and --digits must be >= 1\n";
                return kExitUsage;
            }
            const auto rows = sharpsob::constants_table(kmax, digits);
            const std::string content = format == "json"
                                            ? sharpsob::constants_json(rows, digits).dump(2) + "\n"
                                            : sharpsob::constants_csv(rows, digits);
            if (!write_output(content, out_path)) {
                std::cerr << "error: cannot write " << out_path << "\n";
                return kExitFail;
            }
            return kExitPass;
        }

        if (cmd_verify->parsed()) {
            if (k < 1 || size < 1 || trials < 1) {
                std::cerr << "usage error: --k, --size and --trials must be >= 1\n";
                return kExitUsage;
            }
            std::optional<sharpsob::NodeSet> nodes;
            try {
                nodes = parse_nodes(nodes_text);
            } catch (const std::invalid_argument& e) {
                std::cerr << "usage error: " << e.what() << "\n";
                return kExitUsage;
            }
            if (nodes && nodes->size() != k) {
                std::cerr << "usage error: expected " << k << " nodes, got " << nodes->size()
                          << "\n";
                return kExitUsage;
            }
            sharpsob::SuiteConfig cfg;
            cfg.seed = seed;
            cfg.lemma_trials = trials;
            cfg.galerkin_max_size = size;
            cfg.mode = mode_text == "exact" ? sharpsob::CertifyMode::exact
                                            : sharpsob::CertifyMode::sampled;
            sharpsob::VerifyReport report;
            if (suite == "kernel") report = sharpsob::run_kernel_suite(k, nodes, cfg);
            else if (suite == "lemma") report = sharpsob::run_lemma_suite(k, cfg);
            else if (suite == "galerkin") report = sharpsob::run_galerkin_suite(k, cfg);
            else if (suite == "bvp") report = sharpsob::run_bvp_suite(k, cfg);
            else report = sharpsob::run_all_suites(k, nodes, cfg);

            const std::string content = format == "json"
                                            ? sharpsob::report_json(report).dump(2) + "\n"
                                            : sharpsob::report_csv(report);
            if (!write_output(content, out_path)) {
                std::cerr << "error: cannot write " << out_path << "\n";
                return kExitFail;
            }
            if (out_path.empty() && format == "csv") std::cerr << sharpsob::report_text(report);
            return report.pass() ? kExitPass : kExitFail;
        }

        if (cmd_plot->parsed()) {
            if (plot_k < 1 || digits < 1) {
                std::cerr << "usage error: --k and --digits must be >= 1\n";
                return kExitUsage;
            }
            if (out_path.empty()) {
                std::cerr << "usage error: plot requires --out\n";
                return kExitUsage;
            }
            std::string content;
            if (kind == "kernel_heatmap") {
                std::optional<sharpsob::NodeSet> nodes;
                try {
                    nodes = parse_nodes(plot_nodes_text);
                } catch (const std::invalid_argument& e) {
                    std::cerr << "usage error: " << e.what() << "\n";
                    return kExitUsage;
                }
                if (nodes && nodes->size() != plot_k) {
                    std::cerr << "usage error: expected " << plot_k << " nodes\n";
                    return kExitUsage;
                }
                if (!nodes)
                    nodes = sharpsob::NodeSet(sharpsob::legendre_roots(plot_k, digits));
                content = sharpsob::svg::kernel_heatmap(sharpsob::KernelB(plot_k, *nodes));
            } else if (kind == "landau") {
                content = sharpsob::svg::landau_curves(plot_k);
            } else {
                content = sharpsob::svg::convergence_plot(
                    plot_k, sharpsob::BasisSpec::landau_excluded, 8,
                    sharpsob::sharp_constant_squared(plot_k));
            }
            if (!write_output(content, out_path)) {
                std::cerr << "error: cannot write " << out_path << "\n";
                return kExitFail;
            }
            return kExitPass;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
