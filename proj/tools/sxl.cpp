// sxl: construct the paper-family graphs, measure spectral radii, test
// forbidden-subgraph freeness, enumerate graphs by edge count, and run the
// theorem/lemma scans. Data goes to stdout, diagnostics to stderr. Exit code
// 2 is reserved for mathematical violations (a counterexample is printed as
// graph6), 1 for usage and operational errors.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "sxl/enumerate.hpp"
#include "sxl/families.hpp"
#include "sxl/graph6.hpp"
#include "sxl/patterns.hpp"
#include "sxl/report.hpp"
#include "sxl/spectral.hpp"
#include "sxl/verify.hpp"

namespace {

std::string fmt(double v) { return sxl::detail::format_double(v); }

// A graph source is a family spec, a literal graph6 string, or "-" for
// graph6 lines on stdin.
std::vector<sxl::Graph> load_graphs(const std::string& source) {
    std::vector<sxl::Graph> out;
    if (source == "-") {
        std::string line;
        while (std::getline(std::cin, line)) {
            if (line.empty()) continue;
            out.push_back(sxl::parse_graph6(line));
        }
        return out;
    }
    try {
        out.push_back(sxl::make(sxl::parse_family_spec(source)));
        return out;
    } catch (const sxl::InvalidParameter&) {
        // not a family spec; fall through to graph6
    }
    out.push_back(sxl::parse_graph6(source));
    return out;
}

int resolve_threads(int flag_value) {
    if (const char* env = std::getenv("SXL_THREADS")) {
        const int t = std::atoi(env);
        if (t >= 1) return t;
    }
    if (flag_value >= 1) return flag_value;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const int m = std::stoi(text);
        return {m, m};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

int parse_predict(const std::string& text) {
    if (text.rfind("k=", 0) == 0) return std::stoi(text.substr(2));
    return std::stoi(text);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral extremal graph laboratory"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    std::string format = "text";
    int threads_flag = 0;
    app.add_option("--format", format, "output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--threads", threads_flag, "worker threads (SXL_THREADS overrides)");

    // construct
    auto* construct = app.add_subcommand("construct", "emit a family member as graph6");
    std::string construct_spec;
    construct->add_option("spec", construct_spec, "family spec, e.g. V5 or ext{k=2,m=9}")
        ->required();

    // lambda
    auto* lambda = app.add_subcommand("lambda", "spectral radius of a graph");
    std::string lambda_source;
    bool with_spectrum = false;
    lambda->add_option("source", lambda_source, "family spec, graph6, or - for stdin")
        ->required();
    lambda->add_flag("--spectrum", with_spectrum, "also print the full spectrum");

    // free
    auto* free_cmd = app.add_subcommand("free", "test forbidden-subgraph freeness");
    std::string free_forbid, free_source;
    bool print_witness = false;
    free_cmd->add_option("--forbid", free_forbid, "pattern, e.g. V5, F3, C5+")->required();
    free_cmd->add_option("source", free_source, "graph source")->required();
    free_cmd->add_flag("--witness", print_witness, "print an embedding when one exists");

    // enumerate
    auto* enum_cmd = app.add_subcommand("enumerate", "isomorph-free graphs with m edges");
    int enum_m = 0;
    bool all_graphs = false, count_only = false;
    enum_cmd->add_option("--m", enum_m, "edge count (<= 14)")->required();
    enum_cmd->add_flag("--all-graphs", all_graphs, "include disconnected graphs");
    enum_cmd->add_flag("--count-only", count_only, "print the class count only");

    // scan
    auto* scan_cmd = app.add_subcommand("scan", "bound scan over F-free graphs");
    std::string scan_forbid, scan_bound, scan_range, scan_predict;
    bool report_only = false;
    scan_cmd->add_option("--forbid", scan_forbid, "forbidden pattern")->required();
    scan_cmd->add_option("--bound", scan_bound, "nosal|nikiforov:r|zls|f3|fk:k|wheel-even")
        ->required();
    scan_cmd->add_option("--m", scan_range, "edge range a..b")->required();
    scan_cmd->add_option("--predict", scan_predict, "predicted extremal, k=<int>");
    scan_cmd->add_flag("--report-only", report_only, "report findings instead of asserting");

    // audit
    auto* audit = app.add_subcommand("audit", "eigen identity residual and eta report");
    std::string audit_source;
    audit->add_option("source", audit_source, "graph source")->required();

    // check
    auto* check = app.add_subcommand("check", "lemma checks");
    std::string lemma;
    int check_max = 0;
    unsigned check_seed = 20240901;
    check->add_option("--lemma", lemma, "rst|eg|bn:r|rotation")->required();
    check->add_option("--max", check_max, "sweep limit (lemma-specific default)");
    check->add_option("--seed", check_seed, "seed for randomized checks");

    CLI11_PARSE(app, argc, argv);
    const int threads = resolve_threads(threads_flag);

    try {
        if (*construct) {
            std::cout << sxl::write_graph6(sxl::make(sxl::parse_family_spec(construct_spec)))
                      << "\n";
            return 0;
        }

        if (*lambda) {
            for (const auto& g : load_graphs(lambda_source)) {
                const auto r = sxl::spectral_radius(g);
                if (format == "json") {
                    sxl::ordered_json j;
                    j["lambda"] = r.lambda;
                    j["residual"] = r.residual;
                    j["iterations"] = r.iterations;
                    if (with_spectrum) j["spectrum"] = sxl::full_spectrum(g).eigenvalues;
                    std::cout << j.dump() << "\n";
                } else {
                    std::cout << "lambda=" << fmt(r.lambda) << " residual=" << fmt(r.residual)
                              << " iterations=" << r.iterations;
                    if (with_spectrum) {
                        std::cout << " spectrum=";
                        const auto s = sxl::full_spectrum(g);
                        for (size_t i = 0; i < s.eigenvalues.size(); ++i)
                            std::cout << (i ? "," : "") << fmt(s.eigenvalues[i]);
                    }
                    std::cout << "\n";
                }
            }
            return 0;
        }

        if (*free_cmd) {
            const auto pattern = sxl::Pattern::from_text(free_forbid);
            for (const auto& g : load_graphs(free_source)) {
                const auto witness = sxl::contains(g, pattern);
                if (format == "json") {
                    sxl::ordered_json j;
                    j["free"] = !witness.has_value();
                    if (witness && print_witness) j["witness"] = witness->mapping;
                    std::cout << j.dump() << "\n";
                } else {
                    std::cout << "free: " << (witness ? "false" : "true") << "\n";
                    if (witness && print_witness) {
                        std::cout << "witness:";
                        for (size_t i = 0; i < witness->mapping.size(); ++i)
                            std::cout << " " << i << "->" << witness->mapping[i];
                        std::cout << "\n";
                    }
                }
            }
            return 0;
        }

        if (*enum_cmd) {
            sxl::EnumSpec spec;
            spec.m = enum_m;
            spec.require_connected = !all_graphs;
            if (all_graphs) spec.max_vertices = std::min(2 * enum_m, 64);
            if (count_only) {
                const long count = sxl::enumerate(spec, [](const sxl::Graph&) {}, threads);
                std::cout << count << "\n";
                return 0;
            }
            std::vector<std::string> lines;
            std::mutex mu;
            sxl::enumerate(spec, [&](const sxl::Graph& g) {
                std::string line = sxl::write_graph6(sxl::canonical_graph(g));
                std::lock_guard<std::mutex> lock(mu);
                lines.push_back(std::move(line));
            }, threads);
            std::sort(lines.begin(), lines.end());
            for (const auto& line : lines) std::cout << line << "\n";
            return 0;
        }

        if (*scan_cmd) {
            sxl::ScanSpec spec;
            spec.forbid = sxl::Pattern::from_text(scan_forbid);
            spec.bound = sxl::parse_bound(scan_bound);
            std::tie(spec.m_min, spec.m_max) = parse_range(scan_range);
            if (!scan_predict.empty()) spec.predict_k = parse_predict(scan_predict);
            spec.report_only = report_only;
            const auto report = sxl::scan(spec, threads);
            if (format == "csv")
                std::cout << sxl::to_csv(report);
            else if (format == "json")
                std::cout << sxl::to_json(report).dump(2) << "\n";
            else
                for (const auto& row : report.rows) {
                    std::cout << "m=" << row.m << " free=" << row.free_count;
                    if (row.has_max)
                        std::cout << " max_lambda=" << fmt(row.max_lambda)
                                  << " bound=" << fmt(row.bound) << " margin=" << fmt(row.margin)
                                  << " equality=" << (row.equality_achieved ? "yes" : "no")
                                  << " argmax=" << (row.argmax.empty() ? "-" : row.argmax.front());
                    std::cout << "\n";
                }
            return 0;
        }

        if (*audit) {
            for (const auto& g : load_graphs(audit_source)) {
                const double residual = sxl::audit_eigen_identity(g);
                const auto eta = sxl::compute_eta(g);
                if (format == "json") {
                    sxl::ordered_json j;
                    j["identity_residual"] = residual;
                    j["eta"] = sxl::to_json(eta);
                    std::cout << j.dump() << "\n";
                } else {
                    std::cout << "identity_residual=" << fmt(residual) << " center=" << eta.center
                              << "\n";
                    for (const auto& c : eta.components) {
                        std::cout << "  component kind="
                                  << (c.kind == sxl::EtaComponent::Kind::triangle ? "triangle"
                                      : c.kind == sxl::EtaComponent::Kind::star   ? "star"
                                                                                  : "other")
                                  << " eta1=" << fmt(c.eta1) << " eta2=" << fmt(c.eta2) << "\n";
                    }
                }
            }
            return 0;
        }

        if (*check) {
            sxl::ordered_json j;
            if (lemma == "rst")
                j = sxl::to_json(sxl::check_rst_lemma(check_max > 0 ? check_max : 200));
            else if (lemma == "eg")
                j = sxl::to_json(sxl::check_erdos_gallai(check_max > 0 ? check_max : 6));
            else if (lemma == "rotation")
                j = sxl::to_json(
                    sxl::check_rotation_lemma(check_max > 0 ? check_max : 500, check_seed));
            else if (lemma.rfind("bn", 0) == 0) {
                const int r = lemma.size() > 3 && lemma[2] == ':' ? std::stoi(lemma.substr(3)) : 2;
                j = sxl::to_json(sxl::check_bn(check_max > 0 ? check_max : 8, r, threads));
            } else
                throw sxl::InvalidParameter("unknown lemma: " + lemma);
            if (format == "text") {
                std::cout << "lemma=" << j["lemma"].get<std::string>() << " ok\n";
                if (j.contains("min_gap")) std::cout << "min_gap=" << fmt(j["min_gap"]) << "\n";
                if (j.contains("min_gain")) std::cout << "min_gain=" << fmt(j["min_gain"]) << "\n";
            } else {
                std::cout << j.dump(2) << "\n";
            }
            return 0;
        }
    } catch (const sxl::BoundViolation& e) {
        std::cerr << "violation: " << e.what() << "\n";
        if (!e.counterexample.empty()) std::cout << e.counterexample << "\n";
        return 2;
    } catch (const sxl::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
