#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "alexcert/alexander.hpp"
#include "alexcert/braid.hpp"
#include "alexcert/laurent.hpp"
#include "alexcert/pmembership.hpp"
#include "alexcert/satellite.hpp"
#include "alexcert/surfaces.hpp"
#include "alexcert/sweep.hpp"

namespace {

using namespace alexcert;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCheckFailed = 2;
constexpr int kExitInternal = 3;

void print_poly(const HalfLaurent& p, bool as_json) {
    AlexSummary s = summarize(p);
    if (as_json) {
        json out;
        out["schema"] = 1;
        out["poly"] = json::parse(to_json_string(p));
        out["text"] = to_string(p);
        out["is_zero"] = s.is_zero;
        if (!s.is_zero) {
            out["degree_doubled"] = s.degree_doubled;
            out["d"] = format_half(s.degree_doubled);
            out["alpha"] = s.alpha;
            out["beta"] = s.beta;
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << to_string(p) << "\n";
        if (s.is_zero)
            std::cout << "zero polynomial\n";
        else
            std::cout << "d = " << format_half(s.degree_doubled) << ", alpha = " << s.alpha
                      << ", beta = " << s.beta << "\n";
    }
}

json report_to_json(const VerificationReport& report) {
    json out;
    out["schema"] = 1;
    out["valid"] = report.valid;
    out["poly"] = json::parse(to_json_string(report.delta));
    out["text"] = to_string(report.delta);
    if (!report.root.is_zero) {
        out["degree_doubled"] = report.root.degree_doubled;
        out["alpha"] = report.root.alpha;
        out["beta"] = report.root.beta;
    }
    if (!report.first_failure.empty()) out["first_failure"] = report.first_failure;
    out["nodes"] = json::array();
    for (const auto& n : report.nodes) {
        json jn;
        jn["path"] = n.path;
        jn["kind"] = n.kind;
        jn["ok"] = n.ok;
        if (n.has_c) {
            jn["c"] = n.c;
            jn["b1_minus"] = n.b1_minus;
        }
        if (!n.failure.empty()) jn["failure"] = n.failure;
        out["nodes"].push_back(jn);
    }
    return out;
}

int emit_verification(const VerificationReport& report, bool as_json) {
    if (as_json) {
        std::cout << report_to_json(report).dump(2) << "\n";
    } else if (report.valid) {
        std::cout << "valid: " << to_string(report.delta) << " (alpha = " << report.root.alpha
                  << ", beta = " << report.root.beta << ")\n";
    } else {
        std::cout << "invalid: " << report.first_failure << "\n";
    }
    return report.valid ? kExitOk : kExitCheckFailed;
}

void write_certificate(const PCertificate& cert, const std::string& output_path) {
    std::string text = certificate_to_json(cert);
    if (output_path.empty() || output_path == "-") {
        std::cout << text << "\n";
    } else {
        std::ofstream out(output_path);
        if (!out) throw std::runtime_error("cannot open " + output_path + " for writing");
        out << text << "\n";
    }
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int emit_sweep(const SweepReport& report, const SweepConfig& config, bool as_json) {
    if (as_json) {
        json out;
        out["schema"] = 1;
        out["mode"] = to_string(config.mode);
        out["cases_run"] = report.cases_run;
        out["wall_time"] = report.wall_time;
        out["failures"] = json::array();
        for (const auto& f : report.failures)
            out["failures"].push_back(
                {{"input", f.input}, {"property", f.property}, {"observed", f.observed}});
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "mode " << to_string(config.mode) << ": " << report.cases_run
                  << " cases, " << report.failures.size() << " failures ("
                  << report.wall_time << "s)\n";
        for (const auto& f : report.failures)
            std::cout << "  FAIL " << f.input << " | " << f.property << " | " << f.observed
                      << "\n";
    }
    return report.failures.empty() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Alexander polynomials of positive braid closures and Hopf "
                 "plumbings, with plumbing certificates and satellite obstructions"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "structured JSON output");

    // poly
    auto* poly = app.add_subcommand("poly", "compute an Alexander polynomial");
    poly->fallthrough();
    poly->require_subcommand(1);
    int strands = 2;
    std::string word_csv, word_text, tree_text;
    auto* poly_braid = poly->add_subcommand("braid", "closure of a positive braid word");
    poly_braid->fallthrough();
    poly_braid->add_option("--strands", strands, "strand count");
    poly_braid->add_option("--word", word_csv, "comma-separated generator indices");
    auto* poly_tree = poly->add_subcommand("tree", "arborescent positive Hopf plumbing");
    poly_tree->fallthrough();
    poly_tree->add_option("--tree", tree_text, "tree text, e.g. v(v(v))")->required();
    int torus_p = 2, torus_q = 2;
    auto* poly_torus = poly->add_subcommand("torus", "torus link T(p,q)");
    poly_torus->fallthrough();
    poly_torus->add_option("p", torus_p, "strand count")->required();
    poly_torus->add_option("q", torus_q, "twist count")->required();

    // certify
    auto* certify = app.add_subcommand("certify", "generate a membership certificate");
    certify->fallthrough();
    certify->require_subcommand(1);
    std::string cert_out;
    certify->add_option("-o,--output", cert_out, "output file (default stdout)");
    auto* certify_braid_cmd = certify->add_subcommand("braid", "certify a braid closure");
    certify_braid_cmd->fallthrough();
    certify_braid_cmd->add_option("--strands", strands, "strand count");
    certify_braid_cmd->add_option("--word", word_csv, "comma-separated generator indices");
    auto* certify_tree_cmd = certify->add_subcommand("tree", "certify a plumbing tree");
    certify_tree_cmd->fallthrough();
    certify_tree_cmd->add_option("--tree", tree_text, "tree text")->required();

    // verify-cert
    auto* verify_cmd = app.add_subcommand("verify-cert", "verify a certificate file");
    verify_cmd->fallthrough();
    std::string cert_path;
    verify_cmd->add_option("file", cert_path, "certificate JSON file, '-' for stdin")
        ->required();

    // satellite
    auto* satellite_cmd = app.add_subcommand("satellite", "satellite polynomial + obstruction");
    satellite_cmd->fallthrough();
    int winding = 2;
    std::string pattern_poly_text = "1", companion_text;
    satellite_cmd->add_option("--winding", winding, "pattern winding number")->required();
    satellite_cmd->add_option("--pattern-poly", pattern_poly_text,
                              "pattern closure polynomial (JSON pairs or text)");
    satellite_cmd->add_option("--companion", companion_text, "companion braid word 'n: ...'")
        ->required();

    // cable
    auto* cable_cmd = app.add_subcommand("cable", "(n,1)-cable obstruction check");
    cable_cmd->fallthrough();
    int cable_n = 2;
    cable_cmd->add_option("n", cable_n, "cable winding, n >= 2")->required();
    cable_cmd->add_option("--companion", companion_text, "companion braid word 'n: ...'")
        ->required();

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "exhaustive property sweep");
    sweep_cmd->fallthrough();
    SweepConfig config;
    std::string mode_name = "theorem1";
    sweep_cmd->add_option("--mode", mode_name, "theorem1 | methods | skein | ito");
    sweep_cmd->add_option("--max-strands", config.max_strands, "braid strand bound");
    sweep_cmd->add_option("--max-len", config.max_len, "braid length bound");
    sweep_cmd->add_option("--max-vertices", config.max_vertices, "tree vertex bound");
    sweep_cmd->add_option("--jobs", config.jobs, "worker count");
    sweep_cmd->add_flag("--sorted", config.sorted, "byte-deterministic failure order");

    // ito-check
    auto* ito_cmd = app.add_subcommand("ito-check", "summand count on connected sums");
    ito_cmd->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (poly_braid->parsed()) {
            print_poly(braid_poly(parse_word_flags(strands, word_csv)), as_json);
            return kExitOk;
        }
        if (poly_tree->parsed()) {
            print_poly(tree_poly(parse_tree(tree_text)), as_json);
            return kExitOk;
        }
        if (poly_torus->parsed()) {
            print_poly(braid_poly(torus_word(torus_p, torus_q)), as_json);
            return kExitOk;
        }
        if (certify_braid_cmd->parsed()) {
            write_certificate(certify_braid(parse_word_flags(strands, word_csv)), cert_out);
            return kExitOk;
        }
        if (certify_tree_cmd->parsed()) {
            write_certificate(certify_tree(parse_tree(tree_text)), cert_out);
            return kExitOk;
        }
        if (verify_cmd->parsed()) {
            PCertificate cert = certificate_from_json(read_input(cert_path));
            return emit_verification(verify(cert), as_json);
        }
        if (satellite_cmd->parsed()) {
            SatellitePattern pattern{winding, parse_poly(pattern_poly_text)};
            HalfLaurent companion = braid_poly(parse_word(companion_text));
            HalfLaurent result = satellite_poly(pattern, companion);
            ObstructionVerdict verdict = obstruction(pattern);
            const char* verdict_text = verdict.fires ? "NOT_IN_P" : "NO_OBSTRUCTION";
            if (as_json) {
                json out;
                out["schema"] = 1;
                out["poly"] = json::parse(to_json_string(result));
                out["text"] = to_string(result);
                out["winding_ok"] = verdict.winding_ok;
                out["sign_ok"] = verdict.sign_ok;
                out["zero_pattern"] = verdict.zero_pattern;
                out["verdict"] = verdict_text;
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << to_string(result) << "\n" << verdict_text << "\n";
            }
            return kExitOk;
        }
        if (cable_cmd->parsed()) {
            KrishnaReport report = krishna_check(cable_n, parse_word(companion_text));
            const char* verdict_text = report.not_in_p ? "NOT_IN_P" : "NO_OBSTRUCTION";
            if (as_json) {
                json out;
                out["schema"] = 1;
                out["companion"] = to_string(report.companion_poly);
                out["poly"] = json::parse(to_json_string(report.cable_poly));
                out["text"] = to_string(report.cable_poly);
                out["beta"] = report.beta;
                out["verdict"] = verdict_text;
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << to_string(report.cable_poly) << "\n" << verdict_text << "\n";
            }
            return kExitOk;
        }
        if (sweep_cmd->parsed()) {
            config.mode = parse_sweep_mode(mode_name);
            return emit_sweep(run_sweep(config), config, as_json);
        }
        if (ito_cmd->parsed()) {
            SweepConfig ito_config;
            ito_config.mode = SweepMode::Ito;
            return emit_sweep(run_sweep(ito_config), ito_config, as_json);
        }
    } catch (const SquareSearchExhausted& e) {
        std::cerr << "internal invariant breach: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::overflow_error& e) {
        std::cerr << "internal invariant breach: " << e.what() << "\n";
        return kExitInternal;
    } catch (const NotInScopeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
