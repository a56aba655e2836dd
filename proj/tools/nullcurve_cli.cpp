// Command-line front end: synthesize curves, run the verification suites,
// dump the curve catalog, and evaluate torsion or Airy values pointwise.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or domain error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nullcurve/acceptance.hpp"
#include "nullcurve/airy.hpp"
#include "nullcurve/catalog.hpp"
#include "nullcurve/frenet.hpp"
#include "nullcurve/io.hpp"
#include "nullcurve/synthesis.hpp"

namespace {

using namespace nullcurve;

struct GridSpec {
    double lo = 0.0;
    double hi = 1.0;
    std::size_t n = 2;
};

GridSpec parse_grid(const std::string& text) {
    GridSpec g;
    char colon1 = 0, colon2 = 0;
    std::istringstream in(text);
    long long n = 0;
    if (!(in >> g.lo >> colon1 >> g.hi >> colon2 >> n) || colon1 != ':' || colon2 != ':' ||
        !in.eof()) {
        throw InvalidParam("grid must be lo:hi:n, got '" + text + "'");
    }
    if (n < 2) throw InvalidParam("grid needs n >= 2");
    if (!(g.lo < g.hi)) throw InvalidParam("grid needs lo < hi");
    g.n = static_cast<std::size_t>(n);
    return g;
}

Vec3 parse_vec3(const std::string& text) {
    Vec3 v;
    char c1 = 0, c2 = 0;
    std::istringstream in(text);
    if (!(in >> v.x >> c1 >> v.y >> c2 >> v.z) || c1 != ',' || c2 != ',' || !in.eof()) {
        throw InvalidParam("expected x,y,z but got '" + text + "'");
    }
    if (!is_finite(v)) throw InvalidParam("vector components must be finite");
    return v;
}

struct GeneratorArgs {
    std::string kind;
    std::optional<double> c;
    std::optional<double> b;
    std::optional<double> lambda;
};

void add_generator_options(CLI::App* cmd, GeneratorArgs& args) {
    cmd->add_option("--gen", args.kind, "generator kind: identity|cot|exp|log|tanlog|power|invsquare|airy")
        ->required();
    cmd->add_option("--c", args.c, "pitch parameter of cot/exp (c > 0)");
    cmd->add_option("--b", args.b, "exponent parameter of tanlog/power (b > 0)");
    cmd->add_option("--lambda", args.lambda, "Airy family constant (lambda != 0)");
}

Generator build_generator(const GeneratorArgs& args) {
    auto need = [](const std::optional<double>& v, const char* flag) {
        if (!v) throw InvalidParam(std::string("generator requires ") + flag);
        return *v;
    };
    if (args.kind == "identity") return make_generator(IdentityGen{});
    if (args.kind == "cot") return make_generator(CotGen{need(args.c, "--c")});
    if (args.kind == "exp") return make_generator(ExpGen{need(args.c, "--c")});
    if (args.kind == "log") return make_generator(LogGen{});
    if (args.kind == "tanlog") return make_generator(TanLogGen{need(args.b, "--b")});
    if (args.kind == "power") return make_generator(PowerGen{need(args.b, "--b")});
    if (args.kind == "invsquare") return make_generator(InverseSquareGen{});
    if (args.kind == "airy") return make_generator(AiryRatioGen{need(args.lambda, "--lambda")});
    throw InvalidParam("unknown generator kind '" + args.kind + "'");
}

double default_tol() {
    if (const char* env = std::getenv("NULLCURVE_TOL")) {
        try {
            const double tol = std::stod(env);
            if (tol > 0.0) return tol;
        } catch (const std::exception&) {
        }
        throw InvalidParam("NULLCURVE_TOL must be a positive number");
    }
    return 1e-10;
}

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
    } else {
        atomic_write_file(out_path, content);
    }
}

int cmd_synthesize(const GeneratorArgs& gen_args, int epsilon, double s0,
                   const std::string& alpha0_text, const std::string& grid_text, double tol,
                   const std::string& format, const std::string& out_path) {
    const GridSpec gs = parse_grid(grid_text);
    const CurveSpec spec(build_generator(gen_args), epsilon, s0, parse_vec3(alpha0_text));
    const SampledCurve curve = synthesize(spec, linspace(gs.lo, gs.hi, gs.n), tol);
    if (format == "csv") {
        std::ostringstream os;
        write_curve_csv(os, curve);
        emit(os.str(), out_path);
    } else if (format == "json") {
        emit(curve_to_json(curve).dump(2) + "\n", out_path);
    } else {
        throw InvalidParam("format must be csv or json");
    }
    return 0;
}

int cmd_torsion(const GeneratorArgs& gen_args, double at) {
    const Generator gen = build_generator(gen_args);
    std::cout << format_double(torsion_schwarzian(gen, at)) << "\n";
    return 0;
}

int cmd_catalog(const std::string& format, const std::string& out_path,
                const CatalogParams& params) {
    const auto entries = catalog_entries(params);
    if (format == "json") {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& e : entries) {
            list.push_back({{"label", e.label},
                            {"family", e.family},
                            {"generator", e.gen.label()},
                            {"epsilon", e.epsilon},
                            {"s0", e.s0},
                            {"alpha0", {e.alpha0.x, e.alpha0.y, e.alpha0.z}},
                            {"domain", {e.gen.domain().lo, e.gen.domain().hi}},
                            {"default_grid", {e.default_grid.lo, e.default_grid.hi}}});
        }
        emit(nlohmann::json{{"schema", 1}, {"entries", list}}.dump(2) + "\n", out_path);
        return 0;
    }
    std::ostringstream os;
    for (const auto& e : entries) {
        os << e.label << ": " << e.family << "\n"
           << "  generator " << e.gen.label() << " on (" << e.gen.domain().lo << ", "
           << e.gen.domain().hi << ")\n"
           << "  anchor s0=" << e.s0 << " alpha0=" << e.alpha0 << "\n";
    }
    emit(os.str(), out_path);
    return 0;
}

int cmd_verify(bool all, const std::string& entry_label, const std::string& grid_text,
               double tol, const std::string& out_path, const CatalogParams& params) {
    if (all) {
        const auto results = run_acceptance(AcceptanceOptions{tol});
        print_results(std::cout, results);
        if (!out_path.empty()) emit(acceptance_to_json(results).dump(2) + "\n", out_path);
        const bool ok = all_passed(results);
        std::cout << (ok ? "all criteria passed" : "verification FAILED") << "\n";
        return ok ? 0 : 1;
    }
    if (entry_label.empty()) throw InvalidParam("verify needs --all or --entry LABEL");

    const CatalogEntry entry = catalog_entry(entry_label, params);
    std::vector<double> grid;
    if (grid_text.empty()) {
        grid = linspace(entry.default_grid.lo, entry.default_grid.hi, 51);
    } else {
        const GridSpec gs = parse_grid(grid_text);
        grid = linspace(gs.lo, gs.hi, gs.n);
    }
    const VerificationReport report = verify_entry(entry, grid, tol);
    const bool ok = report.passed();
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << report.entry
              << ": nullity " << format_double(report.nullity_max)
              << ", pseudo-arc " << format_double(report.pseudo_arc_max)
              << ", torsion law " << format_double(report.torsion_law_max)
              << ", synthesis " << format_double(report.synthesis_vs_closed_max);
    if (report.axis_residual) {
        std::cout << ", axis " << format_double(*report.axis_residual);
    }
    std::cout << "\n";
    if (!out_path.empty()) emit(report_to_json(report).dump(2) + "\n", out_path);
    return ok ? 0 : 1;
}

int cmd_airy_table(const std::string& grid_text, const std::string& format,
                   const std::string& out_path) {
    const GridSpec gs = parse_grid(grid_text);
    const std::vector<double> grid = linspace(gs.lo, gs.hi, gs.n);
    if (format == "csv") {
        std::ostringstream os;
        write_airy_table_csv(os, grid);
        emit(os.str(), out_path);
    } else if (format == "json") {
        emit(airy_table_json(grid).dump(2) + "\n", out_path);
    } else {
        throw InvalidParam("format must be csv or json");
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"null curve toolkit: synthesis, frames, torsion, verification"};
    app.require_subcommand(1);

    GeneratorArgs gen_args;
    int epsilon = 1;
    double s0 = 0.0;
    double at = 0.0;
    std::string alpha0_text = "0,0,0";
    std::string grid_text;
    std::string format = "csv";
    std::string out_path;
    std::string entry_label;
    bool verify_all = false;
    double tol = -1.0;
    CatalogParams params;

    CLI::App* synth = app.add_subcommand("synthesize", "integrate a curve from a generator");
    add_generator_options(synth, gen_args);
    synth->add_option("--eps", epsilon, "orientation, +1 or -1")->default_val(1);
    synth->add_option("--s0", s0, "anchor parameter")->required();
    synth->add_option("--alpha0", alpha0_text, "anchor position x,y,z")->default_val("0,0,0");
    synth->add_option("--grid", grid_text, "sample grid lo:hi:n")->required();
    synth->add_option("--tol", tol, "quadrature tolerance per unit length");
    synth->add_option("--format", format, "csv or json")->default_val("csv");
    synth->add_option("--out", out_path, "output file (default: stdout)");

    GeneratorArgs torsion_args;
    CLI::App* tors = app.add_subcommand("torsion", "evaluate the torsion of a generator curve");
    add_generator_options(tors, torsion_args);
    tors->add_option("--at", at, "parameter value")->required();

    CLI::App* cat = app.add_subcommand("catalog", "list the reference curves");
    cat->add_option("--format", format, "text or json")->default_val("text");
    cat->add_option("--out", out_path, "output file (default: stdout)");
    cat->add_option("--helix-c", params.c, "helix pitch c > 0");
    cat->add_option("--slant-b-a", params.slant_b_a, "tan-log torsion constant a > 1");
    cat->add_option("--slant-c-a", params.slant_c_a, "power torsion constant 0 != a < 1, a != -3");
    cat->add_option("--lambda", params.lambda, "Airy family constant");

    CLI::App* verify = app.add_subcommand("verify", "run verification residuals");
    verify->add_flag("--all", verify_all, "run the full acceptance battery");
    verify->add_option("--entry", entry_label, "one catalog entry label");
    verify->add_option("--grid", grid_text, "grid lo:hi:n (default: the entry default)");
    verify->add_option("--tol", tol, "quadrature tolerance per unit length");
    verify->add_option("--out", out_path, "JSON report file");
    verify->add_option("--helix-c", params.c, "helix pitch c > 0");
    verify->add_option("--slant-b-a", params.slant_b_a, "tan-log torsion constant a > 1");
    verify->add_option("--slant-c-a", params.slant_c_a, "power torsion constant 0 != a < 1, a != -3");
    verify->add_option("--lambda", params.lambda, "Airy family constant");

    CLI::App* airy_cmd = app.add_subcommand("airy-table", "tabulate Ai, Bi, Ai', Bi'");
    airy_cmd->add_option("--grid", grid_text, "grid lo:hi:n")->required();
    airy_cmd->add_option("--format", format, "csv or json")->default_val("csv");
    airy_cmd->add_option("--out", out_path, "output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (tol <= 0.0) tol = default_tol();
        if (synth->parsed()) {
            return cmd_synthesize(gen_args, epsilon, s0, alpha0_text, grid_text, tol, format,
                                  out_path);
        }
        if (tors->parsed()) return cmd_torsion(torsion_args, at);
        if (cat->parsed()) return cmd_catalog(format, out_path, params);
        if (verify->parsed()) {
            return cmd_verify(verify_all, entry_label, grid_text, tol, out_path, params);
        }
        if (airy_cmd->parsed()) return cmd_airy_table(grid_text, format, out_path);
        throw InvalidParam("no subcommand given");
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
