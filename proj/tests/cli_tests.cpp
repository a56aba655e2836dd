// End-to-end checks of the command-line binary. The binary path arrives as
// argv[1] from CTest.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        std::cerr << "[FAIL] " << what << "\n";
        ++failures;
    } else {
        std::cout << "[ ok ] " << what << "\n";
    }
}

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run(const std::string& cmd) {
    const std::string full = cmd + " 2>/dev/null";
    FILE* pipe = popen(full.c_str(), "r");
    if (!pipe) return {};
    RunResult r;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof(buf), pipe)) r.out.append(buf, n);
    const int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

std::vector<double> parse_csv_row(const std::string& line) {
    std::vector<double> row;
    std::istringstream in(line);
    std::string cell;
    while (std::getline(in, cell, ',')) row.push_back(std::stod(cell));
    return row;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_tests <path-to-binary>\n";
        return 2;
    }
    const std::string bin = argv[1];
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "nullcurve-cli-tests";
    fs::create_directories(dir);

    {
        const RunResult r = run(bin + " synthesize --gen identity --eps 1 --s0 0"
                                      " --alpha0 0,0,0 --grid 0:2:201 --format csv");
        expect(r.status == 0, "synthesize exits 0");
        const auto lines = split_lines(r.out);
        expect(!lines.empty() && lines[0] == "s,x,y,z,err", "csv header is s,x,y,z,err");
        expect(lines.size() == 202, "one row per grid point");
        const auto row = parse_csv_row(lines[101]); // s = 1
        expect(std::abs(row[0] - 1.0) < 1e-12, "row parameter is 1");
        expect(std::abs(row[1] - 0.5) < 1e-8, "x(1) = 1/2");
        expect(std::abs(row[2] + 1.0 / 3.0) < 1e-8, "y(1) = -1/3");
        expect(std::abs(row[3] - 2.0 / 3.0) < 1e-8, "z(1) = 2/3");
    }

    {
        const RunResult r = run(bin + " torsion --gen exp --c 3 --at 0.7");
        expect(r.status == 0, "torsion exits 0");
        expect(std::abs(std::stod(r.out) + 4.5) < 1e-12, "torsion of exp(c=3) is -4.5");
    }

    {
        const RunResult r = run(bin + " torsion --gen cot --c 2 --at 2.0");
        expect(r.status == 0, "cot torsion exits 0");
        expect(std::abs(std::stod(r.out) - 2.0) < 1e-12, "torsion of cot(c=2) is 2");
    }

    {
        const RunResult r = run(bin + " verify --entry slant-d --grid 0.1:3:101");
        expect(r.status == 0, "verify slant-d exits 0");
        expect(r.out.find("[PASS]") != std::string::npos, "verify slant-d reports PASS");
    }

    {
        const fs::path report = dir / "acceptance.json";
        const RunResult r = run(bin + " verify --all --out " + report.string());
        expect(r.status == 0, "verify --all exits 0");
        std::size_t pass_lines = 0;
        for (const auto& line : split_lines(r.out)) {
            if (line.rfind("[PASS]", 0) == 0) ++pass_lines;
        }
        expect(pass_lines == 8, "verify --all prints eight PASS lines");
        std::ifstream in(report);
        expect(in.good(), "verify --all wrote the JSON report");
        const auto j = nlohmann::json::parse(in);
        expect(j.at("all_passed").get<bool>(), "report says all_passed");
        expect(j.at("criteria").size() == 8, "report lists eight criteria");
    }

    {
        const fs::path curve = dir / "curve.json";
        const RunResult r = run(bin + " synthesize --gen exp --c 1 --eps 1 --s0 0"
                                      " --alpha0 0,1,0 --grid 0:1:11 --format json --out " +
                                curve.string());
        expect(r.status == 0, "json synthesize exits 0");
        std::ifstream in(curve);
        const auto j = nlohmann::json::parse(in);
        expect(j.at("schema") == 1, "curve schema is 1");
        expect(j.at("samples").size() == 11, "curve carries 11 samples");
        const double y_end = j.at("samples").back().at("pos").at(1).get<double>();
        expect(std::abs(y_end - std::cosh(1.0)) < 1e-8, "y(1) = cosh 1");
    }

    {
        const RunResult r = run(bin + " airy-table --grid -2:2:5 --format csv");
        expect(r.status == 0, "airy-table exits 0");
        const auto lines = split_lines(r.out);
        expect(!lines.empty() && lines[0] == "x,ai,bi,aip,bip", "airy-table header");
        const auto mid = parse_csv_row(lines[3]); // x = 0
        expect(std::abs(mid[1] - 0.35502805388781724) < 1e-14, "Ai(0) in the table");
    }

    {
        const RunResult r = run(bin + " catalog --format json");
        expect(r.status == 0, "catalog exits 0");
        const auto j = nlohmann::json::parse(r.out);
        expect(j.at("entries").size() == 8, "catalog lists eight entries");
    }

    // usage and domain errors exit 2
    expect(run(bin + " synthesize --gen nosuch --s0 0 --grid 0:1:5").status == 2,
           "unknown generator exits 2");
    expect(run(bin + " torsion --gen cot --at 1").status == 2, "missing --c exits 2");
    expect(run(bin + " verify").status == 2, "verify without a target exits 2");
    expect(run(bin + " synthesize --gen log --s0 1 --grid 0.2:3:9").status == 2,
           "grid outside the domain exits 2");
    expect(run(bin + " nosuchcommand").status == 2, "unknown subcommand exits 2");

    // environment tolerance override
    {
        const RunResult r = run("NULLCURVE_TOL=bogus " + bin +
                                " torsion --gen exp --c 1 --at 0");
        expect(r.status == 2, "malformed NULLCURVE_TOL exits 2");
        const RunResult ok = run("NULLCURVE_TOL=1e-12 " + bin +
                                 " synthesize --gen identity --s0 0 --grid 0:1:5");
        expect(ok.status == 0, "NULLCURVE_TOL accepted");
    }

    fs::remove_all(dir);
    if (failures > 0) {
        std::cerr << failures << " cli check(s) failed\n";
        return 1;
    }
    std::cout << "all cli checks passed\n";
    return 0;
}
