#include "nullcurve/io.hpp"

#include <cstdio>
#include <fstream>
#include <map>

#include "nullcurve/airy.hpp"

namespace nullcurve {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_curve_csv(std::ostream& os, const SampledCurve& curve) {
    os << "s,x,y,z,err\n";
    for (const auto& smp : curve.samples) {
        os << format_double(smp.s) << "," << format_double(smp.pos.x) << ","
           << format_double(smp.pos.y) << "," << format_double(smp.pos.z) << ","
           << format_double(smp.err) << "\n";
    }
}

namespace {

nlohmann::json descriptor_to_json(const GeneratorDescriptor& desc) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [key, value] : desc.params) params[key] = value;
    return nlohmann::json{{"kind", desc.kind}, {"params", params}};
}

GeneratorDescriptor descriptor_from_json(const nlohmann::json& j) {
    GeneratorDescriptor desc;
    desc.kind = j.at("kind").get<std::string>();
    for (const auto& [key, value] : j.at("params").items()) {
        desc.params.emplace_back(key, value.get<double>());
    }
    return desc;
}

double require_param(const GeneratorDescriptor& desc, const std::string& name) {
    for (const auto& [key, value] : desc.params) {
        if (key == name) return value;
    }
    throw InvalidParam("generator descriptor '" + desc.kind + "' lacks parameter '" + name + "'");
}

} // namespace

Generator generator_from_descriptor(const GeneratorDescriptor& desc) {
    if (desc.kind == "identity") return make_generator(IdentityGen{});
    if (desc.kind == "cot") return make_generator(CotGen{require_param(desc, "c")});
    if (desc.kind == "exp") return make_generator(ExpGen{require_param(desc, "c")});
    if (desc.kind == "log") return make_generator(LogGen{});
    if (desc.kind == "tanlog") return make_generator(TanLogGen{require_param(desc, "b")});
    if (desc.kind == "power") return make_generator(PowerGen{require_param(desc, "b")});
    if (desc.kind == "invsquare") return make_generator(InverseSquareGen{});
    if (desc.kind == "airy") return make_generator(AiryRatioGen{require_param(desc, "lambda")});
    throw InvalidParam("generator kind '" + desc.kind + "' is not reconstructible");
}

nlohmann::json curve_to_json(const SampledCurve& curve) {
    nlohmann::json samples = nlohmann::json::array();
    for (const auto& smp : curve.samples) {
        samples.push_back({{"s", smp.s},
                           {"pos", {smp.pos.x, smp.pos.y, smp.pos.z}},
                           {"err", smp.err}});
    }
    return nlohmann::json{
        {"schema", 1},
        {"spec",
         {{"generator", descriptor_to_json(curve.spec.gen.descriptor())},
          {"label", curve.spec.gen.label()},
          {"epsilon", curve.spec.epsilon},
          {"s0", curve.spec.s0},
          {"alpha0", {curve.spec.alpha0.x, curve.spec.alpha0.y, curve.spec.alpha0.z}}}},
        {"samples", samples}};
}

SampledCurve curve_from_json(const nlohmann::json& j) {
    if (j.at("schema").get<int>() != 1) {
        throw InvalidParam("curve_from_json: unsupported schema version");
    }
    const auto& spec_j = j.at("spec");
    Generator gen = generator_from_descriptor(descriptor_from_json(spec_j.at("generator")));
    const auto& a0 = spec_j.at("alpha0");
    CurveSpec spec(std::move(gen), spec_j.at("epsilon").get<int>(),
                   spec_j.at("s0").get<double>(),
                   Vec3{a0.at(0).get<double>(), a0.at(1).get<double>(), a0.at(2).get<double>()});
    SampledCurve curve{std::move(spec), {}};
    for (const auto& smp : j.at("samples")) {
        const auto& pos = smp.at("pos");
        curve.samples.push_back(
            {smp.at("s").get<double>(),
             Vec3{pos.at(0).get<double>(), pos.at(1).get<double>(), pos.at(2).get<double>()},
             smp.at("err").get<double>()});
    }
    return curve;
}

nlohmann::json report_to_json(const VerificationReport& report) {
    nlohmann::json samples = nlohmann::json::array();
    for (const auto& d : report.samples) {
        samples.push_back({{"s", d.s},
                           {"nullity", d.nullity},
                           {"pseudo_arc", d.pseudo_arc},
                           {"torsion_err", d.torsion_err},
                           {"synthesis_dist", d.synthesis_dist}});
    }
    nlohmann::json j{{"schema", 1},
                     {"entry", report.entry},
                     {"nullity_max", report.nullity_max},
                     {"pseudo_arc_max", report.pseudo_arc_max},
                     {"torsion_law_max", report.torsion_law_max},
                     {"synthesis_vs_closed_max", report.synthesis_vs_closed_max},
                     {"fd_step", report.fd_step},
                     {"quad_tol", report.quad_tol},
                     {"passed", report.passed()},
                     {"samples", samples}};
    if (report.axis_residual) j["axis_residual"] = *report.axis_residual;
    if (report.axis_pairing_max) j["axis_pairing_max"] = *report.axis_pairing_max;
    return j;
}

nlohmann::json acceptance_to_json(const std::vector<CriterionResult>& results) {
    nlohmann::json criteria = nlohmann::json::array();
    for (const auto& r : results) {
        criteria.push_back({{"id", r.id},
                            {"name", r.name},
                            {"worst", r.worst},
                            {"threshold", r.threshold},
                            {"passed", r.passed},
                            {"detail", r.detail}});
    }
    return nlohmann::json{
        {"schema", 1}, {"criteria", criteria}, {"all_passed", all_passed(results)}};
}

nlohmann::json airy_table_json(const std::vector<double>& grid) {
    nlohmann::json rows = nlohmann::json::array();
    for (double x : grid) {
        const AiryEval e = airy_eval(x);
        rows.push_back({{"x", x}, {"ai", e.ai}, {"bi", e.bi}, {"aip", e.aip}, {"bip", e.bip}});
    }
    return nlohmann::json{{"schema", 1}, {"rows", rows}};
}

void write_airy_table_csv(std::ostream& os, const std::vector<double>& grid) {
    os << "x,ai,bi,aip,bip\n";
    for (double x : grid) {
        const AiryEval e = airy_eval(x);
        os << format_double(x) << "," << format_double(e.ai) << "," << format_double(e.bi) << ","
           << format_double(e.aip) << "," << format_double(e.bip) << "\n";
    }
}

void atomic_write_file(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot open '" + tmp.string() + "' for writing");
        out << content;
        out.flush();
        if (!out) throw Error("write failed for '" + tmp.string() + "'");
    }
    std::filesystem::rename(tmp, path);
}

} // namespace nullcurve
