#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "nullcurve/acceptance.hpp"
#include "nullcurve/catalog.hpp"
#include "nullcurve/synthesis.hpp"

namespace nullcurve {

/// Fixed CSV schema: header `s,x,y,z,err`, one row per sample, 17 significant
/// digits so every double survives a parse round trip.
void write_curve_csv(std::ostream& os, const SampledCurve& curve);

/// Formats one double with 17 significant digits.
std::string format_double(double v);

nlohmann::json curve_to_json(const SampledCurve& curve);

/// Rebuilds a curve from its JSON form. The generator is reconstructed from
/// its descriptor; curves of custom generators cannot round-trip and raise
/// InvalidParam. Positions compare bit-identical after a round trip.
SampledCurve curve_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const VerificationReport& report);
nlohmann::json acceptance_to_json(const std::vector<CriterionResult>& results);

nlohmann::json airy_table_json(const std::vector<double>& grid);
void write_airy_table_csv(std::ostream& os, const std::vector<double>& grid);

/// Rebuilds a generator from a descriptor produced by make_generator.
Generator generator_from_descriptor(const GeneratorDescriptor& desc);

/// Writes content to path via a temporary file and rename, so readers never
/// observe a half-written file.
void atomic_write_file(const std::filesystem::path& path, const std::string& content);

} // namespace nullcurve
