#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "henon/morse.hpp"
#include "henon/params.hpp"
#include "henon/profile.hpp"
#include "henon/spectral.hpp"
#include "henon/sweep.hpp"

namespace henon::io {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kProfileSchema = "henon_lab.profile.v1";
inline constexpr const char* kSpectrumSchema = "henon_lab.spectrum.v1";
inline constexpr const char* kMorseSchema = "henon_lab.morse.v1";
inline constexpr const char* kSweepSchema = "henon_lab.sweep.v1";
inline constexpr const char* kSummarySchema = "henon_lab.sweep_summary.v1";

/// Shortest round-trip decimal; "nan", "inf", "-inf" for non-finite values.
std::string format_double(double x);

/// 64-bit FNV-1a, as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view data);

nlohmann::json manifest(const std::string& command, const nlohmann::json& config,
                        double wall_time_s);

nlohmann::json to_json(const SolverConfig& c);
nlohmann::json to_json(const SweepConfig& c);
nlohmann::json to_json(const RadialProfile& profile);
nlohmann::json to_json(const EigenResult& eig);
nlohmann::json to_json(const MorseReport& report);
nlohmann::json to_json(const SweepRow& row);
nlohmann::json summary_json(const SweepReport& report);

/// Column names for a sweep with m nodal sets, in output order.
std::vector<std::string> sweep_csv_header(int m);

/// Manifest as leading '#' lines, then the header and one line per row.
void write_sweep_csv(std::ostream& os, const SweepReport& report, const nlohmann::json& manifest);

} // namespace henon::io
