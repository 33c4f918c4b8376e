#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "ecodyn/analysis.hpp"
#include "ecodyn/engine.hpp"

namespace ecodyn {

/// Formats a double with 9 significant digits, identically on every
/// platform, so repeated runs produce byte-identical files.
std::string format_number(double value);

/// Header: t,NBA,RSL,NSA,ROI,RCL,RIA,TSC,SAE,NSA_high,NSA_mid,NSA_low
/// (group columns follow the params' group list). Counts are written as
/// integers, currency values with 9 significant digits.
std::string raw_csv(const RunResult& result);

/// Same columns, each metric column min-max normalized onto its
/// presentation range: NBA [0,1], RSL [0,0.9], NSA [0,0.8], ROI [0,0.7],
/// RCL [0,0.6], RIA [0,0.5], TSC [0,0.4], SAE [0,0.3]; per-group stressed
/// counts use the NSA range.
std::string normalized_csv(const RunResult& result);

std::string run_file_stem(const ScenarioConfig& scenario, std::uint64_t seed);

/// transitions.json payload: one entry per (scenario, metric) with the
/// windows detected on the seed-median series.
std::string transitions_json(const std::vector<ScenarioSummary>& summaries);

/// Human-readable per-scenario table (also consumed by `report`).
std::string summary_text(const std::vector<ScenarioSummary>& summaries);

/// Reads back one raw CSV written by raw_csv. Only the columns are
/// recovered; used by the report command.
struct CsvSeries {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> values; // per column
};
CsvSeries read_csv(const std::filesystem::path& file);

void write_file(const std::filesystem::path& file, const std::string& content);

} // namespace ecodyn
