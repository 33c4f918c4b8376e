#pragma once

#include <cstdint>
#include <filesystem>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ecodyn/params.hpp"

namespace ecodyn {

/// Raised by the config loader with a line-anchored message
/// ("file.cfg:12: unknown key ...").
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class EmitKind { RawCsv, NormalizedCsv, TransitionsJson, Summary };

/// Everything one `run` invocation needs.
struct RunManifest {
    ModelParams params;
    std::vector<ScenarioConfig> scenarios; // defaults to the six reference variants
    std::vector<std::uint64_t> seeds;      // defaults to 0..29
    std::filesystem::path output_dir = "out";
    std::set<EmitKind> emit = {EmitKind::RawCsv, EmitKind::NormalizedCsv,
                               EmitKind::TransitionsJson, EmitKind::Summary};
};

/// Loads model parameters from a config file. Two formats are accepted:
/// flat `dotted.key = value` lines ('#' comments), or a JSON object with the
/// same keys nested. Omitted fields keep their defaults. Key reference:
///   agents (alias N), horizon (alias T), credit_limit_multiple,
///   repayment_rate, invest_fraction, roi_rate, env_amplitude,
///   expense_growth (alias alpha_exp), env_steepness (alias alpha_env),
///   tax_growth (alias alpha_tax), income_decay (alias alpha_inc),
///   welfare_decay (alias alpha_wlf),
///   groups.<high|medium|low>.fraction | .tax_rate (alias delta)
///     | .expense_rate (alias gamma) | .income_min | .income_max
///     | .inherited_min | .inherited_max | .welfare_min | .welfare_max
ModelParams load_params(const std::filesystem::path& file);

/// Applies one `key=value` override (same keys as the config file) on top of
/// existing params. Throws ConfigError on unknown keys or bad values.
void apply_override(ModelParams& params, const std::string& assignment);

} // namespace ecodyn
