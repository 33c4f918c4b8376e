#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ecodyn/agent.hpp"
#include "ecodyn/metrics.hpp"
#include "ecodyn/params.hpp"
#include "ecodyn/rng.hpp"

namespace ecodyn {

struct RunResult {
    ScenarioConfig scenario;
    std::uint64_t seed = 0;
    ModelParams params;
    std::vector<MetricsRecord> series; // series[k].t == k+1, k = 0..T-1
};

/// Advances the population by one step and returns the step's metrics.
/// Two uniform draws (income, welfare) are consumed per agent in index
/// order, stressed or not, so the stream does not depend on who has
/// collapsed. Stressed agents are frozen: they stay in the population and
/// keep counting toward NSA, but their ledgers no longer evolve and they
/// contribute no flows.
MetricsRecord step(std::vector<AgentState>& population, int t,
                   const ModelParams& params, const ScenarioConfig& scenario,
                   UniformRng& rng);

/// Fresh population, then step for t = 1..T. Deterministic per
/// (params, scenario, seed).
RunResult run(const ModelParams& params, const ScenarioConfig& scenario,
              std::uint64_t seed);

/// Cartesian product of scenarios x seeds, fanned out across threads.
/// Results are ordered by (scenario position, seed position), never by
/// completion order. Throws std::invalid_argument on empty inputs.
std::vector<RunResult> run_suite(const ModelParams& params,
                                 std::span<const ScenarioConfig> scenarios,
                                 std::span<const std::uint64_t> seeds,
                                 int max_workers = 0);

/// Series of one named metric ("NBA", "RSL", "NSA", "ROI", "RCL", "RIA",
/// "TSC", "SAE", "NSA_high", "NSA_mid", "NSA_low") from a run.
std::vector<double> metric_series(const RunResult& result, const std::string& name);

/// Canonical metric column order used by the CSV files and summaries:
/// the eight aggregates followed by one stressed-count column per group
/// (NSA_high, NSA_mid, NSA_low for the default groups).
std::vector<std::string> metric_names(const ModelParams& params);

} // namespace ecodyn
