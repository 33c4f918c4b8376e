#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "ecodyn/engine.hpp"

namespace ecodyn {

struct TransitionWindow {
    enum class Direction { Rising, Falling };
    int onset_t = 0; // 1-based step where the move has covered low_frac of its span
    int end_t = 0;   // step where it has covered high_frac
    Direction direction = Direction::Rising;

    bool operator==(const TransitionWindow&) const = default;
};

/// Finds the sharp-transition windows of a series.
/// The series is min-max normalized to [0,1], split into maximal
/// monotone-trend episodes (a trend survives reversals smaller than 2% of
/// the range), and each episode that spans both threshold levels emits one
/// window: rising windows run from the low_frac crossing to the high_frac
/// crossing, falling ones from the high_frac crossing down to the low_frac
/// crossing. Windows come back disjoint and in time order; a constant
/// series yields none. Steps are 1-based.
std::vector<TransitionWindow> detect_transitions(std::span<const double> series,
                                                 double low_frac = 0.1,
                                                 double high_frac = 0.9);

/// Number of distinct transitions: windows closer than min_plateau steps
/// (next onset - previous end) merge into one.
int count_sharp_transitions(std::span<const double> series, double low_frac = 0.1,
                            double high_frac = 0.9, int min_plateau = 20);

struct MetricSummary {
    std::vector<double> median;
    std::vector<double> q25;
    std::vector<double> q75;
    std::vector<TransitionWindow> windows; // detected on the median series
};

struct ScenarioSummary {
    ScenarioConfig scenario;
    int seed_count = 0;
    std::map<std::string, MetricSummary> metrics;
};

/// Elementwise median/IQR over seeds, grouped by scenario, with transitions
/// computed on each median series. Throws on empty input or mixed horizons.
std::vector<ScenarioSummary> summarize_runs(std::span<const RunResult> results);

} // namespace ecodyn
