#pragma once

#include <span>
#include <vector>

#include "ecodyn/agent.hpp"

namespace ecodyn {

/// The nine aggregate series at one step.
struct MetricsRecord {
    int t = 0;
    double nba = 0.0; // sum of net_balance
    double rsl = 0.0; // sum of savings
    double roi = 0.0; // sum of roi_pool
    double rcl = 0.0; // sum of credit_limit_remaining
    double ria = 0.0; // sum of inherited
    double tsc = 0.0; // sum of outstanding debt (drawn - repaid)
    double sae = 0.0; // sum of savings_flow, signed
    int nsa = 0;      // stressed count
    std::vector<int> nsa_by_group;
};

/// Pure fold over the post-policy population and this step's flows.
MetricsRecord compute_metrics(std::span<const AgentState> population,
                              std::span<const FlowRecord> flows, int t,
                              int group_count);

/// Affine min-max map of the whole series onto [lo, hi]; a constant series
/// maps to lo everywhere.
std::vector<double> normalize_series(std::span<const double> series, double lo,
                                     double hi);

} // namespace ecodyn
