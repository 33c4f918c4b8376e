#pragma once

#include "ecodyn/agent.hpp"
#include "ecodyn/params.hpp"

namespace ecodyn {

/// repayment_rate * outstanding drawn credit (credit_drawn - credit_repaid).
double repayment_due(const AgentState& agent, double repayment_rate);

/// Settles one step for one agent, in order:
///   (a) savings_flow = income - tax - expense
///   (b) repayment = repayment_due; savings_flow -= repayment;
///       credit_repaid += repayment
///   (c) if savings_flow > 0: invested = invest_fraction * savings_flow,
///       roi_pool += roi_rate * invested,
///       savings += (1 - invest_fraction) * savings_flow
///   (d) net_balance += env_utility + welfare + roi_pool + savings
///                      - |savings_flow|
/// The full stocks roi_pool and savings enter (d) every step, and
/// |savings_flow| is subtracted even when savings are positive.
/// `exogenous` must carry income, welfare, env_utility, expense, tax; the
/// returned record adds savings_flow, repayment and invested.
FlowRecord settle_flows(AgentState& agent, const FlowRecord& exogenous,
                        const ModelParams& params);

/// Deficit-covering cascade for net_balance < 0: savings, then roi_pool,
/// then credit (even index) or inherited assets (odd index). Partial
/// coverage exhausts the source. Sets and returns agent.stressed
/// (still negative after all three stages).
bool apply_balancing_policy(AgentState& agent);

} // namespace ecodyn
