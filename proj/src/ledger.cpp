#include "ecodyn/ledger.hpp"

#include <cmath>

namespace ecodyn {

double repayment_due(const AgentState& agent, double repayment_rate) {
    return repayment_rate * agent.outstanding_debt();
}

FlowRecord settle_flows(AgentState& agent, const FlowRecord& exogenous,
                        const ModelParams& params) {
    FlowRecord flows = exogenous;

    flows.savings_flow = flows.income - flows.tax - flows.expense;

    flows.repayment = repayment_due(agent, params.repayment_rate);
    flows.savings_flow -= flows.repayment;
    agent.credit_repaid += flows.repayment;

    if (flows.savings_flow > 0.0) {
        flows.invested = params.invest_fraction * flows.savings_flow;
        agent.roi_pool += params.roi_rate * flows.invested;
        agent.savings += (1.0 - params.invest_fraction) * flows.savings_flow;
    } else {
        flows.invested = 0.0;
    }

    agent.net_balance += flows.env_utility + flows.welfare + agent.roi_pool +
                         agent.savings - std::fabs(flows.savings_flow);
    return flows;
}

namespace {

// Moves up to `available` from a source into the negative net balance.
// Returns what is left of the source.
double cover_deficit(AgentState& agent, double available) {
    if (agent.net_balance >= 0.0 || available <= 0.0) return available;
    const double deficit = -agent.net_balance;
    const double used = std::min(available, deficit);
    agent.net_balance += used;
    return available - used;
}

} // namespace

bool apply_balancing_policy(AgentState& agent) {
    if (agent.net_balance < 0.0) {
        agent.savings = cover_deficit(agent, agent.savings);
        agent.roi_pool = cover_deficit(agent, agent.roi_pool);
        if (agent.net_balance < 0.0) {
            if (agent.index % 2 == 0) {
                const double before = agent.credit_limit_remaining;
                agent.credit_limit_remaining = cover_deficit(agent, before);
                agent.credit_drawn += before - agent.credit_limit_remaining;
            } else {
                agent.inherited = cover_deficit(agent, agent.inherited);
            }
        }
    }
    agent.stressed = agent.net_balance < 0.0;
    return agent.stressed;
}

} // namespace ecodyn
