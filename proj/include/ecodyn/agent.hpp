#pragma once

namespace ecodyn {

/// Full ledger of one agent. Monetary stocks never go negative; the
/// balancing policy only ever moves money from a stock into net_balance.
struct AgentState {
    int index = 0; // global index; parity picks credit (even) vs inheritance (odd)
    int group = 0; // index into ModelParams::groups

    double income_baseline = 0.0;        // X_inc_0, the t=0 income draw
    double inherited = 0.0;              // I_inh remaining
    double credit_limit_remaining = 0.0; // I_crd; never restored by repayment
    double credit_drawn = 0.0;           // cumulative
    double credit_repaid = 0.0;          // cumulative
    double net_balance = 0.0;            // X_net
    double savings = 0.0;                // X_rem, the non-invested stock
    double roi_pool = 0.0;               // I_roi, accumulated returns
    bool stressed = false;

    double outstanding_debt() const { return credit_drawn - credit_repaid; }
};

/// Per-step flows of one agent. savings_flow is signed (negative when taxes
/// and expenses exceed income); invested is 0 whenever savings_flow <= 0.
struct FlowRecord {
    double income = 0.0;      // I_inc
    double welfare = 0.0;     // I_wlf
    double env_utility = 0.0; // I_env
    double expense = 0.0;     // O_exp
    double tax = 0.0;         // O_tax
    double savings_flow = 0.0; // O_sav, after repayment
    double repayment = 0.0;   // O_rpy
    double invested = 0.0;    // X_inv
};

} // namespace ecodyn
