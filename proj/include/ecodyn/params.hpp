#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace ecodyn {

/// One income group: its share of the population, tax/expense rates and the
/// uniform draw ranges for income, inherited assets and welfare.
struct IncomeGroup {
    std::string name;
    double population_fraction = 0.0;
    double tax_rate = 0.0;      // delta_j
    double expense_rate = 0.0;  // gamma_j
    double income_min = 0.0, income_max = 0.0;
    double inherited_min = 0.0, inherited_max = 0.0;
    double welfare_min = 0.0, welfare_max = 0.0;
};

/// Full parameter set of the model. Defaults reproduce the reference
/// three-group economy (High 10%, Medium 30%, Low 60%).
struct ModelParams {
    int num_agents = 100;                // N
    std::vector<IncomeGroup> groups;     // listed in block order
    double credit_limit_multiple = 10.0; // mu_crd
    double repayment_rate = 0.01;        // eta_rpy
    double invest_fraction = 0.50;       // rho_inv
    double roi_rate = 0.15;              // rho_roi
    double expense_growth = 0.15;        // alpha_exp
    double env_steepness = 0.025;        // alpha_env
    double tax_growth = 1.0;             // alpha_tax
    double income_decay = 1.0;           // alpha_inc
    double welfare_decay = 1.0;          // alpha_wlf
    int horizon = 300;                   // T
    double env_amplitude = 10.0;         // A

    static ModelParams defaults();

    /// Throws std::invalid_argument on any violated invariant
    /// (fractions must sum to 1 within 1e-9, ranges ordered, rates in [0,1], ...).
    void validate() const;

    int group_count() const { return static_cast<int>(groups.size()); }
};

enum class ExpenseBaseline {
    CurrentIncome, // expense tracks this step's (possibly decayed) income
    InitialIncome, // expense stays pinned to the t=0 income draw
};

/// Which deteriorating factors are active. The reference scenarios are
/// nested activations: 1 = expense only, 2 = +environment, 3 = +tax,
/// 4 = +welfare, 5a/5b = +income (5b pins expenses to the t=0 income).
struct ScenarioConfig {
    bool expense_growth = false;
    bool env_decay = false;
    bool tax_growth = false;
    bool welfare_decay = false;
    bool income_decay = false;
    ExpenseBaseline expense_baseline = ExpenseBaseline::CurrentIncome;

    static ScenarioConfig preset(std::string_view label); // "1".."4", "5a", "5b"
    static const std::vector<ScenarioConfig>& default_set();

    std::string label() const;
    bool operator==(const ScenarioConfig&) const = default;
};

} // namespace ecodyn
