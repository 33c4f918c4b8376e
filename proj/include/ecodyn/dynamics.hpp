#pragma once

namespace ecodyn {

// The five exogenous time profiles. All are pure; `active` selects between
// the deteriorating profile and the pristine value (multiplier 1, env = +A).
// Decaying multipliers are clamped at 0 so arbitrary user parameters cannot
// produce negative income or welfare.

/// [1 - alpha_inc * t/T] * draw, clamped at 0.
double income_at(double income_draw, double alpha_inc, int t, int horizon, bool active);

/// [1 + alpha_exp * t] * gamma * income_for_expense. Note: no /T here; the
/// expense multiplier grows with the raw step index.
double expense_at(double income_for_expense, double gamma, double alpha_exp, int t,
                  bool active);

/// [1 + alpha_tax * t/T] * delta * income.
double tax_at(double income, double delta, double alpha_tax, int t, int horizon,
              bool active);

/// [1 - alpha_wlf * t/T] * draw, clamped at 0.
double welfare_at(double welfare_draw, double alpha_wlf, int t, int horizon, bool active);

/// Decreasing sinh S-curve, min-max normalized over t = 1..T so that
/// env(1) = +A and env(T) = -A exactly. sinh(alpha*(t - T/2)) is strictly
/// increasing in t, so its extrema sit at t=1 and t=T and the normalization
/// is closed-form. Degenerate alpha = 0 (or T = 1) returns +A.
double env_utility_at(double amplitude, double alpha_env, int t, int horizon, bool active);

} // namespace ecodyn
