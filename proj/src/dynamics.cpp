#include "ecodyn/dynamics.hpp"

#include <algorithm>
#include <cmath>

namespace ecodyn {

double income_at(double income_draw, double alpha_inc, int t, int horizon, bool active) {
    if (!active) return income_draw;
    const double factor = 1.0 - alpha_inc * static_cast<double>(t) / horizon;
    return std::max(0.0, factor) * income_draw;
}

double expense_at(double income_for_expense, double gamma, double alpha_exp, int t,
                  bool active) {
    const double factor = active ? 1.0 + alpha_exp * static_cast<double>(t) : 1.0;
    return factor * gamma * income_for_expense;
}

double tax_at(double income, double delta, double alpha_tax, int t, int horizon,
              bool active) {
    const double factor =
        active ? 1.0 + alpha_tax * static_cast<double>(t) / horizon : 1.0;
    return factor * delta * income;
}

double welfare_at(double welfare_draw, double alpha_wlf, int t, int horizon, bool active) {
    if (!active) return welfare_draw;
    const double factor = 1.0 - alpha_wlf * static_cast<double>(t) / horizon;
    return std::max(0.0, factor) * welfare_draw;
}

double env_utility_at(double amplitude, double alpha_env, int t, int horizon,
                      bool active) {
    if (!active) return amplitude;
    const double mid = horizon / 2.0;
    const double lo = std::sinh(alpha_env * (1.0 - mid));
    const double hi = std::sinh(alpha_env * (horizon - mid));
    if (hi <= lo) return amplitude; // degenerate: alpha_env = 0 or horizon = 1
    const double s = std::sinh(alpha_env * (t - mid));
    return amplitude - 2.0 * amplitude * (s - lo) / (hi - lo);
}

} // namespace ecodyn
