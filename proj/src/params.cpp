#include "ecodyn/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ecodyn {

ModelParams ModelParams::defaults() {
    ModelParams p;
    p.groups = {
        {"High", 0.10, 0.35, 0.25, 8.0, 10.0, 8.0, 10.0, 1.0, 2.0},
        {"Medium", 0.30, 0.20, 0.40, 4.0, 7.0, 4.0, 7.0, 3.0, 5.0},
        {"Low", 0.60, 0.10, 0.98, 1.0, 3.0, 1.0, 3.0, 5.0, 7.0},
    };
    return p;
}

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

void check_rate(double v, const std::string& name) {
    require(std::isfinite(v) && v >= 0.0 && v <= 1.0, name + " must be in [0, 1]");
}

void check_range(double lo, double hi, const std::string& name) {
    require(std::isfinite(lo) && std::isfinite(hi) && lo <= hi,
            name + " range must satisfy min <= max");
}

} // namespace

void ModelParams::validate() const {
    require(num_agents >= 1, "agents must be >= 1");
    require(horizon >= 1, "horizon must be >= 1");
    require(std::isfinite(env_amplitude) && env_amplitude > 0.0,
            "env_amplitude must be > 0");
    require(std::isfinite(credit_limit_multiple) && credit_limit_multiple > 0.0,
            "credit_limit_multiple must be > 0");
    check_rate(repayment_rate, "repayment_rate");
    check_rate(invest_fraction, "invest_fraction");
    check_rate(roi_rate, "roi_rate");
    check_rate(expense_growth, "expense_growth");
    check_rate(env_steepness, "env_steepness");
    check_rate(tax_growth, "tax_growth");
    check_rate(income_decay, "income_decay");
    check_rate(welfare_decay, "welfare_decay");

    require(!groups.empty(), "at least one income group is required");
    double total = 0.0;
    for (const auto& g : groups) {
        require(!g.name.empty(), "group name must not be empty");
        require(std::isfinite(g.population_fraction) && g.population_fraction >= 0.0,
                "group fraction must be >= 0");
        total += g.population_fraction;
        check_rate(g.tax_rate, "tax_rate of group " + g.name);
        check_rate(g.expense_rate, "expense_rate of group " + g.name);
        check_range(g.income_min, g.income_max, "income of group " + g.name);
        check_range(g.inherited_min, g.inherited_max, "inherited of group " + g.name);
        check_range(g.welfare_min, g.welfare_max, "welfare of group " + g.name);
        require(g.income_min >= 0.0 && g.inherited_min >= 0.0 && g.welfare_min >= 0.0,
                "draw ranges of group " + g.name + " must be non-negative");
    }
    require(std::fabs(total - 1.0) <= 1e-9, "group fractions must sum to 1");
}

ScenarioConfig ScenarioConfig::preset(std::string_view label) {
    ScenarioConfig s;
    s.expense_growth = true;
    if (label == "1") return s;
    s.env_decay = true;
    if (label == "2") return s;
    s.tax_growth = true;
    if (label == "3") return s;
    s.welfare_decay = true;
    if (label == "4") return s;
    s.income_decay = true;
    if (label == "5a") return s;
    if (label == "5b") {
        s.expense_baseline = ExpenseBaseline::InitialIncome;
        return s;
    }
    throw std::invalid_argument("unknown scenario '" + std::string(label) +
                                "' (expected 1, 2, 3, 4, 5a or 5b)");
}

const std::vector<ScenarioConfig>& ScenarioConfig::default_set() {
    static const std::vector<ScenarioConfig> all = {
        preset("1"), preset("2"), preset("3"),
        preset("4"), preset("5a"), preset("5b"),
    };
    return all;
}

std::string ScenarioConfig::label() const {
    for (const char* name : {"1", "2", "3", "4", "5a", "5b"}) {
        if (*this == preset(name)) return name;
    }
    std::string out = "custom";
    out += expense_growth ? "-exp" : "";
    out += env_decay ? "-env" : "";
    out += tax_growth ? "-tax" : "";
    out += welfare_decay ? "-wlf" : "";
    out += income_decay ? "-inc" : "";
    if (expense_baseline == ExpenseBaseline::InitialIncome) out += "-base0";
    return out;
}

} // namespace ecodyn
