#include "ecodyn/population.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ecodyn {

std::vector<int> group_sizes(const ModelParams& params) {
    const int n = params.num_agents;
    const auto& groups = params.groups;
    double total = 0.0;
    for (const auto& g : groups) total += g.population_fraction;
    if (std::fabs(total - 1.0) > 1e-9)
        throw std::invalid_argument("group fractions must sum to 1");

    std::vector<int> sizes(groups.size());
    std::vector<double> remainders(groups.size());
    int assigned = 0;
    for (std::size_t j = 0; j < groups.size(); ++j) {
        const double exact = groups[j].population_fraction * n;
        sizes[j] = static_cast<int>(std::floor(exact));
        remainders[j] = exact - sizes[j];
        assigned += sizes[j];
    }
    // hand the leftover agents to the largest remainders, earlier group on ties
    std::vector<std::size_t> order(groups.size());
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return remainders[a] > remainders[b];
    });
    for (std::size_t k = 0; assigned < n; ++k) {
        if (k == order.size())
            throw std::invalid_argument("cannot distribute agents over groups");
        sizes[order[k]] += 1;
        assigned += 1;
    }
    return sizes;
}

std::vector<AgentState> build_population(const ModelParams& params, UniformRng& rng) {
    params.validate();
    const auto sizes = group_sizes(params);

    std::vector<AgentState> agents;
    agents.reserve(params.num_agents);
    int index = 0;
    for (std::size_t j = 0; j < params.groups.size(); ++j) {
        const auto& g = params.groups[j];
        for (int k = 0; k < sizes[j]; ++k) {
            AgentState a;
            a.index = index++;
            a.group = static_cast<int>(j);
            a.income_baseline = rng.uniform(g.income_min, g.income_max);
            a.inherited = rng.uniform(g.inherited_min, g.inherited_max);
            a.credit_limit_remaining = params.credit_limit_multiple * a.income_baseline;
            agents.push_back(a);
        }
    }
    return agents;
}

std::vector<AgentState> build_population(const ModelParams& params, std::uint64_t seed) {
    UniformRng rng(seed);
    return build_population(params, rng);
}

} // namespace ecodyn
