#pragma once

#include <cstdint>
#include <vector>

#include "ecodyn/agent.hpp"
#include "ecodyn/params.hpp"
#include "ecodyn/rng.hpp"

namespace ecodyn {

/// Group sizes by largest-remainder rounding of fraction * N.
/// Throws if fractions do not sum to 1 within 1e-9.
std::vector<int> group_sizes(const ModelParams& params);

/// Builds the initial population in group-block order (groups as listed,
/// agents indexed 0..N-1). Two draws per agent, in index order:
/// income_baseline ~ U[income_min, income_max) then
/// inherited ~ U[inherited_min, inherited_max).
/// credit_limit_remaining = credit_limit_multiple * income_baseline;
/// all other stocks start at zero.
std::vector<AgentState> build_population(const ModelParams& params, UniformRng& rng);

std::vector<AgentState> build_population(const ModelParams& params, std::uint64_t seed);

} // namespace ecodyn
