#pragma once

#include <string>

#include "rental/distribution.hpp"
#include "rental/reward.hpp"

namespace rental {

// Parses {"kind":"uniform","lo":..,"hi":..} or
// {"kind":"grid","cdf_points":[[v,F],...],"quantile_grid":..}.
Distribution distribution_from_json(const std::string& text);
std::string distribution_to_json(const Distribution& d);

// Parses {"class":"linear","alpha":..,"beta":..[,"tradeoff":"negative"]} or
// {"class":"welfare","f_points":[[v,f],...]}. Negative tradeoff may be given
// either as tradeoff:"negative" with positive beta (the alpha v - beta p
// form) or directly as a signed beta < 0.
RewardFn reward_from_json(const std::string& text);

} // namespace rental
