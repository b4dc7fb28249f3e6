#pragma once

#include <string>
#include <vector>

#include "rlhfsim/scenario.hpp"

namespace rlhfsim {

// JSON report with the full resolved constants for provenance.
std::string report_json(const SimReport& r, const CostModel& c, const PlacementPlan& plan,
                        const PipelineSpec& p);

std::string compare_csv(const std::vector<StrategyResult>& rows);
std::string compare_table(const std::vector<StrategyResult>& rows);

}  // namespace rlhfsim
