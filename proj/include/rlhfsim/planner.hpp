#pragma once

#include <string>
#include <vector>

#include "rlhfsim/simulator.hpp"

namespace rlhfsim {

struct Recommendation {
  PlacementPlan plan;
  PipelineSpec pipeline;  // batch raised to the searched maximum
  std::vector<std::string> rationale;
  SimReport predicted;
};

// Guideline cascade. Throws InfeasibleError when nothing feasible exists.
Recommendation recommend(const ClusterTopology& t, const PipelineSpec& p, const CostModel& c);

struct SearchBounds {
  int max_candidates = 10000;
  std::vector<StrategyTag> strategies;  // empty: all applicable
};

struct SearchResult {
  PlacementPlan plan;
  PipelineSpec pipeline;
  SimReport report;
  int candidates_total = 0;
  int candidates_feasible = 0;
};

// Bounded grid enumeration; argmax throughput, ties by lower memory peak then
// lexicographic plan encoding. Throws SearchCapError when the space exceeds
// the cap, InfeasibleError when no candidate is feasible.
SearchResult exhaustive_search(const ClusterTopology& t, const PipelineSpec& p,
                               const CostModel& c, const SearchBounds& bounds = {});

}  // namespace rlhfsim
