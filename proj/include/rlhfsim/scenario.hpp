#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rlhfsim/planner.hpp"

namespace rlhfsim {

// Strategy section of a scenario config.
struct StrategyConfig {
  std::string name = "colocated";  // colocated | interleaving1 | interleaving2 |
                                   // disaggregated | hetero_disaggregated |
                                   // trlx_standalone | trlx_coexisted | ratio_vector
  bool hybrid_engine = false;
  int zero_level = 0;
  int tp_degree = 1;
  double inference_ratio = 0.5;
  int tp_gen = 8;
  int gen_nodes = 0;
  std::optional<int> batch_override;     // pin the batch instead of max-batch search
  bool use_max_batch = true;
  HeteroRoleMap hetero;
  std::vector<std::pair<ModelName, double>> ratios;  // ratio_vector only
};

struct Scenario {
  TopologySpec topology;
  PipelineStructure structure = PipelineStructure::ACNonShare;
  ModelSizes sizes;
  LoopParams loop;
  CostModel cost;
  std::vector<StrategyConfig> strategies;  // >=1; compare uses all
  SimOptions sim;
};

// Strict parser: unknown keys rejected, units are human (GB, TFLOPs, GB/s).
Scenario parse_scenario_json(const std::string& text);
Scenario load_scenario(const std::string& path);

struct BuiltStrategy {
  PlacementPlan plan;
  PipelineSpec pipeline;  // shadows added when the strategy needs them
};

BuiltStrategy build_strategy(const StrategyConfig& sc, const ClusterTopology& t,
                             const PipelineSpec& base);

// Per strategy: feasibility, max batch, throughput, stage fractions, comm bytes;
// sorted by throughput descending, infeasible rows last.
std::vector<StrategyResult> compare_strategies(const Scenario& s, const ClusterTopology& t);

}  // namespace rlhfsim
