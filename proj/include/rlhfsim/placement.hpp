#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rlhfsim/costmodel.hpp"
#include "rlhfsim/topology.hpp"
#include "rlhfsim/workload.hpp"

namespace rlhfsim {

enum class StrategyTag {
  Colocated,
  Interleaving1,
  Interleaving2,
  Disaggregated,
  HeteroDisaggregated,
  TrlxStandalone,
  TrlxCoexisted,
  RatioVector,
};
const char* to_string(StrategyTag s);
StrategyTag strategy_from_string(const std::string& s);

enum class DeviceRole { Training, Inference, Mixed };

struct PlacementRatioVector {
  // declaration order decides disjoint packing for equal sub-unit ratios
  std::vector<std::pair<ModelName, double>> ratios;
};

struct PlacementPlan {
  std::map<ModelName, ParallelCfg> assignments;
  StrategyTag strategy_tag = StrategyTag::Colocated;
  bool hybrid_engine = false;
  std::map<int, DeviceRole> device_role;

  const ParallelCfg& cfg(ModelName m) const;
  bool has(ModelName m) const { return assignments.count(m) > 0; }
  std::string encoding() const;  // deterministic, used for tie-breaks
};

PlacementPlan apply_ratio(const PlacementRatioVector& rv, const ClusterTopology& t,
                          const PipelineSpec& p, int zero_level);

PlacementPlan colocated_plan(const ClusterTopology& t, const PipelineSpec& p,
                             bool hybrid_engine, int zero_level, int tp_degree = 1);

PlacementPlan interleaving_plan(const ClusterTopology& t, const PipelineSpec& p, int variant,
                                int zero_level);

struct DisaggregatedOptions {
  double inference_ratio = 0.5;
  int tp_gen = 8;
  int zero_train = 3;
  int gen_nodes = 0;  // 0: half of the inference nodes (at least one)
};

// Pipeline must already carry shadow entries (with_shadows).
PlacementPlan disaggregated_plan(const ClusterTopology& t, const PipelineSpec& p,
                                 const DisaggregatedOptions& opts);

struct HeteroRoleMap {
  std::string inference_kind = "V100";
  int ref_tp = 4;
  int reward_tp = 4;
  int shadow_actor_devices = 2;
  int shadow_critic_devices = 2;
  int zero_train = 3;
};

PlacementPlan heterogeneous_disaggregated_plan(const ClusterTopology& t, const PipelineSpec& p,
                                               const HeteroRoleMap& roles);

enum class TrlxMode { Standalone, Coexisted };
PlacementPlan trlx_plan(const ClusterTopology& t, const PipelineSpec& p, TrlxMode mode,
                        int zero_level = 2);

enum class AttachKind { Before, After };

struct CommOp {
  CollectiveKind kind = CollectiveKind::AllGather;
  ModelName model = ModelName::Actor;
  std::vector<int> group;
  double payload_bytes = 0;
  AttachKind attach = AttachKind::Before;
  int anchor_task = -1;
  Stage stage = Stage::Forward;
  // resolved dependency edges against the task graph
  std::vector<int> deps;
  std::vector<int> gates;  // tasks that must wait for this op
};

struct CommSchedule {
  std::vector<CommOp> ops;
};

// Ops are resolved against task_graph(p, plan-has-shadows).
CommSchedule derive_comm_schedule(const PlacementPlan& plan, const PipelineSpec& p,
                                  const CostModel& c);

struct FeasibilityReport {
  bool feasible = true;
  struct Offender {
    int device = 0;
    double required_bytes = 0;
    double budget_bytes = 0;
    double shortfall_bytes = 0;
  };
  std::vector<Offender> offenders;
  std::map<int, double> per_device_bytes;
};

FeasibilityReport validate_plan(const PlacementPlan& plan, const PipelineSpec& p,
                                const CostModel& c, const ClusterTopology& t);

}  // namespace rlhfsim
