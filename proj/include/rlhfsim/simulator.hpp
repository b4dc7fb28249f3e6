#pragma once

#include <map>
#include <string>
#include <vector>

#include "rlhfsim/costmodel.hpp"
#include "rlhfsim/placement.hpp"

namespace rlhfsim {

struct SimOptions {
  bool overlap = true;
  int iterations = 1;
  bool allow_infeasible = false;
};

struct SimEvent {
  int task_id = 0;
  TaskKind kind = TaskKind::Generation;
  ModelName model = ModelName::Actor;
  int micro_batch = 0;
  Stage stage = Stage::Generation;
  bool comm_lane = false;
  double start = 0;
  double end = 0;
  std::vector<int> devices;
};

struct SimReport {
  double step_seconds = 0;
  double throughput_samples_per_sec = 0;
  std::map<Stage, double> per_stage_seconds;
  std::map<Stage, double> per_stage_fraction;
  std::map<int, double> per_device_mem_peak;
  std::map<int, double> per_device_busy_seconds;
  double comm_bytes_total = 0;
  double bubble_fraction = 0;
  Stage busiest_stage = Stage::Generation;
  bool feasible = true;  // false when simulated with allow_infeasible
  std::vector<SimEvent> events;

  double device_idle_fraction(int device) const;
};

SimReport simulate(const PlacementPlan& plan, const PipelineSpec& p, const CostModel& c,
                   const ClusterTopology& t, const SimOptions& opts = {});

// Chrome trace-event format; byte-stable across runs of the same config.
std::string emit_trace(const SimReport& report, const ClusterTopology& t);

// Largest batch for which validate_plan is feasible; 0 if batch 1 is infeasible.
int max_batch_search(const PlacementPlan& plan, const PipelineSpec& p, const CostModel& c,
                     const ClusterTopology& t, int cap = 4096);

struct StrategyResult {
  std::string name;
  bool feasible = false;
  int max_batch = 0;
  double throughput = 0;
  double step_seconds = 0;
  std::map<Stage, double> per_stage_fraction;
  double comm_bytes_total = 0;
};

}  // namespace rlhfsim
