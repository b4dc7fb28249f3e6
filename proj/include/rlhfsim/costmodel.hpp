#pragma once

#include <optional>
#include <vector>

#include "rlhfsim/topology.hpp"
#include "rlhfsim/workload.hpp"

namespace rlhfsim {

struct MemoryConstants {
  double bytes_train_per_param = 16.0;  // 2 param + 2 grad + 12 optimizer
  double bytes_infer_per_param = 2.0;
  double lora_fraction = 0.01;          // grad+optimizer scale under LoRA
  double activation_coeff = 64.0;       // bytes per token per sqrt(param)
  double activation_infer_factor = 0.15;  // kv-cache-class share for inference models
  double grad_ckpt_factor = 0.25;
  double oom_threshold = 0.95;
};

struct CommConstants {
  double alpha = 1e-5;       // per-message latency, seconds
  double mfu_gen = 0.05;     // decode MFU, mixed training/inference runtime
  double mfu_fwd = 0.30;
  double mfu_train = 0.35;
  double mfu_gen_infer = 0.045;  // decode MFU on dedicated inference devices
  double token_record_bytes = 8.0;
  double output_record_bytes = 4.0;
};

struct CostModel {
  MemoryConstants mem;
  CommConstants comm;
};

struct ParallelCfg {
  int dp_degree = 1;
  int zero_level = 0;
  int tp_degree = 1;
  std::vector<int> devices;  // ordered, |devices| = dp*tp, tp-major within replica
  bool inference_runtime = false;
};

// Throws ConfigError on invariant violations (tp spanning nodes, zero on
// inference model, size mismatch).
void validate_parallel_cfg(const ParallelCfg& cfg, const ClusterTopology& t, bool trainable);

double model_state_bytes(const ModelSpec& m, const ParallelCfg& cfg, const MemoryConstants& c);
double activation_bytes(const PipelineSpec& p, const ModelSpec& m, const ParallelCfg& cfg,
                        const MemoryConstants& c);

enum class CollectiveKind { AllGather, ReduceScatter, AllReduce, AlltoAll, Broadcast, P2P };
const char* to_string(CollectiveKind k);

double collective_time(CollectiveKind kind, double size_bytes, const std::vector<int>& group,
                       const ClusterTopology& t, const CommConstants& c);

// Ring volume per rank moved by one training pass under the configured ZeRO level.
double zero_step_comm_bytes(const ModelSpec& m, const ParallelCfg& cfg,
                            const MemoryConstants& c);

// Pure compute time of one task (no ZeRO gathers, no collectives).
double stage_compute_time(TaskKind kind, const ModelSpec& m, const ParallelCfg& cfg,
                          const PipelineSpec& p, const ClusterTopology& t, const CostModel& c);

// dp-group of tp-rank 0 (one device per replica), used for ZeRO collectives.
std::vector<int> dp_subgroup(const ParallelCfg& cfg);

// Serial ZeRO-induced communication folded into a task's duration:
// zero_level 3 pays parameter AllGathers per forward pass (per decode token for
// generation, twice for train fwd+bwd); gradient sync once per epoch.
double task_zero_comm_time(TaskKind kind, const ModelSpec& m, const ParallelCfg& cfg,
                           const PipelineSpec& p, const ClusterTopology& t, const CostModel& c,
                           bool last_micro_batch);

struct PlacementPlan;  // placement.hpp

struct CalibrationObservation {
  const ClusterTopology* topology = nullptr;
  const PipelineSpec* pipeline = nullptr;
  const PlacementPlan* plan = nullptr;
  double measured_step_seconds = 0;
  std::optional<double> generation_fraction;  // stage split of the measurement
};

// Deterministic nested bisection: scales (mfu_fwd, mfu_train) to the
// non-generation share, then fits mfu_gen to the generation share. With no
// fraction given, only mfu_gen is fitted to the total step time.
CommConstants calibrate(const CommConstants& c,
                        const std::vector<CalibrationObservation>& observations);

}  // namespace rlhfsim
