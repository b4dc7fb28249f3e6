#pragma once

#include <string>
#include <vector>

namespace rlhfsim {

enum class ModelName { Actor, Critic, Ref, Reward, ShadowActor, ShadowCritic };
enum class PipelineStructure { ACShare, ACNonShare };
enum class TaskKind { Generation, Forward, TrainFB, Collective, ParamSync, Barrier };
enum class Stage { Generation, Forward, Training, Sync };

const char* to_string(ModelName m);
const char* to_string(TaskKind k);
const char* to_string(Stage s);
ModelName model_name_from_string(const std::string& s);

struct ModelSpec {
  ModelName name = ModelName::Actor;
  double param_count = 0;
  bool trainable = false;
  int lora_dim = 0;  // 0 = full fine-tune
};

struct ModelSizes {
  double actor = 0;
  double critic = 0;  // ignored (must be 0 or == actor) for AC-Share
  double ref = 0;
  double reward = 0;
  int lora_dim = 0;
};

struct LoopParams {
  int batch_size = 1;
  int prompt_len = 256;
  int gen_len = 256;
  int rollout_nums = 1;
  int ppo_epochs = 1;
  int micro_batches = 1;
  bool grad_checkpoint = false;
};

struct PipelineSpec {
  PipelineStructure structure = PipelineStructure::ACNonShare;
  std::vector<ModelSpec> models;
  int batch_size = 1;
  int prompt_len = 256;
  int gen_len = 256;
  int rollout_nums = 1;
  int ppo_epochs = 1;
  int micro_batches = 1;
  bool grad_checkpoint = false;

  bool has_model(ModelName m) const;
  const ModelSpec& model(ModelName m) const;
  int seq_len() const { return prompt_len + gen_len; }
};

PipelineSpec build_pipeline(PipelineStructure structure, const ModelSizes& sizes,
                            const LoopParams& loop);

// Copy with inference-only shadow replicas of the trainable models appended.
PipelineSpec with_shadows(const PipelineSpec& p);

struct StageTask {
  int id = 0;
  TaskKind kind = TaskKind::Generation;
  ModelName model = ModelName::Actor;
  int micro_batch_index = 0;
  int rollout_index = 0;
  int epoch_index = 0;
  std::vector<int> depends_on;
};

// One iteration's task DAG. With shadows, Generation/Forward bind to the shadow
// models and a terminal ParamSync barrier is appended.
std::vector<StageTask> task_graph(const PipelineSpec& p, bool shadows);

}  // namespace rlhfsim
