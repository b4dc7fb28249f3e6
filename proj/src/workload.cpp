#include "rlhfsim/workload.hpp"

#include <algorithm>

#include "rlhfsim/errors.hpp"

namespace rlhfsim {

const char* to_string(ModelName m) {
  switch (m) {
    case ModelName::Actor: return "Actor";
    case ModelName::Critic: return "Critic";
    case ModelName::Ref: return "Ref";
    case ModelName::Reward: return "Reward";
    case ModelName::ShadowActor: return "ShadowActor";
    case ModelName::ShadowCritic: return "ShadowCritic";
  }
  return "?";
}

const char* to_string(TaskKind k) {
  switch (k) {
    case TaskKind::Generation: return "Generation";
    case TaskKind::Forward: return "Forward";
    case TaskKind::TrainFB: return "TrainFB";
    case TaskKind::Collective: return "Collective";
    case TaskKind::ParamSync: return "ParamSync";
    case TaskKind::Barrier: return "Barrier";
  }
  return "?";
}

const char* to_string(Stage s) {
  switch (s) {
    case Stage::Generation: return "generation";
    case Stage::Forward: return "forward";
    case Stage::Training: return "training";
    case Stage::Sync: return "sync";
  }
  return "?";
}

ModelName model_name_from_string(const std::string& s) {
  if (s == "Actor") return ModelName::Actor;
  if (s == "Critic") return ModelName::Critic;
  if (s == "Ref") return ModelName::Ref;
  if (s == "Reward") return ModelName::Reward;
  if (s == "ShadowActor") return ModelName::ShadowActor;
  if (s == "ShadowCritic") return ModelName::ShadowCritic;
  throw ConfigError("unknown model name: " + s);
}

bool PipelineSpec::has_model(ModelName m) const {
  return std::any_of(models.begin(), models.end(),
                     [m](const ModelSpec& s) { return s.name == m; });
}

const ModelSpec& PipelineSpec::model(ModelName m) const {
  for (const auto& s : models)
    if (s.name == m) return s;
  throw ConfigError(std::string("pipeline has no model ") + to_string(m));
}

PipelineSpec build_pipeline(PipelineStructure structure, const ModelSizes& sizes,
                            const LoopParams& loop) {
  if (loop.batch_size < 1) throw ConfigError("batch_size must be >= 1");
  if (loop.gen_len < 1 || loop.prompt_len < 1)
    throw ConfigError("prompt_len and gen_len must be >= 1");
  if (loop.micro_batches < 1) throw ConfigError("micro_batches must be >= 1");
  if (loop.batch_size % loop.micro_batches != 0)
    throw ConfigError("batch_size must be divisible by micro_batches");
  if (loop.rollout_nums < 1 || loop.ppo_epochs < 1)
    throw ConfigError("rollout_nums and ppo_epochs must be >= 1");
  if (sizes.actor <= 0 || sizes.ref <= 0 || sizes.reward <= 0)
    throw ConfigError("model sizes must be positive");

  PipelineSpec p;
  p.structure = structure;
  p.batch_size = loop.batch_size;
  p.prompt_len = loop.prompt_len;
  p.gen_len = loop.gen_len;
  p.rollout_nums = loop.rollout_nums;
  p.ppo_epochs = loop.ppo_epochs;
  p.micro_batches = loop.micro_batches;
  p.grad_checkpoint = loop.grad_checkpoint;

  p.models.push_back({ModelName::Actor, sizes.actor, true, sizes.lora_dim});
  if (structure == PipelineStructure::ACNonShare) {
    double critic = sizes.critic > 0 ? sizes.critic : sizes.actor;
    p.models.push_back({ModelName::Critic, critic, true, sizes.lora_dim});
  } else if (sizes.critic > 0 && sizes.critic != sizes.actor) {
    throw ConfigError("AC-Share forbids a distinct Critic size");
  }
  p.models.push_back({ModelName::Ref, sizes.ref, false, 0});
  p.models.push_back({ModelName::Reward, sizes.reward, false, 0});
  return p;
}

PipelineSpec with_shadows(const PipelineSpec& p) {
  PipelineSpec out = p;
  if (!out.has_model(ModelName::ShadowActor))
    out.models.push_back({ModelName::ShadowActor, p.model(ModelName::Actor).param_count, false, 0});
  if (p.has_model(ModelName::Critic) && !out.has_model(ModelName::ShadowCritic))
    out.models.push_back(
        {ModelName::ShadowCritic, p.model(ModelName::Critic).param_count, false, 0});
  return out;
}

std::vector<StageTask> task_graph(const PipelineSpec& p, bool shadows) {
  if (shadows && !p.has_model(ModelName::ShadowActor))
    throw ConfigError("task_graph: shadows requested but pipeline lacks shadow entries");

  ModelName gen_model = shadows ? ModelName::ShadowActor : ModelName::Actor;
  std::vector<ModelName> fwd_models;
  if (shadows) {
    fwd_models = {ModelName::ShadowActor, ModelName::ShadowCritic, ModelName::Ref,
                  ModelName::Reward};
  } else if (p.structure == PipelineStructure::ACNonShare) {
    fwd_models = {ModelName::Actor, ModelName::Critic, ModelName::Ref, ModelName::Reward};
  } else {
    fwd_models = {ModelName::Actor, ModelName::Ref, ModelName::Reward};
  }
  fwd_models.erase(std::remove_if(fwd_models.begin(), fwd_models.end(),
                                  [&](ModelName m) { return !p.has_model(m); }),
                   fwd_models.end());
  std::vector<ModelName> train_models;
  for (ModelName m : {ModelName::Actor, ModelName::Critic})
    if (p.has_model(m) && p.model(m).trainable) train_models.push_back(m);

  std::vector<StageTask> tasks;
  auto add = [&](TaskKind kind, ModelName model, int mb, int rollout, int epoch,
                 std::vector<int> deps) {
    StageTask t;
    t.id = static_cast<int>(tasks.size());
    t.kind = kind;
    t.model = model;
    t.micro_batch_index = mb;
    t.rollout_index = rollout;
    t.epoch_index = epoch;
    t.depends_on = std::move(deps);
    tasks.push_back(t);
    return t.id;
  };

  std::vector<int> all_forwards;
  for (int r = 0; r < p.rollout_nums; ++r) {
    for (int mb = 0; mb < p.micro_batches; ++mb) {
      int g = add(TaskKind::Generation, gen_model, mb, r, 0, {});
      for (ModelName m : fwd_models)
        all_forwards.push_back(add(TaskKind::Forward, m, mb, r, 0, {g}));
    }
  }
  // experience buffer barrier: training waits for every forward of the rollout set
  std::vector<int> prev = all_forwards;
  std::vector<int> last_epoch;
  for (int e = 0; e < p.ppo_epochs; ++e) {
    std::vector<int> epoch_ids;
    for (int mb = 0; mb < p.micro_batches; ++mb)
      for (ModelName m : train_models)
        epoch_ids.push_back(add(TaskKind::TrainFB, m, mb, 0, e, prev));
    prev = epoch_ids;
    last_epoch = epoch_ids;
  }
  if (shadows) {
    std::vector<std::pair<ModelName, ModelName>> syncs = {
        {ModelName::Actor, ModelName::ShadowActor}};
    if (p.has_model(ModelName::ShadowCritic))
      syncs.push_back({ModelName::Critic, ModelName::ShadowCritic});
    std::vector<int> sync_ids;
    for (auto& [src, dst] : syncs)
      sync_ids.push_back(add(TaskKind::ParamSync, dst, 0, 0, 0, last_epoch));
    add(TaskKind::Barrier, ModelName::Actor, 0, 0, 0, sync_ids);
  }
  return tasks;
}

}  // namespace rlhfsim
