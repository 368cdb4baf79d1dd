#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tpm/generation.hpp"
#include "tpm/store.hpp"

namespace tpm {

/// Canonical (marked) representative of the map with its key filled in, so
/// that every key has one deterministic task map.
Task make_task(const TorusMap& map, std::string parent = {}, std::string via = {});

/// Hex canonical key ignoring marks, used to compare emissions with the catalog.
std::string emission_key(const TorusMap& map);

struct PipelineOptions {
    int max_faces = 10;
    int threads = 1;
    ExpansionOptions expansion;
    PruneOptions prune;
    /// Take a checkpoint after this many steps (0: only at the end).
    long checkpoint_every = 0;
    /// Stop after this many steps, leaving the rest pending (0: run to the end).
    long step_limit = 0;
};

struct StepResult {
    Status status = Status::NotPolyhedral;
    std::optional<PruneReason> pruned;
    bool emitted = false;
    bool face_bound = false;
    std::vector<Task> new_tasks;
    std::string note;
};

/// Classifies the task and either emits it, drops it, prunes it or expands it;
/// successors within the face bound go into the store. Records the outcome in
/// the store.
StepResult pipeline_step(const Task& task, FrontierStore& store, const PipelineOptions& options);

struct RunSummary {
    long steps = 0;
    bool finished = false;  // queue drained
};

/// Drains the store with options.threads workers. When `checkpoint_dir` is
/// set, checkpoints are written there periodically and at the end.
RunSummary run_pipeline(FrontierStore& store, const PipelineOptions& options,
                        const std::optional<std::filesystem::path>& checkpoint_dir = std::nullopt);

/// Emitted maps deduplicated by emission key, canonical and sorted by key.
std::vector<std::pair<std::string, TorusMap>> emitted_maps(const FrontierStore& store);

}  // namespace tpm
