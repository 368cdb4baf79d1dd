#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tpm/map.hpp"

namespace tpm {

/// One map in the pipeline with where it came from.
struct Task {
    TorusMap map;
    std::string key;     // hex canonical key (marks included)
    std::string parent;  // parent key, empty for seeds
    std::string via;     // what was added
    int faces() const { return map.face_count(); }
};

/// "<serial> | marks=1-4,2-5 | parent=<hex> | via=<text> | faces=N"; every
/// field after the serial form is optional. A trailing "note=" field is
/// accepted and ignored when parsing.
std::string format_record(const Task& task);
/// Parses a record line; the key is left empty. Throws ParseError.
Task parse_record(std::string_view line);

enum class TaskStatus { Pending, Processing, Processed, Emitted, Pruned };
std::string_view to_string(TaskStatus status);

struct StoreStats {
    long pending = 0;
    long processing = 0;
    long processed = 0;
    long emitted = 0;
    long pruned = 0;
    long total() const { return pending + processing + processed + emitted + pruned; }
    friend bool operator==(const StoreStats&, const StoreStats&) = default;
};

/// Thrown when a checkpoint cannot be read back.
class StoreError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Deduplicating frontier keyed by canonical key, dequeuing by (faces, key).
/// All members are safe to call concurrently.
class FrontierStore {
public:
    FrontierStore();
    ~FrontierStore();
    FrontierStore(FrontierStore&&) noexcept;
    FrontierStore& operator=(FrontierStore&&) noexcept;

    /// Enqueues the task unless its key was seen before.
    bool insert_if_new(Task task);
    /// Least pending task, now marked processing.
    std::optional<Task> next_task();
    /// Moves a processing task to its final status. `note` holds the prune
    /// reason or why the task was dropped.
    void finish(const std::string& key, TaskStatus status, const std::string& note = {});

    bool contains(const std::string& key) const;
    std::optional<TaskStatus> status(const std::string& key) const;
    StoreStats stats() const;
    /// Emitted tasks ordered by key.
    std::vector<Task> emitted() const;
    /// (key, note) for every pruned task, ordered by key.
    std::vector<std::pair<std::string, std::string>> prune_log() const;

    /// Writes a digest-protected snapshot into `dir` and starts a fresh
    /// journal there; later changes are appended to the journal.
    void checkpoint(const std::filesystem::path& dir);
    /// Snapshot plus journal replay. Tasks that were processing go back to
    /// pending. Throws StoreError on a missing, truncated or corrupt file.
    static FrontierStore resume(const std::filesystem::path& dir);

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace tpm
