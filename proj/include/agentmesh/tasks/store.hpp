#pragma once

#include "agentmesh/common/errors.hpp"
#include "agentmesh/common/json.hpp"

#include <cstdint>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace agentmesh::tasks {

enum class TaskState { created, in_progress, completed, failed };

std::string to_string(TaskState state);
std::optional<TaskState> task_state_from_string(const std::string& text);

// The complete transition relation; everything else is illegal.
// failed -> in_progress is the retry edge.
bool is_legal_transition(TaskState from, TaskState to);

enum class ArtifactKind { document, structured_data };

std::string to_string(ArtifactKind kind);
std::optional<ArtifactKind> artifact_kind_from_string(const std::string& text);

struct Artifact {
    std::string artifact_id;
    ArtifactKind kind = ArtifactKind::document;
    json content; // text for document, structured map otherwise
    std::map<std::string, std::string> metadata;

    bool operator==(const Artifact&) const = default;
};

json to_json(const Artifact& artifact);

struct RetryPolicy {
    int max_attempts = 3;
    std::int64_t backoff_base_ms = 100; // attempt n waits backoff_base_ms * 2^(n-1)
};

struct Task {
    std::string task_id;
    std::string task_type;
    json parameters = json::object();
    TaskState state = TaskState::created;
    std::vector<std::pair<TaskState, std::string>> history; // (state, timestamp)
    std::vector<Artifact> artifacts;
    std::optional<TaskError> error; // present iff state == failed
    int attempts = 0;
};

json to_json(const Task& task);

// Result of fail_task: the task after the operation plus the retry delay
// scheduled when the failure was retryable and attempts remained.
struct FailOutcome {
    Task task;
    std::optional<std::int64_t> retry_delay_ms;
};

// In-memory task store. Operations on a single task are serialized by the
// store lock; an optional JSON-lines event log records every state entry
// as {task_id, state, timestamp, attempts}.
class TaskStore {
public:
    TaskStore() = default;
    explicit TaskStore(const std::string& event_log_path);

    // state=created, attempts=0, fresh UUID, one history entry.
    // Throws TaskOpError(PARAM_INVALID) on empty task_type.
    Task create_task(const std::string& task_type, json parameters = json::object());

    // Applies the transition relation; anything outside it throws
    // TaskOpError(ILLEGAL_TRANSITION) and leaves the task unchanged.
    Task transition_task(const std::string& task_id, TaskState new_state);

    // in_progress -> completed with artifacts attached.
    // Throws TaskOpError(DUPLICATE_ARTIFACT) on repeated artifact ids.
    Task complete_task(const std::string& task_id, std::vector<Artifact> artifacts);

    // in_progress -> failed. Retryable errors with attempts left re-enter
    // in_progress (attempts incremented, geometric backoff delay reported);
    // otherwise the failure is terminal and the error is recorded.
    FailOutcome fail_task(const std::string& task_id, const TaskError& error,
                          const RetryPolicy& policy);

    std::optional<Task> get_task(const std::string& task_id) const;
    std::vector<Task> all_tasks() const; // task_id ascending

private:
    Task& locked_task(const std::string& task_id);
    void enter_state(Task& task, TaskState state);
    void log_event(const Task& task);

    mutable std::mutex mutex_;
    std::map<std::string, Task> tasks_;
    std::ofstream event_log_;
};

} // namespace agentmesh::tasks
