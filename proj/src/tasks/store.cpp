#include "agentmesh/tasks/store.hpp"

#include "agentmesh/common/ids.hpp"

#include <algorithm>
#include <set>

namespace agentmesh::tasks {

std::string to_string(TaskState state) {
    switch (state) {
    case TaskState::created: return "created";
    case TaskState::in_progress: return "in_progress";
    case TaskState::completed: return "completed";
    case TaskState::failed: return "failed";
    }
    return "created";
}

std::optional<TaskState> task_state_from_string(const std::string& text) {
    if (text == "created") return TaskState::created;
    if (text == "in_progress") return TaskState::in_progress;
    if (text == "completed") return TaskState::completed;
    if (text == "failed") return TaskState::failed;
    return std::nullopt;
}

bool is_legal_transition(TaskState from, TaskState to) {
    return (from == TaskState::created && to == TaskState::in_progress) ||
           (from == TaskState::in_progress && to == TaskState::completed) ||
           (from == TaskState::in_progress && to == TaskState::failed) ||
           (from == TaskState::failed && to == TaskState::in_progress);
}

std::string to_string(ArtifactKind kind) {
    switch (kind) {
    case ArtifactKind::document: return "document";
    case ArtifactKind::structured_data: return "structured_data";
    }
    return "document";
}

std::optional<ArtifactKind> artifact_kind_from_string(const std::string& text) {
    if (text == "document") return ArtifactKind::document;
    if (text == "structured_data") return ArtifactKind::structured_data;
    return std::nullopt;
}

json to_json(const Artifact& artifact) {
    return json{
        {"artifact_id", artifact.artifact_id},
        {"kind", to_string(artifact.kind)},
        {"content", artifact.content},
        {"metadata", json(artifact.metadata)},
    };
}

json to_json(const Task& task) {
    json history = json::array();
    for (const auto& [state, timestamp] : task.history) {
        history.push_back(json{{"state", to_string(state)}, {"timestamp", timestamp}});
    }
    json artifacts = json::array();
    for (const Artifact& artifact : task.artifacts) artifacts.push_back(to_json(artifact));
    json value = json{
        {"task_id", task.task_id},
        {"task_type", task.task_type},
        {"parameters", task.parameters},
        {"state", to_string(task.state)},
        {"history", history},
        {"artifacts", artifacts},
        {"attempts", task.attempts},
    };
    if (task.error) value["error"] = to_json(*task.error);
    return value;
}

TaskStore::TaskStore(const std::string& event_log_path) {
    if (!event_log_path.empty()) {
        event_log_.open(event_log_path, std::ios::app);
        if (!event_log_) {
            throw ConfigError("cannot open task event log: " + event_log_path);
        }
    }
}

Task TaskStore::create_task(const std::string& task_type, json parameters) {
    if (task_type.empty()) {
        throw TaskOpError(errc::param_invalid, "task_type must be non-empty");
    }
    std::lock_guard lock(mutex_);
    Task task;
    task.task_id = uuid4();
    task.task_type = task_type;
    task.parameters = std::move(parameters);
    task.state = TaskState::created;
    task.history.emplace_back(TaskState::created, now_utc_iso8601());
    log_event(task);
    tasks_[task.task_id] = task;
    return task;
}

Task& TaskStore::locked_task(const std::string& task_id) {
    auto it = tasks_.find(task_id);
    if (it == tasks_.end()) {
        throw TaskOpError(errc::unknown_task, "no such task: " + task_id);
    }
    return it->second;
}

void TaskStore::enter_state(Task& task, TaskState state) {
    // history timestamps stay monotone even if the clock steps backwards
    std::int64_t now_s = unix_now_seconds();
    if (!task.history.empty()) {
        if (auto last = parse_utc_iso8601(task.history.back().second)) {
            now_s = std::max(now_s, *last);
        }
    }
    task.state = state;
    task.history.emplace_back(state, to_utc_iso8601(now_s));
    log_event(task);
}

void TaskStore::log_event(const Task& task) {
    if (!event_log_.is_open()) return;
    json event = json{
        {"task_id", task.task_id},
        {"state", to_string(task.state)},
        {"timestamp", task.history.back().second},
        {"attempts", task.attempts},
    };
    event_log_ << canonical_dump(event) << '\n';
    event_log_.flush();
}

Task TaskStore::transition_task(const std::string& task_id, TaskState new_state) {
    std::lock_guard lock(mutex_);
    Task& task = locked_task(task_id);
    if (!is_legal_transition(task.state, new_state)) {
        throw TaskOpError(errc::illegal_transition,
                          to_string(task.state) + " -> " + to_string(new_state));
    }
    if (task.state == TaskState::failed && new_state == TaskState::in_progress) {
        // the retry edge: one more attempt, the old error no longer applies
        task.attempts += 1;
        task.error.reset();
    }
    if (new_state == TaskState::failed && !task.error) {
        task.error = TaskError{errc::exec_failed, "task failed", false};
    }
    enter_state(task, new_state);
    return task;
}

Task TaskStore::complete_task(const std::string& task_id, std::vector<Artifact> artifacts) {
    std::lock_guard lock(mutex_);
    Task& task = locked_task(task_id);
    if (task.state != TaskState::in_progress) {
        throw TaskOpError(errc::illegal_transition,
                          to_string(task.state) + " -> completed");
    }
    std::set<std::string> ids;
    for (const Artifact& artifact : artifacts) {
        if (!ids.insert(artifact.artifact_id).second) {
            throw TaskOpError(errc::duplicate_artifact,
                              "artifact_id repeated: " + artifact.artifact_id);
        }
    }
    task.artifacts = std::move(artifacts);
    task.error.reset();
    enter_state(task, TaskState::completed);
    return task;
}

FailOutcome TaskStore::fail_task(const std::string& task_id, const TaskError& error,
                                 const RetryPolicy& policy) {
    if (!is_known_error_code(error.code)) {
        throw TaskOpError(errc::param_invalid, "unknown error code: " + error.code);
    }
    if (policy.max_attempts < 1 || policy.backoff_base_ms < 1) {
        throw TaskOpError(errc::param_invalid, "retry policy out of range");
    }
    std::lock_guard lock(mutex_);
    Task& task = locked_task(task_id);
    if (task.state != TaskState::in_progress) {
        throw TaskOpError(errc::illegal_transition,
                          to_string(task.state) + " -> failed");
    }
    task.error = error;
    enter_state(task, TaskState::failed);
    if (error.retryable && task.attempts < policy.max_attempts) {
        task.attempts += 1;
        task.error.reset();
        enter_state(task, TaskState::in_progress);
        std::int64_t delay = policy.backoff_base_ms << (task.attempts - 1);
        return FailOutcome{task, delay};
    }
    return FailOutcome{task, std::nullopt};
}

std::optional<Task> TaskStore::get_task(const std::string& task_id) const {
    std::lock_guard lock(mutex_);
    auto it = tasks_.find(task_id);
    if (it == tasks_.end()) return std::nullopt;
    return it->second;
}

std::vector<Task> TaskStore::all_tasks() const {
    std::lock_guard lock(mutex_);
    std::vector<Task> result;
    result.reserve(tasks_.size());
    for (const auto& [task_id, task] : tasks_) result.push_back(task);
    return result;
}

} // namespace agentmesh::tasks
