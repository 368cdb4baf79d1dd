#include "tpm/pipeline.hpp"

#include <condition_variable>
#include <map>
#include <mutex>
#include <thread>

namespace tpm {

Task make_task(const TorusMap& map, std::string parent, std::string via) {
    const KeyOptions opts{Symmetry::WithReflections, true};
    auto form = canonical_form(map, opts);
    return Task{canonical_map(map, opts), form.key.hex(), std::move(parent), std::move(via)};
}

std::string emission_key(const TorusMap& map) { return canonical_key(map).hex(); }

StepResult pipeline_step(const Task& task, FrontierStore& store, const PipelineOptions& options) {
    StepResult r;
    const auto verdict = classify(task.map);
    r.status = verdict.status;
    switch (verdict.status) {
    case Status::DiminimalTPM:
        r.pruned = prune(task.map, options.prune);
        if (r.pruned) {
            r.note = std::string(to_string(*r.pruned));
            store.finish(task.key, TaskStatus::Pruned, r.note);
        } else {
            r.emitted = true;
            store.finish(task.key, TaskStatus::Emitted);
        }
        return r;
    case Status::PolyhedralNotDiminimal:
        r.note = std::string(to_string(verdict.status));
        store.finish(task.key, TaskStatus::Processed, r.note);
        return r;
    case Status::NotPolyhedral:
        break;
    }
    r.pruned = prune(task.map, options.prune);
    if (r.pruned) {
        r.note = std::string(to_string(*r.pruned));
        store.finish(task.key, TaskStatus::Pruned, r.note);
        return r;
    }
    if (task.faces() + 1 > options.max_faces) {
        r.face_bound = true;
        r.note = "FACE_BOUND";
        store.finish(task.key, TaskStatus::Processed, r.note);
        return r;
    }
    for (auto& s : improper_pair_expansions(task.map, options.expansion)) {
        if (s.map.face_count() > options.max_faces) continue;
        Task t = make_task(s.map, task.key, s.via);
        if (store.insert_if_new(t)) r.new_tasks.push_back(std::move(t));
    }
    r.note = "EXPANDED";
    store.finish(task.key, TaskStatus::Processed, r.note);
    return r;
}

RunSummary run_pipeline(FrontierStore& store, const PipelineOptions& options,
                        const std::optional<std::filesystem::path>& checkpoint_dir) {
    std::mutex mu;
    std::condition_variable cv;
    int in_flight = 0;
    RunSummary summary;
    bool stop = false;
    std::exception_ptr failure;

    auto worker = [&] {
        while (true) {
            std::optional<Task> task;
            {
                std::unique_lock lock(mu);
                while (true) {
                    if (stop) return;
                    if (options.step_limit > 0 && summary.steps >= options.step_limit) return;
                    task = store.next_task();
                    if (task) break;
                    if (in_flight == 0) {
                        summary.finished = true;
                        cv.notify_all();
                        return;
                    }
                    cv.wait(lock);
                }
                ++in_flight;
                ++summary.steps;
            }
            try {
                pipeline_step(*task, store, options);
            } catch (...) {
                std::lock_guard lock(mu);
                if (!failure) failure = std::current_exception();
                stop = true;
            }
            std::lock_guard lock(mu);
            --in_flight;
            if (checkpoint_dir && options.checkpoint_every > 0 && summary.steps % options.checkpoint_every == 0) {
                store.checkpoint(*checkpoint_dir);
            }
            cv.notify_all();
        }
    };

    const int n = std::max(1, options.threads);
    if (n == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < n; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    if (checkpoint_dir) store.checkpoint(*checkpoint_dir);
    return summary;
}

std::vector<std::pair<std::string, TorusMap>> emitted_maps(const FrontierStore& store) {
    std::map<std::string, TorusMap> by_key;
    for (const auto& t : store.emitted()) {
        const TorusMap plain = t.map.with_marks({});
        auto key = emission_key(plain);
        if (!by_key.count(key)) by_key.emplace(key, canonical_map(plain));
    }
    return {by_key.begin(), by_key.end()};
}

}  // namespace tpm
