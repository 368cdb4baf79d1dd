#include "tpm/store.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

namespace tpm {

namespace {

constexpr const char* kSnapshot = "snapshot.tpm";
constexpr const char* kJournal = "journal.log";
constexpr const char* kHeader = "tpm-store 1";

std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 0xcbf29ce484222325ULL) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(std::uint64_t x) {
    static const char* d = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i, x >>= 4) s[static_cast<std::size_t>(i)] = d[x & 0xf];
    return s;
}

std::vector<std::string> split(std::string_view s, std::string_view sep) {
    std::vector<std::string> out;
    std::size_t from = 0;
    while (true) {
        auto at = s.find(sep, from);
        if (at == std::string_view::npos) {
            out.emplace_back(s.substr(from));
            return out;
        }
        out.emplace_back(s.substr(from, at - from));
        from = at + sep.size();
    }
}

std::string_view trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

TaskStatus parse_status(std::string_view s) {
    for (auto st : {TaskStatus::Pending, TaskStatus::Processing, TaskStatus::Processed, TaskStatus::Emitted,
                    TaskStatus::Pruned}) {
        if (to_string(st) == s) return st;
    }
    throw StoreError("unknown status '" + std::string(s) + "'");
}

int parse_int(std::string_view s) {
    int x = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc() || p != s.data() + s.size()) throw StoreError("bad integer '" + std::string(s) + "'");
    return x;
}

}  // namespace

std::string format_record(const Task& task) {
    std::string s = serialize(task.map);
    if (!task.map.marks().empty()) s += " | marks=" + format_marks(task.map.marks());
    if (!task.parent.empty()) s += " | parent=" + task.parent;
    if (!task.via.empty()) s += " | via=" + task.via;
    s += " | faces=" + std::to_string(task.map.face_count());
    return s;
}

Task parse_record(std::string_view line) {
    auto fields = split(line, "|");
    std::vector<MarkedPath> marks;
    std::string parent;
    std::string via;
    std::optional<int> faces;
    for (std::size_t i = 1; i < fields.size(); ++i) {
        auto f = trim(fields[i]);
        auto eq = f.find('=');
        if (eq == std::string_view::npos) throw ParseError("record field without '=': " + std::string(f));
        auto name = f.substr(0, eq);
        auto value = f.substr(eq + 1);
        if (name == "marks") {
            marks = parse_marks(value);
        } else if (name == "parent") {
            parent = value;
        } else if (name == "via") {
            via = value;
        } else if (name == "faces") {
            int x = 0;
            auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), x);
            if (ec != std::errc() || p != value.data() + value.size()) throw ParseError("bad faces field");
            faces = x;
        } else if (name == "note") {
        } else {
            throw ParseError("unknown record field '" + std::string(name) + "'");
        }
    }
    TorusMap m = parse_serial(fields[0]);
    if (faces && *faces != m.face_count()) throw ParseError("faces field disagrees with the map");
    if (!marks.empty()) m = m.with_marks(std::move(marks));
    return Task{std::move(m), {}, std::move(parent), std::move(via)};
}

std::string_view to_string(TaskStatus status) {
    switch (status) {
    case TaskStatus::Pending: return "pending";
    case TaskStatus::Processing: return "processing";
    case TaskStatus::Processed: return "processed";
    case TaskStatus::Emitted: return "emitted";
    case TaskStatus::Pruned: return "pruned";
    }
    return "?";
}

struct FrontierStore::Impl {
    struct Entry {
        TaskStatus status = TaskStatus::Pending;
        int faces = 0;
        std::string note;
        std::optional<Task> task;  // kept while pending/processing and for emissions
    };

    mutable std::mutex mu;
    std::map<std::string, Entry> entries;
    std::set<std::pair<int, std::string>> queue;
    std::ofstream journal;

    void log(const std::string& payload) {
        if (!journal.is_open()) return;
        journal << hex64(fnv1a(payload)) << '\t' << payload << '\n';
        journal.flush();
    }

    bool insert(Task task, bool journaled) {
        if (entries.count(task.key)) return false;
        if (journaled) log("I\t" + task.key + "\t" + format_record(task));
        Entry e;
        e.faces = task.faces();
        queue.insert({e.faces, task.key});
        std::string key = task.key;
        e.task = std::move(task);
        entries.emplace(std::move(key), std::move(e));
        return true;
    }

    void set_status(const std::string& key, TaskStatus st, const std::string& note, bool journaled) {
        auto it = entries.find(key);
        if (it == entries.end()) throw StoreError("unknown key " + key);
        if (journaled) log("S\t" + key + "\t" + std::string(to_string(st)) + "\t" + note);
        auto& e = it->second;
        if (e.status == TaskStatus::Pending) queue.erase({e.faces, key});
        e.status = st;
        e.note = note;
        if (st == TaskStatus::Pending) queue.insert({e.faces, key});
        if (st == TaskStatus::Processed || st == TaskStatus::Pruned) e.task.reset();
    }
};

FrontierStore::FrontierStore() : impl_(std::make_unique<Impl>()) {}
FrontierStore::~FrontierStore() = default;
FrontierStore::FrontierStore(FrontierStore&&) noexcept = default;
FrontierStore& FrontierStore::operator=(FrontierStore&&) noexcept = default;

bool FrontierStore::insert_if_new(Task task) {
    std::lock_guard lock(impl_->mu);
    return impl_->insert(std::move(task), true);
}

std::optional<Task> FrontierStore::next_task() {
    std::lock_guard lock(impl_->mu);
    if (impl_->queue.empty()) return std::nullopt;
    const std::string key = impl_->queue.begin()->second;
    auto& e = impl_->entries.at(key);
    impl_->queue.erase(impl_->queue.begin());
    e.status = TaskStatus::Processing;
    return e.task;
}

void FrontierStore::finish(const std::string& key, TaskStatus status, const std::string& note) {
    if (status == TaskStatus::Pending || status == TaskStatus::Processing) {
        throw StoreError("finish needs a final status");
    }
    std::lock_guard lock(impl_->mu);
    impl_->set_status(key, status, note, true);
}

bool FrontierStore::contains(const std::string& key) const {
    std::lock_guard lock(impl_->mu);
    return impl_->entries.count(key) > 0;
}

std::optional<TaskStatus> FrontierStore::status(const std::string& key) const {
    std::lock_guard lock(impl_->mu);
    auto it = impl_->entries.find(key);
    if (it == impl_->entries.end()) return std::nullopt;
    return it->second.status;
}

StoreStats FrontierStore::stats() const {
    std::lock_guard lock(impl_->mu);
    StoreStats s;
    for (const auto& [k, e] : impl_->entries) {
        switch (e.status) {
        case TaskStatus::Pending: ++s.pending; break;
        case TaskStatus::Processing: ++s.processing; break;
        case TaskStatus::Processed: ++s.processed; break;
        case TaskStatus::Emitted: ++s.emitted; break;
        case TaskStatus::Pruned: ++s.pruned; break;
        }
    }
    return s;
}

std::vector<Task> FrontierStore::emitted() const {
    std::lock_guard lock(impl_->mu);
    std::vector<Task> out;
    for (const auto& [k, e] : impl_->entries) {
        if (e.status == TaskStatus::Emitted) out.push_back(*e.task);
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> FrontierStore::prune_log() const {
    std::lock_guard lock(impl_->mu);
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [k, e] : impl_->entries) {
        if (e.status == TaskStatus::Pruned) out.emplace_back(k, e.note);
    }
    return out;
}

void FrontierStore::checkpoint(const std::filesystem::path& dir) {
    std::lock_guard lock(impl_->mu);
    std::filesystem::create_directories(dir);
    std::ostringstream body;
    body << kHeader << '\n';
    for (const auto& [k, e] : impl_->entries) {
        body << to_string(e.status) << '\t' << e.faces << '\t' << k << '\t' << e.note << '\t'
             << (e.task ? format_record(*e.task) : "-") << '\n';
    }
    const std::string text = body.str();
    const auto tmp = dir / (std::string(kSnapshot) + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << text << "digest " << hex64(fnv1a(text)) << '\n';
        if (!out) throw StoreError("cannot write " + tmp.string());
    }
    std::filesystem::rename(tmp, dir / kSnapshot);
    impl_->journal.close();
    impl_->journal.open(dir / kJournal, std::ios::binary | std::ios::trunc);
    if (!impl_->journal) throw StoreError("cannot open journal in " + dir.string());
}

FrontierStore FrontierStore::resume(const std::filesystem::path& dir) {
    std::ifstream in(dir / kSnapshot, std::ios::binary);
    if (!in) throw StoreError("no snapshot in " + dir.string());
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string all = ss.str();
    const auto tail = all.rfind("digest ");
    if (tail == std::string::npos || all.size() < tail + 7 + 16 + 1 || all.back() != '\n') {
        throw StoreError("snapshot truncated: " + (dir / kSnapshot).string());
    }
    const std::string text = all.substr(0, tail);
    if (all.substr(tail + 7, 16) != hex64(fnv1a(text))) {
        throw StoreError("snapshot digest mismatch: " + (dir / kSnapshot).string());
    }

    FrontierStore store;
    auto& im = *store.impl_;
    std::istringstream lines(text);
    std::string line;
    std::getline(lines, line);
    if (line != kHeader) throw StoreError("not a store snapshot");
    try {
        while (std::getline(lines, line)) {
            auto f = split(line, "\t");
            if (f.size() != 5) throw StoreError("bad snapshot line");
            Impl::Entry e;
            e.status = parse_status(f[0]);
            e.faces = parse_int(f[1]);
            e.note = f[3];
            if (f[4] != "-") {
                e.task = parse_record(f[4]);
                e.task->key = f[2];
            }
            if (e.status == TaskStatus::Processing) e.status = TaskStatus::Pending;
            if (e.status == TaskStatus::Pending) {
                if (!e.task) throw StoreError("pending entry without a map");
                im.queue.insert({e.faces, f[2]});
            }
            im.entries.emplace(f[2], std::move(e));
        }

        std::ifstream jin(dir / kJournal, std::ios::binary);
        std::stringstream js;
        js << jin.rdbuf();
        const std::string jtext = js.str();
        std::size_t from = 0;
        while (from < jtext.size()) {
            auto nl = jtext.find('\n', from);
            if (nl == std::string::npos) break;  // torn final write
            std::string_view row(jtext.data() + from, nl - from);
            from = nl + 1;
            if (row.size() < 18 || row[16] != '\t') throw StoreError("bad journal line");
            auto payload = row.substr(17);
            if (row.substr(0, 16) != hex64(fnv1a(payload))) throw StoreError("journal digest mismatch");
            auto f = split(payload, "\t");
            if (f[0] == "I" && f.size() == 3) {
                Task t = parse_record(f[2]);
                t.key = f[1];
                im.insert(std::move(t), false);
            } else if (f[0] == "S" && f.size() == 4) {
                im.set_status(f[1], parse_status(f[2]), f[3], false);
            } else {
                throw StoreError("bad journal record");
            }
        }
    } catch (const ParseError& e) {
        throw StoreError(std::string("unreadable map in checkpoint: ") + e.what());
    } catch (const MapError& e) {
        throw StoreError(std::string("invalid map in checkpoint: ") + e.what());
    }
    // compact: new snapshot, empty journal
    store.checkpoint(dir);
    return store;
}

}  // namespace tpm
