#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "../fixtures.hpp"
#include "../oracles.hpp"
#include "tpm/pipeline.hpp"

using namespace tpm;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        static int counter = 0;
        path = fs::temp_directory_path() / ("tpm-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

std::vector<std::string> drain_keys(FrontierStore& s) {
    std::vector<std::string> out;
    while (auto t = s.next_task()) {
        out.push_back(t->key);
        s.finish(t->key, TaskStatus::Processed);
    }
    return out;
}

FrontierStore seeded_store(int count) {
    FrontierStore s;
    auto seeds = build_seed_set().seeds;
    for (int i = 0; i < count && i < static_cast<int>(seeds.size()); ++i) s.insert_if_new(make_task(seeds[static_cast<std::size_t>(i)].map, {}, "seed"));
    return s;
}

std::vector<std::string> emitted_keys(const FrontierStore& s) {
    std::vector<std::string> out;
    for (const auto& [k, m] : emitted_maps(s)) out.push_back(k);
    return out;
}

}  // namespace

TEST_CASE("records") {
    auto seed = seed_band_map();
    Task t{seed, "", "abc", "f3:2-7"};
    auto line = format_record(t);
    CHECK(line.find("| marks=1-4,2-5,3-6") != std::string::npos);
    CHECK(line.find("| faces=6") != std::string::npos);
    auto back = parse_record(line);
    CHECK(back.map == seed);
    CHECK(back.parent == "abc");
    CHECK(back.via == "f3:2-7");
    CHECK(parse_record(line + " | note=anything").map == seed);
    CHECK_THROWS_AS(parse_record(serialize(seed) + " | faces=7"), ParseError);
    CHECK_THROWS_AS(parse_record(serialize(seed) + " | colour=red"), ParseError);
}

TEST_CASE("insert dedups by key") {
    FrontierStore s;
    std::mt19937 rng(2);
    int fresh = 0;
    for (const auto& e : catalog::load()) fresh += s.insert_if_new(make_task(e.map()));
    CHECK(fresh == 53);
    auto m = fixture::catalog(5);
    CHECK_FALSE(s.insert_if_new(make_task(m)));
    CHECK_FALSE(s.insert_if_new(make_task(m.relabeled(oracle::random_permutation(m.vertex_count(), rng)))));
    CHECK(s.stats().pending == 53);
    CHECK(s.stats().total() == 53);
}

TEST_CASE("queue order") {
    FrontierStore s;
    CHECK_FALSE(s.next_task());
    s.insert_if_new(make_task(fixture::catalog(13)));  // 10 faces
    s.insert_if_new(make_task(fixture::catalog(53)));  // 7 faces
    s.insert_if_new(make_task(fixture::catalog(47)));  // 8 faces
    std::vector<int> faces;
    while (auto t = s.next_task()) {
        faces.push_back(t->faces());
        s.finish(t->key, TaskStatus::Processed);
    }
    CHECK(faces == std::vector<int>{7, 8, 10});
    CHECK(s.stats().processed == 3);
    CHECK(s.stats().pending == 0);
}

TEST_CASE("finish needs a final status") {
    FrontierStore s;
    s.insert_if_new(make_task(fixture::catalog(1)));
    auto t = s.next_task();
    REQUIRE(t);
    CHECK(s.status(t->key) == TaskStatus::Processing);
    CHECK_THROWS_AS(s.finish(t->key, TaskStatus::Pending), StoreError);
    s.finish(t->key, TaskStatus::Pruned, "HAS_EIC");
    CHECK(s.prune_log().size() == 1);
    CHECK(s.prune_log()[0].second == "HAS_EIC");
}

TEST_CASE("checkpoint and resume reproduce the queue") {
    TempDir dir;
    auto s = seeded_store(40);
    for (int i = 0; i < 5; ++i) {
        auto t = s.next_task();
        s.finish(t->key, i % 2 ? TaskStatus::Pruned : TaskStatus::Processed, "x");
    }
    auto held = s.next_task();  // left processing
    s.checkpoint(dir.path);
    auto r = FrontierStore::resume(dir.path);
    auto before = s.stats();
    before.pending += before.processing;
    before.processing = 0;
    CHECK(r.stats() == before);
    CHECK(r.status(held->key) == TaskStatus::Pending);
    std::vector<std::string> expected{held->key};
    for (auto& k : drain_keys(s)) expected.push_back(k);
    CHECK(drain_keys(r) == expected);
}

TEST_CASE("journal replay") {
    TempDir dir;
    auto s = seeded_store(10);
    s.checkpoint(dir.path);
    auto t = s.next_task();
    s.finish(t->key, TaskStatus::Emitted);
    s.insert_if_new(make_task(fixture::catalog(53)));
    auto r = FrontierStore::resume(dir.path);
    CHECK(r.stats() == s.stats());
    CHECK(r.status(t->key) == TaskStatus::Emitted);
}

TEST_CASE("torn journal line is ignored") {
    TempDir dir;
    auto s = seeded_store(5);
    s.checkpoint(dir.path);
    auto t = s.next_task();
    s.finish(t->key, TaskStatus::Processed);
    {
        std::ofstream j(dir.path / "journal.log", std::ios::app);
        j << "0123456789abcdef\tS\tdeadbe";
    }
    auto r = FrontierStore::resume(dir.path);
    CHECK(r.stats() == s.stats());
}

TEST_CASE("corrupt or missing checkpoints are detected") {
    TempDir dir;
    auto s = seeded_store(5);
    CHECK_THROWS_AS(FrontierStore::resume(dir.path), StoreError);
    s.checkpoint(dir.path);
    const auto snap = dir.path / "snapshot.tpm";
    std::string text;
    {
        std::ifstream in(snap);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    SUBCASE("truncated") {
        std::ofstream(snap, std::ios::trunc) << text.substr(0, text.size() / 2);
        CHECK_THROWS_AS(FrontierStore::resume(dir.path), StoreError);
    }
    SUBCASE("flipped byte") {
        auto bad = text;
        bad[bad.size() / 3] = bad[bad.size() / 3] == '1' ? '2' : '1';
        std::ofstream(snap, std::ios::trunc) << bad;
        CHECK_THROWS_AS(FrontierStore::resume(dir.path), StoreError);
    }
    SUBCASE("journal line with a bad checksum") {
        std::ofstream(dir.path / "journal.log", std::ios::app) << "0000000000000000\tS\tk\tprocessed\t\n";
        CHECK_THROWS_AS(FrontierStore::resume(dir.path), StoreError);
    }
}

TEST_CASE("pipeline step on catalog maps") {
    FrontierStore s;
    PipelineOptions o;
    auto t = make_task(fixture::catalog(53));
    s.insert_if_new(t);
    auto got = s.next_task();
    auto r = pipeline_step(*got, s, o);
    CHECK(r.emitted);
    CHECK(r.new_tasks.empty());
    CHECK(s.stats().emitted == 1);
}

TEST_CASE("pipeline step never emits a catalog map plus a chord") {
    auto m = fixture::catalog(13);
    PipelineOptions o;
    o.max_faces = 11;
    for (const auto& c : enumerate_edge_additions(m)) {
        FrontierStore s;
        s.insert_if_new(make_task(add_edge(m, c)));
        auto t = s.next_task();
        auto r = pipeline_step(*t, s, o);
        CHECK_FALSE(r.emitted);
        for (const auto& n : r.new_tasks) CHECK(n.faces() <= o.max_faces);
    }
}

TEST_CASE("face bound") {
    FrontierStore s;
    PipelineOptions o;
    o.max_faces = 6;
    s.insert_if_new(make_task(seed_band_map()));
    auto t = s.next_task();
    auto r = pipeline_step(*t, s, o);
    CHECK(r.face_bound);
    CHECK(r.note == "FACE_BOUND");
    CHECK(s.stats().processed == 1);
}

TEST_CASE("thread count does not change the emitted set") {
    PipelineOptions o;
    o.max_faces = 7;
    auto a = seeded_store(400);
    run_pipeline(a, o);
    o.threads = 4;
    auto b = seeded_store(400);
    run_pipeline(b, o);
    CHECK(emitted_keys(a) == emitted_keys(b));
    CHECK(a.stats() == b.stats());
    CHECK_FALSE(emitted_keys(a).empty());
}

TEST_CASE("interrupted run resumes to the same result") {
    TempDir dir;
    PipelineOptions o;
    o.max_faces = 7;
    auto full = seeded_store(400);
    run_pipeline(full, o);

    auto part = seeded_store(400);
    o.step_limit = 3000;
    o.checkpoint_every = 1000;
    auto first = run_pipeline(part, o, dir.path);
    CHECK_FALSE(first.finished);
    auto resumed = FrontierStore::resume(dir.path);
    o.step_limit = 0;
    auto second = run_pipeline(resumed, o, dir.path);
    CHECK(second.finished);
    CHECK(emitted_keys(resumed) == emitted_keys(full));
    CHECK(resumed.prune_log() == full.prune_log());
}
