#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tpm/tpm.h"

namespace fs = std::filesystem;

namespace {

constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MapPtr {
    tpm_map* p = nullptr;
    MapPtr() = default;
    explicit MapPtr(tpm_map* m) : p(m) {}
    MapPtr(MapPtr&& o) noexcept : p(std::exchange(o.p, nullptr)) {}
    MapPtr& operator=(MapPtr&& o) noexcept {
        std::swap(p, o.p);
        return *this;
    }
    ~MapPtr() { tpm_map_free(p); }
};

struct StorePtr {
    tpm_store* p = nullptr;
    ~StorePtr() { tpm_store_free(p); }
};

/// Takes ownership of a string returned by the library.
std::string take(char* s) {
    if (!s) return {};
    std::string out(s);
    tpm_string_free(s);
    return out;
}

std::string error_text() { return tpm_last_error(); }

struct Line {
    int number = 0;
    std::string text;
};

std::vector<Line> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Usage("cannot read " + path);
    std::vector<Line> out;
    std::string s;
    for (int n = 1; std::getline(in, s); ++n) {
        auto b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos || s[b] == '#') continue;
        out.push_back({n, s});
    }
    return out;
}

/// Parses every map line of a file; bad lines are reported and counted.
std::vector<std::pair<int, MapPtr>> read_maps(const std::string& path, int& failures) {
    std::vector<std::pair<int, MapPtr>> out;
    for (const auto& l : read_lines(path)) {
        tpm_map* m = nullptr;
        if (tpm_map_parse(l.text.c_str(), &m) != TPM_OK) {
            std::cerr << path << ":" << l.number << ": " << error_text() << "\n";
            ++failures;
            continue;
        }
        out.emplace_back(l.number, MapPtr(m));
    }
    return out;
}

void check(tpm_status s) {
    if (s != TPM_OK) throw std::runtime_error(error_text());
}

std::string record_of(const tpm_map* m) {
    char* s = nullptr;
    check(tpm_map_record(m, &s));
    return take(s);
}

std::string serial_of(const tpm_map* m) {
    char* s = nullptr;
    check(tpm_map_serialize(m, &s));
    return take(s);
}

struct Global {
    std::string format = "text";
    bool records() const { return format == "records"; }
};

int cmd_verify(const Global&, const std::string& file) {
    int failures = 0;
    for (auto& [n, m] : read_maps(file, failures)) {
        std::cout << "line " << n << ": ok V=" << tpm_map_vertex_count(m.p) << " E=" << tpm_map_edge_count(m.p)
                  << " F=" << tpm_map_face_count(m.p) << " chi=" << tpm_map_euler(m.p) << "\n";
    }
    return failures ? kFail : 0;
}

int cmd_classify(const Global& g, const std::string& file) {
    int failures = 0;
    for (auto& [n, m] : read_maps(file, failures)) {
        char* rec = nullptr;
        check(tpm_map_classify(m.p, nullptr, &rec));
        auto verdict = take(rec);
        if (g.records()) {
            for (auto& c : verdict) {
                if (c == '\t') c = ' ';
            }
            std::cout << record_of(m.p) << " | note=" << verdict << "\n";
        } else {
            std::cout << "line " << n << "\t" << verdict << "\n";
        }
    }
    return failures ? kFail : 0;
}

int cmd_dual(const Global& g, const std::string& file) {
    int failures = 0;
    for (auto& [n, m] : read_maps(file, failures)) {
        tpm_map* d = nullptr;
        check(tpm_map_dual(m.p, &d));
        MapPtr dm(d);
        std::cout << (g.records() ? record_of(dm.p) : serial_of(dm.p)) << "\n";
    }
    return failures ? kFail : 0;
}

int cmd_iso(const std::string& fa, const std::string& fb, bool graph_only, bool orientation) {
    int failures = 0;
    auto a = read_maps(fa, failures);
    auto b = read_maps(fb, failures);
    if (failures) return kFail;
    if (a.empty() || b.empty()) throw Usage("each file needs at least one map");
    int flags = (graph_only ? TPM_ISO_GRAPH_ONLY : 0) | (orientation ? TPM_ISO_ORIENTATION_PRESERVING : 0);
    int found = 0;
    char* bij = nullptr;
    check(tpm_map_isomorphism(a.front().second.p, b.front().second.p, flags, &found, &bij));
    if (!found) {
        std::cout << "not isomorphic\n";
        return kFail;
    }
    std::cout << "isomorphic\n" << take(bij) << "\n";
    return 0;
}

int cmd_key(const Global& g, const std::string& file, bool marks) {
    int failures = 0;
    for (auto& [n, m] : read_maps(file, failures)) {
        char* k = nullptr;
        check(tpm_map_key(m.p, marks ? 1 : 0, &k));
        auto key = take(k);
        if (g.records()) {
            std::cout << record_of(m.p) << " | note=" << key << "\n";
        } else {
            std::cout << key << "\n";
        }
    }
    return failures ? kFail : 0;
}

int cmd_prune(const Global& g, const std::string& file, bool three_bands) {
    int failures = 0;
    for (auto& [n, m] : read_maps(file, failures)) {
        char* r = nullptr;
        check(tpm_map_prune(m.p, three_bands ? 1 : 0, &r));
        auto reason = r ? take(r) : std::string("none");
        if (g.records()) {
            std::cout << record_of(m.p) << " | note=" << reason << "\n";
        } else {
            std::cout << "line " << n << "\t" << reason << "\n";
        }
    }
    return failures ? kFail : 0;
}

int cmd_seed(const std::string& out) {
    char* report = nullptr;
    char* records = nullptr;
    check(tpm_seed_build(&report, &records));
    auto text = take(report);
    auto lines = take(records);
    if (!out.empty()) {
        fs::create_directories(out);
        std::ofstream(fs::path(out) / "seeds.txt") << lines;
        std::ofstream(fs::path(out) / "report.txt") << text;
    }
    std::cout << text;
    return 0;
}

struct GenerateArgs {
    std::string seed_dir;
    std::string checkpoint;
    std::string out;
    int max_faces = 10;
    int threads = 1;
    int seed_subset = 0;
    long checkpoint_every = 0;
    long step_limit = 0;
    bool resume = false;
    bool sorted = false;
    bool over_approximate = false;
    bool no_three_bands = false;
};

/// Every k-th seed so that `count` seeds are taken, spread over the list.
std::vector<std::string> subset(std::vector<std::string> seeds, int count) {
    if (count <= 0 || count >= static_cast<int>(seeds.size())) return seeds;
    std::vector<std::string> out;
    for (int i = 0; i < count; ++i) out.push_back(seeds[seeds.size() * static_cast<std::size_t>(i) / static_cast<std::size_t>(count)]);
    return out;
}

int cmd_generate(GenerateArgs a) {
    if (a.checkpoint.empty()) {
        if (const char* env = std::getenv("TPM_CHECKPOINT_DIR")) a.checkpoint = env;
    }
    if (a.resume && a.checkpoint.empty()) throw Usage("--resume needs --checkpoint or TPM_CHECKPOINT_DIR");
    StorePtr store;
    if (a.resume) {
        check(tpm_store_resume(a.checkpoint.c_str(), &store.p));
    } else {
        check(tpm_store_new(&store.p));
        std::vector<std::string> seeds;
        if (a.seed_dir.empty()) {
            char* records = nullptr;
            check(tpm_seed_build(nullptr, &records));
            std::string all = take(records);
            std::size_t pos = 0;
            while (pos < all.size()) {
                auto nl = all.find('\n', pos);
                seeds.push_back(all.substr(pos, nl - pos));
                pos = nl + 1;
            }
        } else {
            for (auto& l : read_lines((fs::path(a.seed_dir) / "seeds.txt").string())) seeds.push_back(l.text);
        }
        for (const auto& s : subset(std::move(seeds), a.seed_subset)) {
            tpm_map* m = nullptr;
            check(tpm_map_parse(s.c_str(), &m));
            MapPtr mp(m);
            check(tpm_store_insert(store.p, mp.p, "seed", nullptr));
        }
    }
    tpm_run_options o;
    tpm_run_options_default(&o);
    o.max_faces = a.max_faces;
    o.threads = a.threads;
    o.over_approximate = a.over_approximate ? 1 : 0;
    o.three_bands = a.no_three_bands ? 0 : 1;
    o.checkpoint_every = a.checkpoint_every;
    o.step_limit = a.step_limit;
    long steps = 0;
    int finished = 0;
    check(tpm_store_run(store.p, &o, a.checkpoint.empty() ? nullptr : a.checkpoint.c_str(), &steps, &finished));

    char* em = nullptr;
    check(tpm_store_emitted(store.p, &em));
    const std::string emitted = take(em);
    if (!a.checkpoint.empty()) {
        std::ofstream(fs::path(a.checkpoint) / "emitted.txt") << emitted;
        char* log = nullptr;
        check(tpm_store_prune_log(store.p, &log));
        std::ofstream(fs::path(a.checkpoint) / "prune.log") << take(log);
    }
    if (a.out.empty()) {
        std::cout << emitted;
    } else {
        std::ofstream(a.out) << emitted;
    }

    std::string matches;
    int outside = 0;
    std::size_t pos = 0;
    while (pos < emitted.size()) {
        auto nl = emitted.find('\n', pos);
        tpm_map* m = nullptr;
        check(tpm_map_parse(emitted.substr(pos, nl - pos).c_str(), &m));
        MapPtr mp(m);
        int number = 0;
        check(tpm_map_catalog_number(mp.p, &number));
        if (number) {
            matches += " #" + std::to_string(number);
        } else {
            ++outside;
        }
        pos = nl + 1;
    }
    tpm_stats st{};
    check(tpm_store_stats(store.p, &st));
    std::cerr << "steps " << steps << (finished ? " (finished)" : " (stopped)") << "; pending " << st.pending
              << ", processed " << st.processed << ", emitted " << st.emitted << ", pruned " << st.pruned << "\n";
    std::cerr << "catalog matches:" << (matches.empty() ? " none" : matches) << "; outside catalog: " << outside
              << "\n";
    return outside ? kFail : 0;
}

int cmd_catalog_verify() {
    char* report = nullptr;
    int ok = 0;
    check(tpm_catalog_verify(&report, &ok));
    std::cout << take(report);
    return ok ? 0 : kFail;
}

int cmd_catalog_show(int n) {
    char* text = nullptr;
    if (tpm_catalog_show(n, &text) != TPM_OK) throw Usage(error_text());
    std::cout << take(text);
    return 0;
}

int cmd_catalog_export() {
    char* lines = nullptr;
    check(tpm_catalog_export(&lines));
    std::cout << take(lines);
    return 0;
}

int cmd_catalog_twins() {
    char* lines = nullptr;
    check(tpm_catalog_graph_twins(&lines));
    std::cout << take(lines);
    return 0;
}

int cmd_stats(std::string dir) {
    if (dir.empty()) {
        if (const char* env = std::getenv("TPM_CHECKPOINT_DIR")) dir = env;
    }
    if (dir.empty()) throw Usage("stats needs --checkpoint or TPM_CHECKPOINT_DIR");
    StorePtr store;
    check(tpm_store_resume(dir.c_str(), &store.p));
    tpm_stats s{};
    check(tpm_store_stats(store.p, &s));
    std::cout << "pending " << s.pending << "\nprocessing " << s.processing << "\nprocessed " << s.processed
              << "\nemitted " << s.emitted << "\npruned " << s.pruned << "\ntotal "
              << s.pending + s.processing + s.processed + s.emitted + s.pruned << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Toroidal polyhedral map tools"};
    app.require_subcommand(1);
    app.fallthrough();
    Global g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "records"}));

    std::string file, file_b, out;
    bool graph_only = false, orientation = false, marks = false, no_three_bands = false;
    int number = 0;
    GenerateArgs gen;

    auto* verify = app.add_subcommand("verify", "Validate maps and report Euler characteristic");
    verify->add_option("FILE", file)->required();
    auto* classify = app.add_subcommand("classify", "Diminimal / polyhedral / not polyhedral verdicts");
    classify->add_option("FILE", file)->required();
    auto* dual = app.add_subcommand("dual", "Dual maps");
    dual->add_option("FILE", file)->required();
    auto* iso = app.add_subcommand("iso", "Isomorphism of the first maps of two files");
    iso->add_option("FILE_A", file)->required();
    iso->add_option("FILE_B", file_b)->required();
    iso->add_flag("--graph-only", graph_only);
    iso->add_flag("--orientation-preserving", orientation);
    auto* key = app.add_subcommand("key", "Canonical keys");
    key->add_option("FILE", file)->required();
    key->add_flag("--marks", marks, "Include marked paths");
    auto* prune = app.add_subcommand("prune-check", "Prune reasons");
    prune->add_option("FILE", file)->required();
    prune->add_flag("--no-three-bands", no_three_bands);
    auto* seed = app.add_subcommand("seed", "Build the seed set");
    seed->add_option("--out", out, "Directory for seeds.txt and report.txt");
    auto* generate = app.add_subcommand("generate", "Run the generation pipeline");
    generate->add_option("--seed", gen.seed_dir, "Directory written by seed --out (default: build seeds)");
    generate->add_option("--max-faces", gen.max_faces)->check(CLI::Range(3, 1000));
    generate->add_option("--checkpoint", gen.checkpoint, "Checkpoint directory");
    generate->add_option("--checkpoint-every", gen.checkpoint_every)->check(CLI::NonNegativeNumber);
    generate->add_option("--threads", gen.threads)->check(CLI::Range(1, 256));
    generate->add_option("--step-limit", gen.step_limit)->check(CLI::NonNegativeNumber);
    generate->add_option("--seed-subset", gen.seed_subset, "Use this many seeds spread over the list")
        ->check(CLI::NonNegativeNumber);
    generate->add_option("--out", gen.out, "Emission file (default: stdout)");
    generate->add_flag("--resume", gen.resume);
    generate->add_flag("--sorted", gen.sorted, "Emit in key order (always the case)");
    generate->add_flag("--over-approximate", gen.over_approximate, "Also add every chord of the improper pair");
    generate->add_flag("--no-three-bands", gen.no_three_bands, "Skip the three-band prune");
    auto* catalog = app.add_subcommand("catalog", "Published catalog");
    catalog->require_subcommand(1);
    auto* cat_verify = catalog->add_subcommand("verify");
    auto* cat_show = catalog->add_subcommand("show");
    cat_show->add_option("N", number)->required();
    auto* cat_export = catalog->add_subcommand("export");
    auto* cat_twins = catalog->add_subcommand("twins", "Pairs with isomorphic graphs but different maps");
    auto* stats = app.add_subcommand("stats", "Counters of a checkpointed run");
    stats->add_option("--checkpoint", out, "Checkpoint directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kUsage;
    }

    try {
        if (*verify) return cmd_verify(g, file);
        if (*classify) return cmd_classify(g, file);
        if (*dual) return cmd_dual(g, file);
        if (*iso) return cmd_iso(file, file_b, graph_only, orientation);
        if (*key) return cmd_key(g, file, marks);
        if (*prune) return cmd_prune(g, file, !no_three_bands);
        if (*seed) return cmd_seed(out);
        if (*generate) return cmd_generate(gen);
        if (*cat_verify) return cmd_catalog_verify();
        if (*cat_show) return cmd_catalog_show(number);
        if (*cat_export) return cmd_catalog_export();
        if (*cat_twins) return cmd_catalog_twins();
        if (*stats) return cmd_stats(out);
    } catch (const Usage& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
    return kUsage;
}
