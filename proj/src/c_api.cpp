#include "tpm/tpm.h"

#include <cstdlib>
#include <cstring>
#include <map>
#include <sstream>

#include "tpm/catalog.hpp"
#include "tpm/pipeline.hpp"

struct tpm_map {
    tpm::TorusMap map;
};

struct tpm_store {
    tpm::FrontierStore store;
};

namespace {

thread_local std::string last_error;

char* dup(const std::string& s) {
    auto* p = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

void put(char** out, const std::string& s) {
    if (out) *out = dup(s);
}

template <typename F>
tpm_status guard(F&& f) {
    last_error.clear();
    try {
        f();
        return TPM_OK;
    } catch (const tpm::ParseError& e) {
        last_error = e.what();
        return TPM_ERR_PARSE;
    } catch (const tpm::MapError& e) {
        last_error = e.what();
        return TPM_ERR_MAP;
    } catch (const tpm::StoreError& e) {
        last_error = e.what();
        return TPM_ERR_STORE;
    } catch (const std::invalid_argument& e) {
        last_error = e.what();
        return TPM_ERR_ARGUMENT;
    } catch (const std::out_of_range& e) {
        last_error = e.what();
        return TPM_ERR_ARGUMENT;
    } catch (const std::exception& e) {
        last_error = e.what();
        return TPM_ERR_INTERNAL;
    }
}

void require(const void* p) {
    if (!p) throw std::invalid_argument("null argument");
}

const std::map<std::string, int>& catalog_keys() {
    static const std::map<std::string, int> keys = [] {
        std::map<std::string, int> m;
        for (const auto& e : tpm::catalog::load()) m.emplace(tpm::emission_key(e.map()), e.number);
        return m;
    }();
    return keys;
}

std::string plain_record(const tpm::TorusMap& map) {
    return tpm::format_record(tpm::Task{map, {}, {}, {}});
}

}  // namespace

extern "C" {

const char* tpm_last_error(void) { return last_error.c_str(); }

void tpm_string_free(char* s) { std::free(s); }

tpm_status tpm_map_parse(const char* text, tpm_map** out) {
    return guard([&] {
        require(text);
        require(out);
        *out = new tpm_map{tpm::parse_record(text).map};
    });
}

tpm_status tpm_map_from_catalog(int number, tpm_map** out) {
    return guard([&] {
        require(out);
        *out = new tpm_map{tpm::catalog::entry(number).map()};
    });
}

void tpm_map_free(tpm_map* map) { delete map; }

int tpm_map_vertex_count(const tpm_map* map) { return map ? map->map.vertex_count() : 0; }
int tpm_map_face_count(const tpm_map* map) { return map ? map->map.face_count() : 0; }
int tpm_map_edge_count(const tpm_map* map) { return map ? map->map.edge_count() : 0; }
int tpm_map_euler(const tpm_map* map) { return map ? tpm::euler_characteristic(map->map) : 0; }

tpm_status tpm_map_serialize(const tpm_map* map, char** out) {
    return guard([&] {
        require(map);
        put(out, tpm::serialize(map->map));
    });
}

tpm_status tpm_map_record(const tpm_map* map, char** out) {
    return guard([&] {
        require(map);
        put(out, plain_record(map->map));
    });
}

tpm_status tpm_map_classify(const tpm_map* map, tpm_verdict* verdict, char** record) {
    return guard([&] {
        require(map);
        auto v = tpm::classify(map->map);
        if (verdict) *verdict = static_cast<tpm_verdict>(v.status);
        put(record, v.record());
    });
}

tpm_status tpm_map_dual(const tpm_map* map, tpm_map** out) {
    return guard([&] {
        require(map);
        require(out);
        *out = new tpm_map{tpm::dual(map->map)};
    });
}

tpm_status tpm_map_isomorphism(const tpm_map* a, const tpm_map* b, int flags, int* found, char** bijection) {
    return guard([&] {
        require(a);
        require(b);
        std::optional<tpm::Bijection> f;
        if (flags & TPM_ISO_GRAPH_ONLY) {
            f = tpm::graph_isomorphism(a->map, b->map);
        } else {
            const auto sym = (flags & TPM_ISO_ORIENTATION_PRESERVING) ? tpm::Symmetry::OrientationPreserving
                                                                      : tpm::Symmetry::WithReflections;
            f = tpm::are_map_isomorphic(a->map, b->map, sym);
        }
        if (found) *found = f ? 1 : 0;
        if (f && bijection) {
            std::ostringstream o;
            for (std::size_t v = 1; v < f->size(); ++v) o << (v > 1 ? " " : "") << v << "->" << (*f)[v];
            *bijection = dup(o.str());
        } else if (bijection) {
            *bijection = nullptr;
        }
    });
}

tpm_status tpm_map_key(const tpm_map* map, int include_marks, char** hex) {
    return guard([&] {
        require(map);
        put(hex, tpm::canonical_key(map->map, {tpm::Symmetry::WithReflections, include_marks != 0}).hex());
    });
}

tpm_status tpm_map_prune(const tpm_map* map, int three_bands, char** reason) {
    return guard([&] {
        require(map);
        auto r = tpm::prune(map->map, tpm::PruneOptions{three_bands != 0});
        if (reason) *reason = r ? dup(std::string(tpm::to_string(*r))) : nullptr;
    });
}

tpm_status tpm_map_catalog_number(const tpm_map* map, int* number) {
    return guard([&] {
        require(map);
        require(number);
        const auto& keys = catalog_keys();
        auto it = keys.find(tpm::emission_key(map->map.with_marks({})));
        *number = it == keys.end() ? 0 : it->second;
    });
}

tpm_status tpm_seed_build(char** report, char** records) {
    return guard([&] {
        auto r = tpm::build_seed_set();
        put(report, r.text());
        if (records) {
            std::string s;
            for (const auto& seed : r.seeds) {
                s += tpm::format_record(tpm::Task{seed.map, {}, {}, "seed:" + seed.pattern}) + "\n";
            }
            *records = dup(s);
        }
    });
}

void tpm_run_options_default(tpm_run_options* options) {
    if (!options) return;
    const tpm::PipelineOptions d;
    options->max_faces = d.max_faces;
    options->threads = d.threads;
    options->over_approximate = d.expansion.over_approximate ? 1 : 0;
    options->three_bands = d.prune.three_bands ? 1 : 0;
    options->checkpoint_every = d.checkpoint_every;
    options->step_limit = d.step_limit;
}

tpm_status tpm_store_new(tpm_store** out) {
    return guard([&] {
        require(out);
        *out = new tpm_store{};
    });
}

tpm_status tpm_store_resume(const char* dir, tpm_store** out) {
    return guard([&] {
        require(dir);
        require(out);
        *out = new tpm_store{tpm::FrontierStore::resume(dir)};
    });
}

void tpm_store_free(tpm_store* store) { delete store; }

tpm_status tpm_store_insert(tpm_store* store, const tpm_map* map, const char* via, int* inserted) {
    return guard([&] {
        require(store);
        require(map);
        bool ok = store->store.insert_if_new(tpm::make_task(map->map, {}, via ? via : ""));
        if (inserted) *inserted = ok ? 1 : 0;
    });
}

tpm_status tpm_store_run(tpm_store* store, const tpm_run_options* options, const char* checkpoint_dir,
                         long* steps, int* finished) {
    return guard([&] {
        require(store);
        require(options);
        if (options->max_faces < 3) throw std::invalid_argument("max_faces must be at least 3");
        tpm::PipelineOptions o;
        o.max_faces = options->max_faces;
        o.threads = options->threads;
        o.expansion.over_approximate = options->over_approximate != 0;
        o.prune.three_bands = options->three_bands != 0;
        o.checkpoint_every = options->checkpoint_every;
        o.step_limit = options->step_limit;
        std::optional<std::filesystem::path> dir;
        if (checkpoint_dir && *checkpoint_dir) dir = checkpoint_dir;
        auto s = tpm::run_pipeline(store->store, o, dir);
        if (steps) *steps = s.steps;
        if (finished) *finished = s.finished ? 1 : 0;
    });
}

tpm_status tpm_store_checkpoint(tpm_store* store, const char* dir) {
    return guard([&] {
        require(store);
        require(dir);
        store->store.checkpoint(dir);
    });
}

tpm_status tpm_store_stats(const tpm_store* store, tpm_stats* out) {
    return guard([&] {
        require(store);
        require(out);
        auto s = store->store.stats();
        *out = tpm_stats{s.pending, s.processing, s.processed, s.emitted, s.pruned};
    });
}

tpm_status tpm_store_emitted(const tpm_store* store, char** records) {
    return guard([&] {
        require(store);
        std::string s;
        for (const auto& [key, map] : tpm::emitted_maps(store->store)) s += plain_record(map) + "\n";
        put(records, s);
    });
}

tpm_status tpm_store_prune_log(const tpm_store* store, char** lines) {
    return guard([&] {
        require(store);
        std::string s;
        for (const auto& [key, note] : store->store.prune_log()) s += key + "\t" + note + "\n";
        put(lines, s);
    });
}

int tpm_catalog_size(void) { return tpm::catalog::kEntryCount; }

tpm_status tpm_catalog_verify(char** report, int* all_pass) {
    return guard([&] {
        auto r = tpm::catalog::verify();
        put(report, r.text());
        if (all_pass) *all_pass = r.all_pass() ? 1 : 0;
    });
}

tpm_status tpm_catalog_show(int number, char** text) {
    return guard([&] {
        const auto& e = tpm::catalog::entry(number);
        auto dist = [](const std::vector<int>& v) {
            std::string s = "(";
            for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
            return s + ")";
        };
        std::ostringstream o;
        o << "#" << e.number << " order " << e.order << " size " << e.size << " P " << dist(e.faces_by_size)
          << " V " << dist(e.vertices_by_valence) << (e.columns_swapped ? " (P/V columns exchanged)" : "")
          << "\n"
          << e.serial << "\n";
        put(text, o.str());
    });
}

tpm_status tpm_catalog_export(char** lines) {
    return guard([&] { put(lines, tpm::catalog::export_lines()); });
}

tpm_status tpm_catalog_graph_twins(char** lines) {
    return guard([&] {
        std::string s;
        for (auto [a, b] : tpm::catalog::find_graph_twin_pairs()) {
            s += std::to_string(a) + " " + std::to_string(b) + "\n";
        }
        put(lines, s);
    });
}

}  // extern "C"
