#include <algorithm>
#include <set>
#include <sstream>

#include "tpm/catalog.hpp"
#include "tpm/generation.hpp"
#include "tpm/isomorphism.hpp"
#include "tpm/polyhedral.hpp"

namespace tpm::catalog {

namespace {

std::vector<int> trimmed(std::vector<int> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

std::string dist_text(const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

/// Empty if the stored columns describe the map.
std::string column_mismatch(const Entry& e, const TorusMap& m) {
    std::ostringstream o;
    auto p = trimmed(e.columns_swapped ? e.vertices_by_valence : e.faces_by_size);
    auto v = trimmed(e.columns_swapped ? e.faces_by_size : e.vertices_by_valence);
    if (m.vertex_count() != e.order) o << "order " << m.vertex_count() << " vs " << e.order << "; ";
    if (m.face_count() != e.size) o << "size " << m.face_count() << " vs " << e.size << "; ";
    if (trimmed(face_size_distribution(m)) != p) {
        o << "P " << dist_text(face_size_distribution(m)) << " vs " << dist_text(p) << "; ";
    }
    if (trimmed(valence_distribution(m)) != v) {
        o << "V " << dist_text(valence_distribution(m)) << " vs " << dist_text(v) << "; ";
    }
    return o.str();
}

}  // namespace

const std::vector<Entry>& load() {
    static const std::vector<Entry> entries = [] {
        const auto& raw = raw_entries();
        if (raw.size() != kEntryCount) throw std::runtime_error("catalog: wrong row count");
        for (const auto& e : raw) {
            auto bad = column_mismatch(e, e.map());
            if (!bad.empty()) throw std::runtime_error("catalog row " + std::to_string(e.number) + ": " + bad);
        }
        return raw;
    }();
    return entries;
}

const Entry& entry(int number) {
    if (number < 1 || number > kEntryCount) throw std::out_of_range("catalog number " + std::to_string(number));
    return load()[static_cast<std::size_t>(number - 1)];
}

bool Report::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
}

std::string Report::text() const {
    std::ostringstream o;
    for (const auto& c : checks) {
        if (!c.ok) o << "FAIL #" << c.number << " " << c.what << ": " << c.detail << "\n";
    }
    o << diminimal_count << "/" << kEntryCount << " diminimal\n";
    o << "dual relations: " << dual_relations_checked << " checked, " << dual_mismatches << " mismatches\n";
    o << "distinct keys: " << distinct_keys << "\n";
    o << (all_pass() ? "all checks passed" : "some checks failed") << "\n";
    return o.str();
}

Report verify(const std::vector<Entry>& entries) {
    Report r;
    std::vector<std::optional<TorusMap>> maps(entries.size());
    auto add = [&](int n, std::string what, bool ok, std::string detail = {}) {
        r.checks.push_back({n, std::move(what), ok, std::move(detail)});
    };
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& e = entries[i];
        try {
            maps[i] = e.map();
        } catch (const std::exception& ex) {
            add(e.number, "parse", false, ex.what());
            continue;
        }
        const auto& m = *maps[i];
        add(e.number, "euler", euler_characteristic(m) == 0);
        auto bad = column_mismatch(e, m);
        add(e.number, "columns", bad.empty(), bad);
        auto v = classify(m);
        add(e.number, "diminimal", v.status == Status::DiminimalTPM, v.record());
        auto p = prune(m);
        add(e.number, "prune", !p, p ? std::string(to_string(*p)) : "");
        if (v.status == Status::DiminimalTPM && !p) ++r.diminimal_count;
    }

    const auto& table = dual_table();
    std::set<std::pair<int, int>> relations;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (!maps[i]) continue;
        const int a = entries[i].number;
        const TorusMap d = dual(*maps[i]);
        std::vector<int> partners;
        for (std::size_t j = 0; j < entries.size(); ++j) {
            if (maps[j] && are_map_isomorphic(d, *maps[j])) partners.push_back(entries[j].number);
        }
        const int expected = a >= 1 && a < static_cast<int>(table.size()) ? table[static_cast<std::size_t>(a)] : 0;
        relations.insert({std::min(a, expected), std::max(a, expected)});
        const bool ok = partners.size() == 1 && partners[0] == expected;
        if (!ok) ++r.dual_mismatches;
        std::string found;
        for (int p : partners) found += (found.empty() ? "" : ",") + std::to_string(p);
        add(a, "dual", ok, "expected " + std::to_string(expected) + ", found {" + found + "}");
    }
    r.dual_relations_checked = static_cast<int>(relations.size());

    std::set<CanonicalKey> keys;
    for (const auto& m : maps) {
        if (m) keys.insert(canonical_key(*m));
    }
    r.distinct_keys = static_cast<int>(keys.size());
    add(0, "distinct keys", r.distinct_keys == static_cast<int>(entries.size()),
        std::to_string(r.distinct_keys) + " of " + std::to_string(entries.size()));
    return r;
}

Report verify() { return verify(load()); }

std::vector<std::pair<int, int>> find_graph_twin_pairs() {
    const auto& es = load();
    std::vector<TorusMap> maps;
    for (const auto& e : es) maps.push_back(e.map());
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < maps.size(); ++i) {
        for (std::size_t j = i + 1; j < maps.size(); ++j) {
            const auto& a = maps[i];
            const auto& b = maps[j];
            if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() ||
                valence_distribution(a) != valence_distribution(b)) {
                continue;
            }
            if (are_graph_isomorphic(a, b) && !are_map_isomorphic(a, b)) {
                out.emplace_back(es[i].number, es[j].number);
            }
        }
    }
    return out;
}

std::optional<std::pair<int, int>> find_graph_twin_pair() {
    auto all = find_graph_twin_pairs();
    if (all.empty()) return std::nullopt;
    return all.front();
}

std::string export_lines() {
    std::string s;
    for (const auto& e : load()) s += serialize(e.map()) + " | via=catalog:" + std::to_string(e.number) + "\n";
    return s;
}

}  // namespace tpm::catalog
