#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tpm/map.hpp"

namespace tpm::catalog {

/// One row of the published list of diminimal toroidal polyhedral maps.
struct Entry {
    int number = 0;
    int order = 0;            // vertex count
    int size = 0;             // face count
    std::vector<int> faces_by_size;      // P, indexed from 3
    std::vector<int> vertices_by_valence;  // V, indexed from 3
    std::string serial;
    /// The published P and V columns of this row are exchanged.
    bool columns_swapped = false;
    TorusMap map() const { return parse_serial(serial); }
};

constexpr int kEntryCount = 53;

/// Rows exactly as embedded, without any checking.
const std::vector<Entry>& raw_entries();

/// All 53 rows, parsed and checked against their stored columns. Throws
/// std::runtime_error if the embedded data is corrupt.
const std::vector<Entry>& load();
const Entry& entry(int number);

/// Published dual partner of each entry (self-dual entries map to
/// themselves). Index 0 unused.
const std::vector<int>& dual_table();
const std::vector<int>& self_dual_numbers();

struct Check {
    int number = 0;
    std::string what;
    bool ok = false;
    std::string detail;
};

struct Report {
    std::vector<Check> checks;
    int diminimal_count = 0;
    int dual_relations_checked = 0;
    int dual_mismatches = 0;
    int distinct_keys = 0;
    bool all_pass() const;
    std::string text() const;
};

/// Full verification: validity, Euler, columns, diminimality, prunes, dual
/// pairing and key distinctness. `entries` defaults to the embedded rows and
/// exists so tampered copies can be checked.
Report verify(const std::vector<Entry>& entries);
Report verify();

/// First pair (i < j) whose graphs are isomorphic while the maps are not.
std::optional<std::pair<int, int>> find_graph_twin_pair();
std::vector<std::pair<int, int>> find_graph_twin_pairs();

/// Entries in the line format, one per line.
std::string export_lines();

}  // namespace tpm::catalog
