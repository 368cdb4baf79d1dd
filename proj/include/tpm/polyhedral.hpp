#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tpm/map.hpp"

namespace tpm {

/// Two faces that meet improperly and the vertices they share.
struct ImproperMeeting {
    int face_a = -1;
    int face_b = -1;
    std::vector<VertexId> shared;  // sorted
};

struct Meeting {
    bool proper = true;
    std::vector<VertexId> shared;  // sorted
};

/// Proper iff the faces share at most one vertex, or exactly two vertices
/// that are consecutive in both.
Meeting meet(const Face& a, const Face& b);
Meeting faces_meet_properly(const TorusMap& map, int face_i, int face_j);

/// Lexicographically first improper pair (i < j), if any.
std::optional<ImproperMeeting> first_improper_pair(const TorusMap& map);
bool is_polyhedral(const TorusMap& map);

/// Result of an edit that may delete vertices. renumbering[old] is the new id,
/// or 0 for a deleted vertex.
struct Reduction {
    TorusMap map;
    std::vector<VertexId> renumbering;
};

/// Deletes edge uv, merging its two faces and suppressing endpoints that drop
/// to valence two. Throws MapError if the result is not a torus map.
Reduction remove_edge(const TorusMap& map, VertexId u, VertexId v);

/// Contracts edge uv onto min(u, v); each resulting two-sided face collapses
/// to a single edge. Throws MapError if the result is not a torus map.
Reduction shrink_edge(const TorusMap& map, VertexId u, VertexId v);

/// Merged-face scan: only the faces touched by the removal are re-checked.
/// Precondition: map is polyhedral.
bool is_edge_removable(const TorusMap& map, VertexId u, VertexId v);
/// Rebuild-and-reclassify reference for is_edge_removable.
bool is_edge_removable_slow(const TorusMap& map, VertexId u, VertexId v);
/// Precondition: map is polyhedral.
bool is_edge_shrinkable(const TorusMap& map, VertexId u, VertexId v);

enum class Status { DiminimalTPM, PolyhedralNotDiminimal, NotPolyhedral };

std::string_view to_string(Status status);

struct Verdict {
    Status status = Status::NotPolyhedral;
    /// Set for NotPolyhedral.
    std::optional<ImproperMeeting> improper;
    /// Set for PolyhedralNotDiminimal: the edge (u < v) and whether it was
    /// found removable (otherwise shrinkable).
    std::optional<std::pair<VertexId, VertexId>> edge;
    bool removable = false;

    /// "status<TAB>witness"
    std::string record() const;
};

/// Improper pairs first, then removable edges, then shrinkable edges, each in
/// lexicographic order.
Verdict classify(const TorusMap& map);

}  // namespace tpm
