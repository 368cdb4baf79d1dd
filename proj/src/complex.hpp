#pragma once

#include <array>
#include <optional>
#include <vector>

#include "tpm/map.hpp"

namespace tpm::detail {

/// Cell complex of a closed surface with explicit edge ids, so that parallel
/// edges can be told apart. Vertices are 0-based.
struct Complex {
    int vertex_count = 0;
    std::vector<std::array<int, 2>> edge_ends;
    std::vector<std::array<int, 2>> edge_faces;
    std::vector<std::vector<int>> face_vertices;
    /// face_edges[f][i] joins face_vertices[f][i] and face_vertices[f][i + 1].
    std::vector<std::vector<int>> face_edges;
    /// Faces containing each vertex.
    std::vector<std::vector<int>> vertex_faces;

    int face_count() const { return static_cast<int>(face_vertices.size()); }
    int edge_count() const { return static_cast<int>(edge_ends.size()); }

    static Complex primal(const TorusMap& map);
    static Complex dual(const TorusMap& map);

private:
    void finish();
};

/// If the faces flagged in `in` form a closed disk, returns its boundary as a
/// vertex cycle.
std::optional<std::vector<int>> disk_boundary(const Complex& c, const std::vector<char>& in);

/// Euler characteristic of the union of the flagged faces.
int region_euler(const Complex& c, const std::vector<char>& in);

/// Connected components of the flagged faces, where two faces are joined
/// across an edge unless the edge is blocked.
std::vector<std::vector<int>> face_components(const Complex& c, const std::vector<char>& in,
                                              const std::vector<char>& blocked_edge);

}  // namespace tpm::detail
