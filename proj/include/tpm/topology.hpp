#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tpm/map.hpp"

namespace tpm {

/// A cycle given by its vertices in order; consecutive vertices (and the last
/// and first) must be adjacent.
using Cycle = std::vector<VertexId>;

/// Faces on the disk side of a contractible cycle, or nullopt when the cycle
/// does not bound a disk. Throws std::invalid_argument if `cycle` is not a
/// simple cycle of the map.
std::optional<std::vector<int>> is_planar_cycle(const TorusMap& map, const Cycle& cycle);

struct EicWitness {
    Cycle cycle;                          // boundary of the disk
    std::pair<VertexId, VertexId> edge;   // strictly inside the disk
    std::vector<int> disk_faces;
};

/// Edge inside a contractible cycle. Exhaustive: for every edge, every union
/// of faces containing the faces at both endpoints is tried, smallest first.
std::optional<EicWitness> has_eic(const TorusMap& map);

/// has_eic on the dual. Works on the dual cell complex directly, so parallel
/// edges in the dual (faces sharing two edges) are handled. Witness vertices
/// are face indices + 1.
std::optional<EicWitness> dual_has_eic(const TorusMap& map);

struct Band {
    std::vector<int> faces;
    Cycle lower;  // the two boundary cycles
    Cycle upper;
};

struct BandDecomposition {
    std::vector<Band> bands;
    std::vector<Cycle> cycles;  // the k cutting cycles
};

/// Simple cycles that do not bound a disk, each listed from its least vertex.
std::vector<Cycle> noncontractible_cycles(const TorusMap& map);

/// Partition of the faces into k >= 2 annuli cut out by k pairwise disjoint
/// noncontractible cycles; each band is bounded by two of the cycles.
std::optional<BandDecomposition> find_band_decomposition(const TorusMap& map, int k);

/// Maximum number of vertex-disjoint paths from band.lower to band.upper
/// using only edges of the band's faces.
int disjoint_cross_paths(const TorusMap& map, const Band& band);

}  // namespace tpm
