#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tpm/isomorphism.hpp"
#include "tpm/map.hpp"
#include "tpm/polyhedral.hpp"

namespace tpm {

/// A boundary point of a face with k sides: point 2i is vertex face[i], point
/// 2i + 1 is a new vertex subdividing the edge face[i] -> face[i + 1].
struct ChordSpec {
    int face = -1;
    int a = -1;  // a < b
    int b = -1;
    friend bool operator==(const ChordSpec&, const ChordSpec&) = default;
};

enum class ChordKind { VV, VE, EE };
ChordKind kind(const ChordSpec& spec);

/// Empty if the chord can be added; otherwise why not.
std::optional<std::string> chord_problem(const TorusMap& map, const ChordSpec& spec);

/// Splits the face along the chord. Subdivision vertices get ids n+1 (for a)
/// and then the next free id (for b); the face is replaced by the half from a
/// to b and the half from b to a is appended. A subdivided marked edge keeps
/// the new vertex inside its path. Throws MapError on an invalid spec.
TorusMap add_edge(const TorusMap& map, const ChordSpec& spec);

/// Every valid chord of the face, ordered by (a, b).
std::vector<ChordSpec> enumerate_edge_additions(const TorusMap& map, int face);
/// Over all faces, in face order.
std::vector<ChordSpec> enumerate_edge_additions(const TorusMap& map);

/// Splits x into x (keeping `count` consecutive neighbours counterclockwise
/// from rotation index `start`) and a new vertex n+1 taking the others, joined
/// by a new edge. share_start / share_end keep the first / last neighbour of
/// the block on both vertices.
struct VertexSplitSpec {
    VertexId x = 0;
    int start = 0;
    int count = 0;
    bool share_start = false;
    bool share_end = false;
};

TorusMap split_vertex(const TorusMap& map, const VertexSplitSpec& spec);

// --- seed set ---

/// Classes of a single cross edge on the second band.
enum class CrossClass { StraightAcross, DiagonalVV, NearVE, FarVE, AlignedEE, OffsetEE };
char letter(CrossClass c);

struct SeedMap {
    TorusMap map;            // marks 1-4, 2-5, 3-6
    CrossClass cls;          // least class among its three cross edges
    std::string pattern;     // attachment description
};

struct SeedReport {
    int candidates = 0;         // attachment patterns tried
    int rejected_invalid = 0;   // parallel edges (straight-across) and the like
    int distinct = 0;           // after dedup
    int pruned_three_bands = 0;
    std::vector<SeedMap> seeds;
    /// Orbits of single cross edges per kind (vv, ve, ee) under the symmetries
    /// of the two bands.
    std::array<int, 3> first_edge_orbits{};
    std::array<int, 6> per_class{};  // indexed by CrossClass
    std::string text() const;
};

/// Both bands between X = (1,2,3) and Y = (4,5,6); the first carries the
/// marked edges 1-4, 2-5, 3-6, the second three disjoint non-crossing cross
/// edges in every attachment pattern and twist. Deduplicated by marked
/// canonical key; maps with three bands are dropped.
SeedReport build_seed_set();

/// The seed whose second band carries the three diagonals 4-2, 5-3, 6-1.
TorusMap seed_band_map();

// --- expansion and pruning ---

struct ExpansionOptions {
    /// Add every chord of both faces instead of the configurations.
    bool over_approximate = false;
};

struct Successor {
    TorusMap map;
    std::string via;  // chord description
};

/// Successors of a non-polyhedral map through its first improper pair.
/// Returns an empty list for a polyhedral map.
std::vector<Successor> improper_pair_expansions(const TorusMap& map, const ExpansionOptions& options = {});

enum class PruneReason { HasEIC, DualHasEIC, ThreeBands, MissingMarkedEdges };
std::string_view to_string(PruneReason reason);

struct PruneOptions {
    bool three_bands = true;
};

std::optional<PruneReason> prune(const TorusMap& map, const PruneOptions& options = {});

}  // namespace tpm
