#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tpm/map.hpp"

namespace tpm {

/// Which symmetries count as isomorphisms.
enum class Symmetry {
    WithReflections,      // orientation-reversing maps allowed (default)
    OrientationPreserving,
};

struct Signature {
    int order = 0;
    int faces = 0;
    std::vector<int> valences;    // from 3
    std::vector<int> face_sizes;  // from 3
    friend bool operator==(const Signature&, const Signature&) = default;
};

Signature invariant_signature(const TorusMap& map);

/// perm[v] is the image of vertex v (perm[0] unused).
using Bijection = std::vector<VertexId>;

/// Feasible-mapping backtracking: vertices are matched by (valence, incident
/// face sizes), adjacency is preserved at every step, and a complete
/// assignment must carry the faces onto the faces. Marks are ignored.
std::optional<Bijection> are_map_isomorphic(const TorusMap& a, const TorusMap& b,
                                            Symmetry symmetry = Symmetry::WithReflections);

/// Isomorphism of the underlying graphs only.
std::optional<Bijection> graph_isomorphism(const TorusMap& a, const TorusMap& b);
bool are_graph_isomorphic(const TorusMap& a, const TorusMap& b);

/// Isomorphism-invariant integer sequence.
struct CanonicalKey {
    std::vector<int> code;
    std::string hex() const;
    friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
    friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

struct KeyOptions {
    Symmetry symmetry = Symmetry::WithReflections;
    /// Include marked paths in the key (used for generation dedup).
    bool include_marks = false;
};

struct CanonicalForm {
    CanonicalKey key;
    /// labeling[v] = canonical id of v.
    Bijection labeling;
    /// True when the minimum was reached on the mirror image.
    bool mirrored = false;
};

/// Lexicographically least breadth-first code over every starting dart (and
/// both orientations when reflections are allowed).
CanonicalForm canonical_form(const TorusMap& map, const KeyOptions& options = {});
CanonicalKey canonical_key(const TorusMap& map, const KeyOptions& options = {});

/// The map relabeled by its canonical labeling, oriented per the minimum, faces
/// rotated to start at their least vertex and sorted. Equal for isomorphic
/// inputs.
TorusMap canonical_map(const TorusMap& map, const KeyOptions& options = {});

/// A map with one distinguished edge from `first` to `second`.
struct MarkedMap {
    TorusMap map;
    VertexId first = 0;   // endpoint on the first cycle
    VertexId second = 0;  // endpoint on the second cycle
};

struct ForeRear {
    int fore = -1;  // face in which `second` follows `first`
    int rear = -1;  // face in which `first` follows `second`
};

/// Throws std::invalid_argument if the marked pair is not an edge.
ForeRear fore_rear_faces(const MarkedMap& marked);

enum class MarkedIsomorphism { Simply, Complexly, None };

std::string_view to_string(MarkedIsomorphism kind);

/// Simply if an isomorphism carrying the mark to the mark (endpoint to
/// endpoint) also carries fore-face to fore-face; Complexly if such
/// isomorphisms exist but all of them swap fore and rear.
MarkedIsomorphism classify_marked_isomorphism(const MarkedMap& a, const MarkedMap& b);

}  // namespace tpm
