#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tpm {

/// 1-based vertex identifier, dense in 1..vertex_count.
using VertexId = int;
/// A face boundary listed counterclockwise.
using Face = std::vector<VertexId>;
/// A marked path; normally a single edge (two vertices). Subdividing a marked
/// edge inserts the new vertex into the path.
using MarkedPath = std::vector<VertexId>;

enum class ViolationKind {
    EmptyMap,
    VertexOutOfRange,
    FaceTooShort,
    RepeatedVertexInFace,
    DuplicateEdgeDirection,
    UnpairedEdge,
    ValenceBelowThree,
    NonManifoldVertex,
    Disconnected,
    EulerNonZero,
    BadMarkedPath,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    std::string witness;
};

/// Thrown when a face list does not describe a valid torus map, or when an
/// operation would produce one that does not.
class MapError : public std::runtime_error {
public:
    MapError(ViolationKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ViolationKind kind() const noexcept { return kind_; }

private:
    ViolationKind kind_;
};

/// Thrown for malformed serial text.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Location of a directed edge inside a face: face[pos] -> face[pos + 1].
struct Slot {
    int face = -1;
    int pos = -1;
    friend bool operator==(const Slot&, const Slot&) = default;
};

struct EdgeRef {
    VertexId u = 0;  // u < v
    VertexId v = 0;
    Slot forward;    // occurrence of the dart u -> v
    Slot backward;   // occurrence of the dart v -> u
};

/// Counterclockwise neighbour order per vertex; index 0 is unused.
using RotationSystem = std::vector<std::vector<VertexId>>;

/// Checks every torus-map invariant on a raw face list. Empty result means
/// valid.
std::vector<Violation> validate(int vertex_count, const std::vector<Face>& faces,
                                const std::vector<MarkedPath>& marks = {});

/// V - E + F over a structurally parseable face list (E counts distinct
/// unordered consecutive pairs).
int euler_characteristic(int vertex_count, const std::vector<Face>& faces);

/// An embedded graph on the torus given by its counterclockwise faces.
/// Immutable; every instance satisfies the invariants checked by validate().
class TorusMap {
public:
    /// Throws MapError carrying the first violation.
    TorusMap(int vertex_count, std::vector<Face> faces, std::vector<MarkedPath> marks = {});

    int vertex_count() const noexcept { return n_; }
    int face_count() const noexcept { return static_cast<int>(faces_.size()); }
    int edge_count() const noexcept { return edge_count_; }

    const std::vector<Face>& faces() const noexcept { return faces_; }
    const Face& face(int i) const { return faces_.at(static_cast<std::size_t>(i)); }
    const std::vector<MarkedPath>& marks() const noexcept { return marks_; }

    int valence(VertexId v) const { return valence_.at(static_cast<std::size_t>(v)); }
    bool adjacent(VertexId a, VertexId b) const noexcept;
    /// Where the dart a -> b occurs, if the edge exists.
    std::optional<Slot> dart(VertexId a, VertexId b) const noexcept;
    /// Neighbour following w counterclockwise around v.
    VertexId next_ccw(VertexId v, VertexId w) const;
    /// Indices of faces incident to v, counterclockwise.
    std::vector<int> faces_around(VertexId v) const;

    /// Copy with the given marks replacing the current ones.
    TorusMap with_marks(std::vector<MarkedPath> marks) const;
    /// Copy with every face rotated so its smallest vertex comes first.
    TorusMap normalized() const;
    /// Copy with orientation reversed (each face listed backwards).
    TorusMap mirrored() const;
    /// Copy with vertex v renamed to perm[v] (perm[0] ignored, perm is a
    /// bijection on 1..n).
    TorusMap relabeled(std::span<const VertexId> perm) const;

    friend bool operator==(const TorusMap& a, const TorusMap& b) {
        return a.n_ == b.n_ && a.faces_ == b.faces_ && a.marks_ == b.marks_;
    }

private:
    void index();

    int n_ = 0;
    std::vector<Face> faces_;
    std::vector<MarkedPath> marks_;
    int edge_count_ = 0;
    std::vector<int> valence_;
    std::vector<std::int32_t> dart_;  // n*n table: face << 16 | pos, or -1
};

std::vector<EdgeRef> edges(const TorusMap& map);

/// Entry k - 3 counts vertices of valence k.
std::vector<int> valence_distribution(const TorusMap& map);
/// Entry k - 3 counts faces with k sides.
std::vector<int> face_size_distribution(const TorusMap& map);

int euler_characteristic(const TorusMap& map);

RotationSystem rotation_system(const TorusMap& map);
/// Traces faces from a rotation system (darts a->b continue with b -> the
/// clockwise predecessor of a at b).
std::vector<Face> faces_from_rotation(const RotationSystem& rotation);

/// Dual map: vertex i+1 is face i of the input; face v-1 lists the faces
/// around v counterclockwise. Marks are dropped.
TorusMap dual(const TorusMap& map);

// --- serial form: [order, 0, -1, f1..., -1, f2..., -1, ...] ---

/// Integers separated by whitespace and/or commas, brackets optional.
std::vector<long long> parse_integers(std::string_view text);
TorusMap parse_serial(std::string_view text);
TorusMap from_serial(std::span<const long long> values);
std::vector<long long> to_serial(const TorusMap& map);
/// "[n, 0, -1, a, b, c, -1, ...]"
std::string serialize(const TorusMap& map);

std::string format_marks(const std::vector<MarkedPath>& marks);
std::vector<MarkedPath> parse_marks(std::string_view text);

}  // namespace tpm
