#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "normalcx/permutation.hpp"

namespace normalcx {

enum class TriangulationErrorKind {
    Malformed,
    Unglued,
    SelfGlued,
    DoublyGlued,
    NonInvolutive,
    BadCorners,
    NonOrientable,
    DegenerateEdge,
    BadLink,
};

const char* to_string(TriangulationErrorKind kind);

class TriangulationError : public std::runtime_error {
public:
    TriangulationError(TriangulationErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    TriangulationErrorKind kind() const { return kind_; }

private:
    TriangulationErrorKind kind_;
};

/// Face slot f of a tetrahedron is the face omitting local vertex f.
struct FaceSlot {
    std::size_t tet = 0;
    int face = 0;
    auto operator<=>(const FaceSlot&) const = default;
};

/// Partner of a face slot. `map` sends local vertices of the source
/// tetrahedron to local vertices of the partner; map[source face] is the
/// partner face.
struct Gluing {
    std::size_t tet = 0;
    int face = 0;
    Perm4 map;
    auto operator<=>(const Gluing&) const = default;
};

/// Raw face pairings as read from input; an empty optional is an unglued face.
using GluingTable = std::vector<std::array<std::optional<Gluing>, 4>>;
/// Face pairings that passed validate_pairing.
using Pairing = std::vector<std::array<Gluing, 4>>;

/// Checks that every face slot is glued to exactly one other slot,
/// that the pairing is an involution, and that corner maps respect faces.
Pairing validate_pairing(const GluingTable& table);

/// Local edges of a tetrahedron in the order 01, 02, 03, 12, 13, 23.
constexpr std::array<std::array<int, 2>, 6> kLocalEdges{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

constexpr int local_edge_index(int a, int b) {
    if (a > b) {
        int tmp = a;
        a = b;
        b = tmp;
    }
    if (a == 0) return b - 1;
    if (a == 1) return b + 1;
    return 5;
}

/// Per-tetrahedron signs: +1 when local order 0123 is positive.
/// Breadth-first parity propagation; the least tetrahedron of each
/// connected component is +1.
std::vector<int> orient(const Pairing& pairing);

struct EdgeOrientation {
    std::size_t edge_count = 0;
    /// Indexed by 6*tet + local edge.
    std::vector<std::size_t> edge_class;
    /// Indexed by 6*tet + local edge: +1 if the class is directed from the
    /// lower local label to the higher one in this tetrahedron, -1 otherwise.
    std::vector<int> direction;
    /// Per class, the least (tet, local edge) representative.
    std::vector<std::pair<std::size_t, int>> representative;

    bool operator==(const EdgeOrientation&) const = default;
};

/// Edge classes, each directed low-to-high in its least representative.
EdgeOrientation orient_edges(const Pairing& pairing);

/// Seven normal disc types per tetrahedron: triangles T0..T3 then quads Q1..Q3.
/// Quad Qk separates edge {0,k} from its opposite edge.
inline constexpr std::size_t kDiscTypes = 7;

constexpr std::size_t disc_index(std::size_t tet, int type) { return kDiscTypes * tet + static_cast<std::size_t>(type); }
constexpr bool is_triangle_type(int type) { return type < 4; }

/// A validated closed orientable 3-pseudo-manifold with its combinatorial
/// skeleton. Immutable once built.
class Triangulation {
public:
    /// Validates and derives every class partition, orientation sign and
    /// canonical edge orientation; also validates every vertex link.
    static Triangulation build(const GluingTable& table);
    static Triangulation build(const Pairing& pairing);

    std::size_t tet_count() const { return pairing_.size(); }
    const Pairing& pairing() const { return pairing_; }
    const Gluing& gluing(std::size_t tet, int face) const { return pairing_[tet][face]; }
    FaceSlot partner(FaceSlot slot) const;

    int tet_orientation(std::size_t tet) const { return orientation_[tet]; }
    const std::vector<int>& orientations() const { return orientation_; }
    std::size_t component(std::size_t tet) const { return component_[tet]; }
    std::size_t component_count() const { return component_count_; }

    std::size_t vertex_count() const { return vertex_count_; }
    std::size_t vertex_class(std::size_t tet, int v) const { return vertex_class_[4 * tet + v]; }

    std::size_t edge_count() const { return edges_.edge_count; }
    std::size_t edge_class(std::size_t tet, int a, int b) const;
    /// (tail, head) of the directed edge class through local edge {a,b}.
    std::array<int, 2> edge_direction(std::size_t tet, int a, int b) const;
    const EdgeOrientation& edge_orientation() const { return edges_; }

    std::size_t face_count() const { return face_sides_.size(); }
    std::size_t face_class(std::size_t tet, int face) const { return face_class_[4 * tet + face]; }
    /// Both incidences of a face class; element 0 is the least slot and is
    /// the canonical representative.
    const std::array<FaceSlot, 2>& face_sides(std::size_t face_class) const { return face_sides_[face_class]; }

    /// Normal arcs: 3 per face class, indexed by the corner of the
    /// canonical representative in ascending order.
    std::size_t arc_count() const { return 3 * face_count(); }
    std::size_t arc_index(std::size_t tet, int face, int corner) const;
    std::size_t arc_face(std::size_t arc) const { return arc / 3; }
    /// Local corner the arc links, in the canonical representative.
    int arc_corner(std::size_t arc) const;
    std::size_t arc_vertex(std::size_t arc) const { return arc_vertex_[arc]; }

    /// Ends of edges at vertices: the class of local edge {from,to}
    /// near `from`. These are the 0-cells of the vertex links.
    std::size_t edge_end_count() const { return end_vertex_.size(); }
    std::size_t edge_end(std::size_t tet, int from, int to) const;
    std::size_t edge_end_vertex(std::size_t end) const { return end_vertex_[end]; }
    /// Least (tet, from, to) representative of an edge end class.
    std::array<std::size_t, 3> edge_end_representative(std::size_t end) const { return end_rep_[end]; }

    std::size_t disc_count() const { return kDiscTypes * tet_count(); }

    /// Same triangulation with the direction of one edge class reversed.
    Triangulation with_edge_flipped(std::size_t edge) const;

private:
    Triangulation() = default;
    void derive_skeleton();

    Pairing pairing_;
    std::vector<int> orientation_;
    std::vector<std::size_t> component_;
    std::size_t component_count_ = 0;

    std::vector<std::size_t> vertex_class_;
    std::size_t vertex_count_ = 0;

    EdgeOrientation edges_;

    std::vector<std::size_t> face_class_;
    std::vector<std::array<FaceSlot, 2>> face_sides_;

    std::vector<std::size_t> arc_vertex_;

    std::vector<std::size_t> end_class_;
    std::vector<std::size_t> end_vertex_;
    std::vector<std::array<std::size_t, 3>> end_rep_;
};

}  // namespace normalcx
