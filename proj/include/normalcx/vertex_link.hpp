#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "normalcx/chain_complex.hpp"
#include "normalcx/exact_linalg.hpp"
#include "normalcx/triangulation.hpp"

namespace normalcx {

/// The triangulated surface of normal triangles around one vertex class.
struct VertexLink {
    std::size_t vertex = 0;
    /// Disc indices of the link triangles, ascending.
    std::vector<std::size_t> triangles;
    /// Arc indices of the link edges, ascending.
    std::vector<std::size_t> arcs;
    /// For arcs[k], positions in `triangles` of its two incident triangles.
    std::vector<std::array<std::size_t, 2>> arc_triangles;
    /// Edge-end classes forming the 0-cells of the link, ascending.
    std::vector<std::size_t> cells;
    long euler_characteristic = 0;
    long genus = 0;
    bool is_sphere = false;

    /// Position of an arc index in `arcs`, or arcs.size() if absent.
    std::size_t arc_position(std::size_t arc) const;
    std::size_t triangle_position(std::size_t disc) const;
    std::size_t cell_position(std::size_t end) const;
};

/// Throws TriangulationError(BadLink) if the link is not a closed connected
/// orientable surface.
VertexLink build_link(const Triangulation& tri, std::size_t vertex);

std::vector<VertexLink> build_links(const Triangulation& tri);

/// Runs build_link on every vertex class.
void validate_links(const Triangulation& tri);

struct FundamentalClass {
    Chain2 chain;
};

/// Coefficient 1 on every triangle of the link.
FundamentalClass fundamental_class(const Triangulation& tri, const VertexLink& link);

/// Sign of the arc in face `face` within the simplicial boundary of the link
/// triangle cutting off `corner` of `tet`, oriented as the boundary face of
/// the tetrahedron opposite the corner.
int intrinsic_arc_sign(const Triangulation& tri, std::size_t tet, int corner, int face);

/// Every link triangle's boundary lies on the link's arcs with the intrinsic
/// surface signs, and every link arc occurs in exactly two triangle
/// boundaries with opposite signs.
bool link_boundary_restriction_check(const Triangulation& tri, const BoundaryMatrix& boundary,
                                     const VertexLink& link);

/// Zeroes every coefficient on arcs outside the link.
Chain1 projection(const VertexLink& link, const Chain1& chain);

/// The link's own boundary map: rows follow link.arcs, columns link.triangles.
IntMatrix link_boundary_matrix(const BoundaryMatrix& boundary, const VertexLink& link);

/// Simplicial boundary from link edges to link 0-cells: rows follow
/// link.cells, columns link.arcs. An arc runs parallel to its directed edge.
SparseMatrix link_cell_boundary(const Triangulation& tri, const VertexLink& link);

}  // namespace normalcx
