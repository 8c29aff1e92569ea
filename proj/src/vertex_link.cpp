#include "normalcx/vertex_link.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace normalcx {

namespace {

std::size_t position_in(const std::vector<std::size_t>& sorted, std::size_t value) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), value);
    if (it == sorted.end() || *it != value) return sorted.size();
    return static_cast<std::size_t>(it - sorted.begin());
}

[[noreturn]] void bad_link(std::size_t vertex, const std::string& why) {
    throw TriangulationError(TriangulationErrorKind::BadLink,
                             "link of vertex " + std::to_string(vertex) + " " + why);
}

}  // namespace

std::size_t VertexLink::arc_position(std::size_t arc) const { return position_in(arcs, arc); }
std::size_t VertexLink::triangle_position(std::size_t disc) const { return position_in(triangles, disc); }
std::size_t VertexLink::cell_position(std::size_t end) const { return position_in(cells, end); }

VertexLink build_link(const Triangulation& tri, std::size_t vertex) {
    VertexLink link;
    link.vertex = vertex;
    for (std::size_t i = 0; i < tri.tet_count(); ++i)
        for (int c = 0; c < 4; ++c)
            if (tri.vertex_class(i, c) == vertex) link.triangles.push_back(disc_index(i, c));
    for (std::size_t a = 0; a < tri.arc_count(); ++a)
        if (tri.arc_vertex(a) == vertex) link.arcs.push_back(a);
    for (std::size_t e = 0; e < tri.edge_end_count(); ++e)
        if (tri.edge_end_vertex(e) == vertex) link.cells.push_back(e);
    if (link.triangles.empty()) bad_link(vertex, "is empty");

    std::vector<int> incidences(link.triangles.size(), 0);
    for (std::size_t arc : link.arcs) {
        const auto& sides = tri.face_sides(tri.arc_face(arc));
        const int c0 = tri.arc_corner(arc);
        const int c1 = tri.gluing(sides[0].tet, sides[0].face).map[c0];
        const std::array<std::size_t, 2> pos{link.triangle_position(disc_index(sides[0].tet, c0)),
                                             link.triangle_position(disc_index(sides[1].tet, c1))};
        if (pos[0] == link.triangles.size() || pos[1] == link.triangles.size())
            bad_link(vertex, "has an arc whose triangles belong to another vertex");
        ++incidences[pos[0]];
        ++incidences[pos[1]];
        link.arc_triangles.push_back(pos);
    }
    for (int n : incidences)
        if (n != 3) bad_link(vertex, "has a triangle without three incident edges");

    // Connectivity through shared arcs.
    std::vector<std::vector<std::size_t>> adjacent(link.triangles.size());
    for (const auto& [a, b] : link.arc_triangles) {
        adjacent[a].push_back(b);
        adjacent[b].push_back(a);
    }
    std::vector<bool> seen(link.triangles.size(), false);
    std::deque<std::size_t> queue{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!queue.empty()) {
        const std::size_t cur = queue.front();
        queue.pop_front();
        for (std::size_t next : adjacent[cur])
            if (!seen[next]) {
                seen[next] = true;
                ++reached;
                queue.push_back(next);
            }
    }
    if (reached != link.triangles.size()) bad_link(vertex, "is disconnected");

    link.euler_characteristic = static_cast<long>(link.cells.size()) - static_cast<long>(link.arcs.size()) +
                                static_cast<long>(link.triangles.size());
    if (link.euler_characteristic > 2 || link.euler_characteristic % 2 != 0)
        bad_link(vertex, "has Euler characteristic " + std::to_string(link.euler_characteristic) +
                             ", not that of a closed orientable surface");
    link.genus = (2 - link.euler_characteristic) / 2;
    link.is_sphere = link.euler_characteristic == 2;
    return link;
}

std::vector<VertexLink> build_links(const Triangulation& tri) {
    std::vector<VertexLink> out;
    out.reserve(tri.vertex_count());
    for (std::size_t v = 0; v < tri.vertex_count(); ++v) out.push_back(build_link(tri, v));
    return out;
}

void validate_links(const Triangulation& tri) {
    for (std::size_t v = 0; v < tri.vertex_count(); ++v) build_link(tri, v);
}

FundamentalClass fundamental_class(const Triangulation& tri, const VertexLink& link) {
    FundamentalClass out{Chain2(tri.disc_count())};
    for (std::size_t d : link.triangles) out.chain[d] = 1;
    return out;
}

int intrinsic_arc_sign(const Triangulation& tri, std::size_t tet, int corner, int face) {
    // Opposite face Phi = {0..3} \ {corner} with its boundary orientation,
    // then the sign of the edge Phi \ {face} in the simplicial boundary of Phi.
    const int face_sign = (corner % 2 == 0) ? 1 : -1;
    const int edge_sign = (corner_slot(corner, face) % 2 == 0) ? 1 : -1;
    int p = -1, q = -1;
    for (int x : face_corners(face))
        if (x != corner) (p < 0 ? p : q) = x;
    const auto [tail, head] = tri.edge_direction(tet, p, q);
    const int direction = tail < head ? 1 : -1;
    return tri.tet_orientation(tet) * face_sign * edge_sign * direction;
}

bool link_boundary_restriction_check(const Triangulation& tri, const BoundaryMatrix& boundary,
                                     const VertexLink& link) {
    std::vector<std::vector<int>> signs_per_arc(link.arcs.size());
    for (std::size_t d : link.triangles) {
        const std::size_t tet = d / kDiscTypes;
        const int corner = static_cast<int>(d % kDiscTypes);
        const auto& column = boundary.column(d);
        if (column.size() != 3) return false;
        for (const auto& entry : column) {
            const std::size_t pos = link.arc_position(entry.row);
            if (pos == link.arcs.size()) return false;
            signs_per_arc[pos].push_back(entry.value);
        }
        for (int f = 0; f < 4; ++f) {
            if (f == corner) continue;
            const std::size_t arc = tri.arc_index(tet, f, corner);
            if (boundary.at(arc, d) != intrinsic_arc_sign(tri, tet, corner, f)) return false;
        }
    }
    for (const auto& signs : signs_per_arc)
        if (signs.size() != 2 || signs[0] != -signs[1]) return false;
    return true;
}

Chain1 projection(const VertexLink& link, const Chain1& chain) {
    Chain1 out(chain.size());
    for (std::size_t a : link.arcs) out[a] = chain[a];
    return out;
}

IntMatrix link_boundary_matrix(const BoundaryMatrix& boundary, const VertexLink& link) {
    IntMatrix out(link.arcs.size(), link.triangles.size());
    for (std::size_t j = 0; j < link.triangles.size(); ++j)
        for (const auto& e : boundary.column(link.triangles[j])) {
            const std::size_t pos = link.arc_position(e.row);
            if (pos < link.arcs.size()) out(pos, j) += e.value;
        }
    return out;
}

SparseMatrix link_cell_boundary(const Triangulation& tri, const VertexLink& link) {
    std::vector<std::vector<MatrixEntry>> columns(link.arcs.size());
    for (std::size_t k = 0; k < link.arcs.size(); ++k) {
        const std::size_t arc = link.arcs[k];
        const FaceSlot rep = tri.face_sides(tri.arc_face(arc))[0];
        const int corner = tri.arc_corner(arc);
        int p = -1, q = -1;
        for (int x : face_corners(rep.face))
            if (x != corner) (p < 0 ? p : q) = x;
        const auto [tail, head] = tri.edge_direction(rep.tet, p, q);
        columns[k].push_back({link.cell_position(tri.edge_end(rep.tet, corner, head)), 1});
        columns[k].push_back({link.cell_position(tri.edge_end(rep.tet, corner, tail)), -1});
    }
    return SparseMatrix(link.cells.size(), std::move(columns));
}

}  // namespace normalcx
