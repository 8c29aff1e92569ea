#include "normalcx/triangulation.hpp"

#include <algorithm>
#include <boost/pending/disjoint_sets.hpp>
#include <deque>
#include <map>
#include <sstream>

#include "normalcx/vertex_link.hpp"

namespace normalcx {

namespace {

std::string slot_name(std::size_t tet, int face) {
    std::ostringstream os;
    os << "tet " << tet << " face " << face;
    return os.str();
}

/// Partition labels ordered by first occurrence.
std::vector<std::size_t> canonical_labels(boost::disjoint_sets_with_storage<>& sets, std::size_t n,
                                          std::size_t& count) {
    std::map<std::size_t, std::size_t> label_of_root;
    std::vector<std::size_t> out(n);
    for (std::size_t x = 0; x < n; ++x) {
        auto root = sets.find_set(x);
        auto [it, inserted] = label_of_root.try_emplace(root, label_of_root.size());
        out[x] = it->second;
    }
    count = label_of_root.size();
    return out;
}

std::size_t end_slot(std::size_t tet, int from, int to) {
    return 12 * tet + 3 * static_cast<std::size_t>(from) + static_cast<std::size_t>(to < from ? to : to - 1);
}

}  // namespace

const char* to_string(TriangulationErrorKind kind) {
    switch (kind) {
        case TriangulationErrorKind::Malformed: return "malformed";
        case TriangulationErrorKind::Unglued: return "unglued face";
        case TriangulationErrorKind::SelfGlued: return "face glued to itself";
        case TriangulationErrorKind::DoublyGlued: return "doubly glued face";
        case TriangulationErrorKind::NonInvolutive: return "non-involutive pairing";
        case TriangulationErrorKind::BadCorners: return "bad corner correspondence";
        case TriangulationErrorKind::NonOrientable: return "non-orientable";
        case TriangulationErrorKind::DegenerateEdge: return "edge identified with its reverse";
        case TriangulationErrorKind::BadLink: return "bad vertex link";
    }
    return "unknown";
}

Pairing validate_pairing(const GluingTable& table) {
    using K = TriangulationErrorKind;
    const std::size_t t = table.size();
    if (t == 0) throw TriangulationError(K::Malformed, "triangulation has no tetrahedra");

    for (std::size_t i = 0; i < t; ++i)
        for (int f = 0; f < 4; ++f)
            if (!table[i][f]) throw TriangulationError(K::Unglued, slot_name(i, f) + " is unglued");

    std::vector<int> references(4 * t, 0);
    for (std::size_t i = 0; i < t; ++i) {
        for (int f = 0; f < 4; ++f) {
            const auto& g = table[i][f];
            if (g->tet >= t || g->face < 0 || g->face > 3)
                throw TriangulationError(K::Malformed, slot_name(i, f) + " names a nonexistent partner");
            if (g->map[f] != g->face)
                throw TriangulationError(K::BadCorners,
                                         slot_name(i, f) + " maps a corner onto the omitted vertex of its partner");
            if (g->tet == i && g->face == f)
                throw TriangulationError(K::SelfGlued, slot_name(i, f) + " is glued to itself");
            ++references[4 * g->tet + static_cast<std::size_t>(g->face)];
        }
    }
    for (std::size_t s = 0; s < 4 * t; ++s)
        if (references[s] > 1)
            throw TriangulationError(K::DoublyGlued, slot_name(s / 4, static_cast<int>(s % 4)) +
                                                         " is the partner of more than one face");

    Pairing out(t);
    for (std::size_t i = 0; i < t; ++i) {
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = *table[i][f];
            const auto& back = table[g.tet][g.face];
            if (back->tet != i || back->face != f || back->map != g.map.inverse())
                throw TriangulationError(K::NonInvolutive, slot_name(i, f) + " and " +
                                                               slot_name(g.tet, g.face) +
                                                               " do not glue back to each other");
            out[i][f] = g;
        }
    }
    return out;
}

std::vector<int> orient(const Pairing& pairing) {
    const std::size_t t = pairing.size();
    std::vector<int> sign(t, 0);
    for (std::size_t root = 0; root < t; ++root) {
        if (sign[root] != 0) continue;
        sign[root] = 1;
        std::deque<std::size_t> queue{root};
        while (!queue.empty()) {
            std::size_t i = queue.front();
            queue.pop_front();
            for (int f = 0; f < 4; ++f) {
                const Gluing& g = pairing[i][f];
                // A gluing must reverse the induced face orientations.
                int required = -sign[i] * g.map.sign();
                if (sign[g.tet] == 0) {
                    sign[g.tet] = required;
                    queue.push_back(g.tet);
                } else if (sign[g.tet] != required) {
                    throw TriangulationError(TriangulationErrorKind::NonOrientable,
                                             "orientation parity conflict across " + slot_name(i, f));
                }
            }
        }
    }
    return sign;
}

EdgeOrientation orient_edges(const Pairing& pairing) {
    const std::size_t n = 6 * pairing.size();
    constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
    EdgeOrientation out;
    out.edge_class.assign(n, kUnset);
    out.direction.assign(n, 0);

    for (std::size_t root = 0; root < n; ++root) {
        if (out.edge_class[root] != kUnset) continue;
        const std::size_t cls = out.edge_count++;
        out.representative.emplace_back(root / 6, static_cast<int>(root % 6));
        out.edge_class[root] = cls;
        out.direction[root] = 1;
        std::deque<std::size_t> queue{root};
        while (!queue.empty()) {
            const std::size_t cur = queue.front();
            queue.pop_front();
            const std::size_t tet = cur / 6;
            const auto [a, b] = kLocalEdges[cur % 6];
            for (int f = 0; f < 4; ++f) {
                if (f == a || f == b) continue;
                const Gluing& g = pairing[tet][f];
                const int ga = g.map[a], gb = g.map[b];
                const std::size_t next = 6 * g.tet + static_cast<std::size_t>(local_edge_index(ga, gb));
                const int relative = (ga < gb) ? 1 : -1;
                const int dir = out.direction[cur] * relative;
                if (out.edge_class[next] == kUnset) {
                    out.edge_class[next] = cls;
                    out.direction[next] = dir;
                    queue.push_back(next);
                } else if (out.direction[next] != dir) {
                    throw TriangulationError(TriangulationErrorKind::DegenerateEdge,
                                             "edge " + std::to_string(cls) + " through tet " +
                                                 std::to_string(tet) + " is identified with its reverse");
                }
            }
        }
    }
    return out;
}

Triangulation Triangulation::build(const GluingTable& table) { return build(validate_pairing(table)); }

Triangulation Triangulation::build(const Pairing& pairing) {
    Triangulation tri;
    tri.pairing_ = pairing;
    tri.orientation_ = orient(pairing);
    tri.edges_ = orient_edges(pairing);
    tri.derive_skeleton();
    validate_links(tri);
    return tri;
}

void Triangulation::derive_skeleton() {
    const std::size_t t = tet_count();

    // Components.
    component_.assign(t, static_cast<std::size_t>(-1));
    component_count_ = 0;
    for (std::size_t root = 0; root < t; ++root) {
        if (component_[root] != static_cast<std::size_t>(-1)) continue;
        component_[root] = component_count_;
        std::deque<std::size_t> queue{root};
        while (!queue.empty()) {
            std::size_t i = queue.front();
            queue.pop_front();
            for (const Gluing& g : pairing_[i])
                if (component_[g.tet] == static_cast<std::size_t>(-1)) {
                    component_[g.tet] = component_count_;
                    queue.push_back(g.tet);
                }
        }
        ++component_count_;
    }

    // Vertex classes.
    {
        boost::disjoint_sets_with_storage<> sets(4 * t);
        for (std::size_t i = 0; i < t; ++i)
            for (int f = 0; f < 4; ++f) {
                const Gluing& g = pairing_[i][f];
                for (int c : face_corners(f)) sets.union_set(4 * i + c, 4 * g.tet + g.map[c]);
            }
        vertex_class_ = canonical_labels(sets, 4 * t, vertex_count_);
    }

    // Face classes; side 0 is the least slot.
    face_class_.assign(4 * t, static_cast<std::size_t>(-1));
    face_sides_.clear();
    for (std::size_t i = 0; i < t; ++i)
        for (int f = 0; f < 4; ++f) {
            if (face_class_[4 * i + f] != static_cast<std::size_t>(-1)) continue;
            const Gluing& g = pairing_[i][f];
            face_class_[4 * i + f] = face_sides_.size();
            face_class_[4 * g.tet + g.face] = face_sides_.size();
            face_sides_.push_back({FaceSlot{i, f}, FaceSlot{g.tet, g.face}});
        }

    arc_vertex_.resize(arc_count());
    for (std::size_t arc = 0; arc < arc_count(); ++arc) {
        const FaceSlot rep = face_sides_[arc_face(arc)][0];
        arc_vertex_[arc] = vertex_class(rep.tet, arc_corner(arc));
    }

    // Edge ends: (tet, from, to) identified across faces containing both.
    {
        boost::disjoint_sets_with_storage<> sets(12 * t);
        for (std::size_t i = 0; i < t; ++i)
            for (int f = 0; f < 4; ++f) {
                const Gluing& g = pairing_[i][f];
                for (int from : face_corners(f))
                    for (int to : face_corners(f))
                        if (from != to)
                            sets.union_set(end_slot(i, from, to), end_slot(g.tet, g.map[from], g.map[to]));
            }
        std::size_t count = 0;
        end_class_ = canonical_labels(sets, 12 * t, count);
        end_vertex_.assign(count, 0);
        end_rep_.assign(count, {0, 0, 0});
        std::vector<bool> seen(count, false);
        for (std::size_t i = 0; i < t; ++i)
            for (int from = 0; from < 4; ++from)
                for (int to = 0; to < 4; ++to) {
                    if (from == to) continue;
                    const std::size_t e = end_class_[end_slot(i, from, to)];
                    if (seen[e]) continue;
                    seen[e] = true;
                    end_vertex_[e] = vertex_class(i, from);
                    end_rep_[e] = {i, static_cast<std::size_t>(from), static_cast<std::size_t>(to)};
                }
    }
}

FaceSlot Triangulation::partner(FaceSlot slot) const {
    const Gluing& g = gluing(slot.tet, slot.face);
    return FaceSlot{g.tet, g.face};
}

std::size_t Triangulation::edge_class(std::size_t tet, int a, int b) const {
    return edges_.edge_class[6 * tet + static_cast<std::size_t>(local_edge_index(a, b))];
}

std::array<int, 2> Triangulation::edge_direction(std::size_t tet, int a, int b) const {
    const int lo = std::min(a, b), hi = std::max(a, b);
    const int dir = edges_.direction[6 * tet + static_cast<std::size_t>(local_edge_index(a, b))];
    return dir > 0 ? std::array<int, 2>{lo, hi} : std::array<int, 2>{hi, lo};
}

std::size_t Triangulation::arc_index(std::size_t tet, int face, int corner) const {
    const std::size_t fc = face_class(tet, face);
    const FaceSlot rep = face_sides_[fc][0];
    int rep_corner = corner;
    if (rep != FaceSlot{tet, face}) rep_corner = gluing(tet, face).map[corner];
    return 3 * fc + static_cast<std::size_t>(corner_slot(rep.face, rep_corner));
}

int Triangulation::arc_corner(std::size_t arc) const {
    const FaceSlot rep = face_sides_[arc_face(arc)][0];
    return face_corners(rep.face)[arc % 3];
}

std::size_t Triangulation::edge_end(std::size_t tet, int from, int to) const {
    return end_class_[end_slot(tet, from, to)];
}

Triangulation Triangulation::with_edge_flipped(std::size_t edge) const {
    Triangulation out = *this;
    for (std::size_t k = 0; k < out.edges_.direction.size(); ++k)
        if (out.edges_.edge_class[k] == edge) out.edges_.direction[k] = -out.edges_.direction[k];
    return out;
}

}  // namespace normalcx
