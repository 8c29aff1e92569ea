#include "normalcx/chain_complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace normalcx {

bool Chain1::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](Coeff c) { return c == 0; });
}

bool Chain2::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](Coeff c) { return c == 0; });
}

Chain2 Chain2::triangle_part() const {
    Chain2 out = *this;
    for (std::size_t d = 0; d < out.size(); ++d)
        if (!is_triangle_type(static_cast<int>(d % kDiscTypes))) out.coeffs[d] = 0;
    return out;
}

Chain2 Chain2::quad_part() const {
    Chain2 out = *this;
    for (std::size_t d = 0; d < out.size(); ++d)
        if (is_triangle_type(static_cast<int>(d % kDiscTypes))) out.coeffs[d] = 0;
    return out;
}

SparseMatrix::SparseMatrix(std::size_t rows, std::vector<std::vector<MatrixEntry>> columns)
    : rows_(rows), columns_(std::move(columns)) {
    // Merge repeated rows and drop zeros so every column is sorted and unique.
    for (auto& col : columns_) {
        std::sort(col.begin(), col.end(), [](const MatrixEntry& a, const MatrixEntry& b) { return a.row < b.row; });
        std::vector<MatrixEntry> merged;
        for (const auto& e : col) {
            if (e.row >= rows_) throw std::out_of_range("sparse matrix entry outside row range");
            if (!merged.empty() && merged.back().row == e.row)
                merged.back().value += e.value;
            else
                merged.push_back(e);
        }
        std::erase_if(merged, [](const MatrixEntry& e) { return e.value == 0; });
        col = std::move(merged);
    }
}

std::size_t SparseMatrix::nnz() const {
    std::size_t n = 0;
    for (const auto& col : columns_) n += col.size();
    return n;
}

int SparseMatrix::at(std::size_t row, std::size_t col) const {
    for (const auto& e : columns_[col])
        if (e.row == row) return e.value;
    return 0;
}

std::vector<Coeff> SparseMatrix::apply(std::span<const Coeff> x) const {
    if (x.size() != cols()) throw std::invalid_argument("sparse matrix applied to vector of wrong length");
    std::vector<Coeff> y(rows_, 0);
    for (std::size_t j = 0; j < cols(); ++j) {
        if (x[j] == 0) continue;
        for (const auto& e : columns_[j]) y[e.row] = checked_add(y[e.row], checked_mul(e.value, x[j]));
    }
    return y;
}

std::vector<Triplet> SparseMatrix::row_major() const {
    std::vector<Triplet> out;
    out.reserve(nnz());
    for (std::size_t j = 0; j < cols(); ++j)
        for (const auto& e : columns_[j]) out.push_back({e.row, j, e.value});
    std::sort(out.begin(), out.end(),
              [](const Triplet& a, const Triplet& b) { return a.row != b.row ? a.row < b.row : a.col < b.col; });
    return out;
}

int epsilon(const Triangulation& tri, std::size_t tet, int face, int corner) {
    if (corner == face || corner < 0 || corner > 3 || face < 0 || face > 3)
        throw std::invalid_argument("epsilon: corner must be a vertex of the face");
    const auto others = face_corners(face);
    int p = -1, q = -1;
    for (int x : others)
        if (x != corner) (p < 0 ? p : q) = x;
    const auto [tail, head] = tri.edge_direction(tet, p, q);
    return tri.tet_orientation(tet) * permutation_sign(corner, tail, head, face);
}

SignedSides delta_plus(const Triangulation& tri, std::size_t face_class) {
    return delta_plus(tri, face_class, face_corners(tri.face_sides(face_class)[0].face)[0]);
}

SignedSides delta_plus(const Triangulation& tri, std::size_t face_class, int corner) {
    const auto& sides = tri.face_sides(face_class);
    if (epsilon(tri, sides[0].tet, sides[0].face, corner) > 0) return {sides[0], sides[1]};
    return {sides[1], sides[0]};
}

std::vector<ArcTerm> disc_boundary_terms(const Triangulation& tri, std::size_t disc) {
    if (disc >= tri.disc_count()) throw std::out_of_range("disc index out of range");
    const std::size_t tet = disc / kDiscTypes;
    const int type = static_cast<int>(disc % kDiscTypes);
    std::vector<ArcTerm> out;
    if (is_triangle_type(type)) {
        for (int f = 0; f < 4; ++f) {
            if (f == type) continue;
            out.push_back({tri.arc_index(tet, f, type), epsilon(tri, tet, f, type)});
        }
    } else {
        const int k = type - 3;
        for (int f = 0; f < 4; ++f) {
            const int v = quad_arc_corner(k, f);
            out.push_back({tri.arc_index(tet, f, v), epsilon(tri, tet, f, v)});
        }
    }
    return out;
}

Chain1 boundary_of_disc(const Triangulation& tri, std::size_t disc) {
    Chain1 out(tri.arc_count());
    for (const auto& term : disc_boundary_terms(tri, disc)) out[term.arc] += term.sign;
    return out;
}

BoundaryMatrix boundary_matrix(const Triangulation& tri) {
    std::vector<std::vector<MatrixEntry>> columns(tri.disc_count());
    for (std::size_t d = 0; d < tri.disc_count(); ++d)
        for (const auto& term : disc_boundary_terms(tri, d)) columns[d].push_back({term.arc, term.sign});
    return SparseMatrix(tri.arc_count(), std::move(columns));
}

Chain1 apply_boundary(const BoundaryMatrix& boundary, const Chain2& chain) {
    return Chain1(boundary.apply(chain.coeffs));
}

SparseMatrix matching_equations(const Triangulation& tri) {
    std::vector<std::vector<MatrixEntry>> columns(tri.disc_count());
    for (std::size_t fc = 0; fc < tri.face_count(); ++fc) {
        const auto& sides = tri.face_sides(fc);
        const Gluing& across = tri.gluing(sides[0].tet, sides[0].face);
        for (int slot = 0; slot < 3; ++slot) {
            const std::size_t row = 3 * fc + static_cast<std::size_t>(slot);
            const int corner0 = face_corners(sides[0].face)[slot];
            const int corner1 = across.map[corner0];
            const std::array<std::pair<FaceSlot, int>, 2> incidences{
                {{sides[0], corner0}, {sides[1], corner1}}};
            for (int side = 0; side < 2; ++side) {
                const auto [slot_here, c] = incidences[side];
                const int sign = side == 0 ? 1 : -1;
                // The triangle cutting off c, and the quad separating edge {c, face}.
                columns[disc_index(slot_here.tet, c)].push_back({row, sign});
                const int a = std::min(c, slot_here.face), b = std::max(c, slot_here.face);
                const int k = (a == 0) ? b : 6 - a - b;
                columns[disc_index(slot_here.tet, 3 + k)].push_back({row, sign});
            }
        }
    }
    return SparseMatrix(tri.arc_count(), std::move(columns));
}

}  // namespace normalcx
