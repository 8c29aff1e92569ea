#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "normalcx/checked.hpp"
#include "normalcx/triangulation.hpp"

namespace normalcx {

/// Integer 1-chain on the oriented normal arcs, indexed by arc index.
struct Chain1 {
    std::vector<Coeff> coeffs;

    Chain1() = default;
    explicit Chain1(std::size_t arcs) : coeffs(arcs, 0) {}
    explicit Chain1(std::vector<Coeff> c) : coeffs(std::move(c)) {}

    std::size_t size() const { return coeffs.size(); }
    Coeff& operator[](std::size_t i) { return coeffs[i]; }
    Coeff operator[](std::size_t i) const { return coeffs[i]; }
    bool is_zero() const;
    bool operator==(const Chain1&) const = default;
};

/// Integer 2-chain on the normal discs, indexed by disc index 7*tet + type.
/// Entries 7i+0..7i+3 form the triangle part, 7i+4..7i+6 the quad part.
struct Chain2 {
    std::vector<Coeff> coeffs;

    Chain2() = default;
    explicit Chain2(std::size_t discs) : coeffs(discs, 0) {}
    explicit Chain2(std::vector<Coeff> c) : coeffs(std::move(c)) {}

    std::size_t size() const { return coeffs.size(); }
    std::size_t tet_count() const { return coeffs.size() / kDiscTypes; }
    Coeff& operator[](std::size_t i) { return coeffs[i]; }
    Coeff operator[](std::size_t i) const { return coeffs[i]; }

    Coeff& triangle(std::size_t tet, int vertex) { return coeffs[disc_index(tet, vertex)]; }
    Coeff triangle(std::size_t tet, int vertex) const { return coeffs[disc_index(tet, vertex)]; }
    /// k in 1..3
    Coeff& quad(std::size_t tet, int k) { return coeffs[disc_index(tet, 3 + k)]; }
    Coeff quad(std::size_t tet, int k) const { return coeffs[disc_index(tet, 3 + k)]; }

    Chain2 triangle_part() const;
    Chain2 quad_part() const;
    bool is_zero() const;
    bool operator==(const Chain2&) const = default;
};

struct MatrixEntry {
    std::size_t row = 0;
    int value = 0;
    bool operator==(const MatrixEntry&) const = default;
};

struct Triplet {
    std::size_t row = 0;
    std::size_t col = 0;
    int value = 0;
    bool operator==(const Triplet&) const = default;
};

/// Column-major sparse integer matrix with small entries.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::vector<std::vector<MatrixEntry>> columns);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return columns_.size(); }
    std::size_t nnz() const;
    const std::vector<MatrixEntry>& column(std::size_t j) const { return columns_[j]; }
    int at(std::size_t row, std::size_t col) const;

    /// y = A x with overflow detection.
    std::vector<Coeff> apply(std::span<const Coeff> x) const;
    /// Nonzero entries sorted by (row, col).
    std::vector<Triplet> row_major() const;

private:
    std::size_t rows_ = 0;
    std::vector<std::vector<MatrixEntry>> columns_;
};

/// The boundary map from 2-chains to 1-chains: 3*|faces| rows, 7t columns.
using BoundaryMatrix = SparseMatrix;

/// Sign with which the arc in face `face` linking `corner` appears in the
/// boundary of any normal disc of `tet` that meets it.
///
/// Equals tet_orientation * sign of the permutation (corner, tail, head, face),
/// where tail -> head is the directed edge of the face opposite the corner.
int epsilon(const Triangulation& tri, std::size_t tet, int face, int corner);

struct SignedSides {
    FaceSlot plus;
    FaceSlot minus;
    bool operator==(const SignedSides&) const = default;
};

/// The two incidences of a face class labelled by the sign of epsilon at
/// `corner` (a local vertex of the face in the side-0 labels). The label can
/// change with the corner when the three edges of the face are not directed
/// cyclically. Without a corner the least one is used.
SignedSides delta_plus(const Triangulation& tri, std::size_t face_class, int corner);
SignedSides delta_plus(const Triangulation& tri, std::size_t face_class);

/// Corner linked by the boundary arc of quad type k (1..3) in face `face`.
constexpr int quad_arc_corner(int k, int face) {
    if (face == 0) return k;
    if (face == k) return 0;
    return 6 - k - face;
}

struct ArcTerm {
    std::size_t arc = 0;
    int sign = 0;
    bool operator==(const ArcTerm&) const = default;
};

/// Signed boundary arcs of one disc, face by face (3 for a triangle, 4 for a quad).
std::vector<ArcTerm> disc_boundary_terms(const Triangulation& tri, std::size_t disc);

Chain1 boundary_of_disc(const Triangulation& tri, std::size_t disc);

BoundaryMatrix boundary_matrix(const Triangulation& tri);

Chain1 apply_boundary(const BoundaryMatrix& boundary, const Chain2& chain);

/// Classical matching equations, one row per arc: unsigned counts of discs
/// meeting the arc from the representative side minus the other side.
/// Built without reference to epsilon or to the edge orientations.
SparseMatrix matching_equations(const Triangulation& tri);

}  // namespace normalcx
