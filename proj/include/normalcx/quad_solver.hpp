#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "normalcx/chain_complex.hpp"
#include "normalcx/exact_linalg.hpp"
#include "normalcx/triangulation.hpp"
#include "normalcx/vertex_link.hpp"

namespace normalcx {

/// Quad counts, entry 3*tet + (k-1) for quad type Qk.
struct QuadCoordinates {
    std::vector<Coeff> values;

    QuadCoordinates() = default;
    explicit QuadCoordinates(std::size_t tets) : values(3 * tets, 0) {}
    explicit QuadCoordinates(std::vector<Coeff> v) : values(std::move(v)) {}

    std::size_t tet_count() const { return values.size() / 3; }
    Coeff& at(std::size_t tet, int k) { return values[3 * tet + static_cast<std::size_t>(k - 1)]; }
    Coeff at(std::size_t tet, int k) const { return values[3 * tet + static_cast<std::size_t>(k - 1)]; }
    Chain2 to_chain() const;
    bool operator==(const QuadCoordinates&) const = default;
};

/// Disc counts in disc-index order (T0..T3, Q1..Q3 per tetrahedron).
struct NormalCoordinates {
    std::vector<Coeff> values;

    NormalCoordinates() = default;
    explicit NormalCoordinates(std::vector<Coeff> v) : values(std::move(v)) {}

    std::size_t tet_count() const { return values.size() / kDiscTypes; }
    QuadCoordinates quads() const;
    Chain2 to_chain() const { return Chain2(values); }
    bool operator==(const NormalCoordinates&) const = default;
};

struct AdmissibilityReport {
    /// Offending coordinate positions.
    std::vector<std::size_t> negative_entries;
    /// Tetrahedra carrying two or more quad types.
    std::vector<std::size_t> mixed_tets;
    bool admissible() const { return negative_entries.empty() && mixed_tets.empty(); }
};

AdmissibilityReport check_admissible(const QuadCoordinates& q);

enum class Classification { Normal, SpunNormal, NotNormal };
const char* to_string(Classification c);

struct CellDefect {
    std::size_t cell = 0;  // edge-end class
    Coeff value = 0;
};

struct VertexDiagnostics {
    std::size_t vertex = 0;
    bool cycle_ok = false;
    /// Only evaluated when every vertex passes the cycle test.
    std::optional<bool> boundary_ok;
    std::vector<CellDefect> cycle_defects;
};

struct LiftResult {
    Classification classification = Classification::NotNormal;
    std::optional<NormalCoordinates> canonical_lift;
    /// Per vertex class, the multiple of the vertex link subtracted from the
    /// solver's witness. Present only for Normal results.
    std::vector<Coeff> per_vertex_shift;
    std::vector<std::size_t> cycle_failures;
    std::vector<std::size_t> boundary_failures;
    std::vector<VertexDiagnostics> vertices;
};

struct LiftOptions {
    /// When set, link matrix columns are shuffled with this seed before the
    /// integer solve, which changes the pivot order and typically the witness.
    std::optional<std::uint64_t> pivot_shuffle_seed;
};

struct ArcViolation {
    std::size_t arc = 0;
    Coeff value = 0;
};

struct NormalReport {
    std::vector<std::size_t> negative_entries;
    std::vector<std::size_t> mixed_tets;
    std::vector<ArcViolation> violated_arcs;
    bool valid() const { return negative_entries.empty() && mixed_tets.empty() && violated_arcs.empty(); }
};

/// Thrown by lift on coordinates that are negative or mix quad types.
class InadmissibleError : public std::invalid_argument {
public:
    InadmissibleError(const std::string& what, AdmissibilityReport report)
        : std::invalid_argument(what), report_(std::move(report)) {}
    const AdmissibilityReport& report() const { return report_; }

private:
    AdmissibilityReport report_;
};

/// Decides whether quad coordinates come from a normal or spun-normal surface
/// and computes the canonical minimal lift. Holds the boundary matrix, the
/// vertex links and their Smith decompositions for one triangulation.
class QuadSolver {
public:
    explicit QuadSolver(Triangulation tri);

    const Triangulation& triangulation() const { return tri_; }
    const BoundaryMatrix& boundary() const { return boundary_; }
    const std::vector<VertexLink>& links() const { return links_; }

    /// Boundary of the quad chain projected onto the arcs linking `vertex`.
    Chain1 partial_boundary(const QuadCoordinates& q, std::size_t vertex) const;

    /// Link 0-cells where the signed endpoint sum of partial_boundary is nonzero.
    std::vector<CellDefect> cycle_defects(const QuadCoordinates& q, std::size_t vertex) const;
    bool cycle_test(const QuadCoordinates& q, std::size_t vertex) const;

    /// An integral triangle chain on the link (indexed like link.triangles)
    /// whose link boundary is -partial_boundary, if one exists.
    std::optional<std::vector<Coeff>> boundary_test(const QuadCoordinates& q, std::size_t vertex,
                                                    const LiftOptions& options = {}) const;

    LiftResult lift(const QuadCoordinates& q, const LiftOptions& options = {}) const;

    NormalReport verify_normal(const NormalCoordinates& x) const;

    std::string describe_arc(std::size_t arc) const;
    std::string describe_cell(std::size_t end) const;

private:
    void require_size(std::size_t tets) const;

    Triangulation tri_;
    BoundaryMatrix boundary_;
    std::vector<VertexLink> links_;
    std::vector<IntMatrix> link_matrices_;
    std::vector<SmithDecomposition> link_smith_;
    std::vector<SparseMatrix> link_cells_;
};

}  // namespace normalcx
