#include "normalcx/quad_solver.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace normalcx {

namespace {

Coeff to_coeff(const BigInt& x) {
    if (x > std::numeric_limits<Coeff>::max() || x < std::numeric_limits<Coeff>::min())
        throw std::overflow_error("integer solution does not fit in 64 bits");
    return x.convert_to<Coeff>();
}

AdmissibilityReport admissibility(std::span<const Coeff> values, std::size_t stride, std::size_t quad_offset) {
    AdmissibilityReport report;
    for (std::size_t k = 0; k < values.size(); ++k)
        if (values[k] < 0) report.negative_entries.push_back(k);
    for (std::size_t tet = 0; tet < values.size() / stride; ++tet) {
        int types = 0;
        for (std::size_t k = 0; k < 3; ++k)
            if (values[stride * tet + quad_offset + k] != 0) ++types;
        if (types > 1) report.mixed_tets.push_back(tet);
    }
    return report;
}

}  // namespace

Chain2 QuadCoordinates::to_chain() const {
    Chain2 out(kDiscTypes * tet_count());
    for (std::size_t tet = 0; tet < tet_count(); ++tet)
        for (int k = 1; k <= 3; ++k) out.quad(tet, k) = at(tet, k);
    return out;
}

QuadCoordinates NormalCoordinates::quads() const {
    QuadCoordinates out(tet_count());
    for (std::size_t tet = 0; tet < tet_count(); ++tet)
        for (int k = 1; k <= 3; ++k) out.at(tet, k) = values[disc_index(tet, 3 + k)];
    return out;
}

AdmissibilityReport check_admissible(const QuadCoordinates& q) { return admissibility(q.values, 3, 0); }

const char* to_string(Classification c) {
    switch (c) {
        case Classification::Normal: return "Normal";
        case Classification::SpunNormal: return "SpunNormal";
        case Classification::NotNormal: return "NotNormal";
    }
    return "unknown";
}

QuadSolver::QuadSolver(Triangulation tri)
    : tri_(std::move(tri)), boundary_(boundary_matrix(tri_)), links_(build_links(tri_)) {
    for (const auto& link : links_) {
        link_matrices_.push_back(link_boundary_matrix(boundary_, link));
        link_smith_.push_back(smith_normal_form(link_matrices_.back()));
        link_cells_.push_back(link_cell_boundary(tri_, link));
    }
}

void QuadSolver::require_size(std::size_t tets) const {
    if (tets != tri_.tet_count())
        throw std::invalid_argument("coordinates describe " + std::to_string(tets) + " tetrahedra, triangulation has " +
                                    std::to_string(tri_.tet_count()));
}

Chain1 QuadSolver::partial_boundary(const QuadCoordinates& q, std::size_t vertex) const {
    require_size(q.tet_count());
    return projection(links_.at(vertex), apply_boundary(boundary_, q.to_chain()));
}

std::vector<CellDefect> QuadSolver::cycle_defects(const QuadCoordinates& q, std::size_t vertex) const {
    const VertexLink& link = links_.at(vertex);
    const Chain1 pb = partial_boundary(q, vertex);
    std::vector<Coeff> on_arcs(link.arcs.size());
    for (std::size_t k = 0; k < link.arcs.size(); ++k) on_arcs[k] = pb[link.arcs[k]];
    const std::vector<Coeff> at_cells = link_cells_[vertex].apply(on_arcs);
    std::vector<CellDefect> out;
    for (std::size_t k = 0; k < at_cells.size(); ++k)
        if (at_cells[k] != 0) out.push_back({link.cells[k], at_cells[k]});
    return out;
}

bool QuadSolver::cycle_test(const QuadCoordinates& q, std::size_t vertex) const {
    return cycle_defects(q, vertex).empty();
}

std::optional<std::vector<Coeff>> QuadSolver::boundary_test(const QuadCoordinates& q, std::size_t vertex,
                                                            const LiftOptions& options) const {
    const VertexLink& link = links_.at(vertex);
    const Chain1 pb = partial_boundary(q, vertex);
    BigVector rhs(link.arcs.size());
    for (std::size_t k = 0; k < link.arcs.size(); ++k) rhs[k] = -BigInt(pb[link.arcs[k]]);

    const std::size_t n = link.triangles.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    SolveResult solved;
    if (options.pivot_shuffle_seed) {
        std::mt19937_64 rng(*options.pivot_shuffle_seed);
        std::shuffle(order.begin(), order.end(), rng);
        const IntMatrix& a = link_matrices_[vertex];
        IntMatrix shuffled(a.rows(), n);
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < n; ++j) shuffled(i, j) = a(i, order[j]);
        solved = solve_integer(shuffled, rhs);
    } else {
        solved = solve_integer(link_smith_[vertex], rhs);
    }
    if (!solved.solved()) return std::nullopt;

    std::vector<Coeff> witness(n);
    for (std::size_t j = 0; j < n; ++j) witness[order[j]] = to_coeff(solved.x[j]);
    return witness;
}

LiftResult QuadSolver::lift(const QuadCoordinates& q, const LiftOptions& options) const {
    require_size(q.tet_count());
    if (auto report = check_admissible(q); !report.admissible()) {
        std::ostringstream os;
        os << "inadmissible quad coordinates:";
        for (std::size_t k : report.negative_entries) os << " negative entry at tet " << k / 3 << " quad " << k % 3 + 1 << ";";
        for (std::size_t tet : report.mixed_tets) os << " tet " << tet << " carries two quad types;";
        throw InadmissibleError(os.str(), std::move(report));
    }

    LiftResult result;
    for (std::size_t v = 0; v < links_.size(); ++v) {
        VertexDiagnostics diag;
        diag.vertex = v;
        diag.cycle_defects = cycle_defects(q, v);
        diag.cycle_ok = diag.cycle_defects.empty();
        if (!diag.cycle_ok) result.cycle_failures.push_back(v);
        result.vertices.push_back(std::move(diag));
    }
    if (!result.cycle_failures.empty()) {
        result.classification = Classification::NotNormal;
        return result;
    }

    std::vector<std::vector<Coeff>> witnesses(links_.size());
    for (std::size_t v = 0; v < links_.size(); ++v) {
        auto witness = boundary_test(q, v, options);
        result.vertices[v].boundary_ok = witness.has_value();
        if (!witness)
            result.boundary_failures.push_back(v);
        else
            witnesses[v] = std::move(*witness);
    }
    if (!result.boundary_failures.empty()) {
        result.classification = Classification::SpunNormal;
        return result;
    }

    Chain2 xi = q.to_chain();
    result.per_vertex_shift.assign(links_.size(), 0);
    for (std::size_t v = 0; v < links_.size(); ++v) {
        const Coeff m = *std::min_element(witnesses[v].begin(), witnesses[v].end());
        result.per_vertex_shift[v] = m;
        for (std::size_t j = 0; j < witnesses[v].size(); ++j)
            xi[links_[v].triangles[j]] = checked_sub(witnesses[v][j], m);
    }
    if (!apply_boundary(boundary_, xi).is_zero()) throw std::logic_error("lift does not satisfy the matching equations");

    result.classification = Classification::Normal;
    result.canonical_lift = NormalCoordinates(std::move(xi.coeffs));
    return result;
}

NormalReport QuadSolver::verify_normal(const NormalCoordinates& x) const {
    if (x.values.size() != tri_.disc_count())
        throw std::invalid_argument("normal coordinates have " + std::to_string(x.values.size()) + " entries, expected " +
                                    std::to_string(tri_.disc_count()));
    const AdmissibilityReport adm = admissibility(x.values, kDiscTypes, 4);
    NormalReport report{adm.negative_entries, adm.mixed_tets, {}};
    const Chain1 b = apply_boundary(boundary_, x.to_chain());
    for (std::size_t a = 0; a < b.size(); ++a)
        if (b[a] != 0) report.violated_arcs.push_back({a, b[a]});
    return report;
}

std::string QuadSolver::describe_arc(std::size_t arc) const {
    const FaceSlot rep = tri_.face_sides(tri_.arc_face(arc))[0];
    std::ostringstream os;
    os << "arc " << arc << " (face " << tri_.arc_face(arc) << " corner " << arc % 3 << ": tet " << rep.tet << " face "
       << rep.face << " linking vertex " << tri_.arc_corner(arc) << ")";
    return os.str();
}

std::string QuadSolver::describe_cell(std::size_t end) const {
    const auto [tet, from, to] = tri_.edge_end_representative(end);
    std::ostringstream os;
    os << "link vertex " << end << " (edge " << tri_.edge_class(tet, static_cast<int>(from), static_cast<int>(to))
       << " at tet " << tet << " vertex " << from << " toward " << to << ")";
    return os.str();
}

}  // namespace normalcx
