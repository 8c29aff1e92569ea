#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "normalcx/chain_complex.hpp"
#include "normalcx/exact_linalg.hpp"
#include "normalcx/vertex_link.hpp"
#include "oracles.hpp"

using namespace normalcx;

TEST_CASE("doubled tetrahedron links are spheres with two triangles") {
    const Triangulation tri = oracle::load_fixture("double");
    const auto links = build_links(tri);
    REQUIRE(links.size() == 4);
    for (const auto& link : links) {
        CHECK(link.triangles.size() == 2);
        CHECK(link.arcs.size() == 3);
        CHECK(link.cells.size() == 3);
        CHECK(link.euler_characteristic == 2);
        CHECK(link.genus == 0);
        CHECK(link.is_sphere);
    }
}

TEST_CASE("figure-eight link is a torus with eight triangles") {
    const Triangulation tri = oracle::load_fixture("fig8");
    const VertexLink link = build_link(tri, 0);
    CHECK(link.triangles.size() == 8);
    CHECK(link.arcs.size() == 12);
    CHECK(link.cells.size() == 4);
    CHECK(link.euler_characteristic == 0);
    CHECK(link.genus == 1);
    CHECK_FALSE(link.is_sphere);
}

TEST_CASE("pentachoron boundary links are tetrahedral spheres") {
    const Triangulation tri = oracle::load_fixture("pentachoron_boundary");
    for (const auto& link : build_links(tri)) {
        CHECK(link.triangles.size() == 4);
        CHECK(link.arcs.size() == 6);
        CHECK(link.cells.size() == 4);
        CHECK(link.is_sphere);
    }
}

TEST_CASE("link invariants and partitions of arcs and triangles") {
    for (const auto& name : oracle::all_fixtures()) {
        CAPTURE(name);
        const Triangulation tri = oracle::load_fixture(name);
        const auto links = build_links(tri);
        std::vector<int> arc_owner(tri.arc_count(), 0), tri_owner(tri.disc_count(), 0);
        for (const auto& link : links) {
            CHECK(link.euler_characteristic == 2 - 2 * link.genus);
            CHECK(link.is_sphere == (link.euler_characteristic == 2));
            CHECK(link.euler_characteristic ==
                  static_cast<long>(link.cells.size()) - static_cast<long>(link.arcs.size()) +
                      static_cast<long>(link.triangles.size()));
            REQUIRE(link.arc_triangles.size() == link.arcs.size());
            for (const auto& pair : link.arc_triangles) {
                CHECK(pair[0] < link.triangles.size());
                CHECK(pair[1] < link.triangles.size());
            }
            for (auto a : link.arcs) {
                ++arc_owner[a];
                CHECK(tri.arc_vertex(a) == link.vertex);
            }
            for (auto d : link.triangles) {
                ++tri_owner[d];
                CHECK(tri.vertex_class(d / kDiscTypes, static_cast<int>(d % kDiscTypes)) == link.vertex);
            }
        }
        for (auto c : arc_owner) CHECK(c == 1);
        for (std::size_t d = 0; d < tri.disc_count(); ++d)
            CHECK(tri_owner[d] == (is_triangle_type(static_cast<int>(d % kDiscTypes)) ? 1 : 0));
    }
}

TEST_CASE("fundamental class is a cycle") {
    for (const auto& name : oracle::all_fixtures()) {
        CAPTURE(name);
        const Triangulation tri = oracle::load_fixture(name);
        const BoundaryMatrix b = boundary_matrix(tri);
        for (const auto& link : build_links(tri)) {
            FundamentalClass fc = fundamental_class(tri, link);
            CHECK(std::accumulate(fc.chain.coeffs.begin(), fc.chain.coeffs.end(), Coeff{0}) ==
                  static_cast<Coeff>(link.triangles.size()));
            for (auto d : link.triangles) CHECK(fc.chain[d] == 1);
            CHECK(apply_boundary(b, fc.chain).is_zero());
            for (auto& c : fc.chain.coeffs) c *= 5;
            CHECK(apply_boundary(b, fc.chain).is_zero());
        }
    }
}

TEST_CASE("link triangle boundaries restrict to the link with intrinsic signs") {
    for (const auto& name : oracle::all_fixtures()) {
        CAPTURE(name);
        const Triangulation tri = oracle::load_fixture(name);
        const BoundaryMatrix b = boundary_matrix(tri);
        for (const auto& link : build_links(tri)) {
            CHECK(link_boundary_restriction_check(tri, b, link));
            for (auto d : link.triangles) {
                const std::size_t tet = d / kDiscTypes;
                const int corner = static_cast<int>(d % kDiscTypes);
                for (int f = 0; f < 4; ++f) {
                    if (f == corner) continue;
                    const std::size_t arc = tri.arc_index(tet, f, corner);
                    CHECK(link.arc_position(arc) < link.arcs.size());
                    CHECK(b.at(arc, d) == intrinsic_arc_sign(tri, tet, corner, f));
                }
            }
        }
    }
}

TEST_CASE("restriction check rejects a sign-corrupted boundary matrix") {
    const Triangulation tri = oracle::load_fixture("double");
    const BoundaryMatrix b = boundary_matrix(tri);
    std::vector<std::vector<MatrixEntry>> cols;
    for (std::size_t j = 0; j < b.cols(); ++j) cols.push_back(b.column(j));
    cols[0][0].value = -cols[0][0].value;
    const SparseMatrix corrupted(b.rows(), cols);
    const VertexLink link = build_link(tri, tri.vertex_class(0, 0));
    CHECK_FALSE(link_boundary_restriction_check(tri, corrupted, link));
}

TEST_CASE("projections onto links decompose every 1-chain") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> coeff(-9, 9);
    for (const auto& name : oracle::all_fixtures()) {
        CAPTURE(name);
        const Triangulation tri = oracle::load_fixture(name);
        const auto links = build_links(tri);
        CHECK(projection(links[0], Chain1(tri.arc_count())).is_zero());
        for (int trial = 0; trial < 100; ++trial) {
            Chain1 c(tri.arc_count());
            for (auto& x : c.coeffs) x = coeff(rng);
            Chain1 sum(tri.arc_count());
            for (const auto& link : links) {
                const Chain1 p = projection(link, c);
                CHECK(projection(link, p) == p);
                for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += p[i];
            }
            CHECK(sum == c);
        }
    }
}

TEST_CASE("integer 2-cycles of each link are multiples of the fundamental class") {
    for (const auto& name : oracle::all_fixtures()) {
        CAPTURE(name);
        const Triangulation tri = oracle::load_fixture(name);
        const BoundaryMatrix b = boundary_matrix(tri);
        for (const auto& link : build_links(tri)) {
            const IntMatrix m = link_boundary_matrix(b, link);
            CHECK(m.rows() == link.arcs.size());
            CHECK(m.cols() == link.triangles.size());
            const auto kernel = kernel_basis(m);
            REQUIRE(kernel.size() == 1);
            const BigInt s = kernel[0][0];
            CHECK(abs(s) == 1);
            for (const auto& x : kernel[0]) CHECK(x == s);
        }
    }
}

TEST_CASE("the doubled tetrahedron link boundary has a zero solution for zero") {
    const Triangulation tri = oracle::load_fixture("double");
    const VertexLink link = build_link(tri, 0);
    const IntMatrix m = link_boundary_matrix(boundary_matrix(tri), link);
    CHECK(m.rows() == 3);
    CHECK(m.cols() == 2);
    const BigVector zero(3);
    const SolveResult r = solve_integer(m, zero);
    REQUIRE(r.status == SolveStatus::Solved);
    for (const auto& x : r.x) CHECK(x == 0);
}

TEST_CASE("link cell boundary composes to zero with the triangle boundary") {
    for (const auto& name : oracle::all_fixtures()) {
        CAPTURE(name);
        const Triangulation tri = oracle::load_fixture(name);
        const BoundaryMatrix b = boundary_matrix(tri);
        for (const auto& link : build_links(tri)) {
            const SparseMatrix cells = link_cell_boundary(tri, link);
            CHECK(cells.rows() == link.cells.size());
            CHECK(cells.cols() == link.arcs.size());
            const IntMatrix tris = link_boundary_matrix(b, link);
            for (std::size_t t = 0; t < tris.cols(); ++t) {
                std::vector<Coeff> col(tris.rows());
                for (std::size_t r = 0; r < tris.rows(); ++r) col[r] = static_cast<Coeff>(tris(r, t));
                for (auto v : cells.apply(col)) CHECK(v == 0);
            }
            for (std::size_t a = 0; a < cells.cols(); ++a) {
                // Endpoints are the ends, at the linked corner, of the two
                // edges of the face through that corner. A loop has no boundary.
                const std::size_t arc = link.arcs[a];
                const FaceSlot rep = tri.face_sides(tri.arc_face(arc))[0];
                const int corner = tri.arc_corner(arc);
                std::vector<std::size_t> ends;
                for (int x : face_corners(rep.face))
                    if (x != corner) ends.push_back(tri.edge_end(rep.tet, corner, x));
                if (ends[0] == ends[1]) {
                    CHECK(cells.column(a).empty());
                } else {
                    REQUIRE(cells.column(a).size() == 2);
                    CHECK(cells.column(a)[0].value + cells.column(a)[1].value == 0);
                    for (const auto& e : cells.column(a))
                        CHECK((link.cells[e.row] == ends[0] || link.cells[e.row] == ends[1]));
                }
            }
        }
    }
}
