#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "normalcx/chain_complex.hpp"
#include "normalcx/exact_linalg.hpp"
#include "normalcx/io.hpp"
#include "normalcx/quad_solver.hpp"
#include "normalcx/vertex_link.hpp"

namespace normalcx::cli {

using nlohmann::json;

namespace {

struct Options {
    std::string tri;
    std::string quads;
    std::string coords;
    std::string matrix;
    bool as_json = false;
};

void print_json(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

std::string coord_row(std::span<const Coeff> row) {
    std::ostringstream os;
    for (std::size_t k = 0; k < row.size(); ++k) os << (k ? " " : "") << row[k];
    return os.str();
}

json coords_json(const NormalCoordinates& x) {
    json rows = json::array();
    for (std::size_t i = 0; i < x.tet_count(); ++i)
        rows.push_back(std::vector<Coeff>(x.values.begin() + static_cast<std::ptrdiff_t>(kDiscTypes * i),
                                          x.values.begin() + static_cast<std::ptrdiff_t>(kDiscTypes * (i + 1))));
    return rows;
}

int cmd_validate(const Triangulation& tri, const Options& opt, std::ostream& out) {
    if (opt.as_json) {
        json edges = json::array();
        for (std::size_t e = 0; e < tri.edge_count(); ++e) {
            const auto [tet, local] = tri.edge_orientation().representative[e];
            const auto [a, b] = kLocalEdges[local];
            const auto [tail, head] = tri.edge_direction(tet, a, b);
            edges.push_back({{"edge", e}, {"tet", tet}, {"tail", tail}, {"head", head}});
        }
        print_json(out, {{"valid", true},
                         {"tets", tri.tet_count()},
                         {"components", tri.component_count()},
                         {"vertices", tri.vertex_count()},
                         {"edges", tri.edge_count()},
                         {"faces", tri.face_count()},
                         {"orientation", tri.orientations()},
                         {"edge_orientations", edges}});
        return kExitNormal;
    }
    out << "valid\n"
        << "tets " << tri.tet_count() << '\n'
        << "components " << tri.component_count() << '\n'
        << "vertices " << tri.vertex_count() << '\n'
        << "edges " << tri.edge_count() << '\n'
        << "faces " << tri.face_count() << '\n'
        << "orientation";
    for (int s : tri.orientations()) out << (s > 0 ? " +1" : " -1");
    out << '\n';
    for (std::size_t e = 0; e < tri.edge_count(); ++e) {
        const auto [tet, local] = tri.edge_orientation().representative[e];
        const auto [a, b] = kLocalEdges[local];
        const auto [tail, head] = tri.edge_direction(tet, a, b);
        out << "edge " << e << " tet " << tet << ' ' << tail << "->" << head << '\n';
    }
    return kExitNormal;
}

int cmd_links(const Triangulation& tri, const Options& opt, std::ostream& out) {
    json rows = json::array();
    for (const VertexLink& link : build_links(tri)) {
        if (opt.as_json) {
            rows.push_back({{"vertex", link.vertex},
                            {"triangles", link.triangles.size()},
                            {"chi", link.euler_characteristic},
                            {"genus", link.genus},
                            {"sphere", link.is_sphere}});
        } else {
            out << "vertex " << link.vertex << " triangles " << link.triangles.size() << " chi "
                << link.euler_characteristic << " genus " << link.genus << " sphere "
                << (link.is_sphere ? "true" : "false") << '\n';
        }
    }
    if (opt.as_json) print_json(out, rows);
    return kExitNormal;
}

int cmd_matrix(const Triangulation& tri, const Options& opt, std::ostream& out) {
    const BoundaryMatrix m = boundary_matrix(tri);
    const auto triplets = m.row_major();
    if (opt.as_json) {
        json entries = json::array();
        for (const auto& t : triplets) entries.push_back({t.row, t.col, t.value});
        print_json(out, {{"rows", m.rows()}, {"cols", m.cols()}, {"nnz", triplets.size()}, {"entries", entries}});
        return kExitNormal;
    }
    out << m.rows() << ' ' << m.cols() << ' ' << triplets.size() << '\n';
    for (const auto& t : triplets) out << t.row << ' ' << t.col << ' ' << t.value << '\n';
    return kExitNormal;
}

int cmd_classify(const Triangulation& tri, const Options& opt, std::ostream& out, std::ostream& err) {
    const QuadCoordinates q = parse_quads(read_file(opt.quads));
    if (q.tet_count() != tri.tet_count()) {
        err << "error: quad file lists " << q.tet_count() << " tetrahedra, triangulation has " << tri.tet_count()
            << '\n';
        return kExitInputError;
    }
    const QuadSolver solver(tri);
    LiftResult result;
    try {
        result = solver.lift(q);
    } catch (const InadmissibleError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }

    if (opt.as_json) {
        json vertices = json::array();
        for (const auto& d : result.vertices) {
            json defects = json::array();
            for (const auto& c : d.cycle_defects)
                defects.push_back({{"cell", c.cell}, {"value", c.value}, {"description", solver.describe_cell(c.cell)}});
            json v = {{"vertex", d.vertex}, {"cycle", d.cycle_ok}, {"defects", defects}};
            v["boundary"] = d.boundary_ok ? json(*d.boundary_ok) : json(nullptr);
            if (result.classification == Classification::Normal) v["shift"] = result.per_vertex_shift[d.vertex];
            vertices.push_back(std::move(v));
        }
        json doc = {{"classification", to_string(result.classification)},
                    {"cycle_failures", result.cycle_failures},
                    {"boundary_failures", result.boundary_failures},
                    {"vertices", vertices}};
        if (result.canonical_lift) doc["coords"] = coords_json(*result.canonical_lift);
        print_json(out, doc);
    } else {
        out << "classification " << to_string(result.classification) << '\n';
        for (const auto& d : result.vertices) {
            out << "vertex " << d.vertex << " cycle " << (d.cycle_ok ? "ok" : "FAIL");
            if (d.boundary_ok) out << " boundary " << (*d.boundary_ok ? "ok" : "FAIL");
            if (result.classification == Classification::Normal) out << " shift " << result.per_vertex_shift[d.vertex];
            out << '\n';
            for (const auto& c : d.cycle_defects)
                out << "  defect " << solver.describe_cell(c.cell) << " value " << c.value << '\n';
        }
        if (!result.cycle_failures.empty()) {
            out << "cycle failures";
            for (auto v : result.cycle_failures) out << ' ' << v;
            out << '\n';
        }
        if (!result.boundary_failures.empty()) {
            out << "boundary failures";
            for (auto v : result.boundary_failures) out << ' ' << v;
            out << '\n';
        }
        if (result.canonical_lift) {
            const auto& x = result.canonical_lift->values;
            for (std::size_t i = 0; i < tri.tet_count(); ++i)
                out << "tet " << i << ": "
                    << coord_row(std::span<const Coeff>(x).subspan(kDiscTypes * i, kDiscTypes)) << '\n';
        }
    }
    switch (result.classification) {
        case Classification::Normal: return kExitNormal;
        case Classification::SpunNormal: return kExitSpunNormal;
        case Classification::NotNormal: return kExitNotNormal;
    }
    return kExitInputError;
}

int cmd_verify(const Triangulation& tri, const Options& opt, std::ostream& out, std::ostream& err) {
    const NormalCoordinates x = parse_coords(read_file(opt.coords));
    if (x.tet_count() != tri.tet_count() || x.values.size() != tri.disc_count()) {
        err << "error: coordinate file lists " << x.tet_count() << " tetrahedra, triangulation has "
            << tri.tet_count() << '\n';
        return kExitInputError;
    }
    const QuadSolver solver(tri);
    const NormalReport report = solver.verify_normal(x);
    if (opt.as_json) {
        json violated = json::array();
        for (const auto& v : report.violated_arcs)
            violated.push_back({{"arc", v.arc}, {"value", v.value}, {"description", solver.describe_arc(v.arc)}});
        print_json(out, {{"valid", report.valid()},
                         {"negative_entries", report.negative_entries},
                         {"mixed_tets", report.mixed_tets},
                         {"violated_arcs", violated}});
    } else {
        out << (report.valid() ? "valid" : "invalid") << '\n';
        for (auto k : report.negative_entries)
            out << "negative coordinate tet " << k / kDiscTypes << " disc " << k % kDiscTypes << '\n';
        for (auto t : report.mixed_tets) out << "mixed quad types in tet " << t << '\n';
        for (const auto& v : report.violated_arcs)
            out << "violated " << solver.describe_arc(v.arc) << " boundary coefficient " << v.value << '\n';
    }
    return report.valid() ? kExitNormal : kExitNotNormal;
}

IntMatrix read_triplets(const std::string& text) {
    std::istringstream in(text);
    std::size_t rows = 0, cols = 0, nnz = 0;
    if (!(in >> rows >> cols >> nnz)) throw FormatError("matrix header must be `rows cols nnz`");
    IntMatrix m(rows, cols);
    for (std::size_t k = 0; k < nnz; ++k) {
        std::size_t r = 0, c = 0;
        long long v = 0;
        if (!(in >> r >> c >> v)) throw FormatError("matrix has fewer than " + std::to_string(nnz) + " entries");
        if (r >= rows || c >= cols) throw FormatError("matrix entry " + std::to_string(k) + " is out of range");
        m(r, c) += v;
    }
    return m;
}

int cmd_snf(const Options& opt, std::ostream& out) {
    IntMatrix m;
    if (!opt.matrix.empty()) {
        m = read_triplets(read_file(opt.matrix));
    } else {
        const Triangulation tri = parse_triangulation(read_file(opt.tri));
        const BoundaryMatrix b = boundary_matrix(tri);
        m = IntMatrix(b.rows(), b.cols());
        for (const auto& t : b.row_major()) m(t.row, t.col) = t.value;
    }
    const SmithDecomposition s = smith_normal_form(m);
    if (opt.as_json) {
        json factors = json::array();
        for (const auto& d : s.invariant_factors) factors.push_back(d.str());
        print_json(out, {{"rows", m.rows()}, {"cols", m.cols()}, {"rank", s.rank()}, {"invariant_factors", factors}});
    } else {
        out << "rows " << m.rows() << " cols " << m.cols() << " rank " << s.rank() << '\n' << "invariant_factors";
        for (const auto& d : s.invariant_factors) out << ' ' << d;
        out << '\n';
    }
    return kExitNormal;
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Normal surfaces through the normal-disc chain complex", "normalcx"};
    app.require_subcommand(1);
    Options opt;

    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", opt.as_json, "Machine-readable JSON output"); };
    auto* validate = app.add_subcommand("validate", "Validate a triangulation and summarize its skeleton");
    validate->add_option("--tri", opt.tri, "Triangulation JSON")->required();
    add_json(validate);
    auto* links = app.add_subcommand("links", "Classify every vertex link");
    links->add_option("--tri", opt.tri, "Triangulation JSON")->required();
    add_json(links);
    auto* matrix = app.add_subcommand("matrix", "Dump the boundary matrix as `row col value` triplets");
    matrix->add_option("--tri", opt.tri, "Triangulation JSON")->required();
    add_json(matrix);
    auto* classify = app.add_subcommand("classify", "Classify quad coordinates and print the canonical lift");
    classify->add_option("--tri", opt.tri, "Triangulation JSON")->required();
    classify->add_option("--quads", opt.quads, "Quad coordinate JSON")->required();
    add_json(classify);
    auto* verify = app.add_subcommand("verify", "Check normal coordinates against the matching equations");
    verify->add_option("--tri", opt.tri, "Triangulation JSON")->required();
    verify->add_option("--coords", opt.coords, "Normal coordinate JSON")->required();
    add_json(verify);
    auto* snf = app.add_subcommand("snf", "Invariant factors of the boundary matrix or of a triplet file");
    auto* snf_tri = snf->add_option("--tri", opt.tri, "Triangulation JSON");
    auto* snf_matrix = snf->add_option("--matrix", opt.matrix, "Matrix in `rows cols nnz` triplet format");
    snf_tri->excludes(snf_matrix);
    add_json(snf);

    std::vector<std::string> args(argv.rbegin(), argv.rend());
    if (!args.empty()) args.pop_back();
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    if (snf->parsed() && snf_tri->count() == 0 && snf_matrix->count() == 0) {
        err << "error: snf needs --tri or --matrix\n";
        return kExitUsage;
    }

    try {
        if (snf->parsed()) return cmd_snf(opt, out);
        const Triangulation tri = parse_triangulation(read_file(opt.tri));
        if (validate->parsed()) return cmd_validate(tri, opt, out);
        if (links->parsed()) return cmd_links(tri, opt, out);
        if (matrix->parsed()) return cmd_matrix(tri, opt, out);
        if (classify->parsed()) return cmd_classify(tri, opt, out, err);
        if (verify->parsed()) return cmd_verify(tri, opt, out, err);
    } catch (const FileError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUnreadable;
    } catch (const TriangulationError& e) {
        err << "error: invalid triangulation (" << to_string(e.kind()) << "): " << e.what() << '\n';
        return kExitInvalidTriangulation;
    } catch (const FormatError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitUsage;
}

}  // namespace normalcx::cli
