#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "normalcx/quad_solver.hpp"
#include "normalcx/triangulation.hpp"

namespace normalcx {

/// Malformed coordinate document.
class FormatError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Missing or unreadable input file.
class FileError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::filesystem::path& path);

/// Triangulation JSON:
///   { "tets": t, "gluings": [ [ {"tet": j, "face": g, "corners": [c0,c1,c2]} x 4 ] x t ] }
/// Entry (i, f) is the partner of face f of tet i; "corners" lists the images
/// of the corners of face f in ascending order. A null entry is an unglued
/// face (rejected during validation). Schema violations raise
/// TriangulationError(Malformed).
GluingTable parse_gluing_table(std::string_view text);
Triangulation parse_triangulation(std::string_view text);
std::string serialize_triangulation(const Pairing& pairing);

/// { "quads": [[q1,q2,q3] x t] }
QuadCoordinates parse_quads(std::string_view text);
std::string serialize_quads(const QuadCoordinates& q);

/// { "coords": [[t0,t1,t2,t3,q1,q2,q3] x t] }
NormalCoordinates parse_coords(std::string_view text);
std::string serialize_coords(const NormalCoordinates& x);

}  // namespace normalcx
