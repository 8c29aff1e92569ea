#include "normalcx/io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace normalcx {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(const std::string& why) {
    throw TriangulationError(TriangulationErrorKind::Malformed, why);
}

json parse_json(std::string_view text, bool triangulation) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        if (triangulation) malformed(std::string("invalid JSON: ") + e.what());
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
}

std::vector<std::vector<Coeff>> parse_rows(const json& doc, const char* key, std::size_t width) {
    if (!doc.is_object() || !doc.contains(key) || !doc[key].is_array())
        throw FormatError(std::string("expected an object with array \"") + key + "\"");
    std::vector<std::vector<Coeff>> rows;
    for (std::size_t i = 0; i < doc[key].size(); ++i) {
        const json& row = doc[key][i];
        if (!row.is_array() || row.size() != width)
            throw FormatError(std::string("\"") + key + "\" row " + std::to_string(i) + " must have " +
                              std::to_string(width) + " integers");
        std::vector<Coeff> values;
        for (const json& x : row) {
            if (!x.is_number_integer())
                throw FormatError(std::string("\"") + key + "\" row " + std::to_string(i) + " has a non-integer entry");
            values.push_back(x.get<Coeff>());
        }
        rows.push_back(std::move(values));
    }
    return rows;
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileError("cannot read " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    if (in.bad()) throw FileError("error while reading " + path.string());
    return os.str();
}

GluingTable parse_gluing_table(std::string_view text) {
    const json doc = parse_json(text, true);
    if (!doc.is_object()) malformed("triangulation document must be an object");
    if (!doc.contains("tets") || !doc["tets"].is_number_integer() || doc["tets"].get<long long>() < 1)
        malformed("\"tets\" must be a positive integer");
    if (!doc.contains("gluings") || !doc["gluings"].is_array()) malformed("\"gluings\" must be an array");
    const auto t = doc["tets"].get<std::size_t>();
    const json& gluings = doc["gluings"];
    if (gluings.size() != t)
        malformed("\"gluings\" has " + std::to_string(gluings.size()) + " entries for " + std::to_string(t) + " tets");

    GluingTable table(t);
    for (std::size_t i = 0; i < t; ++i) {
        const json& faces = gluings[i];
        if (!faces.is_array() || faces.size() != 4) malformed("tet " + std::to_string(i) + " must list 4 faces");
        for (int f = 0; f < 4; ++f) {
            const json& entry = faces[f];
            const std::string where = "tet " + std::to_string(i) + " face " + std::to_string(f);
            if (entry.is_null()) continue;
            if (!entry.is_object() || !entry.contains("tet") || !entry.contains("face") || !entry.contains("corners"))
                malformed(where + ": gluing needs \"tet\", \"face\" and \"corners\"");
            if (!entry["tet"].is_number_integer() || entry["tet"].get<long long>() < 0 ||
                entry["tet"].get<std::size_t>() >= t)
                malformed(where + ": partner tet out of range");
            if (!entry["face"].is_number_integer() || entry["face"].get<long long>() < 0 ||
                entry["face"].get<long long>() > 3)
                malformed(where + ": partner face must be 0..3");
            const json& corners = entry["corners"];
            if (!corners.is_array() || corners.size() != 3)
                malformed(where + ": \"corners\" must list 3 vertices");
            const int g = entry["face"].get<int>();
            std::array<int, 4> image{};
            image[f] = g;
            const auto own = face_corners(f);
            for (int k = 0; k < 3; ++k) {
                if (!corners[k].is_number_integer()) malformed(where + ": corners must be integers");
                const int c = corners[k].get<int>();
                if (c < 0 || c > 3 || c == g)
                    throw TriangulationError(TriangulationErrorKind::BadCorners,
                                             where + ": corner " + std::to_string(k) +
                                                 " must map to a vertex of partner face " + std::to_string(g));
                image[own[k]] = c;
            }
            if (!Perm4::is_bijection(image))
                throw TriangulationError(TriangulationErrorKind::BadCorners, where + ": corners repeat a vertex");
            table[i][f] = Gluing{entry["tet"].get<std::size_t>(), g, Perm4(image[0], image[1], image[2], image[3])};
        }
    }
    return table;
}

Triangulation parse_triangulation(std::string_view text) { return Triangulation::build(parse_gluing_table(text)); }

std::string serialize_triangulation(const Pairing& pairing) {
    json gluings = json::array();
    for (std::size_t i = 0; i < pairing.size(); ++i) {
        json faces = json::array();
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = pairing[i][f];
            json corners = json::array();
            for (int c : face_corners(f)) corners.push_back(g.map[c]);
            faces.push_back({{"tet", g.tet}, {"face", g.face}, {"corners", corners}});
        }
        gluings.push_back(std::move(faces));
    }
    json doc = {{"tets", pairing.size()}, {"gluings", std::move(gluings)}};
    return doc.dump(2) + "\n";
}

QuadCoordinates parse_quads(std::string_view text) {
    const auto rows = parse_rows(parse_json(text, false), "quads", 3);
    QuadCoordinates q;
    for (const auto& row : rows) q.values.insert(q.values.end(), row.begin(), row.end());
    return q;
}

std::string serialize_quads(const QuadCoordinates& q) {
    json rows = json::array();
    for (std::size_t i = 0; i < q.tet_count(); ++i) rows.push_back({q.at(i, 1), q.at(i, 2), q.at(i, 3)});
    return json{{"quads", rows}}.dump() + "\n";
}

NormalCoordinates parse_coords(std::string_view text) {
    const auto rows = parse_rows(parse_json(text, false), "coords", kDiscTypes);
    NormalCoordinates x;
    for (const auto& row : rows) x.values.insert(x.values.end(), row.begin(), row.end());
    return x;
}

std::string serialize_coords(const NormalCoordinates& x) {
    json rows = json::array();
    for (std::size_t i = 0; i < x.tet_count(); ++i)
        rows.push_back(std::vector<Coeff>(x.values.begin() + static_cast<std::ptrdiff_t>(kDiscTypes * i),
                                          x.values.begin() + static_cast<std::ptrdiff_t>(kDiscTypes * (i + 1))));
    return json{{"coords", rows}}.dump() + "\n";
}

}  // namespace normalcx
