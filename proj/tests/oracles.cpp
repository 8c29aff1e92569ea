#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "normalcx/io.hpp"

namespace oracle {

using namespace normalcx;

std::string fixture_path(const std::string& name) { return std::string(NORMALCX_FIXTURE_DIR) + "/" + name + ".json"; }

Triangulation load_fixture(const std::string& name) { return parse_triangulation(read_file(fixture_path(name))); }

const std::vector<std::string>& all_fixtures() {
    static const std::vector<std::string> names{"double", "pentachoron_boundary", "fig8"};
    return names;
}

const std::vector<std::string>& sphere_fixtures() {
    static const std::vector<std::string> names{"double", "pentachoron_boundary"};
    return names;
}

namespace {

using Vec3 = std::array<long long, 3>;

constexpr std::array<Vec3, 4> kSimplex{{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};

Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 add(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Vec3 scale(long long s, const Vec3& a) { return {s * a[0], s * a[1], s * a[2]}; }
long long dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
long long det3(const Vec3& r0, const Vec3& r1, const Vec3& r2) { return dot(r0, cross(r1, r2)); }

}  // namespace

int determinant_epsilon(int face, int corner, int tail, int head, int orientation) {
    const Vec3& v = kSimplex[corner];
    const Vec3 e = sub(kSimplex[head], kSimplex[tail]);
    // Twice the vector from the corner to the midpoint of the opposite edge.
    const Vec3 d = sub(add(kSimplex[tail], kSimplex[head]), scale(2, v));
    // In-plane component of d orthogonal to e: points out of the face across e.
    const Vec3 a = sub(scale(dot(e, e), d), scale(dot(d, e), e));
    Vec3 b = cross(sub(kSimplex[tail], v), sub(kSimplex[head], v));
    if (dot(b, sub(kSimplex[face], v)) > 0) b = scale(-1, b);
    const long long det = det3(a, b, e);
    if (det == 0) throw std::logic_error("degenerate frame");
    return orientation * (det > 0 ? 1 : -1);
}

int quad_separating(int a, int b) {
    if (a > b) std::swap(a, b);
    if (a == 0) return b;
    return 6 - a - b;
}

namespace {

constexpr Coeff kUnassigned = std::numeric_limits<Coeff>::min();

struct Search {
    std::vector<std::vector<std::pair<std::size_t, Coeff>>> rows;
    Coeff bound = 0;
    std::vector<std::vector<Coeff>>* out = nullptr;

    bool propagate(std::vector<Coeff>& x) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& row : rows) {
                Coeff sum = 0;
                std::size_t open = 0, open_var = 0;
                Coeff open_coef = 0;
                for (const auto& [var, coef] : row) {
                    if (x[var] == kUnassigned) {
                        ++open;
                        open_var = var;
                        open_coef = coef;
                    } else {
                        sum += coef * x[var];
                    }
                }
                if (open == 0 && sum != 0) return false;
                if (open == 1) {
                    if ((-sum) % open_coef != 0) return false;
                    const Coeff value = -sum / open_coef;
                    if (value < 0 || value > bound) return false;
                    x[open_var] = value;
                    changed = true;
                }
            }
        }
        return true;
    }

    void run(std::vector<Coeff> x) const {
        if (!propagate(x)) return;
        auto it = std::find(x.begin(), x.end(), kUnassigned);
        if (it == x.end()) {
            out->push_back(std::move(x));
            return;
        }
        const auto var = static_cast<std::size_t>(it - x.begin());
        for (Coeff value = 0; value <= bound; ++value) {
            auto next = x;
            next[var] = value;
            run(std::move(next));
        }
    }
};

}  // namespace

std::vector<QuadCoordinates> admissible_quads(std::size_t tets, Coeff bound) {
    std::vector<std::array<Coeff, 3>> options{{0, 0, 0}};
    for (int k = 0; k < 3; ++k)
        for (Coeff value = 1; value <= bound; ++value) {
            std::array<Coeff, 3> o{0, 0, 0};
            o[k] = value;
            options.push_back(o);
        }
    std::vector<QuadCoordinates> out;
    std::vector<std::size_t> digits(tets, 0);
    while (true) {
        QuadCoordinates q(tets);
        for (std::size_t i = 0; i < tets; ++i)
            for (int k = 1; k <= 3; ++k) q.at(i, k) = options[digits[i]][k - 1];
        out.push_back(std::move(q));
        std::size_t pos = 0;
        while (pos < tets && ++digits[pos] == options.size()) digits[pos++] = 0;
        if (pos == tets) break;
    }
    return out;
}

std::vector<std::vector<Coeff>> enumerate_solutions(const SparseMatrix& equations, std::size_t tets, Coeff bound,
                                                    const std::optional<QuadCoordinates>& quads) {
    Search search;
    search.bound = bound;
    search.rows.resize(equations.rows());
    for (std::size_t j = 0; j < equations.cols(); ++j)
        for (const auto& e : equations.column(j)) search.rows[e.row].push_back({j, e.value});
    std::vector<std::vector<Coeff>> out;
    search.out = &out;

    std::vector<QuadCoordinates> quad_parts;
    if (quads)
        quad_parts.push_back(*quads);
    else
        quad_parts = admissible_quads(tets, bound);
    for (const auto& q : quad_parts) {
        std::vector<Coeff> x(kDiscTypes * tets, kUnassigned);
        for (std::size_t i = 0; i < tets; ++i)
            for (int k = 1; k <= 3; ++k) x[disc_index(i, 3 + k)] = q.at(i, k);
        search.run(std::move(x));
    }
    return out;
}

std::optional<std::vector<Coeff>> propagate_link_solution(const VertexLink& link, const IntMatrix& link_matrix,
                                                          const std::vector<Coeff>& rhs) {
    const std::size_t n = link.triangles.size();
    std::vector<std::vector<std::size_t>> arcs_at(n);
    for (std::size_t k = 0; k < link.arcs.size(); ++k) {
        arcs_at[link.arc_triangles[k][0]].push_back(k);
        arcs_at[link.arc_triangles[k][1]].push_back(k);
    }
    std::vector<std::optional<Coeff>> x(n);
    x[0] = 0;
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        const std::size_t cur = queue.front();
        queue.pop_front();
        for (std::size_t k : arcs_at[cur]) {
            const auto [a, b] = link.arc_triangles[k];
            const std::size_t other = (a == cur) ? b : a;
            if (x[other]) continue;
            const Coeff known = link_matrix(k, cur).convert_to<Coeff>() * *x[cur];
            const Coeff coef = link_matrix(k, other).convert_to<Coeff>();
            if (coef == 0 || (rhs[k] - known) % coef != 0) return std::nullopt;
            x[other] = (rhs[k] - known) / coef;
            queue.push_back(other);
        }
    }
    std::vector<Coeff> out(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (!x[j]) return std::nullopt;
        out[j] = *x[j];
    }
    for (std::size_t k = 0; k < link.arcs.size(); ++k) {
        Coeff sum = 0;
        for (std::size_t j = 0; j < n; ++j) sum += link_matrix(k, j).convert_to<Coeff>() * out[j];
        if (sum != rhs[k]) return std::nullopt;
    }
    return out;
}

Isomorphism random_isomorphism(std::size_t tets, std::mt19937_64& rng) {
    Isomorphism iso;
    iso.tet_map.resize(tets);
    std::iota(iso.tet_map.begin(), iso.tet_map.end(), std::size_t{0});
    std::shuffle(iso.tet_map.begin(), iso.tet_map.end(), rng);
    for (std::size_t i = 0; i < tets; ++i) {
        std::array<int, 4> p{0, 1, 2, 3};
        std::shuffle(p.begin(), p.end(), rng);
        iso.vertex_maps.emplace_back(p[0], p[1], p[2], p[3]);
    }
    return iso;
}

Pairing apply(const Isomorphism& iso, const Pairing& pairing) {
    Pairing out(pairing.size());
    for (std::size_t i = 0; i < pairing.size(); ++i)
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = pairing[i][f];
            const Perm4& rho_i = iso.vertex_maps[i];
            const Perm4& rho_j = iso.vertex_maps[g.tet];
            out[iso.tet_map[i]][rho_i[f]] = Gluing{iso.tet_map[g.tet], rho_j[g.face], rho_j * g.map * rho_i.inverse()};
        }
    return out;
}

QuadCoordinates apply(const Isomorphism& iso, const QuadCoordinates& q) {
    QuadCoordinates out(q.tet_count());
    for (std::size_t i = 0; i < q.tet_count(); ++i) {
        const Perm4& rho = iso.vertex_maps[i];
        for (int k = 1; k <= 3; ++k) out.at(iso.tet_map[i], quad_separating(rho[0], rho[k])) = q.at(i, k);
    }
    return out;
}

NormalCoordinates apply(const Isomorphism& iso, const NormalCoordinates& x) {
    NormalCoordinates out(std::vector<Coeff>(x.values.size(), 0));
    for (std::size_t i = 0; i < x.tet_count(); ++i) {
        const Perm4& rho = iso.vertex_maps[i];
        const std::size_t ni = iso.tet_map[i];
        for (int v = 0; v < 4; ++v) out.values[disc_index(ni, rho[v])] = x.values[disc_index(i, v)];
        for (int k = 1; k <= 3; ++k)
            out.values[disc_index(ni, 3 + quad_separating(rho[0], rho[k]))] = x.values[disc_index(i, 3 + k)];
    }
    return out;
}

std::vector<std::size_t> closure_labels(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    std::vector<std::size_t> label(n);
    std::iota(label.begin(), label.end(), std::size_t{0});
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [a, b] : pairs) {
            const std::size_t m = std::min(label[a], label[b]);
            if (label[a] != m || label[b] != m) {
                label[a] = label[b] = m;
                changed = true;
            }
        }
    }
    return label;
}

bool same_partition(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if ((a[i] == a[j]) != (b[i] == b[j])) return false;
    return true;
}

namespace {

BigInt cofactor_det(const std::vector<std::vector<BigInt>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    BigInt total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0) continue;
        std::vector<std::vector<BigInt>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<BigInt> row;
            for (std::size_t cc = 0; cc < n; ++cc)
                if (cc != c) row.push_back(m[r][cc]);
            minor.push_back(std::move(row));
        }
        const BigInt term = m[0][c] * cofactor_det(minor);
        total += (c % 2 == 0) ? term : BigInt(-term);
    }
    return total;
}

void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i)
            if (pick[i]) s.push_back(i);
        out.push_back(std::move(s));
    } while (std::prev_permutation(pick.begin(), pick.end()));
}

}  // namespace

BigInt gcd_of_minors(const IntMatrix& a, std::size_t k) {
    std::vector<std::vector<std::size_t>> rows, cols;
    subsets(a.rows(), k, rows);
    subsets(a.cols(), k, cols);
    BigInt g = 0;
    for (const auto& r : rows)
        for (const auto& c : cols) {
            std::vector<std::vector<BigInt>> m(k, std::vector<BigInt>(k));
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) m[i][j] = a(r[i], c[j]);
            g = boost::multiprecision::gcd(g, abs(cofactor_det(m)));
        }
    return g;
}

bool box_search(const IntMatrix& a, const std::vector<BigInt>& b, int radius) {
    const std::size_t m = a.rows(), n = a.cols();
    std::vector<std::vector<long long>> col(n, std::vector<long long>(m));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < m; ++i) col[j][i] = a(i, j).convert_to<long long>();
    std::vector<long long> residual(m);
    for (std::size_t i = 0; i < m; ++i) residual[i] = b[i].convert_to<long long>();

    std::function<bool(std::size_t)> go = [&](std::size_t j) -> bool {
        if (j == n) return std::all_of(residual.begin(), residual.end(), [](long long r) { return r == 0; });
        for (int x = -radius; x <= radius; ++x) {
            for (std::size_t i = 0; i < m; ++i) residual[i] -= x * col[j][i];
            const bool found = go(j + 1);
            for (std::size_t i = 0; i < m; ++i) residual[i] += x * col[j][i];
            if (found) return true;
        }
        return false;
    };
    return go(0);
}

bool lattice_contains(const IntMatrix& a, const std::vector<BigInt>& b) {
    const IntMatrix at = a.transposed();
    IntMatrix extended(at.rows() + 1, at.cols());
    for (std::size_t r = 0; r < at.rows(); ++r)
        for (std::size_t c = 0; c < at.cols(); ++c) extended(r, c) = at(r, c);
    for (std::size_t c = 0; c < at.cols(); ++c) extended(at.rows(), c) = b[c];
    return hermite_normal_form(at) == hermite_normal_form(extended);
}

IntMatrix random_matrix(std::size_t rows, std::size_t cols, int lo, int hi, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dist(lo, hi);
    IntMatrix out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) out(i, j) = dist(rng);
    return out;
}

}  // namespace oracle
