#include "trirep/complex.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "trirep/errors.hpp"

namespace trirep {

Edge make_edge(Vertex a, Vertex b) {
    if (a == b) throw std::invalid_argument("degenerate edge on vertex '" + a + "'");
    if (b < a) std::swap(a, b);
    return {std::move(a), std::move(b)};
}

Triangle make_triangle(Vertex a, Vertex b, Vertex c) {
    Triangle t{std::move(a), std::move(b), std::move(c)};
    std::sort(t.begin(), t.end());
    if (t[0] == t[1] || t[1] == t[2]) throw std::invalid_argument("degenerate triangle " + to_string(t));
    return t;
}

std::array<Edge, 3> edges_of(const Triangle& t) {
    return {Edge{t[0], t[1]}, Edge{t[0], t[2]}, Edge{t[1], t[2]}};
}

bool shares_edge(const Triangle& a, const Triangle& b) {
    for (const auto& ea : edges_of(a)) {
        for (const auto& eb : edges_of(b)) {
            if (ea == eb) return true;
        }
    }
    return false;
}

bool shares_vertex(const Triangle& a, const Triangle& b) {
    for (const auto& x : a) {
        if (std::find(b.begin(), b.end(), x) != b.end()) return true;
    }
    return false;
}

std::string to_string(const Edge& e) { return e[0] + " " + e[1]; }
std::string to_string(const Triangle& t) { return t[0] + " " + t[1] + " " + t[2]; }

Triangle parse_triangle_id(const std::string& id) {
    std::istringstream ss(id);
    std::string a, b, c, extra;
    if (!(ss >> a >> b >> c) || (ss >> extra)) throw std::invalid_argument("malformed triangle id '" + id + "'");
    return make_triangle(a, b, c);
}

bool is_valid_label(const std::string& label) {
    if (label.empty()) return false;
    return std::all_of(label.begin(), label.end(), [](char ch) {
        return (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || (ch >= '0' && ch <= '9') || ch == '_';
    });
}

void TriangularConfiguration::add_vertex(const Vertex& v) { vertices_.insert(v); }

void TriangularConfiguration::add_edge(const Edge& e) {
    if (e[0] == e[1]) throw std::invalid_argument("degenerate edge");
    vertices_.insert(e[0]);
    vertices_.insert(e[1]);
    if (edges_.insert(e).second) apexes_[e];
}

void TriangularConfiguration::add_triangle(const Triangle& t) {
    if (triangles_.count(t)) return;
    const auto es = edges_of(t);
    for (const auto& e : es) add_edge(e);
    apexes_[es[0]].insert(t[2]);
    apexes_[es[1]].insert(t[1]);
    apexes_[es[2]].insert(t[0]);
    triangles_.insert(t);
}

void TriangularConfiguration::remove_triangle(const Triangle& t) {
    if (!triangles_.erase(t)) throw std::invalid_argument("unknown triangle " + to_string(t));
    const auto es = edges_of(t);
    apexes_[es[0]].erase(t[2]);
    apexes_[es[1]].erase(t[1]);
    apexes_[es[2]].erase(t[0]);
}

void TriangularConfiguration::remove_edge(const Edge& e) {
    auto it = apexes_.find(e);
    if (it == apexes_.end()) throw std::invalid_argument("unknown edge " + to_string(e));
    if (!it->second.empty()) throw std::invalid_argument("edge " + to_string(e) + " still has cofaces");
    apexes_.erase(it);
    edges_.erase(e);
}

std::size_t TriangularConfiguration::edge_degree(const Edge& e) const {
    auto it = apexes_.find(e);
    if (it == apexes_.end()) throw std::invalid_argument("unknown edge " + to_string(e));
    return it->second.size();
}

std::vector<Triangle> TriangularConfiguration::cofaces(const Edge& e) const {
    auto it = apexes_.find(e);
    if (it == apexes_.end()) throw std::invalid_argument("unknown edge " + to_string(e));
    std::vector<Triangle> out;
    for (const auto& w : it->second) out.push_back(make_triangle(e[0], e[1], w));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Triangle> TriangularConfiguration::empty_triangles() const {
    std::map<Vertex, std::set<Vertex>> adj;
    for (const auto& e : edges_) {
        adj[e[0]].insert(e[1]);
        adj[e[1]].insert(e[0]);
    }
    std::vector<Triangle> out;
    for (const auto& e : edges_) {
        const auto& na = adj[e[0]];
        const auto& nb = adj[e[1]];
        for (const auto& w : na) {
            if (w <= e[1] || !nb.count(w)) continue;
            Triangle t{e[0], e[1], w};
            if (!triangles_.count(t)) out.push_back(t);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Edge> TriangularConfiguration::maximal_edges() const {
    std::vector<Edge> out;
    for (const auto& e : edges_) {
        if (apexes_.at(e).empty()) out.push_back(e);
    }
    return out;
}

TriangularConfiguration union_of(const TriangularConfiguration& a, const TriangularConfiguration& b) {
    TriangularConfiguration out = a;
    for (const auto& v : b.vertices()) out.add_vertex(v);
    for (const auto& e : b.edges()) out.add_edge(e);
    for (const auto& t : b.triangles()) out.add_triangle(t);
    return out;
}

TriangularConfiguration difference(const TriangularConfiguration& a, const TriangularConfiguration& b) {
    TriangularConfiguration out;
    for (const auto& t : a.triangles()) {
        if (!b.has_triangle(t)) out.add_triangle(t);
    }
    return out;
}

std::vector<Triangle> OrientedTriangularConfiguration::with_sign(Sign s) const {
    std::vector<Triangle> out;
    for (const auto& [t, sg] : sign) {
        if (sg == s) out.push_back(t);
    }
    return out;
}

bool OrientedTriangularConfiguration::sign_is_total() const {
    if (sign.size() != complex.triangles().size()) return false;
    return std::all_of(complex.triangles().begin(), complex.triangles().end(),
                       [&](const Triangle& t) { return sign.count(t) > 0; });
}

OrientedTriangularConfiguration union_of(const OrientedTriangularConfiguration& a,
                                         const OrientedTriangularConfiguration& b) {
    OrientedTriangularConfiguration out{union_of(a.complex, b.complex), a.sign};
    for (const auto& [t, s] : b.sign) {
        auto [it, inserted] = out.sign.emplace(t, s);
        if (!inserted && it->second != s)
            throw std::invalid_argument("conflicting signs for shared triangle " + to_string(t));
    }
    return out;
}

Vector IncidenceMatrix::multiply(const Vector& v) const {
    if (v.size() != cols.size()) throw std::invalid_argument("incidence multiply: length mismatch");
    Vector out(rows.size(), field.zero());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (v[j].is_zero()) continue;
        for (auto r : col_rows[j]) out[r] += v[j];
    }
    return out;
}

FieldElement IncidenceMatrix::entry(std::size_t row, std::size_t col) const {
    const auto& rs = col_rows.at(col);
    return std::find(rs.begin(), rs.end(), row) != rs.end() ? field.one() : field.zero();
}

IncidenceMatrix incidence_matrix(const TriangularConfiguration& delta, const FieldSpec& field) {
    IncidenceMatrix m{field, {delta.edges().begin(), delta.edges().end()},
                      {delta.triangles().begin(), delta.triangles().end()}, {}};
    std::map<Edge, std::size_t> row_of;
    for (std::size_t i = 0; i < m.rows.size(); ++i) row_of.emplace(m.rows[i], i);
    m.col_rows.reserve(m.cols.size());
    for (const auto& t : m.cols) {
        const auto es = edges_of(t);
        m.col_rows.push_back({row_of.at(es[0]), row_of.at(es[1]), row_of.at(es[2])});
    }
    return m;
}

std::size_t KernelBasis::index_of(const Triangle& t) const {
    auto it = std::lower_bound(triangles.begin(), triangles.end(), t);
    if (it == triangles.end() || *it != t) throw std::invalid_argument("triangle not indexed: " + to_string(t));
    return static_cast<std::size_t>(it - triangles.begin());
}

namespace {

using SparseRow = std::vector<std::pair<std::size_t, FieldElement>>;

// a - factor * b, both sorted by column
SparseRow subtract_scaled(const SparseRow& a, const FieldElement& factor, const SparseRow& b) {
    SparseRow out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, -(factor * b[j].second));
            ++j;
        } else {
            FieldElement v = a[i].second - factor * b[j].second;
            if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

std::vector<Vector> unit_matrix_kernel(std::size_t ncols, const std::vector<std::vector<std::size_t>>& rows,
                                       const FieldSpec& field, std::size_t& rank_out) {
    // pivot_rows[c] holds the stored row whose leading column is c (leading entry 1).
    std::vector<SparseRow> pivot_rows(ncols);
    std::vector<bool> is_pivot(ncols, false);
    std::size_t rank = 0;
    for (const auto& cols : rows) {
        SparseRow row;
        std::vector<std::size_t> sorted = cols;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t k = 0; k < sorted.size(); ++k) {
            // Repeated columns accumulate (not produced by simplicial input).
            if (!row.empty() && row.back().first == sorted[k]) {
                row.back().second += field.one();
                if (row.back().second.is_zero()) row.pop_back();
            } else {
                row.emplace_back(sorted[k], field.one());
            }
        }
        while (!row.empty() && is_pivot[row.front().first]) {
            const FieldElement factor = row.front().second;
            row = subtract_scaled(row, factor, pivot_rows[row.front().first]);
        }
        if (row.empty()) continue;
        const std::size_t lead = row.front().first;
        const FieldElement inv = row.front().second.inv();
        for (auto& entry : row) entry.second *= inv;
        pivot_rows[lead] = std::move(row);
        is_pivot[lead] = true;
        ++rank;
    }
    rank_out = rank;

    std::vector<Vector> basis;
    std::vector<std::size_t> pivot_cols;
    for (std::size_t c = 0; c < ncols; ++c) {
        if (is_pivot[c]) pivot_cols.push_back(c);
    }
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        Vector x(ncols, field.zero());
        x[f] = field.one();
        for (auto it = pivot_cols.rbegin(); it != pivot_cols.rend(); ++it) {
            const auto& row = pivot_rows[*it];
            FieldElement acc = field.zero();
            for (std::size_t k = 1; k < row.size(); ++k) {
                const auto& xc = x[row[k].first];
                if (!xc.is_zero()) acc += row[k].second * xc;
            }
            x[*it] = -acc;
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

namespace {

KernelBasis kernel_of_rows(const TriangularConfiguration& delta, const std::vector<Edge>& row_edges,
                           const FieldSpec& field) {
    KernelBasis kb{field, {delta.triangles().begin(), delta.triangles().end()}, {}, 0};
    std::map<Triangle, std::size_t> col_of;
    for (std::size_t j = 0; j < kb.triangles.size(); ++j) col_of.emplace(kb.triangles[j], j);
    std::vector<std::vector<std::size_t>> rows;
    rows.reserve(row_edges.size());
    for (const auto& e : row_edges) {
        std::vector<std::size_t> cols;
        for (const auto& t : delta.cofaces(e)) cols.push_back(col_of.at(t));
        rows.push_back(std::move(cols));
    }
    kb.vectors = unit_matrix_kernel(kb.triangles.size(), rows, field, kb.rank);

    // Every vector is re-checked against the rows it must satisfy.
    for (const auto& v : kb.vectors) {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            FieldElement s = field.zero();
            for (auto c : rows[r]) s += v[c];
            if (!s.is_zero()) throw InvariantViolation("kernel vector fails edge " + to_string(row_edges[r]));
        }
    }
    return kb;
}

}  // namespace

KernelBasis kernel(const TriangularConfiguration& delta, const FieldSpec& field) {
    return kernel_of_rows(delta, {delta.edges().begin(), delta.edges().end()}, field);
}

KernelBasis restricted_kernel(const TriangularConfiguration& delta, const std::set<Edge>& rows,
                              const FieldSpec& field) {
    for (const auto& e : rows) {
        if (!delta.has_edge(e)) throw std::invalid_argument("restricted_kernel: unknown edge " + to_string(e));
    }
    return kernel_of_rows(delta, {rows.begin(), rows.end()}, field);
}

TriangularConfiguration read_complex(std::istream& in) {
    TriangularConfiguration delta;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::vector<std::string> toks;
        for (std::string t; ss >> t;) toks.push_back(t);
        if (toks.empty() || toks[0][0] == '#') continue;
        for (std::size_t k = 1; k < toks.size(); ++k) {
            if (!is_valid_label(toks[k])) throw ParseError(lineno, "invalid vertex label '" + toks[k] + "'");
        }
        try {
            if (toks[0] == "t" && toks.size() == 4) {
                delta.add_triangle(make_triangle(toks[1], toks[2], toks[3]));
            } else if (toks[0] == "e" && toks.size() == 3) {
                delta.add_edge(make_edge(toks[1], toks[2]));
            } else {
                throw ParseError(lineno, "expected 't a b c' or 'e a b'");
            }
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw ParseError(lineno, e.what());
        }
    }
    return delta;
}

TriangularConfiguration read_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open complex file '" + path + "'");
    return read_complex(in);
}

void write_complex(std::ostream& out, const TriangularConfiguration& delta) {
    for (const auto& t : delta.triangles()) out << "t " << to_string(t) << "\n";
    for (const auto& e : delta.maximal_edges()) out << "e " << to_string(e) << "\n";
}

}  // namespace trirep
